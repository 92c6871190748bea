#include "quasimap/residue.hpp"

#include <algorithm>
#include <exception>
#include <iterator>
#include <numeric>
#include <thread>

namespace quasimap {

ResiduePlan ResiduePlan::ascending(std::size_t nvars, int degree_target) {
  ResiduePlan plan;
  plan.order.resize(nvars);
  std::iota(plan.order.begin(), plan.order.end(), std::size_t{0});
  plan.degree_target = degree_target;
  return plan;
}

ResiduePlan ResiduePlan::descending(std::size_t nvars, int degree_target) {
  ResiduePlan plan = ascending(nvars, degree_target);
  std::reverse(plan.order.begin(), plan.order.end());
  return plan;
}

namespace {

void check_point(const FactoredRat& f, std::size_t var, const LinForm& point) {
  if (var >= f.nvars()) throw ResidueError("ill-formed point: variable index out of range");
  if (point.nvars() != f.nvars()) throw ResidueError("ill-formed point: arity mismatch");
  if (point.involves(var)) throw ResidueError("ill-formed point: point involves the integration variable");
}

bool vanishes_at(const TaggedFactor& factor, std::size_t var, const LinForm& point) {
  return factor.form.involves(var) && factor.form.subst(var, point).is_zero();
}

// (-1)^n C(m+n-1, n)
Rat negative_binomial(int m, int n) {
  Rat b(binomial(static_cast<unsigned long>(m + n - 1), static_cast<unsigned long>(n)));
  return n % 2 == 0 ? b : Rat(-b);
}

}  // namespace

FactoredRat residue_at_point(const FactoredRat& f, std::size_t var, const LinForm& point) {
  check_point(f, var, point);
  const std::size_t n = f.nvars();

  int order = 0;
  Rat lead = 1;
  struct Expanded {
    LinForm value;  // factor at the point
    Rat slope;      // coefficient of var
    int multiplicity;
    VarSet allowed;
  };
  std::vector<Expanded> moving;
  std::vector<TaggedFactor> fixed;
  for (const auto& factor : f.den()) {
    if (vanishes_at(factor, var, point)) {
      order += factor.multiplicity;
      for (int e = 0; e < factor.multiplicity; ++e) lead *= factor.form.coeff(var);
    } else if (factor.form.involves(var)) {
      VarSet allowed = factor.allowed;
      allowed.reset(var);
      moving.push_back({factor.form.subst(var, point), factor.form.coeff(var), factor.multiplicity, allowed});
    } else {
      fixed.push_back(factor);
    }
  }
  if (order == 0) throw ResidueError("not a pole: no denominator factor vanishes at the point");
  if (f.is_zero()) return FactoredRat(n);

  // With z_var = point + t: the vanishing factors give lead * t^order, and each
  // moving factor (a + c t)^(-m) = a^(-m-K) sum_k C(-m, k) c^k a^(K-k) t^k with
  // K = order - 1. The residue is the t^K coefficient of the product.
  const int top = order - 1;
  std::vector<MPoly> series = taylor_coefficients(f.num(), var, point, top);

  for (const auto& mv : moving) {
    if (top == 0) {
      fixed.push_back(TaggedFactor{mv.value, mv.multiplicity, mv.allowed});
      continue;
    }
    const MPoly a = MPoly::from_linear(mv.value);
    std::vector<MPoly> a_pow{MPoly::constant(n, 1)};
    for (int k = 1; k <= top; ++k) a_pow.push_back(a_pow.back() * a);

    std::vector<MPoly> factor_series;
    factor_series.reserve(static_cast<std::size_t>(top) + 1);
    Rat slope_pow = 1;
    for (int k = 0; k <= top; ++k) {
      factor_series.push_back((negative_binomial(mv.multiplicity, k) * slope_pow) * a_pow[static_cast<std::size_t>(top - k)]);
      slope_pow *= mv.slope;
    }

    std::vector<MPoly> product(static_cast<std::size_t>(top) + 1, MPoly(n));
    for (int i = 0; i <= top; ++i) {
      if (series[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int k = 0; i + k <= top; ++k) {
        product[static_cast<std::size_t>(i + k)] += series[static_cast<std::size_t>(i)] * factor_series[static_cast<std::size_t>(k)];
      }
    }
    series = std::move(product);
    fixed.push_back(TaggedFactor{mv.value, mv.multiplicity + top, mv.allowed});
  }

  FactoredRat out(f.scalar() / lead, std::move(series[static_cast<std::size_t>(top)]), std::move(fixed));
  return fr_reduce(out);
}

FactoredRat residue_by_derivative(const FactoredRat& f, std::size_t var, const LinForm& point) {
  check_point(f, var, point);
  int order = 0;
  Rat lead = 1;
  std::vector<TaggedFactor> rest;
  for (const auto& factor : f.den()) {
    if (vanishes_at(factor, var, point)) {
      order += factor.multiplicity;
      for (int e = 0; e < factor.multiplicity; ++e) lead *= factor.form.coeff(var);
    } else {
      rest.push_back(factor);
    }
  }
  if (order == 0) throw ResidueError("not a pole: no denominator factor vanishes at the point");

  FactoredRat g(f.scalar() / lead, f.num(), std::move(rest));
  for (int k = 1; k < order; ++k) g = fr_derivative(g, var);
  g *= Rat(1) / Rat(factorial(static_cast<unsigned long>(order - 1)));
  return fr_reduce(fr_subst(g, var, point));
}

std::vector<LinForm> residue_points(const FactoredRat& f, std::size_t var) {
  std::vector<LinForm> points;
  for (const auto& factor : f.den()) {
    if (!factor.allowed.test(var) || !factor.form.involves(var)) continue;
    LinForm p = factor.form.solve_for(var);
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
  }
  return points;
}

FactoredRat homogeneity_filter(const FactoredRat& f, int d) {
  if (f.is_zero()) return f;
  const int target = f.den_degree() - (d + 1);
  if (f.num().homogeneous_degree() == target) return f;
  return FactoredRat(f.scalar(), f.num().homogeneous_component(target), f.den());
}

namespace {

using Branches = std::vector<BranchTerm>;

Branches expand_term(const BranchTerm& term, std::size_t var, ResidueStats& stats) {
  std::vector<std::size_t> remaining;
  std::copy_if(term.remaining.begin(), term.remaining.end(), std::back_inserter(remaining),
               [var](std::size_t v) { return v != var; });
  Branches out;
  for (const auto& p : residue_points(term.value, var)) {
    ++stats.branches;
    FactoredRat r = residue_at_point(term.value, var, p);
    if (r.is_zero()) {
      ++stats.pruned;
      continue;
    }
    out.push_back(BranchTerm{std::move(r), remaining});
  }
  return out;
}

// Expands all live terms in one variable. Each worker fills a contiguous
// slice of `results`, so the concatenation order does not depend on timing.
Branches expand_all(const Branches& live, std::size_t var, unsigned threads, ResidueStats& stats) {
  std::vector<Branches> results(live.size());
  std::vector<ResidueStats> worker_stats(std::max(1U, threads));
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), live.size());

  if (workers <= 1) {
    for (std::size_t i = 0; i < live.size(); ++i) results[i] = expand_term(live[i], var, worker_stats[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (live.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t begin = w * chunk;
          const std::size_t end = std::min(live.size(), begin + chunk);
          for (std::size_t i = begin; i < end; ++i) results[i] = expand_term(live[i], var, worker_stats[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (const auto& s : worker_stats) {
    stats.branches += s.branches;
    stats.pruned += s.pruned;
  }
  Branches next;
  for (auto& r : results) {
    for (auto& t : r) next.push_back(std::move(t));
  }
  return next;
}

}  // namespace

Rat iterated_residue(const FactoredRat& f, const ResiduePlan& plan, const EngineOptions& options, ResidueStats* stats) {
  const std::size_t n = f.nvars();
  std::vector<std::size_t> sorted = plan.order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != n) throw std::invalid_argument("iterated_residue: plan order is not a permutation");
  }

  ResidueStats local;
  ResidueStats& st = stats ? *stats : local;
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  Branches live;
  FactoredRat start = homogeneity_filter(f, static_cast<int>(n) - 1);
  if (!start.is_zero()) live.push_back(BranchTerm{std::move(start), plan.order});
  st.max_live_terms = live.size();

  for (std::size_t var : plan.order) {
    if (live.empty()) break;
    live = expand_all(live, var, threads, st);
    st.max_live_terms = std::max(st.max_live_terms, live.size());
  }

  Rat total = 0;
  for (const auto& [value, remaining] : live) {
    if (!remaining.empty() || !value.den().empty() || !value.num().is_constant()) {
      throw ResidueError("non-scalar remainder: " + to_string(value));
    }
    total += value.scalar() * value.num().constant_term();
  }
  return total;
}

}  // namespace quasimap
