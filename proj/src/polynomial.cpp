#include "quasimap/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quasimap {

namespace {

int degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// p = sum_k P_k z_var^k; returns k -> P_k with the z_var exponent zeroed.
std::map<int, MPoly> split_by_var(const MPoly& p, std::size_t var) {
  std::map<int, MPoly> out;
  for (const auto& [exps, c] : p.terms()) {
    Monomial rest = exps;
    const int k = rest[var];
    rest[var] = 0;
    auto it = out.try_emplace(k, p.nvars()).first;
    it->second.add_term(rest, c);
  }
  return out;
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t j, const Rat& c) {
  Monomial m(nvars, 0);
  m.at(j) = 1;
  return monomial(nvars, m, c);
}

MPoly MPoly::monomial(std::size_t nvars, const Monomial& exps, const Rat& c) {
  if (exps.size() != nvars) throw std::invalid_argument("MPoly::monomial: arity mismatch");
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("MPoly::monomial: negative exponent");
  }
  MPoly p(nvars);
  p.add_term(exps, c);
  return p;
}

MPoly MPoly::from_linear(const LinForm& f) {
  MPoly p(f.nvars());
  for (std::size_t j = 0; j < f.nvars(); ++j) {
    if (f.coeff(j) == 0) continue;
    Monomial m(f.nvars(), 0);
    m[j] = 1;
    p.add_term(m, f.coeff(j));
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rat MPoly::constant_term() const { return coeff(Monomial(nvars_, 0)); }

Rat MPoly::coeff(const Monomial& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Monomial& exps, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::optional<int> MPoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [exps, c] : terms_) {
    const int d = degree_of(exps);
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

int MPoly::total_degree() const {
  int best = -1;
  for (const auto& [exps, c] : terms_) best = std::max(best, degree_of(exps));
  return best;
}

int MPoly::degree_in(std::size_t var) const {
  int best = 0;
  for (const auto& [exps, c] : terms_) best = std::max(best, exps.at(var));
  return best;
}

MPoly MPoly::homogeneous_component(int degree) const {
  MPoly out(nvars_);
  for (const auto& [exps, c] : terms_) {
    if (degree_of(exps) == degree) out.terms_.emplace_hint(out.terms_.end(), exps, c);
  }
  return out;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MPoly::evaluate: arity mismatch");
  Rat acc = 0;
  for (const auto& [exps, c] : terms_) {
    Rat t = c;
    for (std::size_t j = 0; j < nvars_; ++j) {
      for (int e = 0; e < exps[j]; ++e) t *= point[j];
    }
    acc += t;
  }
  return acc;
}

void MPoly::check_arity(const MPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly: arity mismatch");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_arity(o);
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_arity(o);
  for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, c] : terms_) c *= s;
  return *this;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
MPoly operator-(MPoly a) { return a *= Rat(-1); }
MPoly operator*(const Rat& s, MPoly a) { return a *= s; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("MPoly: arity mismatch");
  MPoly out(a.nvars());
  if (a.is_zero() || b.is_zero()) return out;
  Monomial m(a.nvars());
  Rat prod;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t j = 0; j < m.size(); ++j) m[j] = ea[j] + eb[j];
      prod = ca * cb;
      out.add_term(m, prod);
    }
  }
  return out;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = MPoly::constant(p.nvars(), 1);
  MPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly mpoly_arith(const MPoly& a, const MPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("mpoly_arith: unknown op");
}

MPoly subst_linear(const MPoly& p, std::size_t var, const LinForm& point) {
  return taylor_coefficients(p, var, point, 0).front();
}

std::vector<MPoly> taylor_coefficients(const MPoly& p, std::size_t var, const LinForm& point, int order) {
  if (point.nvars() != p.nvars()) throw std::invalid_argument("taylor_coefficients: arity mismatch");
  if (point.involves(var)) throw std::invalid_argument("taylor_coefficients: point involves the substituted variable");
  if (order < 0) throw std::invalid_argument("taylor_coefficients: negative order");

  std::vector<MPoly> out(static_cast<std::size_t>(order) + 1, MPoly(p.nvars()));
  const auto parts = split_by_var(p, var);
  if (parts.empty()) return out;

  const int top = parts.rbegin()->first;
  std::vector<MPoly> point_pow{MPoly::constant(p.nvars(), 1)};
  const MPoly lin = MPoly::from_linear(point);
  for (int k = 1; k <= top; ++k) point_pow.push_back(point_pow.back() * lin);

  // p(point + t) = sum_k P_k sum_n C(k, n) point^{k-n} t^n
  for (const auto& [k, part] : parts) {
    for (int n = 0; n <= std::min(k, order); ++n) {
      MPoly term = part * point_pow[static_cast<std::size_t>(k - n)];
      if (n > 0) term *= Rat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(n)));
      out[static_cast<std::size_t>(n)] += term;
    }
  }
  return out;
}

MPoly derivative(const MPoly& p, std::size_t var) {
  MPoly out(p.nvars());
  for (const auto& [exps, c] : p.terms()) {
    const int e = exps.at(var);
    if (e == 0) continue;
    Monomial m = exps;
    m[var] = e - 1;
    out.add_term(m, c * e);
  }
  return out;
}

std::optional<MPoly> divide_linear(const MPoly& p, const LinForm& form) {
  if (form.nvars() != p.nvars()) throw std::invalid_argument("divide_linear: arity mismatch");
  const auto support = form.support();
  if (support.empty()) throw std::invalid_argument("divide_linear: zero divisor");
  if (p.is_zero()) return p;

  // Synthetic division in the first variable of the form:
  // p = sum_k P_k v^k, form = c v + r, quotient Q = sum_k Q_k v^k.
  const std::size_t v = support.front();
  const Rat c = form.coeff(v);
  LinForm rest_form = form;
  rest_form.set_coeff(v, 0);
  const MPoly rest = MPoly::from_linear(rest_form);

  auto parts = split_by_var(p, v);
  const int top = parts.rbegin()->first;
  if (top == 0) return std::nullopt;

  const MPoly zero(p.nvars());
  auto part = [&](int k) -> const MPoly& {
    auto it = parts.find(k);
    return it == parts.end() ? zero : it->second;
  };

  std::vector<MPoly> q(static_cast<std::size_t>(top), MPoly(p.nvars()));
  const Rat inv_c = 1 / c;
  q[static_cast<std::size_t>(top - 1)] = inv_c * part(top);
  for (int k = top - 1; k >= 1; --k) {
    q[static_cast<std::size_t>(k - 1)] = inv_c * (part(k) - rest * q[static_cast<std::size_t>(k)]);
  }
  if (!(part(0) - rest * q[0]).is_zero()) return std::nullopt;

  MPoly out(p.nvars());
  for (int k = 0; k < top; ++k) {
    for (const auto& [exps, coeff] : q[static_cast<std::size_t>(k)].terms()) {
      Monomial m = exps;
      m[v] = k;
      out.add_term(m, coeff);
    }
  }
  return out;
}

std::string to_string(const MPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first, then lexicographically descending exponents.
  std::vector<std::pair<Monomial, Rat>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = degree_of(a.first);
    const int db = degree_of(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [exps, coeff] : terms) {
    Rat c = coeff;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0) {
      out += "-";
      c = abs(c);
    }
    std::string mono;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var) + std::to_string(j);
      if (exps[j] > 1) mono += "^" + std::to_string(exps[j]);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace quasimap
