#include "quasimap/verification.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "quasimap/series.hpp"
#include "quasimap/toric.hpp"

namespace quasimap {

namespace {

using Rng = std::mt19937;

Check compare(int criterion, std::string name, const Rat& expected, const Rat& actual) {
  return {criterion, std::move(name), to_string(expected), to_string(actual), expected == actual};
}

Check truth(int criterion, std::string name, bool ok, std::string actual_if_false = "false") {
  return {criterion, std::move(name), "true", ok ? "true" : std::move(actual_if_false), ok};
}

/// Runs body; an exception becomes a failed check.
void guarded(std::vector<Check>& out, int criterion, const std::string& name, const std::function<Check()>& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back({criterion, name, "no error", std::string("error: ") + e.what(), false});
  }
}

std::string degree_name(const std::string& what, int d) { return what + " d=" + std::to_string(d); }

Rat random_rat(Rng& rng, long num_bound = 20, long den_bound = 6) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return make_rat(num(rng), den(rng));
}

Monomial random_monomial(Rng& rng, std::size_t nvars, int degree) {
  Monomial m(nvars, 0);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (int k = 0; k < degree; ++k) ++m[pick(rng)];
  return m;
}

void all_monomials(std::size_t nvars, int degree, Monomial& cur, std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    all_monomials(nvars, degree - e, cur, pos + 1, out);
  }
}

/// Ten classes of the given degree: distinct random monomials, or all monomials
/// topped up with random integer combinations when fewer than ten exist.
std::vector<MPoly> complementary_classes(Rng& rng, std::size_t nvars, int degree, std::size_t count = 10) {
  std::vector<MPoly> out;
  const Int available = binomial(static_cast<unsigned long>(degree) + nvars - 1, nvars - 1);
  if (available <= static_cast<long>(count)) {
    std::vector<Monomial> monos;
    Monomial cur(nvars, 0);
    all_monomials(nvars, degree, cur, 0, monos);
    for (const auto& m : monos) out.push_back(MPoly::monomial(nvars, m));
    std::uniform_int_distribution<long> c(-5, 5);
    while (out.size() < count) {
      MPoly p(nvars);
      for (const auto& m : monos) p.add_term(m, Rat(c(rng)));
      out.push_back(p);
    }
    return out;
  }
  std::set<Monomial> seen;
  while (out.size() < count) {
    Monomial m = random_monomial(rng, nvars, degree);
    if (seen.insert(m).second) out.push_back(MPoly::monomial(nvars, m));
  }
  return out;
}

LinForm random_form(Rng& rng, std::size_t nvars) {
  std::uniform_int_distribution<long> c(-3, 3);
  LinForm f(nvars);
  while (f.is_zero()) {
    for (std::size_t j = 0; j < nvars; ++j) f.set_coeff(j, Rat(c(rng)));
  }
  return f;
}

MPoly random_poly(Rng& rng, std::size_t nvars, int max_degree, int terms) {
  MPoly p(nvars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng, nvars, deg(rng)), random_rat(rng, 9, 3));
  return p;
}

FactoredRat random_factored(Rng& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> mult(1, 3);
  std::vector<TaggedFactor> den;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    LinForm f = random_form(rng, nvars);
    VarSet allowed;
    for (auto j : f.support()) allowed.set(j);
    den.push_back({f, mult(rng), allowed});
  }
  MPoly num = random_poly(rng, nvars, 3, 3);
  if (rng() % 2 == 0) num *= MPoly::from_linear(den.front().form);
  return FactoredRat(random_rat(rng), num, den);
}

std::vector<Rat> random_point(Rng& rng, std::size_t nvars) {
  std::vector<Rat> p;
  for (std::size_t j = 0; j < nvars; ++j) p.push_back(random_rat(rng, 40, 7));
  return p;
}

bool canonical_factors(const FactoredRat& f) {
  return std::all_of(f.den().begin(), f.den().end(), [](const TaggedFactor& t) {
    return t.form.canonical().first == 1 && t.multiplicity > 0;
  });
}

// --- criteria ---------------------------------------------------------------

std::vector<Check> criterion_w(const LadderConfig& cfg) {
  std::vector<Check> out;
  const auto& w = known_w();
  const int top = std::min(cfg.degree_max, 5);
  for (int d = 1; d <= top; ++d) {
    guarded(out, 1, degree_name("w_d = w(1,0)/2", d), [&] {
      const Rat expected = d <= 4 ? w[static_cast<std::size_t>(d - 1)] : mirror_w(d).back();
      return compare(1, degree_name("w_d = w(1,0)/2", d), expected,
                     compute_w(d, 1, 0, cfg.engine, cfg.e6_variant) / 2);
    });
  }
  return out;
}

std::vector<Check> criterion_hol(const LadderConfig& cfg) {
  std::vector<Check> out;
  for (int d = 1; d <= std::min(cfg.degree_max, 5); ++d) {
    const std::string name = degree_name("(d/2) w(2,-1) = A_d", d);
    guarded(out, 2, name, [&] {
      return compare(2, name, f0_coeff(d), Rat(d) / 2 * compute_w(d, 2, -1, cfg.engine, cfg.e6_variant));
    });
  }
  return out;
}

std::vector<Check> criterion_volume(const LadderConfig& cfg) {
  std::vector<Check> out;
  for (int d = 1; d <= std::min(cfg.degree_max, 5); ++d) {
    const std::string name = degree_name("integral of Vol", d);
    guarded(out, 3, name, [&] { return compare(3, name, 1, integrate_class(d, volume_form(d), cfg.engine)); });
  }
  return out;
}

std::vector<Check> criterion_annihilation(const LadderConfig& cfg) {
  std::vector<Check> out;
  Rng rng(cfg.seed + 4);
  for (int d = 1; d <= std::min(cfg.degree_max, 3); ++d) {
    const auto n = static_cast<std::size_t>(d + 1);
    const auto gens = sr_ideal(d);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int comp = 6 * d + 2 - gens[i].total_degree();
      const auto samples = complementary_classes(rng, n, comp);
      const std::string name = degree_name("r_" + std::to_string(i) + " x 10 classes", d);
      guarded(out, 4, name, [&] {
        std::size_t zero = 0;
        for (const auto& m : samples) zero += integrate_class(d, gens[i] * m, cfg.engine) == 0 ? 1 : 0;
        return compare(4, name, Rat(static_cast<long>(samples.size())), Rat(static_cast<long>(zero)));
      });
    }
  }
  return out;
}

std::vector<Check> criterion_degree(const LadderConfig& cfg) {
  std::vector<Check> out;
  Rng rng(cfg.seed + 5);
  for (int d = 1; d <= std::min(cfg.degree_max, 3); ++d) {
    const auto n = static_cast<std::size_t>(d + 1);
    std::uniform_int_distribution<int> deg(0, 6 * d + 8);
    std::vector<MPoly> samples;
    while (samples.size() < 20) {
      const int k = deg(rng);
      if (k == 6 * d + 2) continue;
      samples.push_back(MPoly::monomial(n, random_monomial(rng, n, k)));
    }
    const std::string name = degree_name("20 off-degree monomials vanish", d);
    guarded(out, 5, name, [&] {
      long zero = 0;
      for (const auto& m : samples) zero += integrate_class(d, m, cfg.engine) == 0 ? 1 : 0;
      return compare(5, name, Rat(20), Rat(zero));
    });
  }
  return out;
}

std::vector<Check> criterion_order(const LadderConfig& cfg) {
  std::vector<Check> out;
  Rng rng(cfg.seed + 6);
  for (int d = 1; d <= std::min(cfg.degree_max, 3); ++d) {
    const auto n = static_cast<std::size_t>(d + 1);
    std::vector<std::pair<std::string, FactoredRat>> integrands;
    integrands.emplace_back("w(1,0)", build_integrand(IntegrandSpec::two_point(d, 1, 0, cfg.e6_variant)));
    integrands.emplace_back("w(2,-1)", build_integrand(IntegrandSpec::two_point(d, 2, -1, cfg.e6_variant)));
    integrands.emplace_back("Vol", class_integrand(d, volume_form(d)));
    for (int k = 0; k < 3; ++k) {
      integrands.emplace_back("class " + std::to_string(k),
                              class_integrand(d, MPoly::monomial(n, random_monomial(rng, n, 6 * d + 2))));
    }
    for (const auto& [label, f] : integrands) {
      const std::string name = degree_name("ascending = descending, " + label, d);
      guarded(out, 6, name, [&] {
        const Rat up = integrate(f, ResiduePlan::ascending(n, 6 * d + 2), cfg.engine);
        const Rat down = integrate(f, ResiduePlan::descending(n, 6 * d + 2), cfg.engine);
        return compare(6, name, up, down);
      });
    }
  }
  return out;
}

std::vector<Check> criterion_lemmas(const LadderConfig& cfg) {
  std::vector<Check> out;
  const int top = std::min(cfg.degree_max, 4);
  for (int d = 1; d <= top; ++d) {
    const std::string name = degree_name("lemma second closed form", d);
    guarded(out, 7, name, [&] { return compare(7, name, lemma_second_closed_form(d), lemma_second_value(d, cfg.engine)); });
  }
  for (int d = 2; d <= top; ++d) {
    for (int f = 1; f <= d - 1; ++f) {
      const std::string name = degree_name("lemma last f=" + std::to_string(f), d);
      guarded(out, 7, name, [&] {
        const auto r = lemma_last_check(d, f, cfg.engine);
        return compare(7, name, r.product_side, r.residue_side);
      });
    }
    const std::string tele = degree_name("telescoping identity", d);
    guarded(out, 7, tele, [&] { return truth(7, tele, telescoping_lhs(d) == telescoping_rhs(d)); });
  }
  for (int d = 1; d <= top; ++d) {
    const std::string name = degree_name("R_d = B_d", d);
    guarded(out, 7, name, [&] { return compare(7, name, f1_hat_coeff(d), main_theorem_Rd(d, cfg.engine)); });
  }
  return out;
}

std::vector<Check> criterion_toric(const LadderConfig& cfg) {
  std::vector<Check> out;
  for (int d = 1; d <= 10; ++d) {
    const std::string name = degree_name("fan shape and ray relations", d);
    guarded(out, 8, name, [&] {
      const FanData fan = build_fan(d);
      const bool shape = fan.rays.cols() == 7 * d + 3 && fan.rays.rows() == 6 * d + 2;
      const auto rel = relation_check(fan);
      return truth(8, name, shape && rel.ok,
                   shape ? "relation " + std::to_string(rel.first_failing) + " fails" : "wrong ray matrix shape");
    });
  }
  guarded(out, 8, "det B_k = 9k-6, k=1..30", [&] {
    for (int k = 1; k <= 30; ++k) {
      const Int det = det_Bk(k);
      if (det != 9 * k - 6) {
        return compare(8, "det B_k = 9k-6, k=" + std::to_string(k), Rat(9 * k - 6), Rat(det));
      }
    }
    return truth(8, "det B_k = 9k-6, k=1..30", true);
  });
  for (int d = 1; d <= std::min(cfg.degree_max, 4); ++d) {
    const std::string name = degree_name("orientation determinants positive", d);
    guarded(out, 8, name, [&] {
      const auto rep = orientation_enumeration(d);
      long regions = 1;
      for (int i = 0; i <= d; ++i) regions *= (i == 0 || i == d) ? 2 : 4;
      return truth(8, name, rep.all_positive && rep.regions == regions,
                   "regions " + std::to_string(rep.regions) + ", min det " + to_string(rep.min_det));
    });
  }
  for (int d = 1; d <= 2; ++d) {
    const std::string name = degree_name("SR generators as stated", d);
    guarded(out, 8, name, [&] { return truth(8, name, sr_ideal(d) == stated_sr_ideal(d)); });
    const std::string prod = degree_name("SR generators from divisor classes", d);
    guarded(out, 8, prod, [&] {
      const FanData fan = build_fan(d);
      const DivisorClasses dc = divisor_classes(d);
      const auto gens = sr_ideal(d);
      bool ok = true;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        MPoly p = MPoly::constant(static_cast<std::size_t>(d + 1), 1);
        for (int col : fan.primitive_collections[i]) p *= dc.class_polynomial(col);
        ok = ok && p == Rat(3) * gens[i];
      }
      return truth(8, prod, ok);
    });
  }
  return out;
}

std::vector<Check> criterion_series(const LadderConfig&) {
  std::vector<Check> out;
  guarded(out, 9, "Picard-Fuchs recursion to order 20", [] {
    const auto rep = pf_recursion_check(20);
    return truth(9, "Picard-Fuchs recursion to order 20", rep.ok,
                 rep.what + " at order " + std::to_string(rep.first_failing_order));
  });
  guarded(out, 9, "mirror_w(4)", [] {
    const auto w = mirror_w(4);
    for (std::size_t i = 0; i < 4; ++i) {
      if (w[i] != known_w()[i]) return compare(9, "mirror_w(4) w_" + std::to_string(i + 1), known_w()[i], w[i]);
    }
    return truth(9, "mirror_w(4)", true);
  });
  guarded(out, 9, "j_from_w(5)", [] {
    const auto j = j_from_w(5);
    for (std::size_t i = 0; i < 5; ++i) {
      if (j[i] != known_j()[i]) return compare(9, "j_from_w(5) j_" + std::to_string(i + 1), known_j()[i], j[i]);
    }
    return truth(9, "j_from_w(5)", true);
  });
  guarded(out, 9, "compositions = Lagrange inversion to order 8", [] {
    const auto w = mirror_w(8);
    const auto a = j_from_w(w);
    const auto b = lagrange_oracle(w);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return compare(9, "Lagrange j_" + std::to_string(i + 1), b[i], a[i]);
    }
    return truth(9, "compositions = Lagrange inversion to order 8", true);
  });
  return out;
}

std::vector<Check> criterion_properties(const LadderConfig& cfg) {
  std::vector<Check> out;
  const int top3 = std::min(cfg.degree_max, 3);
  const int top4 = std::min(cfg.degree_max, 4);
  const std::vector<std::pair<int, int>> off_pairs{{0, 0}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {3, -1}, {-1, 0}, {1, -1}};
  for (int d = 1; d <= top3; ++d) {
    const std::string name = degree_name("w(a,b) = 0 for a+b != 1", d);
    guarded(out, 10, name, [&] {
      long zero = 0;
      for (auto [a, b] : off_pairs) zero += compute_w(d, a, b, cfg.engine) == 0 ? 1 : 0;
      return compare(10, name, Rat(static_cast<long>(off_pairs.size())), Rat(zero));
    });
  }
  {
    Rng rng(cfg.seed + 101);
    for (int d = 1; d <= top3; ++d) {
      const auto n = static_cast<std::size_t>(d + 1);
      const std::string name = degree_name("residue linearity, 5 trials", d);
      guarded(out, 10, name, [&] {
        long ok = 0;
        for (int t = 0; t < 5; ++t) {
          const MPoly a = MPoly::monomial(n, random_monomial(rng, n, 6 * d + 2));
          const MPoly b = MPoly::monomial(n, random_monomial(rng, n, 6 * d + 2));
          const Rat x = random_rat(rng);
          const Rat y = random_rat(rng);
          const Rat lhs = integrate_class(d, x * a + y * b, cfg.engine);
          const Rat rhs = x * integrate_class(d, a, cfg.engine) + y * integrate_class(d, b, cfg.engine);
          ok += lhs == rhs ? 1 : 0;
        }
        return compare(10, name, Rat(5), Rat(ok));
      });
    }
  }
  guarded(out, 10, "FactoredRat closure, 60 trials", [&] {
    Rng rng(cfg.seed + 102);
    const std::size_t n = 3;
    long ok = 0;
    long trials = 0;
    while (trials < 60) {
      const FactoredRat a = random_factored(rng, n);
      const FactoredRat b = random_factored(rng, n);
      const auto p = random_point(rng, n);
      Rat va;
      Rat vb;
      try {
        va = a.evaluate(p);
        vb = b.evaluate(p);
      } catch (const std::domain_error&) {
        continue;
      }
      ++trials;
      const FactoredRat prod = a * b;
      const FactoredRat sum = a + b;
      const FactoredRat red = fr_reduce(a);
      bool good = prod.evaluate(p) == va * vb && sum.evaluate(p) == va + vb && red.evaluate(p) == va;
      good = good && fr_reduce(red).den() == red.den() && fr_reduce(red).num() == red.num();
      good = good && canonical_factors(a) && canonical_factors(prod) && canonical_factors(sum);
      // substituting z_2 = c0 z_0 + c1 z_1 commutes with evaluation
      LinForm point(n);
      point.set_coeff(0, random_rat(rng, 4, 2));
      point.set_coeff(1, random_rat(rng, 4, 2));
      std::vector<Rat> q = p;
      q[2] = point.evaluate(p);
      try {
        const Rat direct = a.evaluate(q);
        good = good && fr_subst(a, 2, point).evaluate(p) == direct;
      } catch (const std::domain_error&) {
      }
      ok += good ? 1 : 0;
    }
    return compare(10, "FactoredRat closure, 60 trials", Rat(60), Rat(ok));
  });
  {
    Rng rng(cfg.seed + 103);
    for (int d = 1; d <= top4; ++d) {
      const auto n = static_cast<std::size_t>(d + 1);
      const std::string name = degree_name("recession map positively homogeneous, 25 trials", d);
      guarded(out, 10, name, [&] {
        long ok = 0;
        for (int t = 0; t < 25; ++t) {
          const auto alpha = random_point(rng, n);
          Rat s = random_rat(rng);
          while (s <= 0) s = random_rat(rng);
          std::vector<Rat> scaled = alpha;
          for (auto& x : scaled) x *= s;
          auto image = eval_recession(d, alpha);
          for (auto& x : image) x *= s;
          ok += eval_recession(d, scaled) == image ? 1 : 0;
        }
        return compare(10, name, Rat(25), Rat(ok));
      });
    }
    if (top4 >= 1) {
      const long pairs = 10000;
      const std::string name = "recession map injective on " + std::to_string(pairs) + " pairs, d<=" + std::to_string(top4);
      guarded(out, 10, name, [&] {
        long distinct = 0;
        for (long t = 0; t < pairs; ++t) {
          const int d = 1 + static_cast<int>(t % top4);
          const auto n = static_cast<std::size_t>(d + 1);
          auto alpha = random_point(rng, n);
          auto beta = random_point(rng, n);
          while (alpha == beta) beta = random_point(rng, n);
          distinct += eval_recession(d, alpha) != eval_recession(d, beta) ? 1 : 0;
        }
        return compare(10, name, Rat(pairs), Rat(distinct));
      });
    }
  }
  return out;
}

}  // namespace

const std::vector<Rat>& known_w() {
  static const std::vector<Rat> w{Rat(744), Rat(473652), Rat(451734080), Rat(Int("510531007770"))};
  return w;
}

const std::vector<Rat>& known_j() {
  static const std::vector<Rat> j{Rat(744), Rat(196884), Rat(21493760), Rat(864299970), Rat(Int("20245856256"))};
  return j;
}

std::vector<MPoly> stated_sr_ideal(int d) {
  if (d != 1 && d != 2) throw std::invalid_argument("stated_sr_ideal: only d = 1, 2 are written out");
  const auto n = static_cast<std::size_t>(d + 1);
  auto h = [&](std::size_t i) { return MPoly::variable(n, i); };
  auto h4 = [&](std::size_t i) { return pow(h(i), 4); };
  if (d == 1) {
    return {h4(0) * (Rat(2) * h(0) + h(1)), h4(1) * (h(0) + Rat(2) * h(1))};
  }
  return {h4(0) * (Rat(2) * h(0) + h(1)),
          h4(1) * (h(0) + Rat(2) * h(1)) * (Rat(2) * h(1) + h(2)) * (Rat(2) * h(1) - h(0) - h(2)),
          h4(2) * (h(1) + Rat(2) * h(2))};
}

std::vector<Check> run_criterion(int criterion, const LadderConfig& config) {
  switch (criterion) {
    case 1: return criterion_w(config);
    case 2: return criterion_hol(config);
    case 3: return criterion_volume(config);
    case 4: return criterion_annihilation(config);
    case 5: return criterion_degree(config);
    case 6: return criterion_order(config);
    case 7: return criterion_lemmas(config);
    case 8: return criterion_toric(config);
    case 9: return criterion_series(config);
    case 10: return criterion_properties(config);
    default: throw std::invalid_argument("run_criterion: criterion must lie in 1..10");
  }
}

std::vector<Check> run_ladder(const LadderConfig& config) {
  std::vector<Check> out;
  for (int c = 1; c <= kCriteria; ++c) {
    auto part = run_criterion(c, config);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<Check> first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return c;
  }
  return std::nullopt;
}

}  // namespace quasimap
