#include "quasimap/factored.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quasimap {

VarSet var_set(std::initializer_list<std::size_t> vars) {
  VarSet s;
  for (auto v : vars) s.set(v);
  return s;
}

FactoredRat::FactoredRat(std::size_t nvars) : scalar_(0), num_(nvars) {}

FactoredRat::FactoredRat(Rat scalar, MPoly num, std::vector<TaggedFactor> den)
    : scalar_(std::move(scalar)), num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() > kMaxVars) throw std::invalid_argument("FactoredRat: too many variables");
  normalize();
}

FactoredRat FactoredRat::constant(std::size_t nvars, const Rat& c) {
  return FactoredRat(c, MPoly::constant(nvars, 1));
}

void FactoredRat::normalize() {
  if (scalar_ == 0 || num_.is_zero()) {
    scalar_ = 0;
    num_ = MPoly(num_.nvars());
    den_.clear();
    return;
  }
  std::map<LinForm, TaggedFactor> merged;
  for (auto& f : den_) {
    if (f.form.nvars() != num_.nvars()) throw std::invalid_argument("FactoredRat: factor arity mismatch");
    if (f.multiplicity < 0) throw std::invalid_argument("FactoredRat: negative multiplicity");
    if (f.multiplicity == 0) continue;
    auto [scale, canon] = f.form.canonical();
    Rat scale_pow = 1;
    for (int e = 0; e < f.multiplicity; ++e) scale_pow *= scale;
    scalar_ /= scale_pow;
    VarSet support;
    for (auto j : canon.support()) support.set(j);
    auto [it, inserted] = merged.try_emplace(canon, TaggedFactor{canon, f.multiplicity, f.allowed & support});
    if (!inserted) {
      it->second.multiplicity += f.multiplicity;
      it->second.allowed |= f.allowed & support;
    }
  }
  den_.clear();
  den_.reserve(merged.size());
  for (auto& [form, f] : merged) den_.push_back(std::move(f));
}

bool FactoredRat::involves(std::size_t var) const {
  if (num_.involves(var)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const TaggedFactor& f) { return f.form.involves(var); });
}

int FactoredRat::den_degree() const {
  int deg = 0;
  for (const auto& f : den_) deg += f.multiplicity;
  return deg;
}

Rat FactoredRat::evaluate(std::span<const Rat> point) const {
  if (is_zero()) return 0;
  Rat denom = 1;
  for (const auto& f : den_) {
    const Rat v = f.form.evaluate(point);
    if (v == 0) throw std::domain_error("FactoredRat::evaluate: point lies on a pole");
    for (int e = 0; e < f.multiplicity; ++e) denom *= v;
  }
  return scalar_ * num_.evaluate(point) / denom;
}

FactoredRat& FactoredRat::divide_by(const LinForm& form, int multiplicity, VarSet allowed) {
  if (is_zero()) return *this;
  den_.push_back(TaggedFactor{form, multiplicity, allowed});
  normalize();
  return *this;
}

FactoredRat& FactoredRat::operator*=(const FactoredRat& o) {
  if (o.nvars() != nvars()) throw std::invalid_argument("FactoredRat: arity mismatch");
  scalar_ *= o.scalar_;
  num_ *= o.num_;
  den_.insert(den_.end(), o.den_.begin(), o.den_.end());
  normalize();
  return *this;
}

FactoredRat& FactoredRat::operator*=(const Rat& s) {
  scalar_ *= s;
  normalize();
  return *this;
}

FactoredRat operator*(FactoredRat a, const FactoredRat& b) { return a *= b; }
FactoredRat operator*(const Rat& s, FactoredRat a) { return a *= s; }

FactoredRat operator+(const FactoredRat& a, const FactoredRat& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("FactoredRat: arity mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  std::map<LinForm, TaggedFactor> common;
  for (const auto* side : {&a, &b}) {
    for (const auto& f : side->den()) {
      auto [it, inserted] = common.try_emplace(f.form, f);
      if (!inserted) {
        it->second.multiplicity = std::max(it->second.multiplicity, f.multiplicity);
        it->second.allowed |= f.allowed;
      }
    }
  }
  auto lift = [&](const FactoredRat& x) {
    MPoly num = x.scalar() * x.num();
    for (const auto& [form, f] : common) {
      int have = 0;
      for (const auto& g : x.den()) {
        if (g.form == form) have = g.multiplicity;
      }
      if (f.multiplicity > have) num *= pow(MPoly::from_linear(form), static_cast<unsigned>(f.multiplicity - have));
    }
    return num;
  };
  std::vector<TaggedFactor> den;
  for (auto& [form, f] : common) den.push_back(f);
  return FactoredRat(1, lift(a) + lift(b), std::move(den));
}

FactoredRat fr_derivative(const FactoredRat& f, std::size_t var) {
  if (var >= f.nvars()) throw std::out_of_range("fr_derivative: variable index");
  if (f.is_zero()) return f;

  std::vector<std::size_t> involved;
  for (std::size_t i = 0; i < f.den().size(); ++i) {
    if (f.den()[i].form.involves(var)) involved.push_back(i);
  }

  // d/dz (N / prod f_i^m_i) = (N' prod f_i - N sum_i m_i f_i' prod_{k != i} f_k) / prod f_i^(m_i+1)
  std::vector<MPoly> forms;
  for (auto i : involved) forms.push_back(MPoly::from_linear(f.den()[i].form));

  MPoly all = MPoly::constant(f.nvars(), 1);
  for (const auto& p : forms) all *= p;
  MPoly num = derivative(f.num(), var) * all;

  for (std::size_t a = 0; a < involved.size(); ++a) {
    const auto& factor = f.den()[involved[a]];
    MPoly others = MPoly::constant(f.nvars(), Rat(factor.multiplicity) * factor.form.coeff(var));
    for (std::size_t b = 0; b < involved.size(); ++b) {
      if (b != a) others *= forms[b];
    }
    num -= f.num() * others;
  }

  std::vector<TaggedFactor> den = f.den();
  for (auto i : involved) den[i].multiplicity += 1;
  return FactoredRat(f.scalar(), std::move(num), std::move(den));
}

FactoredRat fr_reduce(const FactoredRat& f) {
  if (f.is_zero()) return f;
  MPoly num = f.num();
  std::vector<TaggedFactor> den = f.den();
  for (auto& factor : den) {
    const auto support = factor.form.support();
    if (support.size() == 1) {
      // Canonical single-variable form is z_j: cancel the monomial content.
      const std::size_t j = support.front();
      int common = factor.multiplicity;
      for (const auto& [exps, c] : num.terms()) common = std::min(common, exps[j]);
      if (common > 0) {
        MPoly shifted(num.nvars());
        for (const auto& [exps, c] : num.terms()) {
          Monomial m = exps;
          m[j] -= common;
          shifted.add_term(m, c);
        }
        num = std::move(shifted);
        factor.multiplicity -= common;
      }
      continue;
    }
    while (factor.multiplicity > 0) {
      auto q = divide_linear(num, factor.form);
      if (!q) break;
      num = std::move(*q);
      --factor.multiplicity;
    }
  }
  return FactoredRat(f.scalar(), std::move(num), std::move(den));
}

FactoredRat fr_subst(const FactoredRat& f, std::size_t var, const LinForm& point) {
  if (f.is_zero()) return f;
  std::vector<TaggedFactor> den;
  den.reserve(f.den().size());
  for (const auto& factor : f.den()) {
    LinForm form = factor.form.subst(var, point);
    if (form.is_zero()) throw std::domain_error("fr_subst: denominator vanishes identically");
    VarSet allowed = factor.allowed;
    allowed.reset(var);
    den.push_back(TaggedFactor{std::move(form), factor.multiplicity, allowed});
  }
  return FactoredRat(f.scalar(), subst_linear(f.num(), var, point), std::move(den));
}

std::string to_string(const FactoredRat& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::string out = to_string(f.scalar()) + " * (" + to_string(f.num(), var) + ")";
  if (f.den().empty()) return out;
  out += " / (";
  bool first = true;
  for (const auto& factor : f.den()) {
    if (!first) out += " * ";
    first = false;
    out += "(" + to_string(factor.form, var) + ")";
    if (factor.multiplicity > 1) out += "^" + std::to_string(factor.multiplicity);
  }
  return out + ")";
}

}  // namespace quasimap
