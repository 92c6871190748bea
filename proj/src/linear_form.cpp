#include "quasimap/linear_form.hpp"

#include <stdexcept>

namespace quasimap {

LinForm LinForm::variable(std::size_t nvars, std::size_t j, const Rat& c) {
  LinForm f(nvars);
  f.coeffs_.at(j) = c;
  return f;
}

LinForm LinForm::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return LinForm(std::move(c));
}

bool LinForm::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<std::size_t> LinForm::support() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) out.push_back(j);
  }
  return out;
}

Rat LinForm::evaluate(std::span<const Rat> point) const {
  if (point.size() != coeffs_.size()) throw std::invalid_argument("LinForm::evaluate: arity mismatch");
  Rat acc = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) acc += coeffs_[j] * point[j];
  }
  return acc;
}

LinForm LinForm::subst(std::size_t var, const LinForm& point) const {
  if (point.nvars() != nvars()) throw std::invalid_argument("LinForm::subst: arity mismatch");
  if (point.involves(var)) throw std::invalid_argument("LinForm::subst: point involves the substituted variable");
  LinForm out = *this;
  const Rat c = out.coeffs_.at(var);
  if (c == 0) return out;
  out.coeffs_[var] = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (point.coeffs_[j] != 0) out.coeffs_[j] += c * point.coeffs_[j];
  }
  return out;
}

LinForm LinForm::solve_for(std::size_t var) const {
  const Rat c = coeffs_.at(var);
  if (c == 0) throw std::invalid_argument("LinForm::solve_for: form does not involve the variable");
  LinForm out(nvars());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j != var && coeffs_[j] != 0) out.coeffs_[j] = -coeffs_[j] / c;
  }
  return out;
}

std::pair<Rat, LinForm> LinForm::canonical() const {
  Int den_lcm = 1;
  Int num_gcd = 0;
  std::size_t first = coeffs_.size();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto& c = coeffs_[j];
    if (c == 0) continue;
    if (first == coeffs_.size()) first = j;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  if (first == coeffs_.size()) throw std::invalid_argument("LinForm::canonical: zero form");
  Rat scale = make_rat(num_gcd, den_lcm);
  if (coeffs_[first] < 0) scale = -scale;
  LinForm canon(nvars());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) canon.coeffs_[j] = coeffs_[j] / scale;
  }
  return {scale, std::move(canon)};
}

LinForm& LinForm::operator+=(const LinForm& o) {
  if (o.nvars() != nvars()) throw std::invalid_argument("LinForm: arity mismatch");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  if (o.nvars() != nvars()) throw std::invalid_argument("LinForm: arity mismatch");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

LinForm& LinForm::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
LinForm operator-(LinForm a) { return a *= Rat(-1); }
LinForm operator*(const Rat& s, LinForm a) { return a *= s; }

std::string to_string(const LinForm& f, std::string_view var) {
  std::string out;
  for (std::size_t j = 0; j < f.nvars(); ++j) {
    Rat c = f.coeff(j);
    if (c == 0) continue;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0) {
      out += "-";
      c = abs(c);
    }
    if (c != 1) out += to_string(c) + "*";
    out += std::string(var) + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace quasimap
