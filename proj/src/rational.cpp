#include "quasimap/rational.hpp"

#include <stdexcept>

namespace quasimap {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

namespace {

Int parse_int(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer in rational literal");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in rational literal: " + std::string(s));
  }
  std::string owned(s.front() == '+' ? s.substr(1) : s);
  return Int(owned, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den < 0) throw std::invalid_argument("negative denominator in rational literal");
  return make_rat(num, den);
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial of n < -1");
  if (n <= 0) return 1;
  Int out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace quasimap
