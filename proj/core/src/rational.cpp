#include "zigzag/rational.hpp"

#include <stdexcept>

namespace zigzag {

bool is_canonical(const Rat& r) {
  if (sgn(r.get_den()) <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rat out{BigInt(num), d};
  out.canonicalize();
  return out;
}

}  // namespace zigzag
