#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/rational.hpp"

namespace zigzag {

// Dense univariate polynomial over the rationals. The variable stands for
// the peak weight k or for the modulus square m = k^2, depending on the
// caller. Trailing zeros are always trimmed; zero has no coefficients.
class WPoly {
 public:
  WPoly() = default;
  explicit WPoly(std::vector<Rat> coeffs);
  WPoly(std::initializer_list<long> coeffs);

  static WPoly constant(const Rat& c);
  static WPoly monomial(const Rat& c, std::size_t degree);
  static WPoly variable() { return monomial(Rat(1), 1); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t i) const;
  Rat constant_term() const { return coeff(0); }

  Rat eval(const Rat& x) const;

  // p(w) -> p(w^2)
  WPoly substitute_square() const;
  WPoly negated() const;

  std::string to_string(std::string_view var = "w") const;

  friend WPoly operator+(const WPoly& a, const WPoly& b);
  friend WPoly operator-(const WPoly& a, const WPoly& b);
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  friend WPoly operator*(const Rat& s, const WPoly& p);
  friend WPoly operator-(const WPoly& p) { return p.negated(); }
  WPoly& operator+=(const WPoly& o) { return *this = *this + o; }
  WPoly& operator-=(const WPoly& o) { return *this = *this - o; }
  WPoly& operator*=(const WPoly& o) { return *this = *this * o; }

  friend bool operator==(const WPoly& a, const WPoly& b) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

enum class PolyOp { add, sub, mul };

WPoly poly_arith(const WPoly& a, const WPoly& b, PolyOp op);
Rat poly_eval(const WPoly& p, const Rat& x);

}  // namespace zigzag
