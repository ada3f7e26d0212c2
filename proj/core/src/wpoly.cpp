#include "zigzag/wpoly.hpp"

#include <algorithm>
#include <sstream>

namespace zigzag {

WPoly::WPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

WPoly::WPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

WPoly WPoly::constant(const Rat& c) { return WPoly(std::vector<Rat>{c}); }

WPoly WPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return WPoly(std::move(v));
}

Rat WPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

Rat WPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

WPoly WPoly::substitute_square() const {
  if (coeffs_.empty()) return {};
  std::vector<Rat> v(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
  return WPoly(std::move(v));
}

WPoly WPoly::negated() const {
  WPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string WPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (i == 0 || !unit) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

void WPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

WPoly operator+(const WPoly& a, const WPoly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return WPoly(std::move(v));
}

WPoly operator-(const WPoly& a, const WPoly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return WPoly(std::move(v));
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return WPoly(std::move(v));
}

WPoly operator*(const Rat& s, const WPoly& p) {
  if (sgn(s) == 0) return {};
  WPoly out = p;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

WPoly poly_arith(const WPoly& a, const WPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  return {};
}

Rat poly_eval(const WPoly& p, const Rat& x) { return p.eval(x); }

}  // namespace zigzag
