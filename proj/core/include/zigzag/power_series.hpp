#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zigzag/series.hpp"
#include "zigzag/wpoly.hpp"

namespace zigzag {

// Truncated ordinary power series sum_{i<=U} a_i u^i with WPoly
// coefficients. Used where the algebra is OGF-natural (continued fractions).
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<WPoly> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(const WPoly& c, std::size_t order);
  // c * u^k truncated to order.
  static PowerSeries monomial(const WPoly& c, std::size_t k,
                              std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<WPoly>& coeffs() const { return coeffs_; }
  const WPoly& operator[](std::size_t i) const { return coeffs_.at(i); }

  // Multiplicative inverse. The constant coefficient must be a nonzero
  // constant polynomial; otherwise the inverse leaves Q[w][[u]].
  PowerSeries inverse() const;

  // Evaluates every coefficient at w = x.
  PowerSeries specialize(const Rat& x) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<WPoly> coeffs_;
};

// a_n = c_n / n!
PowerSeries egf_to_ogf(const EgfSeries& f);
// c_n = a_n * n!
EgfSeries ogf_to_egf(const PowerSeries& f);

std::optional<std::size_t> series_agreement_order(const PowerSeries& f,
                                                  const PowerSeries& g);

}  // namespace zigzag
