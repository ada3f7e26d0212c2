#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zigzag/wpoly.hpp"

namespace zigzag {

// Truncated exponential generating function sum_{i<=U} c_i u^i / i!.
// Coefficients are stored without the 1/i! factor. The truncation order U
// belongs to the value; mixing orders is an error.
class EgfSeries {
 public:
  // coeffs.size() == order + 1; an empty vector is rejected.
  explicit EgfSeries(std::vector<WPoly> coeffs);

  static EgfSeries zero(std::size_t order);
  static EgfSeries one(std::size_t order);
  // exp(u): every coefficient is 1.
  static EgfSeries exp(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<WPoly>& coeffs() const { return coeffs_; }
  const WPoly& operator[](std::size_t i) const { return coeffs_.at(i); }

  // Keeps c_0..c_order; order must not exceed the current order.
  EgfSeries truncated(std::size_t order) const;
  // Applies f to every coefficient.
  template <typename F>
  EgfSeries map(F&& f) const {
    std::vector<WPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return EgfSeries(std::move(out));
  }

  friend EgfSeries operator+(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator-(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator*(const WPoly& s, const EgfSeries& f);
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) = default;

 private:
  std::vector<WPoly> coeffs_;
};

// Binomial convolution: c_n = sum_i binom(n, i) f_i g_{n-i}.
EgfSeries series_mul(const EgfSeries& f, const EgfSeries& g);

// EGF derivative: shifts coefficients down by one, order drops by one.
EgfSeries series_derive(const EgfSeries& f);

// First index where f and g differ; nullopt when they agree through the
// shared order.
std::optional<std::size_t> series_agreement_order(const EgfSeries& f,
                                                  const EgfSeries& g);

}  // namespace zigzag
