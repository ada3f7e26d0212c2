#include "zigzag/series.hpp"

#include <stdexcept>
#include <string>

namespace zigzag {

namespace {

void require_same_order(const EgfSeries& f, const EgfSeries& g,
                        const char* what) {
  if (f.order() != g.order()) {
    throw std::invalid_argument(std::string(what) + ": order mismatch (" +
                                std::to_string(f.order()) + " vs " +
                                std::to_string(g.order()) + ")");
  }
}

}  // namespace

EgfSeries::EgfSeries(std::vector<WPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("EgfSeries needs at least one coefficient");
  }
}

EgfSeries EgfSeries::zero(std::size_t order) {
  return EgfSeries(std::vector<WPoly>(order + 1));
}

EgfSeries EgfSeries::one(std::size_t order) {
  std::vector<WPoly> v(order + 1);
  v[0] = WPoly{1};
  return EgfSeries(std::move(v));
}

EgfSeries EgfSeries::exp(std::size_t order) {
  return EgfSeries(std::vector<WPoly>(order + 1, WPoly{1}));
}

EgfSeries EgfSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("cannot extend a series by truncation");
  }
  return EgfSeries(std::vector<WPoly>(coeffs_.begin(),
                                      coeffs_.begin() + order + 1));
}

EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) {
  require_same_order(a, b, "series add");
  std::vector<WPoly> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return EgfSeries(std::move(v));
}

EgfSeries operator-(const EgfSeries& a, const EgfSeries& b) {
  require_same_order(a, b, "series sub");
  std::vector<WPoly> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
  return EgfSeries(std::move(v));
}

EgfSeries operator*(const WPoly& s, const EgfSeries& f) {
  return f.map([&](const WPoly& c) { return s * c; });
}

EgfSeries series_mul(const EgfSeries& f, const EgfSeries& g) {
  require_same_order(f, g, "series_mul");
  const std::size_t order = f.order();
  std::vector<WPoly> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    WPoly acc;
    for (std::size_t i = 0; i <= n; ++i) {
      const WPoly& a = f[i];
      const WPoly& b = g[n - i];
      if (a.is_zero() || b.is_zero()) continue;
      acc += Rat(binomial(n, i)) * (a * b);
    }
    out[n] = std::move(acc);
  }
  return EgfSeries(std::move(out));
}

EgfSeries series_derive(const EgfSeries& f) {
  if (f.order() == 0) {
    throw std::invalid_argument("series_derive: order-0 series");
  }
  return EgfSeries(std::vector<WPoly>(f.coeffs().begin() + 1, f.coeffs().end()));
}

std::optional<std::size_t> series_agreement_order(const EgfSeries& f,
                                                  const EgfSeries& g) {
  require_same_order(f, g, "series_agreement_order");
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (f[i] != g[i]) return i;
  }
  return std::nullopt;
}

}  // namespace zigzag
