#include "zigzag/power_series.hpp"

#include <stdexcept>
#include <string>

namespace zigzag {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("power series order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace

PowerSeries::PowerSeries(std::vector<WPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("PowerSeries needs at least one coefficient");
  }
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<WPoly>(order + 1));
}

PowerSeries PowerSeries::constant(const WPoly& c, std::size_t order) {
  return monomial(c, 0, order);
}

PowerSeries PowerSeries::monomial(const WPoly& c, std::size_t k,
                                  std::size_t order) {
  std::vector<WPoly> v(order + 1);
  if (k <= order) v[k] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::inverse() const {
  const WPoly& lead = coeffs_[0];
  if (lead.is_zero()) {
    throw std::domain_error("series inverse: zero constant term");
  }
  if (!lead.is_constant()) {
    throw std::domain_error(
        "series inverse: constant term " + lead.to_string() +
        " is not a unit in Q[w]; specialize the weight first");
  }
  const Rat inv_lead = 1 / lead.constant_term();
  std::vector<WPoly> out(coeffs_.size());
  out[0] = WPoly::constant(inv_lead);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    WPoly acc;
    for (std::size_t i = 1; i <= n; ++i) {
      if (coeffs_[i].is_zero() || out[n - i].is_zero()) continue;
      acc += coeffs_[i] * out[n - i];
    }
    out[n] = (-inv_lead) * acc;
  }
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::specialize(const Rat& x) const {
  std::vector<WPoly> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(WPoly::constant(c.eval(x)));
  return PowerSeries(std::move(v));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  std::vector<WPoly> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  std::vector<WPoly> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  std::vector<WPoly> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < v.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PowerSeries(std::move(v));
}

PowerSeries egf_to_ogf(const EgfSeries& f) {
  std::vector<WPoly> v;
  v.reserve(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    v.push_back(Rat(BigInt(1), factorial(n)) * f[n]);
  }
  return PowerSeries(std::move(v));
}

EgfSeries ogf_to_egf(const PowerSeries& f) {
  std::vector<WPoly> v;
  v.reserve(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    v.push_back(Rat(factorial(n)) * f[n]);
  }
  return EgfSeries(std::move(v));
}

std::optional<std::size_t> series_agreement_order(const PowerSeries& f,
                                                  const PowerSeries& g) {
  require_same_order(f, g);
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (f[i] != g[i]) return i;
  }
  return std::nullopt;
}

}  // namespace zigzag
