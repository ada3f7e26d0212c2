#include <gtest/gtest.h>

#include <stdexcept>

#include "zigzag/power_series.hpp"
#include "zigzag/series.hpp"

using namespace zigzag;

namespace {

EgfSeries from_ints(std::initializer_list<long> v) {
  std::vector<WPoly> c;
  for (long x : v) c.push_back(WPoly::constant(Rat(x)));
  return EgfSeries(c);
}

}  // namespace

TEST(EgfSeries, ExpSquaredIsExpTwoU) {
  const EgfSeries e = EgfSeries::exp(10);
  const EgfSeries sq = series_mul(e, e);
  for (std::size_t i = 0; i <= 10; ++i) EXPECT_EQ(sq[i], WPoly::constant(Rat(pow2(i))));
}

TEST(EgfSeries, DeriveShifts) {
  const EgfSeries f = from_ints({5, 1, 2, 3});
  EXPECT_EQ(series_derive(f), from_ints({1, 2, 3}));
  EXPECT_THROW(series_derive(EgfSeries::zero(0)), std::invalid_argument);
}

TEST(EgfSeries, ProductRuleHolds) {
  const EgfSeries f = from_ints({1, -2, 3, 0, 5, 1});
  const EgfSeries g = from_ints({0, 1, 1, -4, 2, 7});
  const EgfSeries lhs = series_derive(series_mul(f, g));
  const EgfSeries rhs = series_mul(series_derive(f), g.truncated(4)) +
                        series_mul(f.truncated(4), series_derive(g));
  EXPECT_EQ(lhs, rhs);
}

TEST(EgfSeries, OrderMismatchRejected) {
  EXPECT_THROW(EgfSeries::one(3) + EgfSeries::one(4), std::invalid_argument);
  EXPECT_THROW(series_mul(EgfSeries::one(3), EgfSeries::one(4)), std::invalid_argument);
  EXPECT_THROW(EgfSeries(std::vector<WPoly>{}), std::invalid_argument);
  EXPECT_THROW(EgfSeries::one(3).truncated(4), std::invalid_argument);
}

TEST(EgfSeries, AgreementOrder) {
  EXPECT_EQ(series_agreement_order(from_ints({1, 2, 3}), from_ints({1, 2, 4})), 2u);
  EXPECT_FALSE(series_agreement_order(from_ints({1, 2, 3}), from_ints({1, 2, 3})));
}

TEST(PowerSeries, InverseOfOneMinusU) {
  const PowerSeries f(std::vector<WPoly>{WPoly{1}, WPoly{-1}, WPoly(), WPoly()});
  const PowerSeries inv = f.inverse();
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(inv[i], WPoly{1});
  EXPECT_EQ(f * inv, PowerSeries::constant(WPoly{1}, 3));
}

TEST(PowerSeries, InverseNeedsConstantLeadingTerm) {
  EXPECT_THROW(PowerSeries(std::vector<WPoly>{WPoly(), WPoly{1}}).inverse(), std::domain_error);
  EXPECT_THROW(PowerSeries(std::vector<WPoly>{WPoly{1, 1}, WPoly{1}}).inverse(),
               std::domain_error);
  const PowerSeries p(std::vector<WPoly>{WPoly{1, 1}, WPoly{0, 1}});
  EXPECT_NO_THROW(p.specialize(Rat(2)).inverse());
}

TEST(PowerSeries, EgfRoundTrip) {
  const EgfSeries f = from_ints({1, 1, 2, 5, 16, 61});
  const PowerSeries o = egf_to_ogf(f);
  EXPECT_EQ(o[5], WPoly::constant(Rat(61, 120)));
  EXPECT_EQ(ogf_to_egf(o), f);
}
