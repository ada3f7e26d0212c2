#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "zigzag/cfrac.hpp"

using namespace zigzag;

namespace {

PowerSeries as_power_series(const std::vector<mpq_class>& v) {
  std::vector<WPoly> c;
  for (const auto& x : v) c.push_back(WPoly::constant(x));
  return PowerSeries(c);
}

}  // namespace

TEST(Cfrac, BuiltinsPresent) {
  for (const char* n : {"elliptic-paper", "sine-paper", "tanh-paper", "tan-classical"}) {
    ASSERT_TRUE(find_builtin_scheme(n)) << n;
  }
  EXPECT_FALSE(find_builtin_scheme("nope"));
  const CfScheme e = *find_builtin_scheme("elliptic-paper");
  EXPECT_EQ(e.alpha(3), WPoly{5});
  EXPECT_EQ(e.beta(2), (WPoly{0, 4}));
}

TEST(Cfrac, TanDepthOne) {
  const PowerSeries s = cf_convergent_series(*find_builtin_scheme("tan-classical"), 1, 5);
  EXPECT_EQ(s[1], WPoly{1});
  EXPECT_EQ(s[3], WPoly::constant(Rat(1, 3)));
  EXPECT_EQ(s[5], WPoly::constant(Rat(1, 9)));
}

TEST(Cfrac, TanAgreementGrowsWithDepth) {
  const std::size_t order = 30;
  const PowerSeries tan = as_power_series(oracle::tan_ogf(order));
  const CfScheme s = *find_builtin_scheme("tan-classical");
  for (std::size_t d = 1; d <= 12; ++d) {
    const auto idx = agreement_order(s, d, tan, order);
    ASSERT_TRUE(idx) << d;
    EXPECT_GE(*idx, 2 * d + 2) << d;
  }
}

TEST(Cfrac, LeadingOneOver) {
  const CfScheme s = scheme_from_expressions("geo", Leading::one_over, "1", "0");
  const PowerSeries p = cf_convergent_series(s, 3, 4);
  EXPECT_EQ(p[0], WPoly{1});
  EXPECT_EQ(p[1], WPoly());
  const CfScheme g = scheme_from_expressions("geo2", Leading::one_over, "1", "-1");
  // 1/(1 + u^2/(1 + u^2/1)) = (1 + u^2)/(1 + 2u^2)
  const PowerSeries q = cf_convergent_series(g, 2, 4);
  EXPECT_EQ(q[2], WPoly{-1});
  EXPECT_EQ(q[4], WPoly{2});
}

TEST(Cfrac, SymbolicAndSpecializedAgree) {
  const CfScheme e = *find_builtin_scheme("elliptic-paper");
  const PowerSeries sym = cf_convergent_series(e, 4, 12);
  const PowerSeries at = cf_convergent_series(specialize(e, Rat(1, 2)), 4, 12);
  EXPECT_EQ(sym.specialize(Rat(1, 2)), at);
}

TEST(Cfrac, Errors) {
  const CfScheme bad = scheme_from_expressions("z", Leading::u_over, "n-1", "1");
  EXPECT_THROW(cf_convergent_series(bad, 2, 6), std::domain_error);
  const CfScheme tan = *find_builtin_scheme("tan-classical");
  EXPECT_THROW(cf_convergent_series(tan, 1, kCfMaxOrder + 1), std::invalid_argument);
  EXPECT_THROW(agreement_order(tan, 1, PowerSeries::zero(5), 6), std::invalid_argument);
}

TEST(Cfrac, SchemeJson) {
  const auto one = parse_scheme_json(
      R"({"name": "mine", "leading": "u-over", "alpha": "2*n-1", "beta": "1"})");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].name, "mine");
  EXPECT_EQ(cf_convergent_series(one[0], 3, 9),
            cf_convergent_series(*find_builtin_scheme("tan-classical"), 3, 9));
  const auto two = parse_scheme_json(
      R"([{"name": "a", "alpha": "1", "beta": "m"}, {"name": "b", "leading": "one-over", "alpha": "1", "beta": "0"}])");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1].leading, Leading::one_over);
  EXPECT_THROW(parse_scheme_json("{"), std::invalid_argument);
  EXPECT_THROW(parse_scheme_json(R"({"name": "x", "alpha": "n+"})"), std::invalid_argument);
  EXPECT_THROW(parse_scheme_json(R"({"name": "x", "leading": "sideways", "alpha": "1", "beta": "1"})"),
               std::invalid_argument);
  EXPECT_THROW(load_scheme_file("/nonexistent/path.json"), std::invalid_argument);
}
