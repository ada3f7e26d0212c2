#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/coeff_expr.hpp"
#include "zigzag/power_series.hpp"
#include "zigzag/wpoly.hpp"

namespace zigzag {

enum class Leading { u_over, one_over };

std::string_view to_string(Leading l);
std::optional<Leading> parse_leading(std::string_view s);

// lead / (alpha_1 - beta_1 u^2 / (alpha_2 - beta_2 u^2 / (alpha_3 - ...)))
// with lead = u or 1. Coefficients are polynomials in m; alpha_n must have
// a nonzero constant term.
struct CfScheme {
  std::string name;
  Leading leading = Leading::u_over;
  std::function<WPoly(std::size_t)> alpha;
  std::function<WPoly(std::size_t)> beta;
  std::string alpha_text;
  std::string beta_text;
};

// Builds a scheme from two coefficient expressions in n and m.
CfScheme scheme_from_expressions(std::string name, Leading leading,
                                 std::string_view alpha, std::string_view beta);

// elliptic-paper (2n-1, n^2 m), sine-paper (2n-1, n^2),
// tanh-paper (2n-1, 2n), tan-classical (2n-1, 1); all u-over.
std::vector<CfScheme> builtin_schemes();
std::optional<CfScheme> find_builtin_scheme(std::string_view name);

// Schemes from a JSON file: one object or an array of objects with keys
// "name", "leading" ("u-over" | "one-over"), "alpha", "beta".
std::vector<CfScheme> load_scheme_file(const std::string& path);
std::vector<CfScheme> parse_scheme_json(std::string_view json_text);

// Replaces m by a rational value in every coefficient.
CfScheme specialize(const CfScheme& scheme, const Rat& m_value);

inline constexpr std::size_t kCfMaxOrder = 40;

// Depth-d convergent (beta_1..beta_d, closing with alpha_{d+1}) as an
// ordinary power series through u^order.
PowerSeries cf_convergent_series(const CfScheme& scheme, std::size_t depth,
                                 std::size_t order);

// First index where the depth-d convergent and target differ; nullopt
// when they agree through target.order().
std::optional<std::size_t> agreement_order(const CfScheme& scheme,
                                           std::size_t depth,
                                           const PowerSeries& target,
                                           std::size_t order);

}  // namespace zigzag
