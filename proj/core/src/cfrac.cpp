#include "zigzag/cfrac.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace zigzag {

std::string_view to_string(Leading l) {
  return l == Leading::u_over ? "u-over" : "one-over";
}

std::optional<Leading> parse_leading(std::string_view s) {
  if (s == "u-over") return Leading::u_over;
  if (s == "one-over") return Leading::one_over;
  return std::nullopt;
}

CfScheme scheme_from_expressions(std::string name, Leading leading,
                                 std::string_view alpha, std::string_view beta) {
  const CoeffExpr a = CoeffExpr::parse(alpha);
  const CoeffExpr b = CoeffExpr::parse(beta);
  CfScheme s;
  s.name = std::move(name);
  s.leading = leading;
  s.alpha = [a](std::size_t n) { return a.eval(static_cast<long>(n)); };
  s.beta = [b](std::size_t n) { return b.eval(static_cast<long>(n)); };
  s.alpha_text = a.source();
  s.beta_text = b.source();
  return s;
}

std::vector<CfScheme> builtin_schemes() {
  return {
      scheme_from_expressions("elliptic-paper", Leading::u_over, "2*n-1", "n^2*m"),
      scheme_from_expressions("sine-paper", Leading::u_over, "2*n-1", "n^2"),
      scheme_from_expressions("tanh-paper", Leading::u_over, "2*n-1", "2*n"),
      scheme_from_expressions("tan-classical", Leading::u_over, "2*n-1", "1"),
  };
}

std::optional<CfScheme> find_builtin_scheme(std::string_view name) {
  for (auto& s : builtin_schemes()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

namespace {

CfScheme scheme_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("scheme entry must be an object");
  for (const char* key : {"name", "alpha", "beta"}) {
    if (!j.contains(key) || !j[key].is_string()) {
      throw std::invalid_argument(std::string("scheme entry needs string field '") +
                                  key + "'");
    }
  }
  Leading leading = Leading::u_over;
  if (j.contains("leading")) {
    if (!j["leading"].is_string()) {
      throw std::invalid_argument("'leading' must be a string");
    }
    auto l = parse_leading(j["leading"].get<std::string>());
    if (!l) throw std::invalid_argument("'leading' must be u-over or one-over");
    leading = *l;
  }
  return scheme_from_expressions(j["name"].get<std::string>(), leading,
                                 j["alpha"].get<std::string>(),
                                 j["beta"].get<std::string>());
}

}  // namespace

std::vector<CfScheme> parse_scheme_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scheme file: ") + e.what());
  }
  std::vector<CfScheme> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(scheme_from_json(e));
  } else {
    out.push_back(scheme_from_json(j));
  }
  return out;
}

std::vector<CfScheme> load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scheme_json(buf.str());
}

CfScheme specialize(const CfScheme& scheme, const Rat& m_value) {
  CfScheme s = scheme;
  auto alpha = scheme.alpha;
  auto beta = scheme.beta;
  s.alpha = [alpha, m_value](std::size_t n) {
    return WPoly::constant(alpha(n).eval(m_value));
  };
  s.beta = [beta, m_value](std::size_t n) {
    return WPoly::constant(beta(n).eval(m_value));
  };
  s.name += "@m=" + m_value.get_str();
  return s;
}

PowerSeries cf_convergent_series(const CfScheme& scheme, std::size_t depth,
                                 std::size_t order) {
  if (depth < 1) throw std::invalid_argument("cf_convergent_series: depth >= 1");
  if (order > kCfMaxOrder) {
    throw std::invalid_argument("cf_convergent_series: order is capped at " +
                                std::to_string(kCfMaxOrder));
  }
  auto alpha_at = [&](std::size_t n) {
    WPoly a = scheme.alpha(n);
    if (sgn(a.constant_term()) == 0) {
      throw std::domain_error("scheme '" + scheme.name + "': alpha_" +
                              std::to_string(n) + " = " + a.to_string("m") +
                              " has zero constant term");
    }
    return a;
  };
  PowerSeries tail = PowerSeries::constant(alpha_at(depth + 1), order);
  for (std::size_t i = depth; i >= 1; --i) {
    const PowerSeries num = PowerSeries::monomial(scheme.beta(i), 2, order);
    tail = PowerSeries::constant(alpha_at(i), order) - num * tail.inverse();
  }
  const PowerSeries lead = scheme.leading == Leading::u_over
                               ? PowerSeries::monomial(WPoly{1}, 1, order)
                               : PowerSeries::constant(WPoly{1}, order);
  return lead * tail.inverse();
}

std::optional<std::size_t> agreement_order(const CfScheme& scheme,
                                           std::size_t depth,
                                           const PowerSeries& target,
                                           std::size_t order) {
  if (target.order() != order) {
    throw std::invalid_argument("agreement_order: target order " +
                                std::to_string(target.order()) + " != " +
                                std::to_string(order));
  }
  return series_agreement_order(cf_convergent_series(scheme, depth, order), target);
}

}  // namespace zigzag
