#include "zigzag/jacobi.hpp"

#include <stdexcept>
#include <string>

namespace zigzag {

JacobiTaylor jacobi_taylor(std::size_t max_n) {
  JacobiTaylor t;
  const WPoly m = WPoly::variable();
  t.c.push_back(WPoly{1});
  t.d.push_back(WPoly{1});
  for (std::size_t n = 0; n <= max_n; ++n) {
    // u^{2n} coefficient of cn dn.
    WPoly s;
    for (std::size_t i = 0; i <= n; ++i) {
      s += Rat(binomial(2 * n, 2 * i)) * (t.c[i] * t.d[n - i]);
    }
    t.s.push_back(std::move(s));
    if (n == max_n) break;
    // u^{2n+1} coefficients of sn dn and sn cn.
    WPoly sd, sc;
    for (std::size_t i = 0; i <= n; ++i) {
      const Rat b(binomial(2 * n + 1, 2 * i + 1));
      sd += b * (t.s[i] * t.d[n - i]);
      sc += b * (t.s[i] * t.c[n - i]);
    }
    t.c.push_back(-sd);
    t.d.push_back(-(m * sc));
  }
  return t;
}

JacobiSeries as_series(const JacobiTaylor& t) {
  const std::size_t order = 2 * t.count() - 1;
  std::vector<WPoly> sn(order + 1), cn(order + 1), dn(order + 1);
  for (std::size_t n = 0; n < t.count(); ++n) {
    sn[2 * n + 1] = t.s[n];
    cn[2 * n] = t.c[n];
    dn[2 * n] = t.d[n];
  }
  return {EgfSeries(std::move(sn)), EgfSeries(std::move(cn)),
          EgfSeries(std::move(dn))};
}

JacobiSeries specialize(const JacobiTaylor& t, const Rat& m_value) {
  const JacobiSeries full = as_series(t);
  auto at = [&](const WPoly& p) { return WPoly::constant(p.eval(m_value)); };
  return {full.sn.map(at), full.cn.map(at), full.dn.map(at)};
}

std::string_view to_string(WeightSubstitution s) {
  switch (s) {
    case WeightSubstitution::w_is_m: return "w:=m";
    case WeightSubstitution::w_is_k: return "w:=k,m:=k^2";
    case WeightSubstitution::both_at_one: return "w:=1,m:=1";
  }
  return "?";
}

std::vector<ClaimVerdict> compare_combinatorial(std::size_t max_n, StatVariant v,
                                                WeightSubstitution sub) {
  if (max_n > kCompareCombinatorialLimit) {
    throw std::out_of_range("compare_combinatorial: 2N+1 must stay <= 11");
  }
  const JacobiTaylor t = jacobi_taylor(max_n);
  const EnumerationCaps caps{2 * kCompareCombinatorialLimit + 1};
  const char* var = sub == WeightSubstitution::w_is_m ? "m" : "k";

  auto analytic_side = [&](const WPoly& p, std::size_t n) {
    WPoly mag = n % 2 == 0 ? p : -p;
    switch (sub) {
      case WeightSubstitution::w_is_m: return mag;
      case WeightSubstitution::w_is_k: return mag.substitute_square();
      case WeightSubstitution::both_at_one: return WPoly::constant(mag.eval(Rat(1)));
    }
    return mag;
  };
  auto combinatorial_side = [&](const WPoly& p) {
    return sub == WeightSubstitution::both_at_one
               ? WPoly::constant(p.eval(Rat(1)))
               : p;
  };

  struct Spec {
    const char* id;
    const char* statement;
    const std::vector<WPoly>* coeffs;
    ClassTag tag;
    bool odd;
  };
  const Spec specs[] = {
      {"EGF-SN", "sn coefficients = weighted S_odd(2n+1) counts", &t.s,
       ClassTag::S_odd, true},
      {"EGF-CN", "cn coefficients = weighted C_even(2n) counts", &t.c,
       ClassTag::C_even, false},
      {"EGF-DN", "dn coefficients = weighted D_even(2n) counts", &t.d,
       ClassTag::D_even, false},
  };
  std::vector<ClaimVerdict> out;
  for (const auto& spec : specs) {
    VerdictBuilder b(spec.id, spec.statement);
    b.param("max_n", std::to_string(max_n));
    b.param("statistic", std::string(to_string(v)));
    b.param("substitution", std::string(to_string(sub)));
    for (std::size_t n = 0; n <= max_n; ++n) {
      const std::size_t size = spec.odd ? 2 * n + 1 : 2 * n;
      const WPoly comb = combinatorial_side(class_weight_poly(spec.tag, size, v, caps));
      const WPoly ana = analytic_side((*spec.coeffs)[n], n);
      b.check("n=" + std::to_string(n), comb == ana,
              {{"analytic", ana.to_string(var)},
               {"combinatorial", comb.to_string(var)},
               {"discrepancy", (ana - comb).to_string(var)}});
    }
    out.push_back(std::move(b).finish());
  }
  return out;
}

}  // namespace zigzag
