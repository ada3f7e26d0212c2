#pragma once

#include <cstddef>
#include <vector>

#include "zigzag/permutation.hpp"
#include "zigzag/series.hpp"
#include "zigzag/verdict.hpp"
#include "zigzag/wpoly.hpp"

namespace zigzag {

// Taylor coefficients of sn, cn, dn as polynomials in m = k^2:
//   sn = sum s_n u^{2n+1}/(2n+1)!,  cn = sum c_n u^{2n}/(2n)!,
//   dn = sum d_n u^{2n}/(2n)!.
struct JacobiTaylor {
  std::vector<WPoly> s;
  std::vector<WPoly> c;
  std::vector<WPoly> d;

  std::size_t count() const { return s.size(); }
};

// s_0..s_N, c_0..c_N, d_0..d_N from sn' = cn dn, cn' = -sn dn,
// dn' = -m sn cn with sn(0) = 0, cn(0) = dn(0) = 1.
JacobiTaylor jacobi_taylor(std::size_t max_n);

struct JacobiSeries {
  EgfSeries sn;
  EgfSeries cn;
  EgfSeries dn;
};

// Full EGF series (zero slots filled in) of order 2N+1, coefficients in m.
JacobiSeries as_series(const JacobiTaylor& t);

// as_series evaluated at m = m_value.
JacobiSeries specialize(const JacobiTaylor& t, const Rat& m_value);

// How the combinatorial weight variable w is matched to the modulus.
enum class WeightSubstitution {
  w_is_m,     // compare the polynomial in w directly with the one in m
  w_is_k,     // rewrite the analytic side with m := k^2, compare in k
  both_at_one,  // evaluate w := 1 and m := 1
};

std::string_view to_string(WeightSubstitution s);

inline constexpr std::size_t kCompareCombinatorialLimit = 5;

// For n <= max_n compares |s_n| with the S_odd(2n+1) weight polynomial,
// |c_n| with C_even(2n) and |d_n| with D_even(2n). One verdict per
// function (ids EGF-SN, EGF-CN, EGF-DN); evidence rows carry the
// discrepancy polynomial (analytic minus combinatorial).
std::vector<ClaimVerdict> compare_combinatorial(std::size_t max_n, StatVariant v,
                                                WeightSubstitution sub);

}  // namespace zigzag
