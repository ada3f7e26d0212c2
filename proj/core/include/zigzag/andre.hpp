#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zigzag/rational.hpp"
#include "zigzag/verdict.hpp"

namespace zigzag {

// Secant-tangent numbers A_0..A_max_n from
//   2 A_{n+1} = sum_k binom(n,k) A_k A_{n-k},  n >= 1,
// seeded with A_0 = A_1 = 1. Requires max_n >= 1.
std::vector<BigInt> a_recurrence(std::size_t max_n);

// A_{n+1} from A_0..A_n (prefix.size() == n + 1). The step at n = 0 is
// refused with std::domain_error: it would give A_1 = 1/2.
BigInt a_recurrence_step(std::span<const BigInt> prefix, std::size_t n);

// B_0..B_max with B_1 = -1/2, from sum_{k<=n} binom(n+1,k) B_k = 0.
std::vector<Rat> bernoulli_numbers(std::size_t max_index);

// A_n for odd n = 2m+1 via (-1)^m 2^{2m+2}(2^{2m+2}-1)/(2m+2) B_{2m+2}.
// Throws std::invalid_argument for even n, std::logic_error if the value
// is not a positive integer.
BigInt a_bernoulli(std::size_t n);

// S(n,k) for 0 <= k <= n <= max_n.
std::vector<std::vector<BigInt>> stirling2_table(std::size_t max_n);

struct AndreTable {
  std::vector<BigInt> a;
  std::vector<Rat> bernoulli;
  std::vector<std::vector<BigInt>> stirling2;
};

AndreTable build_andre_table(std::size_t max_n);

enum class StirlingVariant { main, alternative };

// The two closed forms exactly as printed:
//   main:        n! sum_k 1/(k+1) binom(n,k) 2^{-(k+1)} S(n,k)
//   alternative: n! sum_k 2^{-(k+1)}/(k+1)! sum_j (-1)^{k-j} binom(k,j) j^n
// No correction is applied; agreement with A_n is decided elsewhere.
Rat a_stirling_formula(std::size_t n, StirlingVariant variant);

struct QuadratureOptions {
  unsigned intervals = 16;    // equal panels on the truncated range
  double tolerance = 1e-12;  // relative, per panel
};

inline constexpr std::size_t kAndreIntegralLimit = 12;

// (2 n!/pi) * integral_0^inf y^n / cosh^{n+1}(y) dy. The tail is cut where
// y^n e^{-(n+1)y} 2^{n+1} < tolerance * 1e-3. Throws std::runtime_error if
// the panels do not reach the tolerance.
double a_integral(std::size_t n, const QuadratureOptions& options = {});

struct RatioTerm {
  std::size_t n;
  Rat value;  // (n+1) A_n / A_{n+1}
};

// Terms for n = 1..max_n. Requires max_n >= 2.
std::vector<RatioTerm> ratio_sequence(std::size_t max_n);

inline constexpr std::size_t kAndreVerdictLimit = 12;

// AA-REC, AA-REC-SEED, AA-BERN, AA-STIR-MAIN, AA-STIR-ALT, AA-INT,
// AA-RATIO and AA-EGF over 0..max_n.
std::vector<ClaimVerdict> andre_verdicts(std::size_t max_n);

}  // namespace zigzag
