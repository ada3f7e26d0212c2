#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "zigzag/permutation.hpp"
#include "zigzag/rational.hpp"
#include "zigzag/verdict.hpp"
#include "zigzag/wpoly.hpp"

namespace zigzag {

// rows[n][k] = E(n, k), 0 <= k <= n, generated by
// E(n,k) = E(n,k-1) + E(n-1,n-k), E(0,0) = 1, E(n,0) = 0 for n > 0.
struct Triangle {
  std::vector<std::vector<BigInt>> rows;

  std::size_t row_count() const { return rows.size(); }
  const BigInt& at(std::size_t n, std::size_t k) const { return rows.at(n).at(k); }
};

Triangle build_triangle(std::size_t max_row);

// E(n, n). Throws std::out_of_range outside the built rows.
BigInt diagonal(const Triangle& t, std::size_t n);
// sum_k E(n, k). Throws std::out_of_range outside the built rows.
BigInt row_sum(const Triangle& t, std::size_t n);

// Enumerative readings of E(n, k) that are compared against the recurrence.
enum class EntringerCandidate {
  a,  // up-down of size n, first value k+1
  b,  // up-down of size n, first value k
  c,  // down-up of size n, first value k
  d,  // down-up of size n, last value k
  e,  // down-up of size n+1, first value k+1
};

inline constexpr EntringerCandidate kAllEntringerCandidates[] = {
    EntringerCandidate::a, EntringerCandidate::b, EntringerCandidate::c,
    EntringerCandidate::d, EntringerCandidate::e};

std::string_view to_string(EntringerCandidate c);
std::string_view describe(EntringerCandidate c);
std::optional<EntringerCandidate> parse_entringer_candidate(std::string_view s);

inline constexpr std::size_t kEntringerCandidateLimit = 9;

// Weighted counts for every k = 0..n at once: result[k] is the sum of
// w^stat over the permutations the candidate selects at (n, k).
std::vector<WPoly> candidate_row(EntringerCandidate cand, std::size_t n,
                                 StatVariant v);

// Single entry of candidate_row; j may be any index 0..n.
WPoly weighted_entringer(std::size_t n, std::size_t j, StatVariant v,
                         EntringerCandidate cand);

// One verdict per candidate over rows 0..max_row. The stated reading (a)
// is reported as ENT-DEF, the others as ENT-DEF:<letter>.
std::vector<ClaimVerdict> definition_candidates_check(std::size_t max_row);

}  // namespace zigzag
