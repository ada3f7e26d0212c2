#pragma once

#include <cstddef>
#include <vector>

#include "zigzag/permutation.hpp"
#include "zigzag/verdict.hpp"
#include "zigzag/wpoly.hpp"

namespace zigzag {

// sigma = L M R with M the maximum. The value set of L is kept so that the
// split can be inverted; both blocks are stored standardized.
struct SplitResult {
  std::vector<int> left_values;  // ascending
  Perm left;
  Perm right;
  std::size_t max_position = 0;  // one-based, always even

  friend bool operator==(const SplitResult&, const SplitResult&) = default;
  friend auto operator<=>(const SplitResult&, const SplitResult&) = default;
};

// Requires sigma in S_odd with size >= 3; throws std::invalid_argument.
SplitResult split_at_max(const Perm& sigma);

// Inverse of split_at_max. Throws std::invalid_argument on inconsistent
// sizes, value sets, or blocks that are not odd up-down permutations.
Perm merge(const SplitResult& s, std::size_t total_size);

// Raw (unstandardized) blocks left and right of the maximum.
struct RawBlocks {
  std::vector<int> left;
  std::vector<int> right;
};
RawBlocks raw_blocks(const Perm& sigma);

// Zigzag-path view of an alternating permutation; interior peaks are the
// elliptic nodes.
struct Snake {
  std::vector<int> levels;
  std::vector<bool> elliptic_flags;

  unsigned elliptic_count() const;
  // k^(elliptic count) as a polynomial in k.
  WPoly weight() const;
};

// Throws std::invalid_argument for non-alternating input.
Snake snake_encode(const Perm& p);

// Exhaustive split checks over S_odd sizes 3..max_size (odd, <= 11):
// BIJ-RT (round trip and injectivity), BIJ-PEAK (interior-peak additivity
// on the raw blocks) and BIJ-PARITY (measured block sizes and classes
// against the claimed C_{2j-2} x D_{2(n-j)} shape).
std::vector<ClaimVerdict> verify_split_properties(std::size_t max_size);

inline constexpr std::size_t kSplitVerifyLimit = 11;

}  // namespace zigzag
