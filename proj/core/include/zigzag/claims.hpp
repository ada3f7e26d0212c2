#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zigzag/verdict.hpp"

namespace zigzag {

// Size limits for a claim run. Defaults keep a full run to a few seconds.
struct ClaimCaps {
  std::size_t perm_size = 9;       // largest odd permutation size, <= 11
  std::size_t entringer_rows = 9;  // rows for the definition sweep, <= 9
  std::size_t andre_n = 10;        // secant-tangent range, 2..12
  std::size_t series_order = 20;   // series truncation, 12..40
  std::size_t cf_depth = 6;        // deepest convergent, 1..12
  std::size_t max_evidence = 64;   // evidence rows kept per verdict
};

struct ClaimCapLimits {
  static constexpr std::size_t perm_size = 11;
  static constexpr std::size_t entringer_rows = 9;
  static constexpr std::size_t andre_n = 12;
  static constexpr std::size_t series_order = 40;
  static constexpr std::size_t cf_depth = 12;
};

// Throws std::invalid_argument naming the first cap out of range.
void validate_caps(const ClaimCaps& caps);

struct ClaimInfo {
  std::string id;
  std::string group;     // selection family, e.g. "JAC-1" or "ENT-DEF"
  std::string location;  // topic heading used by the text report
  bool anchor = false;   // must pass; escalated by strict mode
};

// Every registered claim, in report order.
const std::vector<ClaimInfo>& claim_registry();

// Runs the selected claims (all when empty). A selector matches a claim id
// exactly or a whole group. Unknown selectors throw std::invalid_argument.
// Verdicts come back in registry order regardless of jobs.
std::vector<ClaimVerdict> run_claims(const std::vector<std::string>& selection,
                                     const ClaimCaps& caps = {},
                                     unsigned jobs = 1);

// Ids of anchor claims whose verdict is not pass.
std::vector<std::string> failed_anchors(const std::vector<ClaimVerdict>& verdicts);

}  // namespace zigzag
