#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zigzag {

enum class Status { pass, fail, partial };

std::string_view to_string(Status s);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct EvidenceItem {
  std::string instance;
  Fields fields;

  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

// Outcome of checking one claimed identity over a finite range.
// status is pass exactly when no instance produced a discrepancy; evidence
// holds the discrepancies (possibly truncated, see evidence_truncated) and
// measurements holds informational per-instance data.
struct ClaimVerdict {
  std::string claim_id;
  std::string group;
  std::string location;
  std::string statement;
  Fields parameters;
  Status status = Status::fail;
  std::size_t checked = 0;
  std::size_t discrepancies = 0;
  std::size_t evidence_truncated = 0;
  std::vector<EvidenceItem> evidence;
  std::vector<EvidenceItem> measurements;
  std::string note;
  bool anchor = false;
};

// Derives status from checked/discrepancies.
void settle_status(ClaimVerdict& v);

// Folds several verdicts into one; instances are prefixed with the source
// claim id.
ClaimVerdict merge_verdicts(std::string claim_id, std::string statement,
                            const std::vector<ClaimVerdict>& parts);

// Accumulates instance checks and derives the status.
class VerdictBuilder {
 public:
  VerdictBuilder(std::string claim_id, std::string statement,
                 std::size_t max_evidence = 64);

  VerdictBuilder& param(std::string key, std::string value);
  VerdictBuilder& note(std::string text);

  // Records one instance; a failed check becomes an evidence row.
  bool check(std::string instance, bool ok, Fields fields = {});
  void measure(std::string instance, Fields fields);

  ClaimVerdict finish() &&;

 private:
  ClaimVerdict v_;
  std::size_t max_evidence_;
};

}  // namespace zigzag
