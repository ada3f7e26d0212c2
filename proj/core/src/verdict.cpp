#include "zigzag/verdict.hpp"

namespace zigzag {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::partial: return "partial";
  }
  return "?";
}

VerdictBuilder::VerdictBuilder(std::string claim_id, std::string statement,
                               std::size_t max_evidence)
    : max_evidence_(max_evidence) {
  v_.claim_id = std::move(claim_id);
  v_.statement = std::move(statement);
}

VerdictBuilder& VerdictBuilder::param(std::string key, std::string value) {
  v_.parameters.emplace_back(std::move(key), std::move(value));
  return *this;
}

VerdictBuilder& VerdictBuilder::note(std::string text) {
  if (!v_.note.empty()) v_.note += ' ';
  v_.note += std::move(text);
  return *this;
}

bool VerdictBuilder::check(std::string instance, bool ok, Fields fields) {
  ++v_.checked;
  if (ok) return true;
  ++v_.discrepancies;
  if (v_.evidence.size() < max_evidence_) {
    v_.evidence.push_back({std::move(instance), std::move(fields)});
  } else {
    ++v_.evidence_truncated;
  }
  return false;
}

void VerdictBuilder::measure(std::string instance, Fields fields) {
  v_.measurements.push_back({std::move(instance), std::move(fields)});
}

void settle_status(ClaimVerdict& v) {
  if (v.checked == 0) {
    v.status = Status::fail;
    if (v.evidence.empty()) {
      v.evidence.push_back({"range", {{"error", "no instances checked"}}});
    }
  } else if (v.discrepancies == 0) {
    v.status = Status::pass;
  } else if (v.discrepancies == v.checked) {
    v.status = Status::fail;
  } else {
    v.status = Status::partial;
  }
}

ClaimVerdict merge_verdicts(std::string claim_id, std::string statement,
                            const std::vector<ClaimVerdict>& parts) {
  ClaimVerdict out;
  out.claim_id = std::move(claim_id);
  out.statement = std::move(statement);
  for (const auto& p : parts) {
    for (const auto& kv : p.parameters) {
      bool dup = false;
      for (const auto& existing : out.parameters) dup = dup || existing == kv;
      if (!dup) out.parameters.push_back(kv);
    }
    out.checked += p.checked;
    out.discrepancies += p.discrepancies;
    out.evidence_truncated += p.evidence_truncated;
    for (const auto& e : p.evidence) {
      out.evidence.push_back({p.claim_id + " " + e.instance, e.fields});
    }
    for (const auto& e : p.measurements) {
      out.measurements.push_back({p.claim_id + " " + e.instance, e.fields});
    }
  }
  settle_status(out);
  return out;
}

ClaimVerdict VerdictBuilder::finish() && {
  settle_status(v_);
  return std::move(v_);
}

}  // namespace zigzag
