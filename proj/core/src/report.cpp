#include "zigzag/report.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace zigzag {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json fields_json(const Fields& fields) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : fields) o[k] = v;
  return o;
}

ordered_json items_json(const std::vector<EvidenceItem>& items) {
  ordered_json a = ordered_json::array();
  for (const auto& e : items) {
    a.push_back({{"instance", e.instance}, {"fields", fields_json(e.fields)}});
  }
  return a;
}

std::string render_json(const std::vector<ClaimVerdict>& verdicts) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  std::size_t passed = 0, failed = 0, partial = 0;
  for (const auto& v : verdicts) {
    switch (v.status) {
      case Status::pass: ++passed; break;
      case Status::fail: ++failed; break;
      case Status::partial: ++partial; break;
    }
  }
  doc["summary"] = {{"claims", verdicts.size()},
                    {"pass", passed},
                    {"fail", failed},
                    {"partial", partial}};
  ordered_json claims = ordered_json::array();
  for (const auto& v : verdicts) {
    ordered_json c;
    c["claim_id"] = v.claim_id;
    c["group"] = v.group;
    c["location"] = v.location;
    c["statement"] = v.statement;
    c["anchor"] = v.anchor;
    c["status"] = std::string(to_string(v.status));
    c["parameters"] = fields_json(v.parameters);
    c["checked"] = v.checked;
    c["discrepancies"] = v.discrepancies;
    c["evidence_truncated"] = v.evidence_truncated;
    c["evidence"] = items_json(v.evidence);
    c["measurements"] = items_json(v.measurements);
    c["note"] = v.note;
    claims.push_back(std::move(c));
  }
  doc["claims"] = std::move(claims);
  return doc.dump(2) + "\n";
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join_fields(const Fields& fields) {
  std::string out;
  for (const auto& [k, v] : fields) {
    if (!out.empty()) out += "; ";
    out += k + "=" + v;
  }
  return out;
}

std::string render_csv(const std::vector<ClaimVerdict>& verdicts) {
  std::ostringstream os;
  os << "claim_id,group,status,anchor,checked,discrepancies,instance,fields\n";
  for (const auto& v : verdicts) {
    const std::string head = csv_cell(v.claim_id) + "," + csv_cell(v.group) + "," +
                             std::string(to_string(v.status)) + "," +
                             (v.anchor ? "true" : "false") + "," +
                             std::to_string(v.checked) + "," +
                             std::to_string(v.discrepancies) + ",";
    if (v.evidence.empty()) {
      os << head << ",\n";
      continue;
    }
    for (const auto& e : v.evidence) {
      os << head << csv_cell(e.instance) << "," << csv_cell(join_fields(e.fields)) << "\n";
    }
  }
  return os.str();
}

std::string render_text(const std::vector<ClaimVerdict>& verdicts) {
  // Topic order follows first appearance.
  std::vector<std::string> topics;
  std::map<std::string, std::vector<const ClaimVerdict*>> by_topic;
  for (const auto& v : verdicts) {
    const std::string key = v.location.empty() ? "(unplaced)" : v.location;
    if (!by_topic.count(key)) topics.push_back(key);
    by_topic[key].push_back(&v);
  }
  std::ostringstream os;
  for (const auto& topic : topics) {
    os << "== " << topic << " ==\n";
    for (const ClaimVerdict* v : by_topic[topic]) {
      os << "[" << to_string(v->status) << "] " << v->claim_id;
      if (v->anchor) os << " (anchor)";
      os << ": " << v->statement << "\n";
      os << "    checked " << v->checked << ", discrepancies " << v->discrepancies;
      if (!v->parameters.empty()) os << "; " << join_fields(v->parameters);
      os << "\n";
      for (const auto& e : v->evidence) {
        os << "    - " << e.instance << ": " << join_fields(e.fields) << "\n";
      }
      if (v->evidence_truncated) {
        os << "    ... " << v->evidence_truncated << " more\n";
      }
      for (const auto& m : v->measurements) {
        os << "    * " << m.instance << ": " << join_fields(m.fields) << "\n";
      }
      if (!v->note.empty()) os << "    note: " << v->note << "\n";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string_view to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::text: return "text";
  }
  return "json";
}

std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  return std::nullopt;
}

std::string render_report(const std::vector<ClaimVerdict>& verdicts, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return render_json(verdicts);
    case ReportFormat::csv: return render_csv(verdicts);
    case ReportFormat::text: return render_text(verdicts);
  }
  return {};
}

}  // namespace zigzag
