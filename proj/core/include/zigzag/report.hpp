#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/verdict.hpp"

namespace zigzag {

enum class ReportFormat { json, csv, text };

std::string_view to_string(ReportFormat f);
std::optional<ReportFormat> parse_report_format(std::string_view s);

inline constexpr int kReportSchemaVersion = 1;

// Deterministic rendering: no timestamps, fields in a fixed order, verdicts
// in the order given. See docs/report_schema.md.
std::string render_report(const std::vector<ClaimVerdict>& verdicts, ReportFormat format);

}  // namespace zigzag
