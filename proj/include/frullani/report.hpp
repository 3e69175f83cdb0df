#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "frullani/verification.hpp"

namespace frullani {

enum class ReportFormat { Text, Json };

/// "text" or "json"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view name);

/// Text: one line per record followed by the summary line.
/// Json: an array of objects, one per record, with the same field names.
/// Wall time is left out so identical inputs give identical bytes.
void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, std::ostream& sink);

std::string format_record(const VerificationRecord& rec);
std::string format_summary(const Summary& s);

}  // namespace frullani
