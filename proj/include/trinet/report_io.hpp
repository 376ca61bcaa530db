#pragma once

/// \file report_io.hpp
/// \brief JSON and CSV forms of a VerificationReport.
///
/// Counts are written as decimal strings in JSON since they may exceed
/// 64 bits. See docs/report-schema.md for the layout.

#include <string>

#include "trinet/validation.hpp"

namespace trinet::validation {

std::string to_json(const VerificationReport& report, int indent = 2);
/// Throws std::invalid_argument on malformed input.
VerificationReport from_json(const std::string& text);

/// Header: n,class,oracle,closed,recurrence,f_or_g_oracle,f_or_g_closed,agree.
/// Absent columns (formula-only runs) are empty cells.
std::string to_csv(const VerificationReport& report);

}  // namespace trinet::validation
