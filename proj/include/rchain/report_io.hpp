#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rchain/bijections.hpp"
#include "rchain/qseries.hpp"
#include "rchain/verify.hpp"

namespace rchain {

/// Every JSON document written here carries "schema": kSchemaVersion.
inline constexpr int kSchemaVersion = 1;

/// Exact integers are emitted as decimal strings.
nlohmann::json to_json(const VerificationReport& report, bool with_timing = true);
/// {"schema": 1, "reports": [...]}.
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing = true);

/// Header `theorem,r,j,n,lhs,rhs,match,aux` followed by one row per record.
/// The aux column holds the tag and `name=value` pairs separated by ';'.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// Human-readable table with a PASS/FAIL summary line per report.
std::string reports_to_text(const std::vector<VerificationReport>& reports);

/// JSON array of coefficient strings.
nlohmann::json series_to_json(const PowerSeries& s);

/// {input, case, intermediate{conjugate, cut_index, moves, shifted_copies}, output}.
/// Partitions use their bracket text form; a colored empty beta is {"empty_color": c}.
nlohmann::json trace_to_json(const MapTrace& trace);
nlohmann::json pair_to_json(const PartitionPair& pair);
/// `([alpha], [beta])`, or `([alpha], empty(color c))`.
std::string to_string(const PartitionPair& pair);

} // namespace rchain
