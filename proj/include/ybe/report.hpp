#pragma once

// Report serialization: JSON for reports and claim summaries, JSON lines for
// the discrepancy ledger, CSV for counts only.

#include <string>

#include "json.hpp"
#include "ybe/claims.hpp"
#include "ybe/search.hpp"

namespace ybe {

using Json = nlohmann::ordered_json;

/// `duration_ms` is omitted when `with_duration` is false, which makes the
/// output a pure function of the sweep inputs.
Json report_json(const SolutionReport& report, bool with_duration = true);
Json ledger_entry_json(const LedgerEntry& entry);
/// One JSON object per line, in ledger order, each line newline-terminated.
std::string ledger_jsonl(const DiscrepancyLedger& ledger);
Json claim_json(const ClaimResult& result, bool with_duration = true);

std::string csv_header();
std::string csv_row(const SolutionReport& report);

std::string report_text(const SolutionReport& report);

}  // namespace ybe
