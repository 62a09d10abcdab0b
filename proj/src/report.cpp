#include "ybe/report.hpp"

#include <sstream>

#include "ybe/io.hpp"

namespace ybe {

namespace {

Json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
    Json out = Json::object();
    for (const auto& [k, v] : params) out[k] = v;
    return out;
}

std::string params_text(const std::vector<std::pair<std::string, std::string>>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ' ';
        out += k + '=' + v;
    }
    return out;
}

}  // namespace

Json report_json(const SolutionReport& report, bool with_duration) {
    Json j;
    j["claim"] = report.claim;
    j["field"] = report.field;
    j["algebra"] = report.algebra;
    j["params"] = params_json(report.params);
    j["predicate"] = report.predicate;
    j["classifier"] = report.classifier;
    j["total"] = report.total;
    j["predicate_count"] = report.predicate_count;
    j["classifier_count"] = report.classifier_count;
    j["diff_pred_only"] = report.diff_pred_only;
    j["diff_class_only"] = report.diff_class_only;
    Json ces = Json::array();
    for (const Counterexample& c : report.counterexamples)
        ces.push_back({{"tensor", tensor_literal(c.tensor)}, {"predicate", c.predicate}, {"classifier", c.classifier}});
    j["counterexamples"] = std::move(ces);
    if (with_duration) j["duration_ms"] = report.duration_ms;
    return j;
}

Json ledger_entry_json(const LedgerEntry& entry) {
    Json j;
    j["claim"] = entry.claim;
    j["field"] = entry.field;
    j["algebra"] = entry.algebra;
    j["params"] = params_json(entry.params);
    j["tensor"] = tensor_literal(entry.tensor);
    j["predicate"] = entry.predicate;
    j["classifier"] = entry.classifier;
    return j;
}

std::string ledger_jsonl(const DiscrepancyLedger& ledger) {
    std::string out;
    for (const LedgerEntry& e : ledger.entries()) out += ledger_entry_json(e).dump() + '\n';
    return out;
}

Json claim_json(const ClaimResult& result, bool with_duration) {
    Json j;
    j["claim"] = result.claim;
    j["passed"] = result.passed();
    j["ledger_size"] = result.ledger.size();
    Json reports = Json::array();
    for (const ClaimComparison& c : result.comparisons) {
        Json r = report_json(c.report, with_duration);
        r["relation"] = relation_name(c.relation);
        r["holds"] = c.holds;
        reports.push_back(std::move(r));
    }
    j["reports"] = std::move(reports);
    return j;
}

std::string csv_header() {
    return "claim,field,algebra,params,predicate,classifier,total,predicate_count,classifier_count,diff_pred_only,"
           "diff_class_only";
}

std::string csv_row(const SolutionReport& report) {
    auto quoted = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + '"';
    };
    std::ostringstream os;
    os << quoted(report.claim) << ',' << quoted(report.field) << ',' << quoted(report.algebra) << ','
       << quoted(params_text(report.params)) << ',' << report.predicate << ',' << report.classifier << ','
       << report.total << ',' << report.predicate_count << ',' << report.classifier_count << ','
       << report.diff_pred_only << ',' << report.diff_class_only;
    return os.str();
}

std::string report_text(const SolutionReport& report) {
    std::ostringstream os;
    if (!report.claim.empty()) os << report.claim << ' ';
    os << report.algebra << " over " << report.field;
    if (!report.params.empty()) os << " [" << params_text(report.params) << ']';
    os << ": " << report.predicate << ' ' << report.predicate_count << '/' << report.total;
    if (!report.classifier.empty()) {
        os << ", " << report.classifier << ' ' << report.classifier_count << '/' << report.total
           << ", differences " << report.diff_pred_only << " predicate-only and " << report.diff_class_only
           << " classifier-only";
        for (const Counterexample& c : report.counterexamples)
            os << "\n  " << tensor_literal(c.tensor) << " predicate=" << c.predicate << " classifier=" << c.classifier;
    }
    return os.str();
}

}  // namespace ybe
