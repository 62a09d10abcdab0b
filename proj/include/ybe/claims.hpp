#pragma once

// Registered claim suites. Each claim runs one or more sweeps comparing a
// brute-force oracle with a stated classification and collects every
// violation in a discrepancy ledger; an empty ledger means the claim holds
// on the tested fields.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/search.hpp"

namespace ybe {

enum class Relation {
    equal,                         // predicate set == classifier set
    classifier_implies_predicate,  // classifier set ⊆ predicate set
    predicate_implies_classifier,  // predicate set ⊆ classifier set
    comparison_only,               // recorded, never a violation
};

std::string_view relation_name(Relation relation);

struct ClaimComparison {
    SolutionReport report;
    Relation relation;
    bool holds;
};

struct ClaimResult {
    std::string claim;
    std::vector<ClaimComparison> comparisons;
    DiscrepancyLedger ledger;

    bool passed() const noexcept { return ledger.empty(); }
};

struct ClaimOptions {
    unsigned workers = 1;
    std::uint64_t chunk_size = std::uint64_t{1} << 16;
    /// Replaces the default parameter grid of family claims.
    std::optional<std::vector<FamilyParams>> grid;
};

/// Throws UnknownClaim for an unregistered id.
ClaimResult claim_check(std::string_view id, const std::vector<Field>& fields, const ClaimOptions& options = {});

std::vector<std::string_view> claim_ids();

}  // namespace ybe
