#pragma once

// Exhaustive sweeps over V⊗V for small fields.
//
// Tensors are enumerated in lexicographic order of their n²-digit base-q
// encoding, with k[0][0] the most significant digit. A sweep evaluates a
// predicate (and optionally a classifier) on every candidate, splitting the
// index range into contiguous chunks that workers claim in any order; chunk
// results are merged in index order so reports do not depend on scheduling.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybe/algebra.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

inline constexpr std::uint64_t kMaxSweep = std::uint64_t{1} << 40;
inline constexpr std::size_t kCounterexampleCap = 16;

class TensorRange {
public:
    /// Throws SweepTooLarge when q^(n²) exceeds 2^40.
    TensorRange(const Field& field, std::size_t dim);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t size() const noexcept { return size_; }

    Tensor2 at(std::uint64_t index) const;
    void decode(std::uint64_t index, std::span<Code> out) const;
    /// Steps the odometer to the next encoding; false after the last one.
    bool advance(std::span<Code> codes) const noexcept;
    std::uint64_t index_of(const Tensor2& r) const;

    /// Contiguous [begin, end) ranges of at most `chunk` indices.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> split(std::uint64_t chunk) const;

    class iterator {
    public:
        using value_type = Tensor2;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const TensorRange* range, std::uint64_t index) : range_(range), index_(index) {}
        Tensor2 operator*() const { return range_->at(index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++index_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.index_ == b.index_; }

    private:
        const TensorRange* range_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size_}; }

private:
    Field field_;
    std::size_t dim_;
    std::uint64_t size_;
};

TensorRange enumerate_tensors(const Field& field, std::size_t dim);

/// Zero plus every c·(v⊗v), deduplicated, in ascending encoding order.
std::vector<Tensor2> strong_symmetric_enumerate(const Field& field, std::size_t dim);

/// Every member of Im(1−τ) in ascending encoding order.
std::vector<Tensor2> image_one_minus_tau_enumerate(const Field& field, std::size_t dim);

enum class PredicateKind {
    cybe,
    qybe,
    strongly_symmetric,
    symmetric,
    im_one_minus_tau,
    alpha_beta_symmetric,
    prop16_case,
    ab_system,
    bd_system,
    coboundary,
    triangular,
    ab_triangular_condition,   // Im(1−τ) and α,β-symmetric
    bd_coboundary_condition,   // Im(1−τ) and the closed-form coboundary condition
    bd_triangular_condition,   // Im(1−τ) and the closed-form triangular condition
    cojacobi_diagonal,         // x·C(r) equals the co-Jacobi defect, diagonal action
    cojacobi_cube,             // same comparison with ad_x⊗ad_x⊗ad_x
};

std::string_view predicate_name(PredicateKind kind);
std::optional<PredicateKind> parse_predicate(std::string_view name);
std::vector<std::string_view> predicate_names();

/// Which side of the symmetric difference contributes counterexamples.
enum class CollectSide { both, predicate_only, classifier_only };

struct SweepSpec {
    Field field;
    std::size_t dim;
    std::optional<LieAlgebra> lie{};
    std::optional<AssocAlgebra> assoc{};
    PredicateKind predicate = PredicateKind::cybe;
    std::optional<PredicateKind> classifier{};
    FamilyParams params{};
    /// Explicit candidate list; the full range is swept when absent.
    std::optional<std::vector<Tensor2>> candidates{};
    std::uint64_t chunk_size = std::uint64_t{1} << 16;
    unsigned workers = 1;
    CollectSide collect = CollectSide::both;
    /// Keep every difference, not only the first kCounterexampleCap.
    bool collect_all = false;
    std::string claim{};
};

SweepSpec lie_sweep(const LieAlgebra& lie, PredicateKind predicate, std::optional<PredicateKind> classifier = std::nullopt);
SweepSpec assoc_sweep(const AssocAlgebra& algebra, PredicateKind predicate,
                      std::optional<PredicateKind> classifier = std::nullopt);

struct Counterexample {
    Tensor2 tensor;
    bool predicate;
    bool classifier;
};

struct SolutionReport {
    std::string claim;
    std::string field;
    std::string algebra;
    std::vector<std::pair<std::string, std::string>> params;
    std::string predicate;
    std::string classifier;  // empty when no classifier ran
    std::uint64_t total = 0;
    std::uint64_t predicate_count = 0;
    std::uint64_t classifier_count = 0;
    std::uint64_t diff_pred_only = 0;
    std::uint64_t diff_class_only = 0;
    std::vector<Counterexample> counterexamples;  // first kCounterexampleCap, ascending encoding
    std::vector<Counterexample> all_differences;  // filled only with collect_all
    double duration_ms = 0.0;
};

/// Deterministic for every worker count; throws SweepTooLarge and any error
/// raised while building the evaluators.
SolutionReport sweep(const SweepSpec& spec);

/// Evaluates one selector on one tensor with the same semantics as `sweep`.
bool evaluate_predicate(const SweepSpec& spec, PredicateKind kind, const Tensor2& r);

std::vector<std::pair<std::string, std::string>> params_list(const FamilyParams& params);

struct LedgerEntry {
    std::string claim;
    std::string field;
    std::string algebra;
    std::vector<std::pair<std::string, std::string>> params;
    Tensor2 tensor;
    bool predicate;
    bool classifier;
};

/// Append-only record of claim-vs-oracle disagreements.
class DiscrepancyLedger {
public:
    void append(LedgerEntry entry) { entries_.push_back(std::move(entry)); }
    /// One entry per listed counterexample of the report.
    void append_report(const SolutionReport& report);
    std::span<const LedgerEntry> entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::vector<LedgerEntry> entries_;
};

}  // namespace ybe
