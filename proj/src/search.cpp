#include "ybe/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <thread>

#include "ybe/bialgebra.hpp"
#include "ybe/equations.hpp"
#include "ybe/ybe.hpp"

namespace ybe {

// TensorRange

TensorRange::TensorRange(const Field& field, std::size_t dim) : field_(field), dim_(dim), size_(1) {
    if (dim == 0) throw Error(Errc::DimensionMismatch, "dimension must be at least 1");
    const std::uint64_t q = field.order();
    for (std::size_t i = 0; i < dim * dim; ++i) {
        if (size_ > kMaxSweep / q)
            throw Error(Errc::SweepTooLarge, std::to_string(q) + "^" + std::to_string(dim * dim) + " candidates exceed 2^40");
        size_ *= q;
    }
}

void TensorRange::decode(std::uint64_t index, std::span<Code> out) const {
    const std::uint64_t q = field_.order();
    for (std::size_t pos = out.size(); pos-- > 0;) {
        out[pos] = static_cast<Code>(index % q);
        index /= q;
    }
}

Tensor2 TensorRange::at(std::uint64_t index) const {
    if (index >= size_) throw Error(Errc::InvalidArgument, "tensor index out of range");
    Tensor2 out(field_, dim_);
    decode(index, out.mutable_codes());
    return out;
}

bool TensorRange::advance(std::span<Code> codes) const noexcept {
    const Code top = static_cast<Code>(field_.order() - 1);
    for (std::size_t pos = codes.size(); pos-- > 0;) {
        if (codes[pos] != top) {
            ++codes[pos];
            return true;
        }
        codes[pos] = 0;
    }
    return false;
}

std::uint64_t TensorRange::index_of(const Tensor2& r) const {
    if (!(r.field() == field_) || r.dim() != dim_) throw Error(Errc::DimensionMismatch, "tensor does not belong to this range");
    std::uint64_t index = 0;
    for (Code c : r.codes()) index = index * field_.order() + c;
    return index;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> TensorRange::split(std::uint64_t chunk) const {
    if (chunk == 0) throw Error(Errc::InvalidArgument, "chunk size must be positive");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t b = 0; b < size_; b += chunk) out.emplace_back(b, std::min(size_, b + chunk));
    return out;
}

TensorRange enumerate_tensors(const Field& field, std::size_t dim) { return TensorRange(field, dim); }

std::vector<Tensor2> strong_symmetric_enumerate(const Field& field, std::size_t dim) {
    std::set<std::vector<Code>> seen;
    seen.insert(std::vector<Code>(dim * dim, 0));
    const std::uint32_t q = field.order();
    std::vector<Code> v(dim, 0);
    // every nonzero v, via an odometer over F^n
    while (true) {
        std::size_t pos = dim;
        while (pos > 0 && v[pos - 1] == q - 1) v[--pos] = 0;
        if (pos == 0) break;
        ++v[pos - 1];
        for (std::uint32_t c = 1; c < q; ++c) {
            std::vector<Code> k(dim * dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    k[i * dim + j] = field.mul(static_cast<Code>(c), field.mul(v[i], v[j]));
            seen.insert(std::move(k));
        }
    }
    std::vector<Tensor2> out;
    out.reserve(seen.size());
    for (const auto& k : seen) out.push_back(Tensor2::from_codes(field, dim, k));
    return out;
}

std::vector<Tensor2> image_one_minus_tau_enumerate(const Field& field, std::size_t dim) {
    std::vector<std::pair<std::size_t, std::size_t>> upper;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) upper.emplace_back(i, j);
    std::set<std::vector<Code>> members;
    std::vector<Code> digits(upper.size(), 0);
    const Code top = static_cast<Code>(field.order() - 1);
    while (true) {
        std::vector<Code> k(dim * dim, 0);
        for (std::size_t e = 0; e < upper.size(); ++e) {
            const auto [i, j] = upper[e];
            k[i * dim + j] = digits[e];
            k[j * dim + i] = field.neg(digits[e]);
        }
        members.insert(std::move(k));
        std::size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == top) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    std::vector<Tensor2> out;
    out.reserve(members.size());
    for (const auto& k : members) out.push_back(Tensor2::from_codes(field, dim, k));
    return out;
}

// selectors

namespace {

struct NamedKind {
    PredicateKind kind;
    std::string_view name;
};

constexpr std::array kKinds{
    NamedKind{PredicateKind::cybe, "cybe"},
    NamedKind{PredicateKind::qybe, "qybe"},
    NamedKind{PredicateKind::strongly_symmetric, "strongly-symmetric"},
    NamedKind{PredicateKind::symmetric, "symmetric"},
    NamedKind{PredicateKind::im_one_minus_tau, "im-one-minus-tau"},
    NamedKind{PredicateKind::alpha_beta_symmetric, "alpha-beta-symmetric"},
    NamedKind{PredicateKind::prop16_case, "prop16-case"},
    NamedKind{PredicateKind::ab_system, "ab-system"},
    NamedKind{PredicateKind::bd_system, "bd-system"},
    NamedKind{PredicateKind::coboundary, "coboundary"},
    NamedKind{PredicateKind::triangular, "triangular"},
    NamedKind{PredicateKind::ab_triangular_condition, "ab-triangular-condition"},
    NamedKind{PredicateKind::bd_coboundary_condition, "bd-coboundary-condition"},
    NamedKind{PredicateKind::bd_triangular_condition, "bd-triangular-condition"},
    NamedKind{PredicateKind::cojacobi_diagonal, "cojacobi-diagonal"},
    NamedKind{PredicateKind::cojacobi_cube, "cojacobi-cube"},
};

const Element& need(const std::optional<Element>& e, const char* name) {
    if (!e) throw Error(Errc::InvalidArgument, std::string("selector needs parameter ") + name);
    return *e;
}

const LieAlgebra& need_lie(const SweepSpec& spec) {
    if (!spec.lie) throw Error(Errc::InvalidArgument, "selector needs a Lie algebra");
    return *spec.lie;
}

// A selector bound to one sweep. Shared read-only between workers.
class Evaluator {
public:
    Evaluator(const SweepSpec& spec, PredicateKind kind) : spec_(spec), kind_(kind) {
        switch (kind) {
        case PredicateKind::cybe:
        case PredicateKind::triangular:
            kernel_.emplace(need_lie(spec));
            break;
        case PredicateKind::qybe:
            if (!spec.assoc) throw Error(Errc::InvalidArgument, "qybe needs an associative algebra");
            break;
        case PredicateKind::coboundary:
        case PredicateKind::cojacobi_diagonal:
        case PredicateKind::cojacobi_cube:
            need_lie(spec);
            break;
        case PredicateKind::alpha_beta_symmetric:
        case PredicateKind::ab_system:
        case PredicateKind::ab_triangular_condition:
            need(spec.params.alpha, "alpha");
            need(spec.params.beta, "beta");
            break;
        case PredicateKind::prop16_case:
            if (bd_case(need(spec.params.beta, "beta"), need(spec.params.delta, "delta")) == BdCase::uncovered)
                throw Error(Errc::CaseNotCovered, "no classification for these (beta, delta)");
            break;
        case PredicateKind::bd_system:
        case PredicateKind::bd_coboundary_condition:
        case PredicateKind::bd_triangular_condition:
            need(spec.params.beta, "beta");
            need(spec.params.delta, "delta");
            break;
        case PredicateKind::strongly_symmetric:
        case PredicateKind::symmetric:
        case PredicateKind::im_one_minus_tau:
            break;
        }
    }

    bool operator()(const Tensor2& r) const {
        const FamilyParams& p = spec_.params;
        switch (kind_) {
        case PredicateKind::cybe:
            return kernel_->solves(r.codes());
        case PredicateKind::qybe:
            return qybe_sides(*spec_.assoc, r).holds();
        case PredicateKind::strongly_symmetric:
            return is_strongly_symmetric(r);
        case PredicateKind::symmetric:
            return r.is_symmetric();
        case PredicateKind::im_one_minus_tau:
            return in_image_one_minus_tau(r);
        case PredicateKind::alpha_beta_symmetric:
            return is_alpha_beta_symmetric(r, *p.alpha, *p.beta);
        case PredicateKind::prop16_case:
            return classify_16(r, *p.beta, *p.delta);
        case PredicateKind::ab_system:
            return all_zero(ab_coefficient_system(named_view(r), *p.alpha, *p.beta));
        case PredicateKind::bd_system:
            return all_zero(bd_coefficient_system(named_view(r), *p.beta, *p.delta));
        case PredicateKind::coboundary:
            return in_image_one_minus_tau(r) && cojacobi_defect(*spec_.lie, r).is_zero();
        case PredicateKind::triangular:
            return in_image_one_minus_tau(r) && kernel_->solves(r.codes());
        case PredicateKind::ab_triangular_condition:
            return in_image_one_minus_tau(r) && is_alpha_beta_symmetric(r, *p.alpha, *p.beta);
        case PredicateKind::bd_coboundary_condition:
            return in_image_one_minus_tau(r) && ybe::bd_coboundary_condition(r, *p.beta, *p.delta);
        case PredicateKind::bd_triangular_condition:
            return in_image_one_minus_tau(r) && ybe::bd_triangular_condition(r, *p.beta, *p.delta);
        case PredicateKind::cojacobi_diagonal:
            return cojacobi_identity_holds(*spec_.lie, r, ActionReading::diagonal);
        case PredicateKind::cojacobi_cube:
            return cojacobi_identity_holds(*spec_.lie, r, ActionReading::tensor_cube);
        }
        return false;
    }

private:
    const SweepSpec& spec_;
    PredicateKind kind_;
    std::optional<CybeKernel> kernel_;
};

struct Difference {
    std::uint64_t index;
    bool predicate;
    bool classifier;
};

struct ChunkResult {
    std::uint64_t predicate_count = 0;
    std::uint64_t classifier_count = 0;
    std::uint64_t pred_only = 0;
    std::uint64_t class_only = 0;
    std::vector<Difference> differences;
};

bool wanted(CollectSide side, bool pred) {
    switch (side) {
    case CollectSide::both: return true;
    case CollectSide::predicate_only: return pred;
    case CollectSide::classifier_only: return !pred;
    }
    return true;
}

void check_spec(const SweepSpec& spec) {
    auto check_field = [&](const Field& f, std::size_t dim) {
        if (!(f == spec.field)) throw Error(Errc::FieldMismatch, "algebra field differs from sweep field");
        if (dim != spec.dim) throw Error(Errc::DimensionMismatch, "algebra dimension differs from sweep dimension");
    };
    if (spec.lie) check_field(spec.lie->field(), spec.lie->dim());
    if (spec.assoc) check_field(spec.assoc->field(), spec.assoc->dim());
    for (const auto* opt : {&spec.params.alpha, &spec.params.beta, &spec.params.delta})
        if (*opt && opt->value().field_id() != spec.field.id())
            throw Error(Errc::FieldMismatch, "family parameter not in sweep field");
    if (spec.candidates)
        for (const Tensor2& r : *spec.candidates) check_field(r.field(), r.dim());
    if (spec.chunk_size == 0) throw Error(Errc::InvalidArgument, "chunk size must be positive");
}

}  // namespace

std::string_view predicate_name(PredicateKind kind) {
    for (const auto& nk : kKinds)
        if (nk.kind == kind) return nk.name;
    return "unknown";
}

std::optional<PredicateKind> parse_predicate(std::string_view name) {
    for (const auto& nk : kKinds)
        if (nk.name == name) return nk.kind;
    return std::nullopt;
}

std::vector<std::string_view> predicate_names() {
    std::vector<std::string_view> out;
    for (const auto& nk : kKinds) out.push_back(nk.name);
    return out;
}

SweepSpec lie_sweep(const LieAlgebra& lie, PredicateKind predicate, std::optional<PredicateKind> classifier) {
    SweepSpec spec{.field = lie.field(), .dim = lie.dim(), .lie = lie, .assoc = std::nullopt};
    spec.predicate = predicate;
    spec.classifier = classifier;
    return spec;
}

SweepSpec assoc_sweep(const AssocAlgebra& algebra, PredicateKind predicate, std::optional<PredicateKind> classifier) {
    SweepSpec spec{.field = algebra.field(), .dim = algebra.dim(), .lie = std::nullopt, .assoc = algebra};
    spec.predicate = predicate;
    spec.classifier = classifier;
    return spec;
}

std::vector<std::pair<std::string, std::string>> params_list(const FamilyParams& params) {
    std::vector<std::pair<std::string, std::string>> out;
    if (params.alpha) out.emplace_back("alpha", params.alpha->literal());
    if (params.beta) out.emplace_back("beta", params.beta->literal());
    if (params.delta) out.emplace_back("delta", params.delta->literal());
    return out;
}

bool evaluate_predicate(const SweepSpec& spec, PredicateKind kind, const Tensor2& r) {
    check_spec(spec);
    if (!(r.field() == spec.field) || r.dim() != spec.dim) throw Error(Errc::DimensionMismatch, "tensor does not match sweep");
    return Evaluator(spec, kind)(r);
}

SolutionReport sweep(const SweepSpec& spec) {
    const auto started = std::chrono::steady_clock::now();
    check_spec(spec);

    std::optional<TensorRange> range;
    std::uint64_t total = 0;
    if (spec.candidates) {
        total = spec.candidates->size();
    } else {
        range.emplace(spec.field, spec.dim);
        total = range->size();
    }

    const Evaluator predicate(spec, spec.predicate);
    std::optional<Evaluator> classifier;
    if (spec.classifier) classifier.emplace(spec, *spec.classifier);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    for (std::uint64_t b = 0; b < total; b += spec.chunk_size) chunks.emplace_back(b, std::min(total, b + spec.chunk_size));
    std::vector<ChunkResult> results(chunks.size());
    const std::size_t keep = spec.collect_all ? SIZE_MAX : kCounterexampleCap;

    auto run_chunk = [&](std::size_t c, Tensor2& scratch) {
        const auto [begin, end] = chunks[c];
        ChunkResult& out = results[c];
        auto visit = [&](std::uint64_t index, const Tensor2& r) {
            const bool pv = predicate(r);
            out.predicate_count += pv;
            if (!classifier) return;
            const bool cv = (*classifier)(r);
            out.classifier_count += cv;
            if (pv == cv) return;
            (pv ? out.pred_only : out.class_only) += 1;
            if (wanted(spec.collect, pv) && out.differences.size() < keep) out.differences.push_back({index, pv, cv});
        };
        if (spec.candidates) {
            for (std::uint64_t i = begin; i < end; ++i) visit(i, (*spec.candidates)[i]);
            return;
        }
        auto codes = scratch.mutable_codes();
        range->decode(begin, codes);
        for (std::uint64_t i = begin; i < end; ++i) {
            visit(i, scratch);
            range->advance(codes);
        }
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(spec.workers, static_cast<unsigned>(std::max<std::size_t>(1, chunks.size()))));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    auto worker = [&](unsigned w) {
        try {
            Tensor2 scratch(spec.field, spec.dim);
            for (std::size_t c = next.fetch_add(1); c < chunks.size(); c = next.fetch_add(1)) run_chunk(c, scratch);
        } catch (...) {
            failures[w] = std::current_exception();
            next.store(chunks.size());
        }
    };
    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    SolutionReport report;
    report.claim = spec.claim;
    report.field = spec.field.literal();
    report.algebra = spec.lie ? spec.lie->label() : spec.assoc ? spec.assoc->label() : "none";
    report.params = params_list(spec.params);
    report.predicate = std::string(predicate_name(spec.predicate));
    if (spec.classifier) report.classifier = std::string(predicate_name(*spec.classifier));
    report.total = total;

    auto tensor_at = [&](std::uint64_t index) { return spec.candidates ? (*spec.candidates)[index] : range->at(index); };
    for (const ChunkResult& r : results) {
        report.predicate_count += r.predicate_count;
        report.classifier_count += r.classifier_count;
        report.diff_pred_only += r.pred_only;
        report.diff_class_only += r.class_only;
        for (const Difference& d : r.differences) {
            if (report.counterexamples.size() < kCounterexampleCap)
                report.counterexamples.push_back({tensor_at(d.index), d.predicate, d.classifier});
            if (spec.collect_all) report.all_differences.push_back({tensor_at(d.index), d.predicate, d.classifier});
        }
    }
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

void DiscrepancyLedger::append_report(const SolutionReport& report) {
    for (const Counterexample& c : report.counterexamples)
        entries_.push_back({report.claim, report.field, report.algebra, report.params, c.tensor, c.predicate, c.classifier});
}

}  // namespace ybe
