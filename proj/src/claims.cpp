#include "ybe/claims.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace ybe {

namespace {

using Grid = std::vector<FamilyParams>;

Grid ab_grid(const Field& f) {
    Grid out;
    for (const Element& a : f.elements())
        for (const Element& b : f.elements()) out.push_back({a, b, std::nullopt});
    return out;
}

Grid bd_grid(const Field& f, const std::function<bool(const Element&, const Element&)>& keep) {
    Grid out;
    for (const Element& b : f.elements())
        for (const Element& d : f.elements())
            if (keep(b, d)) out.push_back({std::nullopt, b, d});
    return out;
}

Grid bd_case_grid(const Field& f, BdCase c) {
    return bd_grid(f, [c](const Element& b, const Element& d) { return bd_case(b, d) == c; });
}

Grid bd_covered_grid(const Field& f) {
    return bd_grid(f, [](const Element& b, const Element& d) { return bd_case(b, d) != BdCase::uncovered; });
}

std::vector<LieAlgebra> dim2_algebras(const Field& f) {
    return {make_dim2(f, Dim2Kind::abelian), make_dim2(f, Dim2Kind::nonabelian)};
}

class Runner {
public:
    Runner(std::string id, const ClaimOptions& options) : options_(options) { result_.claim = std::move(id); }

    void run(SweepSpec spec, Relation relation) {
        spec.claim = result_.claim;
        spec.workers = options_.workers;
        spec.chunk_size = options_.chunk_size;
        switch (relation) {
        case Relation::equal: spec.collect = CollectSide::both; break;
        case Relation::classifier_implies_predicate: spec.collect = CollectSide::classifier_only; break;
        case Relation::predicate_implies_classifier: spec.collect = CollectSide::predicate_only; break;
        case Relation::comparison_only: spec.collect = CollectSide::both; break;
        }
        SolutionReport report = sweep(spec);
        bool holds = true;
        switch (relation) {
        case Relation::equal: holds = report.diff_pred_only == 0 && report.diff_class_only == 0; break;
        case Relation::classifier_implies_predicate: holds = report.diff_class_only == 0; break;
        case Relation::predicate_implies_classifier: holds = report.diff_pred_only == 0; break;
        case Relation::comparison_only: break;
        }
        if (relation != Relation::comparison_only) result_.ledger.append_report(report);
        result_.comparisons.push_back({std::move(report), relation, holds});
    }

    void family(const LieAlgebra& lie, const FamilyParams& params, PredicateKind pred, PredicateKind cls,
                Relation relation) {
        SweepSpec spec = lie_sweep(lie, pred, cls);
        spec.params = params;
        run(std::move(spec), relation);
    }

    Grid grid_or(Grid fallback) const { return options_.grid ? *options_.grid : std::move(fallback); }

    ClaimResult take() { return std::move(result_); }

private:
    const ClaimOptions& options_;
    ClaimResult result_;
};

using Suite = std::function<void(Runner&, const Field&)>;

void thm03_cybe(Runner& run, const Field& f) {
    std::vector<LieAlgebra> algebras;
    if (f.characteristic() == 2) algebras = builtin_dim3(f);
    for (auto& l : dim2_algebras(f)) algebras.push_back(std::move(l));
    algebras.push_back(commutator_lie(make_matrix_algebra(f, 2)));
    for (const LieAlgebra& lie : algebras) {
        SweepSpec spec = lie_sweep(lie, PredicateKind::cybe, PredicateKind::strongly_symmetric);
        spec.candidates = strong_symmetric_enumerate(f, lie.dim());
        run.run(std::move(spec), Relation::classifier_implies_predicate);
    }
}

void thm03_qybe(Runner& run, const Field& f) {
    for (const AssocAlgebra& a : {make_matrix_algebra(f, 1), make_matrix_algebra(f, 2), make_zero_product(f, 2)}) {
        SweepSpec spec = assoc_sweep(a, PredicateKind::qybe, PredicateKind::strongly_symmetric);
        spec.candidates = strong_symmetric_enumerate(f, a.dim());
        run.run(std::move(spec), Relation::classifier_implies_predicate);
    }
}

void cor04(Runner& run, const Field& f) {
    std::vector<LieAlgebra> algebras;
    if (f.characteristic() == 2) algebras = builtin_dim3(f);
    for (auto& l : dim2_algebras(f)) algebras.push_back(std::move(l));
    for (const LieAlgebra& lie : algebras)
        run.run(lie_sweep(lie, PredicateKind::cybe, PredicateKind::strongly_symmetric),
                Relation::classifier_implies_predicate);
}

void prop13(Runner& run, const Field& f) {
    for (const LieAlgebra& lie : dim2_algebras(f))
        run.run(lie_sweep(lie, PredicateKind::cybe, PredicateKind::symmetric), Relation::equal);
}

void prop14(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(ab_grid(f)))
        run.family(make_family_ab(f, p), p, PredicateKind::cybe, PredicateKind::alpha_beta_symmetric, Relation::equal);
}

void prop14_strong(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(ab_grid(f)))
        run.family(make_family_ab(f, p), p, PredicateKind::cybe, PredicateKind::strongly_symmetric,
                   Relation::classifier_implies_predicate);
}

void prop14_system(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(ab_grid(f)))
        run.family(make_family_ab(f, p), p, PredicateKind::cybe, PredicateKind::ab_system, Relation::equal);
}

void prop16_system(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(bd_grid(f, [](const Element&, const Element&) { return true; })))
        run.family(make_family_bd(f, p), p, PredicateKind::cybe, PredicateKind::bd_system, Relation::equal);
}

Suite prop16_cases(std::optional<BdCase> only) {
    return [only](Runner& run, const Field& f) {
        const Grid grid = only ? bd_case_grid(f, *only) : bd_covered_grid(f);
        for (const FamilyParams& p : run.grid_or(grid))
            run.family(make_family_bd(f, p), p, PredicateKind::cybe, PredicateKind::prop16_case, Relation::equal);
    };
}

void prop16_strong(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(bd_grid(f, [](const Element&, const Element&) { return true; })))
        run.family(make_family_bd(f, p), p, PredicateKind::cybe, PredicateKind::strongly_symmetric,
                   Relation::classifier_implies_predicate);
}

void lemma211(Runner& run, const Field& f) {
    for (const LieAlgebra& lie : builtin_dim3(f)) {
        for (PredicateKind kind : {PredicateKind::cojacobi_diagonal, PredicateKind::cojacobi_cube}) {
            SweepSpec spec = lie_sweep(lie, kind, PredicateKind::im_one_minus_tau);
            spec.candidates = image_one_minus_tau_enumerate(f, 3);
            run.run(std::move(spec), kind == PredicateKind::cojacobi_diagonal ? Relation::classifier_implies_predicate
                                                                               : Relation::comparison_only);
        }
    }
}

void thm21_i(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(ab_grid(f)))
        run.family(make_family_ab(f, p), p, PredicateKind::coboundary, PredicateKind::im_one_minus_tau, Relation::equal);
}

void thm21_ii(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(ab_grid(f)))
        run.family(make_family_ab(f, p), p, PredicateKind::triangular, PredicateKind::ab_triangular_condition,
                   Relation::equal);
}

void thm221(Runner& run, const Field& f) {
    std::vector<LieAlgebra> algebras = builtin_dim3(f);
    for (auto& l : dim2_algebras(f)) algebras.push_back(std::move(l));
    for (const LieAlgebra& lie : algebras)
        run.run(lie_sweep(lie, PredicateKind::triangular, PredicateKind::coboundary),
                Relation::predicate_implies_classifier);
}

Grid thm23_grid(const Field& f) {
    return bd_grid(f, [](const Element& b, const Element& d) { return b.is_zero() || d == d.field().one(); });
}

void thm23_i(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(thm23_grid(f)))
        run.family(make_family_bd(f, p), p, PredicateKind::coboundary, PredicateKind::bd_coboundary_condition,
                   Relation::equal);
}

void thm23_ii(Runner& run, const Field& f) {
    for (const FamilyParams& p : run.grid_or(thm23_grid(f)))
        run.family(make_family_bd(f, p), p, PredicateKind::triangular, PredicateKind::bd_triangular_condition,
                   Relation::equal);
}

void thm24(Runner& run, const Field& f) {
    for (const LieAlgebra& lie : dim2_algebras(f)) {
        run.run(lie_sweep(lie, PredicateKind::coboundary, PredicateKind::im_one_minus_tau), Relation::equal);
        run.run(lie_sweep(lie, PredicateKind::triangular, PredicateKind::im_one_minus_tau), Relation::equal);
    }
}

struct Registered {
    std::string_view id;
    Suite suite;
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> table{
        {"Thm0.3-CYBE", thm03_cybe},
        {"Thm0.3-QYBE", thm03_qybe},
        {"Cor0.4", cor04},
        {"Prop1.3", prop13},
        {"Prop1.4", prop14},
        {"Prop1.4-II", prop14_strong},
        {"Prop1.4-system", prop14_system},
        {"Prop1.6", prop16_cases(std::nullopt)},
        {"Prop1.6-I", prop16_strong},
        {"Prop1.6-II", prop16_cases(BdCase::II)},
        {"Prop1.6-III", prop16_cases(BdCase::III)},
        {"Prop1.6-IV", prop16_cases(BdCase::IV)},
        {"Prop1.6-system", prop16_system},
        {"Lemma2.1.1", lemma211},
        {"Thm2.1-I", thm21_i},
        {"Thm2.1-II", thm21_ii},
        {"Thm2.2.1", thm221},
        {"Thm2.3-I", thm23_i},
        {"Thm2.3-II", thm23_ii},
        {"Thm2.4", thm24},
    };
    return table;
}

}  // namespace

std::string_view relation_name(Relation relation) {
    switch (relation) {
    case Relation::equal: return "equal";
    case Relation::classifier_implies_predicate: return "classifier-implies-predicate";
    case Relation::predicate_implies_classifier: return "predicate-implies-classifier";
    case Relation::comparison_only: return "comparison-only";
    }
    return "unknown";
}

ClaimResult claim_check(std::string_view id, const std::vector<Field>& fields, const ClaimOptions& options) {
    const auto& table = registry();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Registered& r) { return r.id == id; });
    if (it == table.end()) throw Error(Errc::UnknownClaim, "no claim registered as '" + std::string(id) + "'");
    if (fields.empty()) throw Error(Errc::InvalidArgument, "claim needs at least one field");
    Runner runner(std::string(id), options);
    for (const Field& f : fields) it->suite(runner, f);
    return runner.take();
}

std::vector<std::string_view> claim_ids() {
    std::vector<std::string_view> out;
    for (const auto& r : registry()) out.push_back(r.id);
    return out;
}

}  // namespace ybe
