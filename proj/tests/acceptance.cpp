// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ybe/bialgebra.hpp"
#include "ybe/claims.hpp"
#include "ybe/report.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

constexpr unsigned kWorkers = 8;

Field gf2() { return Field::make(2); }
Field gf4() { return Field::make(2, 2, 0b111); }
Field gf8() { return Field::make(2, 3, 0b1011); }

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string read_snapshot(const std::string& name) {
    std::ifstream in(std::string(YBE_SNAPSHOT_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ClaimOptions parallel() {
    ClaimOptions o;
    o.workers = kWorkers;
    return o;
}

std::string counts(const SolutionReport& r) {
    std::string out = r.algebra + " over " + r.field + ": " + r.predicate + " " + std::to_string(r.predicate_count);
    if (!r.classifier.empty()) out += ", " + r.classifier + " " + std::to_string(r.classifier_count);
    return out;
}

// Violated comparisons of a claim, one short description each.
void require_claim(Outcome& out, const ClaimResult& result) {
    for (const ClaimComparison& c : result.comparisons)
        if (!c.holds) out.require(false, counts(c.report));
}

void require_snapshot(Outcome& out, const ClaimResult& result, const std::string& file) {
    out.require(ledger_jsonl(result.ledger) == read_snapshot(file), "ledger differs from pinned " + file);
}

std::vector<LieAlgebra> dim3_and_dim2(const Field& f) {
    std::vector<LieAlgebra> out = builtin_dim3(f);
    out.push_back(make_dim2(f, Dim2Kind::abelian));
    out.push_back(make_dim2(f, Dim2Kind::nonabelian));
    return out;
}

Outcome strong_cybe() {
    Outcome out;
    std::size_t checked = 0;
    for (const Field& f : {gf2(), gf4()})
        for (const LieAlgebra& l : dim3_and_dim2(f))
            for (const Tensor2& r : strong_symmetric_enumerate(f, l.dim())) {
                ++checked;
                if (!cybe_residual(l, r).is_zero()) out.require(false, l.label() + " " + f.literal());
            }
    out.note(std::to_string(checked) + " (algebra, tensor) pairs");
    return out;
}

Outcome strong_qybe() {
    Outcome out;
    const Field f = gf2();
    const AssocAlgebra m2 = make_matrix_algebra(f, 2);
    const auto strong = strong_symmetric_enumerate(f, 4);
    std::uint64_t filtered = 0;
    for (const Tensor2& r : enumerate_tensors(f, 4)) filtered += is_strongly_symmetric(r);
    out.require(filtered == strong.size(), "enumeration and filter disagree");
    for (const Tensor2& r : strong) out.require(qybe_sides(m2, r).holds(), "QYBE fails on a strongly symmetric tensor");
    out.note(std::to_string(strong.size()) + " strongly symmetric tensors in M_2(GF(2)) (zero plus 15 rank-one)");
    return out;
}

Outcome dim2_symmetric() {
    Outcome out;
    for (const Field& f : {gf2(), gf4()}) {
        const std::uint64_t q = f.order();
        for (Dim2Kind kind : {Dim2Kind::abelian, Dim2Kind::nonabelian}) {
            SweepSpec spec = lie_sweep(make_dim2(f, kind), PredicateKind::cybe, PredicateKind::symmetric);
            spec.workers = kWorkers;
            const SolutionReport r = sweep(spec);
            const bool equal = r.diff_pred_only == 0 && r.diff_class_only == 0 && r.predicate_count == q * q * q;
            out.require(equal, counts(r) + " (expected " + std::to_string(q * q * q) + ")");
        }
    }
    return out;
}

std::string ab_family_json;

Outcome ab_family() {
    Outcome out;
    const ClaimResult result = claim_check("Prop1.4", {gf2(), gf4()}, parallel());
    ab_family_json = claim_json(result, false).dump();
    for (const ClaimComparison& c : result.comparisons)
        if (c.report.field == "gf(2)" && c.report.params[0].second == "0x0" && c.report.params[1].second == "0x0")
            out.require(c.report.predicate_count == 32, "(0,0) over GF(2) has " +
                                                            std::to_string(c.report.predicate_count) +
                                                            " CYBE solutions, not 32");
    std::size_t violated = 0;
    for (const ClaimComparison& c : result.comparisons) violated += !c.holds;
    out.require(violated == 0, std::to_string(violated) + " of " + std::to_string(result.comparisons.size()) +
                                   " parameter pairs have CYBE solutions outside the alpha,beta-symmetric set");
    return out;
}

Outcome printed_systems() {
    Outcome out;
    const ClaimResult ab = claim_check("Prop1.4-system", {gf2()}, parallel());
    const ClaimResult bd = claim_check("Prop1.6-system", {gf2()}, parallel());
    require_claim(out, ab);
    require_claim(out, bd);
    require_snapshot(out, ab, "ab_system.jsonl");
    require_snapshot(out, bd, "bd_system.jsonl");
    return out;
}

Outcome bd_cases() {
    Outcome out;
    const ClaimResult result = claim_check("Prop1.6", {gf2(), gf4()}, parallel());
    require_claim(out, result);
    require_snapshot(out, result, "bd_cases.jsonl");
    out.note(std::to_string(result.comparisons.size()) + " covered (beta, delta) pairs");
    return out;
}

Outcome cojacobi_identity() {
    Outcome out;
    const ClaimResult result = claim_check("Lemma2.1.1", {gf2()}, parallel());
    require_claim(out, result);
    require_snapshot(out, result, "cojacobi_identity.jsonl");
    std::size_t cube_ok = 0, cube_total = 0;
    for (const ClaimComparison& c : result.comparisons)
        if (c.relation == Relation::comparison_only) {
            ++cube_total;
            cube_ok += c.report.diff_class_only == 0;
        }
    out.note("tensor-cube reading holds on " + std::to_string(cube_ok) + "/" + std::to_string(cube_total) +
             " algebras");
    return out;
}

Outcome coboundary_image() {
    Outcome out;
    const ClaimResult result = claim_check("Thm2.1-I", {gf4()}, parallel());
    require_claim(out, result);
    const Field f = gf4();
    for (const Element& a : f.elements())
        for (const Element& b : f.elements()) {
            const LieAlgebra l = make_family_ab(f, {a, b, std::nullopt});
            for (const Tensor2& r : image_one_minus_tau_enumerate(f, 3))
                if (!cojacobi_defect(l, r).is_zero()) out.require(false, "nonzero defect on " + l.label());
        }
    return out;
}

Outcome bd_closed_forms() {
    Outcome out;
    const ClaimResult i = claim_check("Thm2.3-I", {gf2(), gf4()}, parallel());
    const ClaimResult ii = claim_check("Thm2.3-II", {gf2(), gf4()}, parallel());
    require_claim(out, i);
    require_claim(out, ii);
    require_snapshot(out, i, "bd_coboundary.jsonl");
    require_snapshot(out, ii, "bd_triangular.jsonl");
    out.note("both printed conditions match their oracles");
    return out;
}

Outcome dim2_bialgebra() {
    Outcome out;
    require_claim(out, claim_check("Thm2.4", {gf2(), gf4()}, parallel()));
    return out;
}

std::string scale_json;

SweepSpec scale_spec(PredicateKind kind) {
    const Field f = gf8();
    const FamilyParams p{f.element(0x2), f.element(0x3), std::nullopt};
    SweepSpec spec = lie_sweep(make_family_ab(f, p), kind);
    spec.params = p;
    spec.workers = kWorkers;
    spec.chunk_size = std::uint64_t{1} << 18;
    return spec;
}

Outcome scale() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const SolutionReport solutions = sweep(scale_spec(PredicateKind::cybe));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const SolutionReport symmetric = sweep(scale_spec(PredicateKind::alpha_beta_symmetric));
    scale_json = report_json(solutions, false).dump();
    out.require(solutions.total == 134217728, "wrong candidate count");
    out.require(solutions.predicate_count == symmetric.predicate_count,
                std::to_string(solutions.predicate_count) + " solutions vs " +
                    std::to_string(symmetric.predicate_count) + " alpha,beta-symmetric");
    out.require(seconds < 300.0, "cybe sweep took " + std::to_string(seconds) + " s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%llu solutions, cybe sweep %.1f s",
                  static_cast<unsigned long long>(solutions.predicate_count), seconds);
    out.note(buf);
    return out;
}

Outcome determinism() {
    Outcome out;
    ClaimOptions one;
    one.workers = 1;
    out.require(claim_json(claim_check("Prop1.4", {gf2(), gf4()}, one), false).dump() == ab_family_json,
                "family (alpha, beta) reports differ between 1 and 8 workers");
    SweepSpec spec = scale_spec(PredicateKind::cybe);
    spec.workers = 1;
    out.require(report_json(sweep(spec), false).dump() == scale_json, "GF(8) report differs between 1 and 8 workers");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "strongly symmetric tensors solve CYBE over GF(2), GF(4)", 5, strong_cybe},
        {2, "strongly symmetric tensors solve QYBE in M_2(GF(2))", 1, strong_qybe},
        {3, "dim-2 CYBE solutions are exactly the symmetric tensors", 1, dim2_symmetric},
        {4, "L(alpha,beta) CYBE solutions are exactly the alpha,beta-symmetric tensors", 60, ab_family},
        {5, "printed coefficient systems agree with the residual over GF(2)", 5, printed_systems},
        {6, "L(beta,delta) case classifiers agree with the residual", 60, bd_cases},
        {7, "diagonal action on C(r) equals the co-Jacobi defect on Im(1-tau)", 1, cojacobi_identity},
        {8, "coboundary iff Im(1-tau) for L(alpha,beta) over GF(4)", 10, coboundary_image},
        {9, "closed-form coboundary and triangular conditions for L(beta,delta)", 10, bd_closed_forms},
        {10, "dim 2: coboundary iff triangular iff Im(1-tau)", 1, dim2_bialgebra},
        {11, "GF(8) CYBE sweep count equals the alpha,beta-symmetric count", 300, scale},
        {12, "reports identical for 1 and 8 workers", 600, determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("error: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, c.budget_s);
        if (seconds > c.budget_s) o.require(false, "over time budget");
        failed += !o.ok;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.what << " (" << timing << ")";
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
