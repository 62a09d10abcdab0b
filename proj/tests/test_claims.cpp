#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "oracle.hpp"
#include "ybe/claims.hpp"
#include "ybe/report.hpp"

using namespace ybe;

namespace {

std::string read_snapshot(const std::string& name) {
    std::ifstream in(std::string(YBE_SNAPSHOT_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ClaimOptions fast() {
    ClaimOptions options;
    options.workers = std::max(1U, std::thread::hardware_concurrency());
    return options;
}

const std::vector<Field> gf2_only{oracle::gf2()};
const std::vector<Field> gf2_gf4{oracle::gf2(), oracle::gf4()};

}  // namespace

TEST_CASE("registry") {
    const auto ids = claim_ids();
    for (std::string_view id : {"Thm0.3-CYBE", "Thm0.3-QYBE", "Cor0.4", "Prop1.3", "Prop1.4", "Prop1.6-II",
                                "Prop1.6-III", "Prop1.6-IV", "Lemma2.1.1", "Thm2.1-I", "Thm2.3-I", "Thm2.3-II", "Thm2.4"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    try {
        claim_check("NoSuchClaim", gf2_only);
        FAIL("expected UnknownClaim");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownClaim);
    }
    CHECK_THROWS_AS(claim_check("Prop1.3", {}), Error);
    CHECK(relation_name(Relation::equal) == "equal");
}

TEST_CASE("sufficiency claims pass") {
    for (std::string_view id : {"Thm0.3-CYBE", "Thm0.3-QYBE", "Cor0.4", "Prop1.4-II", "Prop1.6-I", "Thm2.2.1"}) {
        INFO(id);
        const ClaimResult result = claim_check(id, gf2_gf4, fast());
        CHECK(result.passed());
        CHECK_FALSE(result.comparisons.empty());
        for (const ClaimComparison& c : result.comparisons) CHECK(c.holds);
    }
}

TEST_CASE("strong CYBE claim covers the built-in algebras") {
    const ClaimResult result = claim_check("Thm0.3-CYBE", gf2_only);
    // 8 built-in dim-3 algebras, two dim-2 algebras and L(M_2)
    CHECK(result.comparisons.size() == 11);
    for (const ClaimComparison& c : result.comparisons) CHECK(c.report.predicate_count == c.report.total);
}

TEST_CASE("bialgebra claims pass") {
    for (std::string_view id : {"Thm2.1-I", "Thm2.1-II", "Thm2.4"}) {
        INFO(id);
        CHECK(claim_check(id, gf2_gf4, fast()).passed());
    }
}

TEST_CASE("lemma identity: diagonal reading holds, cube reading is recorded only") {
    const ClaimResult result = claim_check("Lemma2.1.1", gf2_only);
    CHECK(result.passed());
    REQUIRE(result.comparisons.size() == 16);
    std::size_t cube_failures = 0;
    for (const ClaimComparison& c : result.comparisons) {
        if (c.relation == Relation::comparison_only) {
            CHECK(c.report.predicate == "cojacobi-cube");
            cube_failures += c.report.diff_class_only > 0;
        } else {
            CHECK(c.report.predicate_count == 8);
        }
    }
    CHECK(cube_failures > 0);
}

TEST_CASE("parameter grid override") {
    const Field f = oracle::gf2();
    ClaimOptions options;
    options.grid = std::vector<FamilyParams>{{f.one(), f.one(), std::nullopt}};
    const ClaimResult result = claim_check("Prop1.4", gf2_only, options);
    REQUIRE(result.comparisons.size() == 1);
    CHECK(result.comparisons[0].report.params == std::vector<std::pair<std::string, std::string>>{{"alpha", "0x1"}, {"beta", "0x1"}});
}

TEST_CASE("ledger snapshots") {
    struct Pinned {
        const char* id;
        const char* file;
        const std::vector<Field>* fields;
    };
    for (const Pinned& p : {Pinned{"Prop1.3", "dim2_symmetric.jsonl", &gf2_gf4}, Pinned{"Prop1.4", "ab_symmetric.jsonl", &gf2_gf4},
                            Pinned{"Prop1.4-system", "ab_system.jsonl", &gf2_only},
                            Pinned{"Prop1.6", "bd_cases.jsonl", &gf2_gf4},
                            Pinned{"Prop1.6-system", "bd_system.jsonl", &gf2_only},
                            Pinned{"Lemma2.1.1", "cojacobi_identity.jsonl", &gf2_only},
                            Pinned{"Thm2.3-I", "bd_coboundary.jsonl", &gf2_gf4}, Pinned{"Thm2.3-II", "bd_triangular.jsonl", &gf2_gf4}}) {
        INFO(p.id);
        const ClaimResult result = claim_check(p.id, *p.fields, fast());
        CHECK(ledger_jsonl(result.ledger) == read_snapshot(p.file));
    }
}

TEST_CASE("ledger is stable across worker counts") {
    ClaimOptions one;
    ClaimOptions many = fast();
    many.chunk_size = 4096;
    const ClaimResult a = claim_check("Prop1.4", gf2_only, one);
    const ClaimResult b = claim_check("Prop1.4", gf2_only, many);
    CHECK(ledger_jsonl(a.ledger) == ledger_jsonl(b.ledger));
    CHECK(claim_json(a, false) == claim_json(b, false));
}
