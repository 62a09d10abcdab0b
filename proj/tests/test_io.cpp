#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracle.hpp"
#include "ybe/io.hpp"

using namespace ybe;

namespace {

Error caught(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e;
    }
    FAIL("no error raised");
    return Error(Errc::InvalidArgument, "unreachable");
}

}  // namespace

TEST_CASE("field literals") {
    CHECK(parse_field("gf(2)") == oracle::gf2());
    CHECK(parse_field("gf(2^2;0b111)") == oracle::gf4());
    CHECK(parse_field("gf(2^3;0xb)") == oracle::gf8());
    CHECK(parse_field(" gf(2^4;19) ") == oracle::gf16());
    CHECK(parse_field("gf(3)").order() == 3);
    CHECK(caught([] { parse_field("gf(2^2;0b101)"); }).code() == Errc::ReducibleModulus);
    CHECK(caught([] { parse_field("gf(6)"); }).code() == Errc::NonPrimeCharacteristic);
    CHECK(caught([] { parse_field("gf(2^17;0b1)"); }).code() == Errc::FieldTooLarge);
    CHECK(caught([] { parse_field("GF2"); }).code() == Errc::ParseError);
    CHECK(caught([] { parse_field("gf(2^x;0b111)"); }).code() == Errc::ParseError);
    for (const Field& f : {oracle::gf2(), oracle::gf4(), oracle::gf8(), Field::make(3, 2, 10)})
        CHECK(parse_field(f.literal()) == f);
}

TEST_CASE("element literals") {
    const Field f = oracle::gf4();
    CHECK(parse_element(f, "0x3") == f.element(3));
    CHECK(parse_element(f, "0b10") == f.element(2));
    CHECK(parse_element(f, "1") == f.one());
    CHECK(parse_element(f, " 0 ") == f.zero());
    CHECK(caught([&] { parse_element(f, "0x4"); }).code() == Errc::ParseError);
    CHECK(caught([&] { parse_element(f, "g"); }).code() == Errc::ParseError);
    CHECK(caught([&] { parse_element(f, ""); }).code() == Errc::ParseError);
}

TEST_CASE("tensor literals") {
    const Field f = oracle::gf2();
    CHECK(parse_tensor(f, "0x1,0,0, 0,0,0, 0,0,0") == Tensor2::basis(f, 3, 0, 0));
    CHECK(parse_tensor(f, "0,0,0,0,0,0,0,0,0x1") == Tensor2::basis(f, 3, 2, 2));
    CHECK(parse_tensor(f, "1,1,1,1").dim() == 2);
    CHECK(caught([&] { parse_tensor(f, "1,0,0"); }).code() == Errc::DimensionMismatch);
    CHECK(caught([&] { parse_tensor(f, "1,0,0,0", 3); }).code() == Errc::DimensionMismatch);
    const Error e = caught([&] { parse_tensor(f, "0,0x2,0,0"); });
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.indices() == std::vector<std::size_t>{1, 3});
}

TEST_CASE("tensor literals round-trip") {
    std::mt19937_64 rng(12);
    for (const Field& f : {oracle::gf2(), oracle::gf4(), oracle::gf3(), oracle::gf16()})
        for (std::size_t n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 10; ++trial) {
                const Tensor2 r = oracle::random_tensor(f, n, rng);
                REQUIRE(parse_tensor(f, tensor_literal(r)) == r);
            }
    CHECK(tensor_literal(Tensor2::basis(oracle::gf2(), 2, 0, 1)) == "0x0,0x1,0x0,0x0");
}

TEST_CASE("field lists") {
    CHECK(split_field_list("gf(2),gf(2^2;0b111)") == std::vector<std::string>{"gf(2)", "gf(2^2;0b111)"});
    CHECK(split_field_list("gf(2)") == std::vector<std::string>{"gf(2)"});
    CHECK(split_field_list(" gf(2) , gf(3) ") == std::vector<std::string>{"gf(2)", "gf(3)"});
    CHECK(split_field_list("").empty());
}

TEST_CASE("algebra definition with bracket lines") {
    const AlgebraDefinition def = parse_algebra(
        "field gf(2^2;0b111)\n"
        "dim 3\n"
        "bracket 1 2 -> 3:0x1          # [e1,e2] = 1*e3\n"
        "bracket 2 3 -> 1:0x2          # [e2,e3] = g*e1\n");
    CHECK(def.field == oracle::gf4());
    CHECK(def.dim == 3);
    CHECK(def.kind == ProductKind::bracket);
    const Field& f = def.field;
    CHECK(def.constants.at(0, 1, 2) == f.one());
    CHECK(def.constants.at(1, 0, 2) == f.one());
    CHECK(def.constants.at(1, 2, 0) == f.element(2));
    CHECK(def.constants.at(2, 1, 0) == f.element(2));
    const LieAlgebra l = to_lie(def, "file");
    CHECK(l.constants() == make_family_ab(f, {f.element(2), f.zero(), std::nullopt}).constants());
    CHECK(l.label() == "file");
    CHECK_THROWS_AS(to_assoc(def, "file"), Error);
}

TEST_CASE("antisymmetric fill in odd characteristic") {
    const AlgebraDefinition def = parse_algebra("field gf(3)\ndim 2\nbracket 1 2 -> 1:1\n");
    CHECK(def.constants.at(1, 0, 0) == def.field.element(2));
    CHECK_NOTHROW(to_lie(def, "b"));
}

TEST_CASE("algebra definition with product lines") {
    const AlgebraDefinition def = parse_algebra(
        "# the 2x2 upper triangular matrices\n"
        "field gf(2)\n"
        "dim 3\n"
        "product 1 1 -> 1:1\n"
        "product 1 2 -> 2:1\n"
        "product 2 3 -> 2:1\n"
        "product 3 3 -> 3:1\n");
    CHECK(def.kind == ProductKind::product);
    CHECK(def.constants.at(1, 0, 1).is_zero());
    CHECK_NOTHROW(to_assoc(def, "upper"));
    CHECK_THROWS_AS(to_lie(def, "upper"), Error);
}

TEST_CASE("parse errors carry line and column") {
    struct Bad {
        const char* text;
        std::size_t line, col;
    };
    for (const Bad& b : {Bad{"field gf(2)\ndim 2\nbracket 1 3 -> 1:1\n", 3, 11},
                         Bad{"field gf(2)\ndim 2\nbracket 1 2 => 1:1\n", 3, 1},
                         Bad{"field gf(2)\ndim 2\nbracket 1 2 -> 1:0x2\n", 3, 18},
                         Bad{"field gf(2)\ndim 2\nbracket 1 2 -> 1\n", 3, 16},
                         Bad{"field gf(2)\n\nfrobnicate\n", 3, 1},
                         Bad{"dim 2\nbracket 1 2 -> 1:1\n", 2, 1},
                         Bad{"field gf(2)\ndim 0\n", 2, 5},
                         Bad{"field gf(2)\nfield gf(2)\n", 2, 1},
                         Bad{"field gf(2)\ndim 2\nbracket 1 2 -> 1:1\nproduct 1 1 -> 1:1\n", 4, 1},
                         Bad{"  field  gf[2]\n", 1, 10},
                         Bad{"field gf(2)\n", 2, 1}}) {
        INFO(std::string(b.text));
        const Error e = caught([&] { parse_algebra(b.text); });
        CHECK(e.code() == Errc::ParseError);
        CHECK(e.indices() == std::vector<std::size_t>{b.line, b.col});
    }
}

TEST_CASE("invalid algebras surface validation errors") {
    const AlgebraDefinition jac = parse_algebra("field gf(2)\ndim 3\nbracket 1 2 -> 3:1\nbracket 1 3 -> 1:1\n");
    CHECK(caught([&] { to_lie(jac, "bad"); }).code() == Errc::JacobiFailure);
    const AlgebraDefinition assoc = parse_algebra("field gf(2)\ndim 2\nproduct 1 1 -> 2:1\nproduct 1 2 -> 1:1\n");
    CHECK(caught([&] { to_assoc(assoc, "bad"); }).code() == Errc::AssociativityFailure);
}

TEST_CASE("algebra files") {
    const auto path = std::filesystem::temp_directory_path() / "ybe_test_algebra.txt";
    {
        std::ofstream out(path);
        out << "field gf(2)\ndim 2\nbracket 1 2 -> 1:1\n";
    }
    const LieAlgebra l = to_lie(load_algebra_file(path), "dim2");
    CHECK(l.constants() == make_dim2(oracle::gf2(), Dim2Kind::nonabelian).constants());
    std::filesystem::remove(path);
    CHECK(caught([&] { load_algebra_file(path); }).code() == Errc::InvalidArgument);
}
