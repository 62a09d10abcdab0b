#include "doctest.h"
#include "oracle.hpp"
#include "ybe/bialgebra.hpp"
#include "ybe/search.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

LieAlgebra l00(const Field& f) { return make_family_ab(f, {f.zero(), f.zero(), std::nullopt}); }

Tensor2 sym(const Field& f, std::size_t n, std::size_t i, std::size_t j) {
    return Tensor2::basis(f, n, i, j) + Tensor2::basis(f, n, j, i);
}

}  // namespace

TEST_CASE("adjoint action on V (x) V") {
    const Field f = oracle::gf2();
    std::mt19937_64 rng(2);
    const Tensor2 r = oracle::random_tensor(f, 3, rng);
    for (std::size_t x = 0; x < 3; ++x) CHECK(adjoint_act2(make_abelian(f, 3), x, r).is_zero());
    CHECK(adjoint_act2(l00(f), 2, r).is_zero());
    CHECK(adjoint_act2(l00(f), 0, sym(f, 3, 0, 1)) == sym(f, 3, 0, 2));
    CHECK_THROWS_AS(adjoint_act2(l00(f), 3, r), Error);
    CHECK_THROWS_AS(adjoint_act2(l00(f), 0, Tensor2(f, 2)), Error);
}

TEST_CASE("adjoint action on V (x) V (x) V") {
    const Field f = oracle::gf2();
    const Tensor3 t = Tensor3::basis(f, 3, 0, 0, 0);
    CHECK(adjoint_act3(l00(f), 2, t).is_zero());
    CHECK(adjoint_act3(make_abelian(f, 3), 1, t).is_zero());
    const Tensor3 expected = Tensor3::basis(f, 3, 2, 0, 0) + Tensor3::basis(f, 3, 0, 2, 0) + Tensor3::basis(f, 3, 0, 0, 2);
    CHECK(adjoint_act3(l00(f), 1, t) == expected);
    CHECK(adjoint_act3(l00(f), 1, t, ActionReading::tensor_cube) == Tensor3::basis(f, 3, 2, 2, 2));
}

TEST_CASE("co-Jacobi defect trivial cases") {
    const Field f = oracle::gf4();
    std::mt19937_64 rng(6);
    CHECK(cojacobi_defect(l00(f), Tensor2(f, 3)).is_zero());
    CHECK(cojacobi_defect(make_abelian(f, 3), oracle::random_tensor(f, 3, rng)).is_zero());
    CHECK(cojacobi_defect(l00(f), Tensor2(f, 3)).per_basis.size() == 3);
}

TEST_CASE("coboundary examples") {
    const Field f = oracle::gf2();
    for (const Element& a : f.elements())
        for (const Element& b : f.elements()) {
            const LieAlgebra l = make_family_ab(f, {a, b, std::nullopt});
            CHECK(is_coboundary(l, sym(f, 3, 0, 1)));
            CHECK_FALSE(is_coboundary(l, Tensor2::basis(f, 3, 0, 0)));
            for (const Tensor2& r : image_one_minus_tau_enumerate(f, 3)) CHECK(cojacobi_defect(l, r).is_zero());
        }
    const LieAlgebra bd = make_family_bd(f, {std::nullopt, f.one(), f.one()});
    CHECK(is_coboundary(bd, sym(f, 3, 0, 2)));
}

TEST_CASE("triangular examples") {
    const Field f = oracle::gf4();
    const LieAlgebra l = l00(f);
    for (const Element& s : f.elements())
        for (const Element& u : f.elements())
            CHECK(is_triangular(l, sym(f, 3, 0, 2).scaled(s) + sym(f, 3, 1, 2).scaled(u)));
    CHECK(is_triangular(l, Tensor2(f, 3)));
    CHECK_FALSE(is_triangular(l, sym(f, 3, 0, 1)));
}

TEST_CASE("identity between the diagonal action on C(r) and the defect") {
    const Field f = oracle::gf2();
    const auto image = image_one_minus_tau_enumerate(f, 3);
    REQUIRE(image.size() == 8);
    for (const LieAlgebra& l : builtin_dim3(f))
        for (const Tensor2& r : image) {
            REQUIRE(cojacobi_identity_holds(l, r, ActionReading::diagonal));
            const Tensor3 c = oracle::cybe(l, r);
            const CoJacobiDefect d = cojacobi_defect(l, r);
            for (std::size_t x = 0; x < 3; ++x) REQUIRE(adjoint_act3(l, x, c) == d.per_basis[x]);
        }
}

TEST_CASE("triangular implies coboundary") {
    for (const Field& f : {oracle::gf2(), oracle::gf4()}) {
        std::vector<LieAlgebra> algebras = builtin_dim3(f);
        algebras.push_back(make_dim2(f, Dim2Kind::nonabelian));
        algebras.push_back(make_dim2(f, Dim2Kind::abelian));
        for (const LieAlgebra& l : algebras)
            for (const Tensor2& r : image_one_minus_tau_enumerate(f, l.dim()))
                if (is_triangular(l, r)) REQUIRE(is_coboundary(l, r));
    }
}

TEST_CASE("dimension two: coboundary, triangular and image membership coincide") {
    for (const Field& f : {oracle::gf2(), oracle::gf4()})
        for (Dim2Kind kind : {Dim2Kind::abelian, Dim2Kind::nonabelian}) {
            const LieAlgebra l = make_dim2(f, kind);
            for (const Tensor2& r : oracle::all_tensors(f, 2)) {
                const bool im = in_image_one_minus_tau(r);
                REQUIRE(is_coboundary(l, r) == im);
                REQUIRE(is_triangular(l, r) == im);
            }
        }
}

TEST_CASE("odd characteristic image membership") {
    const Field f = oracle::gf3();
    const LieAlgebra l = make_dim2(f, Dim2Kind::nonabelian);
    const Tensor2 w = one_minus_tau(Tensor2::basis(f, 2, 0, 1));
    CHECK(is_triangular(l, w));
    CHECK(is_coboundary(l, w));
    CHECK_FALSE(is_coboundary(l, sym(f, 2, 0, 1)));
}
