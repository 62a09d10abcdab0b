#include "ybe/algebra.hpp"

namespace ybe {

namespace {

std::vector<StructureEntry> collect_entries(const StructureConstants& sc) {
    std::vector<StructureEntry> out;
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (Code c = sc.code(i, j, k); c != 0) out.push_back({i, j, k, c});
    return out;
}

void require_char2(const Field& f) {
    if (f.characteristic() != 2) throw Error(Errc::WrongCharacteristic, "family requires characteristic 2, got " + f.literal());
}

Element param_or_throw(const std::optional<Element>& e, const Field& f, const char* name) {
    if (!e) throw Error(Errc::InvalidArgument, std::string("missing family parameter ") + name);
    if (e->field_id() != f.id()) throw Error(Errc::FieldMismatch, std::string("parameter ") + name + " not in " + f.literal());
    return *e;
}

// Sets [e_a, e_b] = value·e_k together with [e_b, e_a] = −value·e_k.
void bracket(StructureConstants& sc, std::size_t a, std::size_t b, std::size_t k, const Element& value) {
    sc.set(a, b, k, value);
    sc.set(b, a, k, -value);
}

}  // namespace

StructureConstants::StructureConstants(const Field& field, std::size_t dim)
    : field_(field), dim_(dim), c_(dim * dim * dim, 0) {
    if (dim == 0) throw Error(Errc::DimensionMismatch, "dimension must be at least 1");
}

std::size_t StructureConstants::index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(Errc::DimensionMismatch, "structure constant index out of range");
    return (i * dim_ + j) * dim_ + k;
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Element& value) {
    if (value.field_id() != field_.id()) throw Error(Errc::FieldMismatch, "structure constant not in " + field_.literal());
    c_[index(i, j, k)] = value.code();
}

LieAlgebra::LieAlgebra(StructureConstants sc, std::string label)
    : sc_(std::move(sc)), label_(std::move(label)), entries_(collect_entries(sc_)) {}

AssocAlgebra::AssocAlgebra(StructureConstants sc, std::string label)
    : sc_(std::move(sc)), label_(std::move(label)), entries_(collect_entries(sc_)) {}

LieAlgebra lie_validate(StructureConstants sc, std::string label) {
    const Field& f = sc.field();
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (sc.code(i, i, k) != 0)
                throw Error(Errc::NotAlternating, "[e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) + "] != 0", {i, k});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sc.code(i, j, k) != f.neg(sc.code(j, i, k)))
                    throw Error(Errc::NotAntisymmetric, "c[i][j][k] != -c[j][i][k]", {i, j, k});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    Code acc = 0;
                    for (std::size_t s = 0; s < n; ++s) {
                        acc = f.add(acc, f.mul(sc.code(i, j, s), sc.code(s, l, m)));
                        acc = f.add(acc, f.mul(sc.code(j, l, s), sc.code(s, i, m)));
                        acc = f.add(acc, f.mul(sc.code(l, i, s), sc.code(s, j, m)));
                    }
                    if (acc != 0) throw Error(Errc::JacobiFailure, "Jacobi identity fails", {i, j, l, m});
                }
    return LieAlgebra(std::move(sc), std::move(label));
}

AssocAlgebra assoc_validate(StructureConstants sc, std::string label) {
    const Field& f = sc.field();
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    Code left = 0, right = 0;
                    for (std::size_t s = 0; s < n; ++s) {
                        left = f.add(left, f.mul(sc.code(i, j, s), sc.code(s, l, m)));
                        right = f.add(right, f.mul(sc.code(j, l, s), sc.code(i, s, m)));
                    }
                    if (left != right) throw Error(Errc::AssociativityFailure, "(e_i e_j) e_l != e_i (e_j e_l)", {i, j, l, m});
                }
    return AssocAlgebra(std::move(sc), std::move(label));
}

std::string family_ab_label(const Element& alpha, const Element& beta) {
    return "L_ab(alpha=" + alpha.literal() + ",beta=" + beta.literal() + ")";
}

std::string family_bd_label(const Element& beta, const Element& delta) {
    return "L_bd(beta=" + beta.literal() + ",delta=" + delta.literal() + ")";
}

LieAlgebra make_family_ab(const Field& field, const FamilyParams& params) {
    require_char2(field);
    const Element alpha = param_or_throw(params.alpha, field, "alpha");
    const Element beta = param_or_throw(params.beta, field, "beta");
    StructureConstants sc(field, 3);
    bracket(sc, 0, 1, 2, field.one());
    bracket(sc, 1, 2, 0, alpha);
    bracket(sc, 2, 0, 1, beta);
    return lie_validate(std::move(sc), family_ab_label(alpha, beta));
}

LieAlgebra make_family_bd(const Field& field, const FamilyParams& params) {
    require_char2(field);
    const Element beta = param_or_throw(params.beta, field, "beta");
    const Element delta = param_or_throw(params.delta, field, "delta");
    StructureConstants sc(field, 3);
    bracket(sc, 0, 2, 0, field.one());
    bracket(sc, 0, 2, 1, beta);
    bracket(sc, 1, 2, 1, delta);
    return lie_validate(std::move(sc), family_bd_label(beta, delta));
}

LieAlgebra make_dim2(const Field& field, Dim2Kind kind) {
    StructureConstants sc(field, 2);
    if (kind == Dim2Kind::nonabelian) bracket(sc, 0, 1, 0, field.one());
    return lie_validate(std::move(sc), kind == Dim2Kind::abelian ? "dim2-abelian" : "dim2-nonabelian");
}

LieAlgebra make_abelian(const Field& field, std::size_t dim) {
    return lie_validate(StructureConstants(field, dim), "abelian-" + std::to_string(dim));
}

AssocAlgebra make_matrix_algebra(const Field& field, std::size_t size) {
    if (size == 0) throw Error(Errc::DimensionMismatch, "matrix size must be at least 1");
    const std::size_t n = size;
    StructureConstants sc(field, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d) sc.set(a * n + b, b * n + d, a * n + d, field.one());
    return assoc_validate(std::move(sc), "M_" + std::to_string(n));
}

AssocAlgebra make_zero_product(const Field& field, std::size_t dim) {
    return assoc_validate(StructureConstants(field, dim), "zero-product-" + std::to_string(dim));
}

LieAlgebra commutator_lie(const AssocAlgebra& algebra) {
    const StructureConstants& a = algebra.constants();
    const Field& f = a.field();
    const std::size_t n = a.dim();
    StructureConstants sc(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sc.set(i, j, k, Element(f, f.sub(a.code(i, j, k), a.code(j, i, k))));
    return lie_validate(std::move(sc), "L(" + algebra.label() + ")");
}

BdCase bd_case(const Element& beta, const Element& delta) {
    if (beta.is_zero()) return delta.is_zero() ? BdCase::IV : BdCase::II;
    return delta == delta.field().one() ? BdCase::III : BdCase::uncovered;
}

std::vector<LieAlgebra> builtin_dim3(const Field& field) {
    require_char2(field);
    std::vector<LieAlgebra> out;
    const auto elems = field.elements();
    for (const Element& a : elems)
        for (const Element& b : elems) out.push_back(make_family_ab(field, {a, b, std::nullopt}));
    for (const Element& b : elems)
        for (const Element& d : elems) out.push_back(make_family_bd(field, {std::nullopt, b, d}));
    return out;
}

}  // namespace ybe
