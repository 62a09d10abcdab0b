#pragma once

// Structure-constant presentations of Lie and associative algebras.
//
// c[i][j][k] is the coefficient of e_k in e_i ∘ e_j. LieAlgebra and
// AssocAlgebra values can only be obtained through the validators, so holding
// one means the axioms were checked exhaustively over all index tuples.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybe/gf.hpp"

namespace ybe {

class StructureConstants {
public:
    StructureConstants(const Field& field, std::size_t dim);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    Element at(std::size_t i, std::size_t j, std::size_t k) const { return Element(field_, c_[index(i, j, k)]); }
    Code code(std::size_t i, std::size_t j, std::size_t k) const noexcept { return c_[(i * dim_ + j) * dim_ + k]; }
    void set(std::size_t i, std::size_t j, std::size_t k, const Element& value);

    std::span<const Code> codes() const noexcept { return c_; }

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) noexcept {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;

    Field field_;
    std::size_t dim_;
    std::vector<Code> c_;
};

/// One nonzero structure constant: e_i ∘ e_j contains value · e_k.
struct StructureEntry {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Code value;
};

class LieAlgebra {
public:
    const StructureConstants& constants() const noexcept { return sc_; }
    const Field& field() const noexcept { return sc_.field(); }
    std::size_t dim() const noexcept { return sc_.dim(); }
    const std::string& label() const noexcept { return label_; }
    /// Nonzero bracket constants in (i, j, k) order.
    std::span<const StructureEntry> entries() const noexcept { return entries_; }
    bool is_abelian() const noexcept { return entries_.empty(); }

private:
    LieAlgebra(StructureConstants sc, std::string label);
    friend LieAlgebra lie_validate(StructureConstants sc, std::string label);

    StructureConstants sc_;
    std::string label_;
    std::vector<StructureEntry> entries_;
};

class AssocAlgebra {
public:
    const StructureConstants& constants() const noexcept { return sc_; }
    const Field& field() const noexcept { return sc_.field(); }
    std::size_t dim() const noexcept { return sc_.dim(); }
    const std::string& label() const noexcept { return label_; }
    std::span<const StructureEntry> entries() const noexcept { return entries_; }

private:
    AssocAlgebra(StructureConstants sc, std::string label);
    friend AssocAlgebra assoc_validate(StructureConstants sc, std::string label);

    StructureConstants sc_;
    std::string label_;
    std::vector<StructureEntry> entries_;
};

/// Throws NotAlternating(i,k), NotAntisymmetric(i,j,k) or JacobiFailure(i,j,l,m)
/// carrying the first offending tuple.
LieAlgebra lie_validate(StructureConstants sc, std::string label = "custom");

/// Throws AssociativityFailure(i,j,l,m).
AssocAlgebra assoc_validate(StructureConstants sc, std::string label = "custom");

struct FamilyParams {
    std::optional<Element> alpha;
    std::optional<Element> beta;
    std::optional<Element> delta;
};

/// [e1,e2] = e3, [e2,e3] = α e1, [e3,e1] = β e2 (characteristic 2 only).
LieAlgebra make_family_ab(const Field& field, const FamilyParams& params);
/// [e1,e2] = 0, [e1,e3] = e1 + β e2, [e2,e3] = δ e2 (characteristic 2 only).
LieAlgebra make_family_bd(const Field& field, const FamilyParams& params);

enum class Dim2Kind { abelian, nonabelian };

/// nonabelian: [e1,e2] = e1.
LieAlgebra make_dim2(const Field& field, Dim2Kind kind);

LieAlgebra make_abelian(const Field& field, std::size_t dim);

/// M_n(F) on the matrix units E_ab (basis index a*n + b): E_ab E_cd = δ_bc E_ad.
AssocAlgebra make_matrix_algebra(const Field& field, std::size_t size);

/// Zero product on an n-dimensional space.
AssocAlgebra make_zero_product(const Field& field, std::size_t dim);

/// L(A) with [x,y] = xy − yx.
LieAlgebra commutator_lie(const AssocAlgebra& algebra);

/// Parameter cases of the (β, δ) family that have a closed-form solution shape:
/// II is β=0, δ≠0; III is β≠0, δ=1; IV is β=δ=0.
enum class BdCase { II, III, IV, uncovered };
BdCase bd_case(const Element& beta, const Element& delta);

/// Every L(α,β) and every L(β,δ) over a characteristic-2 field, in parameter
/// encoding order (α or β major).
std::vector<LieAlgebra> builtin_dim3(const Field& field);

std::string family_ab_label(const Element& alpha, const Element& beta);
std::string family_bd_label(const Element& beta, const Element& delta);

}  // namespace ybe
