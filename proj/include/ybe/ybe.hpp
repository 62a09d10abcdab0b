#pragma once

// Classical and quantum Yang-Baxter residuals and the symmetry predicates
// that classify their solutions in low dimension.

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "ybe/algebra.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

/// [r12,r13][w][a][b] = Σ_{i,j} k[i][a] k[j][b] c[i][j][w]
Tensor3 bracket_12_13(const LieAlgebra& lie, const Tensor2& r);
/// [r12,r23][a][w][b] = Σ_{j,m} k[a][j] k[m][b] c[j][m][w]
Tensor3 bracket_12_23(const LieAlgebra& lie, const Tensor2& r);
/// [r13,r23][a][b][w] = Σ_{j,m} k[a][j] k[b][m] c[j][m][w]
Tensor3 bracket_13_23(const LieAlgebra& lie, const Tensor2& r);

struct CybeResidual {
    Tensor3 value;
    bool is_zero() const noexcept { return value.is_zero(); }
};

/// C(r) = [r12,r13] + [r12,r23] + [r13,r23]; r solves CYBE iff C(r) = 0.
CybeResidual cybe_residual(const LieAlgebra& lie, const Tensor2& r);

struct QybeSides {
    Tensor3 lhs;  // R12 R13 R23
    Tensor3 rhs;  // R23 R13 R12
    bool holds() const noexcept { return lhs == rhs; }
};

/// Both sides of the QYBE expanded through structure constants only, so no
/// unit element is needed.
QybeSides qybe_sides(const AssocAlgebra& algebra, const Tensor2& r);

/// k_ij k_lm = k_il k_jm for all index quadruples.
bool is_strongly_symmetric(const Tensor2& r);

struct ZeroTensor {
    friend bool operator==(ZeroTensor, ZeroTensor) = default;
};
struct NotStronglySymmetric {
    friend bool operator==(NotStronglySymmetric, NotStronglySymmetric) = default;
};
/// k[i][j] = c · v[i] · v[j] with v = row `pivot` and c = k[pivot][pivot]⁻¹.
struct RankOne {
    std::size_t pivot;
    Element c;
    std::vector<Element> v;
};
using RankOneDecomposition = std::variant<ZeroTensor, RankOne, NotStronglySymmetric>;

RankOneDecomposition strong_rank1_decompose(const Tensor2& r);

/// c · (v ⊗ v).
Tensor2 rank_one(const Element& c, std::span<const Element> v);

/// p=q, s=t, u=v and αyz + βxz + xy + βs² + αu² + p² = 0 (dimension 3, char 2).
bool is_alpha_beta_symmetric(const Tensor2& r, const Element& alpha, const Element& beta);

/// Case-wise solution shape for the (β, δ) family; throws CaseNotCovered when
/// (β, δ) is outside cases II, III and IV.
bool classify_16(const Tensor2& r, const Element& beta, const Element& delta);

/// The CYBE residual of one algebra compiled into a quadratic form per output
/// coefficient over the flattened tensor entries. `solves` stops at the first
/// nonzero coefficient and never allocates.
class CybeKernel {
public:
    explicit CybeKernel(const LieAlgebra& lie);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t equation_count() const noexcept { return outputs_.size(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool solves(std::span<const Code> k) const noexcept;
    Tensor3 residual(std::span<const Code> k) const;

private:
    struct Term {
        std::uint16_t x;
        std::uint16_t y;
        Code coef;
    };

    Code evaluate(std::size_t eq, std::span<const Code> k) const noexcept;

    Field field_;
    std::size_t dim_;
    std::uint32_t q_;
    const Code* mul_;
    std::vector<Term> terms_;
    std::vector<std::uint32_t> offsets_;  // equation e owns terms_[offsets_[e], offsets_[e+1])
    std::vector<std::uint32_t> outputs_;  // flat Tensor3 index of equation e
};

}  // namespace ybe
