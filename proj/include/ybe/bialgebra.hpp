#pragma once

// Coboundary comap Δ_r(x) = (ad_x ⊗ 1 + 1 ⊗ ad_x)(r), its co-Jacobi defect,
// and the coboundary / triangular Lie bialgebra predicates.

#include <cstddef>
#include <vector>

#include "ybe/algebra.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

/// How x acts on V⊗V⊗V. `diagonal` is ad_x⊗1⊗1 + 1⊗ad_x⊗1 + 1⊗1⊗ad_x;
/// `tensor_cube` is ad_x⊗ad_x⊗ad_x, kept for comparison runs.
enum class ActionReading { diagonal, tensor_cube };

/// x·r = Δ_r(e_x): result[a][b] = Σ_i c[x][i][a] k[i][b] + c[x][i][b] k[a][i].
Tensor2 adjoint_act2(const LieAlgebra& lie, std::size_t x, const Tensor2& r);

Tensor3 adjoint_act3(const LieAlgebra& lie, std::size_t x, const Tensor3& t,
                     ActionReading reading = ActionReading::diagonal);

struct CoJacobiDefect {
    std::vector<Tensor3> per_basis;  // (1+ξ+ξ²)(1⊗Δ)Δ(e_i) for each i

    bool is_zero() const noexcept;
};

CoJacobiDefect cojacobi_defect(const LieAlgebra& lie, const Tensor2& r);

/// r ∈ Im(1−τ) and the co-Jacobi defect vanishes on every basis vector.
bool is_coboundary(const LieAlgebra& lie, const Tensor2& r);

/// r ∈ Im(1−τ) and r solves CYBE.
bool is_triangular(const LieAlgebra& lie, const Tensor2& r);

/// x·C(r) == cojacobi_defect(r)[x] for every basis vector x under the given
/// reading of the action on V⊗V⊗V.
bool cojacobi_identity_holds(const LieAlgebra& lie, const Tensor2& r, ActionReading reading);

}  // namespace ybe
