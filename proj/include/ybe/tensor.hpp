#pragma once

// Dense elements of V⊗V and V⊗V⊗V over a finite field, stored row-major so
// that the coefficient order [i][j][l] reads as e_i⊗e_j⊗e_l.

#include <cstddef>
#include <span>
#include <vector>

#include "ybe/gf.hpp"

namespace ybe {

class Tensor2 {
public:
    Tensor2(const Field& field, std::size_t dim);

    /// Validates the length (dim²) and that every code is < q.
    static Tensor2 from_codes(const Field& field, std::size_t dim, std::vector<Code> codes);
    /// e_i ⊗ e_j (0-based indices).
    static Tensor2 basis(const Field& field, std::size_t dim, std::size_t i, std::size_t j);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    Element at(std::size_t i, std::size_t j) const { return Element(field_, k_[index(i, j)]); }
    Code code(std::size_t i, std::size_t j) const noexcept { return k_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, const Element& value);

    std::span<const Code> codes() const noexcept { return k_; }
    /// Direct write access for enumeration loops; the caller keeps codes < q.
    std::span<Code> mutable_codes() noexcept { return k_; }

    bool is_zero() const noexcept;
    bool is_symmetric() const noexcept;

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 scaled(const Element& c) const;

    friend bool operator==(const Tensor2& a, const Tensor2& b) noexcept {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.k_ == b.k_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const;
    void check_compatible(const Tensor2& o) const;

    Field field_;
    std::size_t dim_;
    std::vector<Code> k_;
};

class Tensor3 {
public:
    Tensor3(const Field& field, std::size_t dim);

    static Tensor3 basis(const Field& field, std::size_t dim, std::size_t i, std::size_t j, std::size_t l);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    Element at(std::size_t i, std::size_t j, std::size_t l) const { return Element(field_, t_[index(i, j, l)]); }
    Code code(std::size_t i, std::size_t j, std::size_t l) const noexcept { return t_[(i * dim_ + j) * dim_ + l]; }
    void set(std::size_t i, std::size_t j, std::size_t l, const Element& value);
    /// Adds `value` to the coefficient in place.
    void accumulate(std::size_t i, std::size_t j, std::size_t l, Code value) noexcept;

    std::span<const Code> codes() const noexcept { return t_; }

    bool is_zero() const noexcept;
    /// Number of nonzero coefficients.
    std::size_t support_size() const noexcept;

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 scaled(const Element& c) const;

    friend bool operator==(const Tensor3& a, const Tensor3& b) noexcept {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.t_ == b.t_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t l) const;
    void check_compatible(const Tensor3& o) const;

    Field field_;
    std::size_t dim_;
    std::vector<Code> t_;
};

/// τ: result[i][j] = r[j][i].
Tensor2 flip(const Tensor2& r);

/// (1 − τ)(w) = w − τ(w).
Tensor2 one_minus_tau(const Tensor2& w);

/// Membership in Im(1 − τ): symmetric with zero diagonal in characteristic 2,
/// antisymmetric with zero diagonal otherwise.
bool in_image_one_minus_tau(const Tensor2& r);

/// ξ: result[i][j][l] = T[j][l][i]; ξ³ = id.
Tensor3 cycle(const Tensor3& t);

/// (1 + ξ + ξ²)(T).
Tensor3 cyclic_sum(const Tensor3& t);

/// Named coefficients of a 3-dimensional Tensor2 (1-based subscripts):
/// x=k11 y=k22 z=k33 p=k12 q=k21 s=k13 t=k31 u=k23 v=k32.
struct NamedCoeffs {
    Element x, y, z, p, q, s, t, u, v;

    friend bool operator==(const NamedCoeffs&, const NamedCoeffs&) = default;
};

NamedCoeffs named_view(const Tensor2& r);
Tensor2 named_pack(const NamedCoeffs& nc);

/// Change of basis e_i = Σ_s e'_s q[s][i]; the matrix must be invertible.
class BasisChange {
public:
    BasisChange(const Field& field, std::size_t dim, std::vector<Code> q_row_major);

    static BasisChange identity(const Field& field, std::size_t dim);
    /// Permutation sending e_i to e'_{perm[i]}.
    static BasisChange permutation(const Field& field, std::span<const std::size_t> perm);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    Element at(std::size_t s, std::size_t i) const { return Element(field_, q_[s * dim_ + i]); }
    Code code(std::size_t s, std::size_t i) const noexcept { return q_[s * dim_ + i]; }

    /// The change equivalent to applying *this and then `next`.
    BasisChange then(const BasisChange& next) const;

private:
    Field field_;
    std::size_t dim_;
    std::vector<Code> q_;
};

/// Determinant of a square row-major matrix by Gaussian elimination.
Element determinant(const Field& field, std::size_t dim, std::span<const Code> row_major);

/// result[s][t] = Σ_{i,j} k[i][j] q[s][i] q[t][j].
Tensor2 basis_change(const Tensor2& r, const BasisChange& change);

}  // namespace ybe
