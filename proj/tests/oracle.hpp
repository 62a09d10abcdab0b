#pragma once

// Slow reference computations used to cross-check the library. None of these
// share code paths with the implementations they check beyond raw field
// arithmetic, which has its own oracle here.

#include <cstdint>
#include <random>
#include <vector>

#include "ybe/algebra.hpp"
#include "ybe/tensor.hpp"

namespace oracle {

using ybe::Code;
using ybe::Element;
using ybe::Field;
using ybe::Tensor2;
using ybe::Tensor3;

// Schoolbook product of base-p digit vectors reduced by long division.
inline std::uint64_t poly_mulmod(std::uint32_t p, std::uint32_t m, std::uint64_t modulus, std::uint64_t a,
                                 std::uint64_t b) {
    auto digits = [p](std::uint64_t v) {
        std::vector<std::int64_t> d;
        while (v) {
            d.push_back(static_cast<std::int64_t>(v % p));
            v /= p;
        }
        return d;
    };
    const auto da = digits(a), db = digits(b), dm = digits(modulus);
    std::vector<std::int64_t> prod(da.size() + db.size() + 1, 0);
    for (std::size_t i = 0; i < da.size(); ++i)
        for (std::size_t j = 0; j < db.size(); ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    if (m > 1) {
        for (std::size_t deg = prod.size(); deg-- > m;) {
            const std::int64_t lead = prod[deg];
            if (!lead) continue;
            for (std::size_t k = 0; k <= m; ++k) {
                auto& slot = prod[deg - m + k];
                slot = ((slot - lead * dm[k]) % static_cast<std::int64_t>(p) + p) % p;
            }
        }
    }
    std::uint64_t out = 0;
    for (std::size_t i = std::min<std::size_t>(prod.size(), m); i-- > 0;) out = out * p + static_cast<std::uint64_t>(prod[i]);
    return out;
}

// C(r) straight from the bracket expansion
//   [r12,r13] = Σ k_ij k_st [e_i,e_s] ⊗ e_j ⊗ e_t
//   [r12,r23] = Σ k_ij k_st e_i ⊗ [e_j,e_s] ⊗ e_t
//   [r13,r23] = Σ k_ij k_st e_i ⊗ e_s ⊗ [e_j,e_t]
inline Tensor3 cybe(const ybe::LieAlgebra& lie, const Tensor2& r) {
    const Field& f = r.field();
    const std::size_t n = r.dim();
    const auto& c = lie.constants();
    std::vector<Element> acc(n * n * n, f.zero());
    auto at = [&](std::size_t a, std::size_t b, std::size_t d) -> Element& { return acc[(a * n + b) * n + d]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t) {
                    const Element w = r.at(i, j) * r.at(s, t);
                    for (std::size_t m = 0; m < n; ++m) {
                        at(m, j, t) += w * c.at(i, s, m);
                        at(i, m, t) += w * c.at(j, s, m);
                        at(i, s, m) += w * c.at(j, t, m);
                    }
                }
    Tensor3 out(f, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d) out.set(a, b, d, at(a, b, d));
    return out;
}

using Matrix = std::vector<std::vector<Element>>;

inline Matrix zeros(const Field& f, std::size_t n) { return Matrix(n, std::vector<Element>(n, f.zero())); }

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out = zeros(a[0][0].field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// R ∈ M_n ⊗ M_n on the matrix-unit basis (index a*n+b), realised as an
// operator on (F^n)^{⊗3} placed in tensor slots (x, y); QYBE checked as a
// product of n³×n³ matrices.
inline bool matrix_qybe(const Tensor2& r, std::size_t n) {
    const Field& f = r.field();
    const std::size_t big = n * n * n;
    auto embed = [&](int x, int y) {
        Matrix out = zeros(f, big);
        for (std::size_t u = 0; u < n * n; ++u)
            for (std::size_t v = 0; v < n * n; ++v) {
                const Element k = r.at(u, v);
                if (k.is_zero()) continue;
                const std::size_t ua = u / n, ub = u % n, va = v / n, vb = v % n;
                for (std::size_t col = 0; col < big; ++col) {
                    std::size_t d[3] = {col / (n * n), (col / n) % n, col % n};
                    if (d[x] != ub || d[y] != vb) continue;
                    d[x] = ua;
                    d[y] = va;
                    out[(d[0] * n + d[1]) * n + d[2]][col] += k;
                }
            }
        return out;
    };
    const Matrix r12 = embed(0, 1), r13 = embed(0, 2), r23 = embed(1, 2);
    return matmul(matmul(r12, r13), r23) == matmul(matmul(r23, r13), r12);
}

inline Tensor2 random_tensor(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    Tensor2 out(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, f.element(pick(rng)));
    return out;
}

// Every tensor, decoded by plain positional arithmetic.
inline std::vector<Tensor2> all_tensors(const Field& f, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= f.order();
    std::vector<Tensor2> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Code> codes(n * n);
        std::uint64_t v = idx;
        for (std::size_t pos = n * n; pos-- > 0;) {
            codes[pos] = static_cast<Code>(v % f.order());
            v /= f.order();
        }
        out.push_back(Tensor2::from_codes(f, n, codes));
    }
    return out;
}

inline Field gf2() { return Field::make(2); }
inline Field gf4() { return Field::make(2, 2, 0b111); }
inline Field gf8() { return Field::make(2, 3, 0b1011); }
inline Field gf16() { return Field::make(2, 4, 0b10011); }
inline Field gf3() { return Field::make(3); }

}  // namespace oracle
