#include "ybe/ybe.hpp"

#include <map>
#include <string>
#include <utility>

namespace ybe {

namespace {

void require_compatible(const LieAlgebra& lie, const Tensor2& r) {
    if (!(lie.field() == r.field())) throw Error(Errc::FieldMismatch, "algebra and tensor over different fields");
    if (lie.dim() != r.dim())
        throw Error(Errc::DimensionMismatch, "algebra dimension " + std::to_string(lie.dim()) + " vs tensor dimension " +
                                                 std::to_string(r.dim()));
}

void require_dim3_char2(const Tensor2& r) {
    if (r.dim() != 3) throw Error(Errc::DimensionMismatch, "dimension 3 required");
    if (r.field().characteristic() != 2) throw Error(Errc::WrongCharacteristic, "characteristic 2 required");
}

void require_in_field(const Field& f, const Element& e) {
    if (e.field_id() != f.id()) throw Error(Errc::FieldMismatch, "parameter not in " + f.literal());
}

}  // namespace

Tensor3 bracket_12_13(const LieAlgebra& lie, const Tensor2& r) {
    require_compatible(lie, r);
    const Field& f = r.field();
    const std::size_t n = r.dim();
    Tensor3 out(f, n);
    for (const StructureEntry& e : lie.entries())
        for (std::size_t a = 0; a < n; ++a) {
            const Code ka = f.mul(e.value, r.code(e.i, a));
            if (ka == 0) continue;
            for (std::size_t b = 0; b < n; ++b) out.accumulate(e.k, a, b, f.mul(ka, r.code(e.j, b)));
        }
    return out;
}

Tensor3 bracket_12_23(const LieAlgebra& lie, const Tensor2& r) {
    require_compatible(lie, r);
    const Field& f = r.field();
    const std::size_t n = r.dim();
    Tensor3 out(f, n);
    for (const StructureEntry& e : lie.entries())
        for (std::size_t a = 0; a < n; ++a) {
            const Code ka = f.mul(e.value, r.code(a, e.i));
            if (ka == 0) continue;
            for (std::size_t b = 0; b < n; ++b) out.accumulate(a, e.k, b, f.mul(ka, r.code(e.j, b)));
        }
    return out;
}

Tensor3 bracket_13_23(const LieAlgebra& lie, const Tensor2& r) {
    require_compatible(lie, r);
    const Field& f = r.field();
    const std::size_t n = r.dim();
    Tensor3 out(f, n);
    for (const StructureEntry& e : lie.entries())
        for (std::size_t a = 0; a < n; ++a) {
            const Code ka = f.mul(e.value, r.code(a, e.i));
            if (ka == 0) continue;
            for (std::size_t b = 0; b < n; ++b) out.accumulate(a, b, e.k, f.mul(ka, r.code(b, e.j)));
        }
    return out;
}

CybeResidual cybe_residual(const LieAlgebra& lie, const Tensor2& r) {
    return {bracket_12_13(lie, r) + bracket_12_23(lie, r) + bracket_13_23(lie, r)};
}

QybeSides qybe_sides(const AssocAlgebra& algebra, const Tensor2& r) {
    if (!(algebra.field() == r.field())) throw Error(Errc::FieldMismatch, "algebra and tensor over different fields");
    if (algebra.dim() != r.dim()) throw Error(Errc::DimensionMismatch, "algebra and tensor dimensions differ");
    const Field& f = r.field();
    Tensor3 lhs(f, r.dim()), rhs(f, r.dim());
    const auto entries = algebra.entries();
    for (const StructureEntry& e1 : entries)
        for (const StructureEntry& e2 : entries) {
            const Code c12 = f.mul(e1.value, e2.value);
            // lhs: (e_s e_t) ⊗ (e_u e_m) ⊗ (e_v e_w) weighted by k_su k_tv k_mw
            const Code l12 = f.mul(c12, r.code(e1.i, e2.i));
            // rhs: (e_t e_s) ⊗ (e_m e_u) ⊗ (e_w e_v) weighted by k_su k_tv k_mw
            const Code r12 = f.mul(c12, r.code(e1.j, e2.j));
            if (l12 == 0 && r12 == 0) continue;
            for (const StructureEntry& e3 : entries) {
                if (l12 != 0) {
                    const Code term = f.mul(f.mul(l12, e3.value), f.mul(r.code(e1.j, e3.i), r.code(e2.j, e3.j)));
                    lhs.accumulate(e1.k, e2.k, e3.k, term);
                }
                if (r12 != 0) {
                    const Code term = f.mul(f.mul(r12, e3.value), f.mul(r.code(e1.i, e3.j), r.code(e2.i, e3.i)));
                    rhs.accumulate(e1.k, e2.k, e3.k, term);
                }
            }
        }
    return {std::move(lhs), std::move(rhs)};
}

bool is_strongly_symmetric(const Tensor2& r) {
    const Field& f = r.field();
    const std::size_t n = r.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m)
                    if (f.mul(r.code(i, j), r.code(l, m)) != f.mul(r.code(i, l), r.code(j, m))) return false;
    return true;
}

RankOneDecomposition strong_rank1_decompose(const Tensor2& r) {
    if (!is_strongly_symmetric(r)) return NotStronglySymmetric{};
    const std::size_t n = r.dim();
    for (std::size_t i0 = 0; i0 < n; ++i0) {
        if (r.code(i0, i0) == 0) continue;
        std::vector<Element> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(r.at(i0, i));
        return RankOne{i0, r.at(i0, i0).inv(), std::move(v)};
    }
    // a strongly symmetric tensor with zero diagonal has k_ij² = k_ii k_jj = 0
    return ZeroTensor{};
}

Tensor2 rank_one(const Element& c, std::span<const Element> v) {
    const Field f = c.field();
    Tensor2 out(f, v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out.set(i, j, c * v[i] * v[j]);
    return out;
}

bool is_alpha_beta_symmetric(const Tensor2& r, const Element& alpha, const Element& beta) {
    require_dim3_char2(r);
    const Field& f = r.field();
    require_in_field(f, alpha);
    require_in_field(f, beta);
    const Code x = r.code(0, 0), y = r.code(1, 1), z = r.code(2, 2);
    const Code p = r.code(0, 1), q = r.code(1, 0), s = r.code(0, 2), t = r.code(2, 0), u = r.code(1, 2), v = r.code(2, 1);
    if (p != q || s != t || u != v) return false;
    const Code a = alpha.code(), b = beta.code();
    Code acc = f.mul(a, f.mul(y, z));
    acc = f.add(acc, f.mul(b, f.mul(x, z)));
    acc = f.add(acc, f.mul(x, y));
    acc = f.add(acc, f.mul(b, f.mul(s, s)));
    acc = f.add(acc, f.mul(a, f.mul(u, u)));
    acc = f.add(acc, f.mul(p, p));
    return acc == 0;
}

bool classify_16(const Tensor2& r, const Element& beta, const Element& delta) {
    require_dim3_char2(r);
    const Field& f = r.field();
    require_in_field(f, beta);
    require_in_field(f, delta);
    const NamedCoeffs c = named_view(r);
    switch (bd_case(beta, delta)) {
    case BdCase::II: {
        if (c.s != c.t || c.u != c.v) return false;
        const Element d1 = delta + f.one();
        const Element zp = d1 * c.z * c.p;
        return zp == d1 * c.q * c.z && zp == d1 * c.u * c.s && d1 * c.u * c.q == d1 * c.u * c.p &&
               d1 * c.p * c.s == d1 * c.q * c.s;
    }
    case BdCase::III:
        return c.s == c.t && c.u == c.v && c.s * c.p == c.s * c.q && c.u * c.p == c.q * c.u && c.z * c.q == c.z * c.p &&
               c.s * c.s == c.x * c.z;
    case BdCase::IV:
        return c.s == c.t && c.v * c.s == c.p * c.z && c.u * c.s == c.q * c.z && c.q * c.v == c.p * c.u &&
               (c.p + c.q) * c.s == (c.u + c.v) * c.x;
    case BdCase::uncovered:
        break;
    }
    throw Error(Errc::CaseNotCovered, "no classification for beta=" + beta.literal() + ", delta=" + delta.literal());
}

// compiled kernel

CybeKernel::CybeKernel(const LieAlgebra& lie)
    : field_(lie.field()), dim_(lie.dim()), q_(lie.field().order()), mul_(lie.field().mul_table()) {
    const std::size_t n = dim_;
    if (n * n > 0xFFFF) throw Error(Errc::DimensionMismatch, "dimension too large for the compiled kernel");
    // output index -> (x, y) with x <= y -> coefficient
    std::vector<std::map<std::pair<std::uint32_t, std::uint32_t>, Code>> forms(n * n * n);
    auto add_term = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t x, std::size_t y, Code coef) {
        if (x > y) std::swap(x, y);
        Code& slot = forms[(a * n + b) * n + c][{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)}];
        slot = field_.add(slot, coef);
    };
    for (const StructureEntry& e : lie.entries())
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                add_term(e.k, a, b, e.i * n + a, e.j * n + b, e.value);  // [r12, r13]
                add_term(a, e.k, b, a * n + e.i, e.j * n + b, e.value);  // [r12, r23]
                add_term(a, b, e.k, a * n + e.i, b * n + e.j, e.value);  // [r13, r23]
            }
    offsets_.push_back(0);
    for (std::size_t o = 0; o < forms.size(); ++o) {
        std::size_t added = 0;
        for (const auto& [vars, coef] : forms[o]) {
            if (coef == 0) continue;
            terms_.push_back({static_cast<std::uint16_t>(vars.first), static_cast<std::uint16_t>(vars.second), coef});
            ++added;
        }
        if (added == 0) continue;
        outputs_.push_back(static_cast<std::uint32_t>(o));
        offsets_.push_back(static_cast<std::uint32_t>(terms_.size()));
    }
}

Code CybeKernel::evaluate(std::size_t eq, std::span<const Code> k) const noexcept {
    Code acc = 0;
    const std::uint32_t end = offsets_[eq + 1];
    if (mul_ != nullptr && field_.characteristic() == 2) {
        for (std::uint32_t t = offsets_[eq]; t < end; ++t) {
            const Term& term = terms_[t];
            const Code prod = mul_[std::size_t{k[term.x]} * q_ + k[term.y]];
            acc = static_cast<Code>(acc ^ (term.coef == 1 ? prod : mul_[std::size_t{term.coef} * q_ + prod]));
        }
        return acc;
    }
    for (std::uint32_t t = offsets_[eq]; t < end; ++t) {
        const Term& term = terms_[t];
        acc = field_.add(acc, field_.mul(term.coef, field_.mul(k[term.x], k[term.y])));
    }
    return acc;
}

bool CybeKernel::solves(std::span<const Code> k) const noexcept {
    for (std::size_t eq = 0; eq < outputs_.size(); ++eq)
        if (evaluate(eq, k) != 0) return false;
    return true;
}

Tensor3 CybeKernel::residual(std::span<const Code> k) const {
    if (k.size() != dim_ * dim_) throw Error(Errc::DimensionMismatch, "tensor size does not match kernel");
    Tensor3 out(field_, dim_);
    for (std::size_t eq = 0; eq < outputs_.size(); ++eq) {
        const std::uint32_t o = outputs_[eq];
        out.accumulate(o / (dim_ * dim_), (o / dim_) % dim_, o % dim_, evaluate(eq, k));
    }
    return out;
}

}  // namespace ybe
