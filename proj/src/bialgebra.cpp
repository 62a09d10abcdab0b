#include "ybe/bialgebra.hpp"

#include <algorithm>
#include <string>

#include "ybe/ybe.hpp"

namespace ybe {

namespace {

void require_basis(const LieAlgebra& lie, std::size_t x) {
    if (x >= lie.dim()) throw Error(Errc::DimensionMismatch, "basis index " + std::to_string(x) + " out of range");
}

void require_compatible(const LieAlgebra& lie, const Field& f, std::size_t dim) {
    if (!(lie.field() == f)) throw Error(Errc::FieldMismatch, "algebra and tensor over different fields");
    if (lie.dim() != dim) throw Error(Errc::DimensionMismatch, "algebra and tensor dimensions differ");
}

}  // namespace

Tensor2 adjoint_act2(const LieAlgebra& lie, std::size_t x, const Tensor2& r) {
    require_compatible(lie, r.field(), r.dim());
    require_basis(lie, x);
    const Field& f = r.field();
    const std::size_t n = r.dim();
    Tensor2 out(f, n);
    auto dst = out.mutable_codes();
    for (const StructureEntry& e : lie.entries()) {
        if (e.i != x) continue;
        // [e_x, e_j] contains value·e_k: move slot index j -> k in either factor
        for (std::size_t b = 0; b < n; ++b) {
            dst[e.k * n + b] = f.add(dst[e.k * n + b], f.mul(e.value, r.code(e.j, b)));
            dst[b * n + e.k] = f.add(dst[b * n + e.k], f.mul(e.value, r.code(b, e.j)));
        }
    }
    return out;
}

Tensor3 adjoint_act3(const LieAlgebra& lie, std::size_t x, const Tensor3& t, ActionReading reading) {
    require_compatible(lie, t.field(), t.dim());
    require_basis(lie, x);
    const Field& f = t.field();
    const std::size_t n = t.dim();
    Tensor3 out(f, n);
    std::vector<StructureEntry> ad;
    for (const StructureEntry& e : lie.entries())
        if (e.i == x) ad.push_back(e);

    if (reading == ActionReading::diagonal) {
        for (const StructureEntry& e : ad)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    out.accumulate(e.k, a, b, f.mul(e.value, t.code(e.j, a, b)));
                    out.accumulate(a, e.k, b, f.mul(e.value, t.code(a, e.j, b)));
                    out.accumulate(a, b, e.k, f.mul(e.value, t.code(a, b, e.j)));
                }
        return out;
    }
    for (const StructureEntry& e1 : ad)
        for (const StructureEntry& e2 : ad)
            for (const StructureEntry& e3 : ad) {
                const Code c = f.mul(f.mul(e1.value, e2.value), e3.value);
                out.accumulate(e1.k, e2.k, e3.k, f.mul(c, t.code(e1.j, e2.j, e3.j)));
            }
    return out;
}

bool CoJacobiDefect::is_zero() const noexcept {
    return std::all_of(per_basis.begin(), per_basis.end(), [](const Tensor3& t) { return t.is_zero(); });
}

CoJacobiDefect cojacobi_defect(const LieAlgebra& lie, const Tensor2& r) {
    require_compatible(lie, r.field(), r.dim());
    const Field& f = r.field();
    const std::size_t n = r.dim();
    std::vector<Tensor2> delta;
    delta.reserve(n);
    for (std::size_t b = 0; b < n; ++b) delta.push_back(adjoint_act2(lie, b, r));

    CoJacobiDefect out;
    out.per_basis.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        // (1 ⊗ Δ)Δ(e_x): apply Δ to the second factor of Δ(e_x)
        const Tensor2& dx = delta[x];
        Tensor3 iterated(f, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Code w = dx.code(a, b);
                if (w == 0) continue;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d) iterated.accumulate(a, c, d, f.mul(w, delta[b].code(c, d)));
            }
        out.per_basis.push_back(cyclic_sum(iterated));
    }
    return out;
}

bool is_coboundary(const LieAlgebra& lie, const Tensor2& r) {
    require_compatible(lie, r.field(), r.dim());
    return in_image_one_minus_tau(r) && cojacobi_defect(lie, r).is_zero();
}

bool is_triangular(const LieAlgebra& lie, const Tensor2& r) {
    require_compatible(lie, r.field(), r.dim());
    return in_image_one_minus_tau(r) && cybe_residual(lie, r).is_zero();
}

bool cojacobi_identity_holds(const LieAlgebra& lie, const Tensor2& r, ActionReading reading) {
    const Tensor3 residual = cybe_residual(lie, r).value;
    const CoJacobiDefect defect = cojacobi_defect(lie, r);
    for (std::size_t x = 0; x < lie.dim(); ++x)
        if (!(adjoint_act3(lie, x, residual, reading) == defect.per_basis[x])) return false;
    return true;
}

}  // namespace ybe
