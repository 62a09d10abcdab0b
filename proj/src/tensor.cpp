#include "ybe/tensor.hpp"

#include <algorithm>
#include <string>

namespace ybe {

namespace {

void require_dim(std::size_t a, std::size_t b) {
    if (a != b) throw Error(Errc::DimensionMismatch, "dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

void require_field(const Field& a, const Element& e) {
    if (a.id() != e.field_id()) throw Error(Errc::FieldMismatch, "element does not belong to " + a.literal());
}

}  // namespace

// Tensor2

Tensor2::Tensor2(const Field& field, std::size_t dim) : field_(field), dim_(dim), k_(dim * dim, 0) {
    if (dim == 0) throw Error(Errc::DimensionMismatch, "dimension must be at least 1");
}

Tensor2 Tensor2::from_codes(const Field& field, std::size_t dim, std::vector<Code> codes) {
    Tensor2 out(field, dim);
    if (codes.size() != dim * dim)
        throw Error(Errc::DimensionMismatch, std::to_string(codes.size()) + " coefficients for dimension " + std::to_string(dim));
    for (Code c : codes)
        if (c >= field.order()) throw Error(Errc::InvalidArgument, "coefficient out of range for " + field.literal());
    out.k_ = std::move(codes);
    return out;
}

Tensor2 Tensor2::basis(const Field& field, std::size_t dim, std::size_t i, std::size_t j) {
    Tensor2 out(field, dim);
    out.set(i, j, field.one());
    return out;
}

std::size_t Tensor2::index(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw Error(Errc::DimensionMismatch, "index out of range");
    return i * dim_ + j;
}

void Tensor2::set(std::size_t i, std::size_t j, const Element& value) {
    require_field(field_, value);
    k_[index(i, j)] = value.code();
}

bool Tensor2::is_zero() const noexcept {
    return std::all_of(k_.begin(), k_.end(), [](Code c) { return c == 0; });
}

bool Tensor2::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (k_[i * dim_ + j] != k_[j * dim_ + i]) return false;
    return true;
}

void Tensor2::check_compatible(const Tensor2& o) const {
    if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "tensors over different fields");
    require_dim(dim_, o.dim_);
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    check_compatible(o);
    Tensor2 out(*this);
    for (std::size_t i = 0; i < k_.size(); ++i) out.k_[i] = field_.add(k_[i], o.k_[i]);
    return out;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    check_compatible(o);
    Tensor2 out(*this);
    for (std::size_t i = 0; i < k_.size(); ++i) out.k_[i] = field_.sub(k_[i], o.k_[i]);
    return out;
}

Tensor2 Tensor2::scaled(const Element& c) const {
    require_field(field_, c);
    Tensor2 out(*this);
    for (Code& v : out.k_) v = field_.mul(c.code(), v);
    return out;
}

// Tensor3

Tensor3::Tensor3(const Field& field, std::size_t dim) : field_(field), dim_(dim), t_(dim * dim * dim, 0) {
    if (dim == 0) throw Error(Errc::DimensionMismatch, "dimension must be at least 1");
}

Tensor3 Tensor3::basis(const Field& field, std::size_t dim, std::size_t i, std::size_t j, std::size_t l) {
    Tensor3 out(field, dim);
    out.set(i, j, l, field.one());
    return out;
}

std::size_t Tensor3::index(std::size_t i, std::size_t j, std::size_t l) const {
    if (i >= dim_ || j >= dim_ || l >= dim_) throw Error(Errc::DimensionMismatch, "index out of range");
    return (i * dim_ + j) * dim_ + l;
}

void Tensor3::set(std::size_t i, std::size_t j, std::size_t l, const Element& value) {
    require_field(field_, value);
    t_[index(i, j, l)] = value.code();
}

void Tensor3::accumulate(std::size_t i, std::size_t j, std::size_t l, Code value) noexcept {
    Code& slot = t_[(i * dim_ + j) * dim_ + l];
    slot = field_.add(slot, value);
}

bool Tensor3::is_zero() const noexcept {
    return std::all_of(t_.begin(), t_.end(), [](Code c) { return c == 0; });
}

std::size_t Tensor3::support_size() const noexcept {
    return static_cast<std::size_t>(std::count_if(t_.begin(), t_.end(), [](Code c) { return c != 0; }));
}

void Tensor3::check_compatible(const Tensor3& o) const {
    if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "tensors over different fields");
    require_dim(dim_, o.dim_);
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    check_compatible(o);
    Tensor3 out(*this);
    for (std::size_t i = 0; i < t_.size(); ++i) out.t_[i] = field_.add(t_[i], o.t_[i]);
    return out;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    check_compatible(o);
    Tensor3 out(*this);
    for (std::size_t i = 0; i < t_.size(); ++i) out.t_[i] = field_.sub(t_[i], o.t_[i]);
    return out;
}

Tensor3 Tensor3::scaled(const Element& c) const {
    require_field(field_, c);
    Tensor3 out(*this);
    for (Code& v : out.t_) v = field_.mul(c.code(), v);
    return out;
}

// permutations

Tensor2 flip(const Tensor2& r) {
    const std::size_t n = r.dim();
    Tensor2 out(r.field(), n);
    auto dst = out.mutable_codes();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dst[i * n + j] = r.code(j, i);
    return out;
}

Tensor2 one_minus_tau(const Tensor2& w) { return w - flip(w); }

bool in_image_one_minus_tau(const Tensor2& r) {
    const Field& f = r.field();
    const std::size_t n = r.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (r.code(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (r.code(i, j) != f.neg(r.code(j, i))) return false;
    }
    return true;
}

Tensor3 cycle(const Tensor3& t) {
    const std::size_t n = t.dim();
    Tensor3 out(t.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) out.accumulate(i, j, l, t.code(j, l, i));
    return out;
}

Tensor3 cyclic_sum(const Tensor3& t) {
    const Tensor3 once = cycle(t);
    return t + once + cycle(once);
}

// named coefficients

NamedCoeffs named_view(const Tensor2& r) {
    if (r.dim() != 3) throw Error(Errc::DimensionMismatch, "named coefficients need dimension 3");
    return NamedCoeffs{r.at(0, 0), r.at(1, 1), r.at(2, 2), r.at(0, 1), r.at(1, 0),
                       r.at(0, 2), r.at(2, 0), r.at(1, 2), r.at(2, 1)};
}

Tensor2 named_pack(const NamedCoeffs& nc) {
    Tensor2 out(nc.x.field(), 3);
    out.set(0, 0, nc.x);
    out.set(1, 1, nc.y);
    out.set(2, 2, nc.z);
    out.set(0, 1, nc.p);
    out.set(1, 0, nc.q);
    out.set(0, 2, nc.s);
    out.set(2, 0, nc.t);
    out.set(1, 2, nc.u);
    out.set(2, 1, nc.v);
    return out;
}

// basis change

Element determinant(const Field& f, std::size_t n, std::span<const Code> row_major) {
    if (row_major.size() != n * n) throw Error(Errc::DimensionMismatch, "matrix is not square");
    std::vector<Code> a(row_major.begin(), row_major.end());
    Code det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            det = f.neg(det);
        }
        const Code piv = a[col * n + col];
        det = f.mul(det, piv);
        const Code piv_inv = f.inv(piv);
        for (std::size_t row = col + 1; row < n; ++row) {
            const Code factor = f.mul(a[row * n + col], piv_inv);
            if (factor == 0) continue;
            for (std::size_t c = col; c < n; ++c)
                a[row * n + c] = f.sub(a[row * n + c], f.mul(factor, a[col * n + c]));
        }
    }
    return Element(f, det);
}

BasisChange::BasisChange(const Field& field, std::size_t dim, std::vector<Code> q_row_major)
    : field_(field), dim_(dim), q_(std::move(q_row_major)) {
    if (q_.size() != dim * dim) throw Error(Errc::DimensionMismatch, "basis change matrix has wrong size");
    for (Code c : q_)
        if (c >= field.order()) throw Error(Errc::InvalidArgument, "coefficient out of range for " + field.literal());
    if (determinant(field_, dim_, q_).is_zero()) throw Error(Errc::SingularMatrix, "basis change is not invertible");
}

BasisChange BasisChange::identity(const Field& field, std::size_t dim) {
    std::vector<Code> q(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) q[i * dim + i] = 1;
    return BasisChange(field, dim, std::move(q));
}

BasisChange BasisChange::permutation(const Field& field, std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    std::vector<Code> q(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n) throw Error(Errc::InvalidArgument, "not a permutation");
        q[perm[i] * n + i] = 1;
    }
    return BasisChange(field, n, std::move(q));
}

BasisChange BasisChange::then(const BasisChange& next) const {
    if (!(field_ == next.field_)) throw Error(Errc::FieldMismatch, "basis changes over different fields");
    require_dim(dim_, next.dim_);
    const std::size_t n = dim_;
    std::vector<Code> out(n * n, 0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i < n; ++i) {
            Code acc = 0;
            for (std::size_t m = 0; m < n; ++m) acc = field_.add(acc, field_.mul(next.q_[s * n + m], q_[m * n + i]));
            out[s * n + i] = acc;
        }
    return BasisChange(field_, n, std::move(out));
}

Tensor2 basis_change(const Tensor2& r, const BasisChange& change) {
    if (!(r.field() == change.field())) throw Error(Errc::FieldMismatch, "tensor and basis change over different fields");
    require_dim(r.dim(), change.dim());
    const Field& f = r.field();
    const std::size_t n = r.dim();
    Tensor2 out(f, n);
    auto dst = out.mutable_codes();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            Code acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const Code qsi = change.code(s, i);
                if (qsi == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    acc = f.add(acc, f.mul(f.mul(r.code(i, j), qsi), change.code(t, j)));
            }
            dst[s * n + t] = acc;
        }
    return out;
}

}  // namespace ybe
