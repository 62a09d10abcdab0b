#include "ybe/gf.hpp"

#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace ybe {

namespace detail {

struct FieldData {
    std::uint16_t id = 0;
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::uint64_t modulus = 0;  // 0 when m == 1
    std::uint32_t q = 2;
    std::vector<std::uint32_t> digit_mod;  // modulus coefficients, m + 1 entries (m > 1 only)
    // Tables exist only for q <= 256.
    std::vector<Code> add;
    std::vector<Code> mul;
    std::vector<Code> neg;
    std::vector<Code> inv;
};

}  // namespace detail

namespace {

using detail::FieldData;

constexpr std::size_t kMaxFields = 4096;
constexpr std::uint32_t kMaxOrder = 65536;
constexpr std::uint32_t kTableOrder = 256;

struct Registry {
    std::mutex mutex;
    std::vector<std::unique_ptr<FieldData>> owned;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, const FieldData*> index;
    std::array<std::atomic<const FieldData*>, kMaxFields> by_id{};
};

Registry& registry() {
    static Registry r;
    return r;
}

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

Poly decode(std::uint32_t p, std::uint64_t value) {
    Poly out;
    while (value != 0) {
        out.push_back(static_cast<std::uint32_t>(value % p));
        value /= p;
    }
    return out;
}

std::uint64_t encode(std::uint32_t p, const Poly& poly) {
    std::uint64_t out = 0;
    for (std::size_t i = poly.size(); i-- > 0;) out = out * p + poly[i];
    return out;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e != 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= base;
    return static_cast<std::uint32_t>(r);
}

Code raw_add(const FieldData& f, Code a, Code b) {
    if (f.p == 2) return static_cast<Code>(a ^ b);
    if (f.m == 1) return static_cast<Code>((std::uint32_t{a} + b) % f.p);
    std::uint32_t out = 0, scale = 1;
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < f.m; ++i) {
        out += ((x % f.p + y % f.p) % f.p) * scale;
        x /= f.p;
        y /= f.p;
        scale *= f.p;
    }
    return static_cast<Code>(out);
}

Code raw_neg(const FieldData& f, Code a) {
    if (f.p == 2) return a;
    if (f.m == 1) return static_cast<Code>((f.p - a % f.p) % f.p);
    std::uint32_t out = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < f.m; ++i) {
        out += ((f.p - x % f.p) % f.p) * scale;
        x /= f.p;
        scale *= f.p;
    }
    return static_cast<Code>(out);
}

Code raw_mul(const FieldData& f, Code a, Code b) {
    if (f.m == 1) return static_cast<Code>(std::uint64_t{a} * b % f.p);
    if (f.p == 2) {
        // carry-less shift-reduce
        std::uint32_t x = a, y = b, r = 0;
        const std::uint32_t top = 1U << f.m;
        while (y != 0) {
            if (y & 1U) r ^= x;
            y >>= 1U;
            x <<= 1U;
            if (x & top) x ^= static_cast<std::uint32_t>(f.modulus);
        }
        return static_cast<Code>(r);
    }
    const Poly pa = decode(f.p, a), pb = decode(f.p, b);
    if (pa.empty() || pb.empty()) return 0;
    Poly prod(pa.size() + pb.size() - 1, 0);
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % f.p);
    return static_cast<Code>(encode(f.p, poly_rem(prod, f.digit_mod, f.p)));
}

Code raw_pow(const FieldData& f, Code a, std::uint64_t e) {
    Code result = 1, base = a;
    while (e != 0) {
        if (e & 1U) result = raw_mul(f, result, base);
        base = raw_mul(f, base, base);
        e >>= 1U;
    }
    return result;
}

const FieldData& data_of(std::uint16_t id) {
    const FieldData* d = id < kMaxFields ? registry().by_id[id].load(std::memory_order_acquire) : nullptr;
    if (d == nullptr) throw Error(Errc::InvalidArgument, "unknown field id " + std::to_string(id));
    return *d;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, std::uint64_t modulus) {
    const Poly f = decode(p, modulus);
    if (f.size() < 2) return false;
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        const std::uint32_t base = ipow(p, d);
        // monic divisors of degree d: base + low, low in [0, p^d)
        for (std::uint32_t low = 0; low < base; ++low) {
            Poly g = decode(p, low);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::uint64_t> modulus) {
    if (!is_prime(p))
        throw Error(Errc::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw Error(Errc::DegreeMismatch, "degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(Errc::FieldTooLarge, "field order exceeds 65536");
    }
    std::uint64_t mod = 0;
    Poly digits;
    if (m > 1) {
        if (!modulus) throw Error(Errc::DegreeMismatch, "a modulus of degree " + std::to_string(m) + " is required");
        mod = *modulus;
        digits = decode(p, mod);
        if (digits.size() != m + 1)
            throw Error(Errc::DegreeMismatch, "modulus degree " + std::to_string(digits.empty() ? 0 : digits.size() - 1) +
                                                  " does not match " + std::to_string(m));
        if (digits.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
        if (!is_irreducible(p, mod)) throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    }

    Registry& reg = registry();
    std::lock_guard lock(reg.mutex);
    const auto key = std::make_tuple(p, m, mod);
    if (auto it = reg.index.find(key); it != reg.index.end()) return Field(it->second);
    if (reg.owned.size() >= kMaxFields) throw Error(Errc::InvalidArgument, "too many distinct fields");

    auto d = std::make_unique<FieldData>();
    d->id = static_cast<std::uint16_t>(reg.owned.size());
    d->p = p;
    d->m = m;
    d->modulus = mod;
    d->q = static_cast<std::uint32_t>(q);
    d->digit_mod = std::move(digits);
    if (d->q <= kTableOrder) {
        const std::uint32_t n = d->q;
        d->add.resize(n * n);
        d->mul.resize(n * n);
        d->neg.resize(n);
        d->inv.resize(n);
        for (std::uint32_t a = 0; a < n; ++a) {
            d->neg[a] = raw_neg(*d, static_cast<Code>(a));
            d->inv[a] = a == 0 ? 0 : raw_pow(*d, static_cast<Code>(a), n - 2);
            for (std::uint32_t b = 0; b < n; ++b) {
                d->add[a * n + b] = raw_add(*d, static_cast<Code>(a), static_cast<Code>(b));
                d->mul[a * n + b] = raw_mul(*d, static_cast<Code>(a), static_cast<Code>(b));
            }
        }
    }
    const FieldData* raw = d.get();
    reg.owned.push_back(std::move(d));
    reg.index.emplace(key, raw);
    reg.by_id[raw->id].store(raw, std::memory_order_release);
    return Field(raw);
}

Field Field::from_id(std::uint16_t id) { return Field(&data_of(id)); }

std::uint32_t Field::characteristic() const noexcept { return d_->p; }
std::uint32_t Field::degree() const noexcept { return d_->m; }
std::optional<std::uint64_t> Field::modulus() const noexcept {
    if (d_->m == 1) return std::nullopt;
    return d_->modulus;
}
std::uint32_t Field::order() const noexcept { return d_->q; }
std::uint16_t Field::id() const noexcept { return d_->id; }

Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }
Element Field::element(std::uint64_t code) const {
    if (code >= d_->q) throw Error(Errc::InvalidArgument, "encoding " + std::to_string(code) + " out of range for " + literal());
    return Element(*this, static_cast<Code>(code));
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(d_->q);
    for (std::uint32_t c = 0; c < d_->q; ++c) out.emplace_back(*this, static_cast<Code>(c));
    return out;
}

Code Field::add(Code a, Code b) const noexcept {
    if (d_->p == 2) return static_cast<Code>(a ^ b);
    if (!d_->add.empty()) return d_->add[std::size_t{a} * d_->q + b];
    return raw_add(*d_, a, b);
}

Code Field::neg(Code a) const noexcept {
    if (d_->p == 2) return a;
    if (!d_->neg.empty()) return d_->neg[a];
    return raw_neg(*d_, a);
}

Code Field::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

Code Field::mul(Code a, Code b) const noexcept {
    if (!d_->mul.empty()) return d_->mul[std::size_t{a} * d_->q + b];
    return raw_mul(*d_, a, b);
}

Code Field::inv(Code a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!d_->inv.empty()) return d_->inv[a];
    return raw_pow(*d_, a, d_->q - 2);
}

Code Field::pow(Code a, std::uint64_t e) const noexcept { return raw_pow(*d_, a, e); }

const Code* Field::mul_table() const noexcept { return d_->mul.empty() ? nullptr : d_->mul.data(); }

std::string Field::literal() const {
    if (d_->m == 1) return "gf(" + std::to_string(d_->p) + ")";
    std::string mod;
    if (d_->p == 2) {
        mod = "0b";
        for (std::uint32_t i = d_->m + 1; i-- > 0;) mod += ((d_->modulus >> i) & 1U) ? '1' : '0';
    } else {
        mod = std::to_string(d_->modulus);
    }
    return "gf(" + std::to_string(d_->p) + "^" + std::to_string(d_->m) + ";" + mod + ")";
}

Element::Element(const Field& field, Code code) : field_id_(field.id()), code_(code) {
    if (code >= field.order())
        throw Error(Errc::InvalidArgument, "encoding " + std::to_string(code) + " out of range for " + field.literal());
}

void Element::check_same(const Element& o) const {
    if (field_id_ != o.field_id_) throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

Element Element::operator+(const Element& o) const {
    check_same(o);
    return Element(field_id_, field().add(code_, o.code_), 0);
}

Element Element::operator-(const Element& o) const {
    check_same(o);
    return Element(field_id_, field().sub(code_, o.code_), 0);
}

Element Element::operator*(const Element& o) const {
    check_same(o);
    return Element(field_id_, field().mul(code_, o.code_), 0);
}

Element Element::operator/(const Element& o) const {
    check_same(o);
    return *this * o.inv();
}

Element Element::operator-() const { return Element(field_id_, field().neg(code_), 0); }

Element Element::inv() const { return Element(field_id_, field().inv(code_), 0); }

Element Element::pow(std::uint64_t e) const { return Element(field_id_, field().pow(code_, e), 0); }

std::string Element::literal() const {
    static constexpr char kHex[] = "0123456789abcdef";
    if (code_ == 0) return "0x0";
    std::string digits;
    for (Code c = code_; c != 0; c = static_cast<Code>(c >> 4U)) digits.insert(digits.begin(), kHex[c & 0xFU]);
    return "0x" + digits;
}

}  // namespace ybe
