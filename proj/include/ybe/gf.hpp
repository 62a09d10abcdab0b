#pragma once

// Finite fields GF(p^m) with q = p^m <= 65536.
//
// A field element is encoded as an integer in [0, q) whose base-p digits are
// the coefficients of the residue polynomial (lowest degree first). For p = 2
// the encoding is the bit pattern of the polynomial. Fields are interned: two
// calls to Field::make with the same (p, m, modulus) return the same handle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/error.hpp"

namespace ybe {

using Code = std::uint16_t;

class Element;

namespace detail {
struct FieldData;
}

class Field {
public:
    /// Validates and interns GF(p^m). The modulus is required (and must be
    /// monic, of degree m and irreducible) when m > 1; it is ignored for m = 1.
    static Field make(std::uint32_t p, std::uint32_t m = 1, std::optional<std::uint64_t> modulus = std::nullopt);

    /// Handle for an already interned field id.
    static Field from_id(std::uint16_t id);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    /// Present iff degree() > 1.
    std::optional<std::uint64_t> modulus() const noexcept;
    std::uint32_t order() const noexcept;
    std::uint16_t id() const noexcept;

    Element zero() const;
    Element one() const;
    Element element(std::uint64_t code) const;
    /// All q elements in ascending encoding order.
    std::vector<Element> elements() const;

    // Raw arithmetic on encodings. Callers guarantee the codes are < q.
    Code add(Code a, Code b) const noexcept;
    Code sub(Code a, Code b) const noexcept;
    Code mul(Code a, Code b) const noexcept;
    Code neg(Code a) const noexcept;
    Code inv(Code a) const;
    Code pow(Code a, std::uint64_t e) const noexcept;

    /// Row-major q*q product table, or nullptr when q > 256.
    const Code* mul_table() const noexcept;

    /// `gf(2)`, `gf(2^2;0b111)`; odd characteristic moduli print in decimal.
    std::string literal() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }

private:
    explicit Field(const detail::FieldData* d) noexcept : d_(d) {}
    const detail::FieldData* d_;
};

/// A field element: a compact (field id, encoding) value.
class Element {
public:
    Element(const Field& field, Code code);

    Field field() const { return Field::from_id(field_id_); }
    std::uint16_t field_id() const noexcept { return field_id_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;
    Element operator-() const;
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    /// Throws DivisionByZero for zero.
    Element inv() const;
    Element pow(std::uint64_t e) const;

    /// Lowercase hex of the encoding, e.g. `0x3`.
    std::string literal() const;

    friend bool operator==(const Element& a, const Element& b) noexcept {
        return a.field_id_ == b.field_id_ && a.code_ == b.code_;
    }

private:
    Element(std::uint16_t fid, Code code, int) noexcept : field_id_(fid), code_(code) {}
    void check_same(const Element& o) const;

    std::uint16_t field_id_;
    Code code_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Trial division of `modulus` (base-p encoded, degree m) by every monic
/// polynomial of degree 1..m/2.
bool is_irreducible(std::uint32_t p, std::uint64_t modulus);

}  // namespace ybe
