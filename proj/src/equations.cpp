#include "ybe/equations.hpp"

#include <algorithm>

namespace ybe {

namespace {

void require_char2(const Element& e) {
    if (e.field().characteristic() != 2) throw Error(Errc::WrongCharacteristic, "coefficient systems are stated for characteristic 2");
}

void require_same(const NamedCoeffs& nc, const Element& a, const Element& b) {
    if (a.field_id() != nc.x.field_id() || b.field_id() != nc.x.field_id())
        throw Error(Errc::FieldMismatch, "parameters and coefficients over different fields");
}

struct SuPair {
    Element s, u;
};

SuPair s_and_u(const Tensor2& r) {
    if (r.dim() != 3) throw Error(Errc::DimensionMismatch, "dimension 3 required");
    if (r.field().characteristic() != 2) throw Error(Errc::WrongCharacteristic, "characteristic 2 required");
    return {r.at(0, 2), r.at(1, 2)};
}

}  // namespace

std::vector<Element> ab_coefficient_system(const NamedCoeffs& nc, const Element& alpha, const Element& beta) {
    require_char2(nc.x);
    require_same(nc, alpha, beta);
    const auto& [x, y, z, p, q, s, t, u, v] = nc;
    const Element& a = alpha;
    const Element& b = beta;
    return {
        a * p * t - a * q * s,
        b * q * v - b * p * u,
        t * u - v * s,
        a * y * z - b * x * z + x * y - a * u * v + b * s * s - p * q,
        b * z * x - y * x + a * y * z - b * s * t + q * q - a * u * v,
        x * y - a * z * y + b * z * x - p * q + a * v * v - b * s * t,
        -a * z * y + x * y - b * x * z + a * u * v - p * p + b * s * t,
        -x * y + b * x * z - a * y * z + p * q - b * t * t + a * u * v,
        -b * x * z + a * y * z - y * x + b * s * t - a * u * u + p * q,
        a * (-t * y + q * v + p * v - s * y),
        a * (-u * q + y * t + y * s - u * p),
        a * (q * z - t * u + p * z - s * u),
        a * (v * t - z * q + v * s - z * p),
        b * (-p * t + v * x + u * x - q * t),
        b * (-x * v + s * p - x * u + s * q),
        b * (v * s - p * z + u * s - q * z),
        b * (-t * v + z * p + z * q - t * u),
        s * q - u * x + t * q - v * x,
        -u * p + s * y - v * p + t * y,
        q * u - y * s + q * v - y * t,
        -p * s + x * u - p * t + x * v,
        a * u * t - a * z * q - p * x + x * q + a * p * z - a * s * v,
        -a * v * q + a * y * t - b * x * t + b * s * x - a * s * y + a * p * u,
        b * t * p - b * x * v + a * y * v - a * u * y - b * q * s + b * u * x,
        -b * s * v + b * z * p + q * y - y * p - b * q * z + b * u * t,
        p * u - y * s - b * t * z + b * z * s + t * y - v * q,
        -q * s + x * u + a * v * z - a * z * u + t * p - v * x,
    };
}

std::vector<Element> bd_coefficient_system(const NamedCoeffs& nc, const Element& beta, const Element& delta) {
    require_char2(nc.x);
    require_same(nc, beta, delta);
    const auto& [x, y, z, p, q, s, t, u, v] = nc;
    const Element& b = beta;
    const Element& d = delta;
    return {
        -s * x + x * t,
        -b * u * p + b * q * v - d * u * y + d * y * v,
        -v * s + p * z - b * s * s + b * x * z - d * s * u + d * z * p,
        -b * x * z + b * s * t - d * z * q + d * u * t - u * t + q * z,
        -z * p + t * v - b * z * x + b * t * s - d * z * p + d * v * s,
        -z * p + s * v - b * s * t + b * x * z - d * s * v + d * z * p,
        -b * z * x + b * t * t - d * z * q + d * v * t - z * q + t * u,
        -b * s * t + b * x * z - d * t * u + d * q * z - u * s + q * z,
        -t * p + x * v - s * p + v * x,
        -u * x + q * t - u * x + q * s,
        -s * t + x * z - s * s + x * z,
        -z * x + t * t - z * x + s * t,
        -b * v * x + b * p * t - d * v * q + d * y * t - b * u * x + b * q * t - d * u * q + d * y * t,
        -b * s * p + b * x * v - d * s * y + d * p * v - b * s * q + b * x * u - d * s * y + d * p * u,
        -b * v * s + b * p * z - d * v * u + d * y * z - b * s * u + b * z * q - d * u * u + d * y * z,
        -b * z * p + b * t * v - d * z * y + d * v * v - b * z * q + b * t * u - d * z * y + d * v * u,
        -v * x + p * t - b * s * x + b * x * t - d * s * q + d * p * t - s * q + x * u,
        -b * p * t + b * v * x - d * t * y + d * q * v - u * p + q * v - b * u * x + b * q * s - d * u * p + d * y * s,
        -b * z * p + b * s * v - b * u * t + b * q * z,
        -b * z * s + b * t * z - d * z * u + d * v * z,
        -z * s + t * z,
    };
}

bool all_zero(const std::vector<Element>& values) {
    return std::all_of(values.begin(), values.end(), [](const Element& e) { return e.is_zero(); });
}

int first_nonzero(const std::vector<Element>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) return static_cast<int>(i);
    return -1;
}

bool bd_coboundary_condition(const Tensor2& r, const Element& beta, const Element& delta) {
    const auto [s, u] = s_and_u(r);
    const Element d1 = delta + delta.field().one();
    return (d1 * (d1 * u + beta * s) * s).is_zero();
}

bool bd_triangular_condition(const Tensor2& r, const Element& beta, const Element& delta) {
    const auto [s, u] = s_and_u(r);
    const Element d1 = delta.field().one() + delta;
    return (beta * s + d1 * u * s).is_zero();
}

}  // namespace ybe
