#pragma once

// Hand-derived coefficient systems for the two 3-dimensional characteristic-2
// families, transcribed term by term with minus signs kept. They
// are an independent route to the CYBE residual, not an implementation of it:
// the search module compares the two and records every disagreement.

#include <vector>

#include "ybe/tensor.hpp"

namespace ybe {

inline constexpr std::size_t kAbSystemSize = 27;
inline constexpr std::size_t kBdSystemSize = 21;

/// Left-hand sides of the (α, β) family system, in the order the relations were derived.
std::vector<Element> ab_coefficient_system(const NamedCoeffs& nc, const Element& alpha, const Element& beta);

/// Left-hand sides of the (β, δ) family system, in the order the relations were derived.
std::vector<Element> bd_coefficient_system(const NamedCoeffs& nc, const Element& beta, const Element& delta);

bool all_zero(const std::vector<Element>& values);

/// Index of the first nonzero value, or -1.
int first_nonzero(const std::vector<Element>& values);

/// Closed-form coboundary condition for the (β, δ) family, stated for
/// r ∈ Im(1−τ) with s = k13, u = k23: (δ+1)((δ+1)u + βs)s = 0.
bool bd_coboundary_condition(const Tensor2& r, const Element& beta, const Element& delta);

/// Closed-form triangular condition for the (β, δ) family: βs + (1+δ)us = 0.
bool bd_triangular_condition(const Tensor2& r, const Element& beta, const Element& delta);

}  // namespace ybe
