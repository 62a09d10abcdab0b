#pragma once

// Text formats: field, element and tensor literals and the algebra
// definition file. Parse failures throw ParseError with a 1-based
// {line, column} index payload.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/algebra.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

/// `gf(p)` or `gf(p^m;MOD)` with MOD in 0b, 0x or decimal notation.
Field parse_field(std::string_view text);

/// `0x..` hex, `0b..` binary or a decimal encoding; must be below q.
Element parse_element(const Field& field, std::string_view text);

/// Row-major comma list of n² element literals; n is inferred when absent.
Tensor2 parse_tensor(const Field& field, std::string_view text, std::optional<std::size_t> dim = std::nullopt);
std::string tensor_literal(const Tensor2& r);

/// Splits `gf(2),gf(2^2;0b111)` at commas outside parentheses.
std::vector<std::string> split_field_list(std::string_view text);

enum class ProductKind { bracket, product };

struct AlgebraDefinition {
    Field field;
    std::size_t dim;
    ProductKind kind;
    StructureConstants constants;
};

/// Lines: `field LIT`, `dim N`, then `bracket i j -> k:c [k:c ...]` or
/// `product i j -> k:c ...` with 1-based indices. `#` starts a comment.
/// Bracket lines also set the antisymmetric counterpart.
AlgebraDefinition parse_algebra(std::string_view text);
AlgebraDefinition load_algebra_file(const std::filesystem::path& path);

/// Runs the matching validator; throws InvalidArgument for the wrong kind.
LieAlgebra to_lie(const AlgebraDefinition& def, std::string label);
AssocAlgebra to_assoc(const AlgebraDefinition& def, std::string label);

}  // namespace ybe
