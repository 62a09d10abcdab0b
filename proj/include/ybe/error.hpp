#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ybe {

enum class Errc {
    NonPrimeCharacteristic,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    NotAlternating,
    NotAntisymmetric,
    JacobiFailure,
    AssociativityFailure,
    WrongCharacteristic,
    DimensionMismatch,
    SingularMatrix,
    CaseNotCovered,
    SweepTooLarge,
    UnknownClaim,
    ParseError,
    InvalidArgument,
};

std::string_view errc_name(Errc code);

/// Every failure in the library is reported as an ybe::Error. The index
/// payload carries the offending tuple (0-based) for validation failures and
/// {line, column} (1-based) for parse errors.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, std::vector<std::size_t> indices = {});

    Errc code() const noexcept { return code_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    Errc code_;
    std::vector<std::size_t> indices_;
};

}  // namespace ybe
