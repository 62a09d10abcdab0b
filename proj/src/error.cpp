#include "ybe/error.hpp"

namespace ybe {

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::JacobiFailure: return "JacobiFailure";
    case Errc::AssociativityFailure: return "AssociativityFailure";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::CaseNotCovered: return "CaseNotCovered";
    case Errc::SweepTooLarge: return "SweepTooLarge";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string decorate(Errc code, const std::string& message) {
    std::string out{errc_name(code)};
    if (!message.empty()) {
        out += ": ";
        out += message;
    }
    return out;
}

}  // namespace

Error::Error(Errc code, std::string message, std::vector<std::size_t> indices)
    : std::runtime_error(decorate(code, message)), code_(code), indices_(std::move(indices)) {}

}  // namespace ybe
