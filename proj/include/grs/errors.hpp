#pragma once

#include <stdexcept>
#include <string>

namespace grs {

/// Every failure the library reports, named after the violated invariant.
enum class Errc {
    NotPrime,
    NotIrreducible,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    DegreeTooHigh,
    DuplicateEvaluationPoint,
    ZeroMultiplier,
    BadDimension,
    LengthExceedsField,
    BadMessageLength,
    EnumerationTooLarge,
    ZeroLambda,
    LengthTooShort,
    NoGammaAvailable,
    GammaCollision,
    BadDocument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DegreeTooHigh: return "DegreeTooHigh";
        case Errc::DuplicateEvaluationPoint: return "DuplicateEvaluationPoint";
        case Errc::ZeroMultiplier: return "ZeroMultiplier";
        case Errc::BadDimension: return "BadDimension";
        case Errc::LengthExceedsField: return "LengthExceedsField";
        case Errc::BadMessageLength: return "BadMessageLength";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::ZeroLambda: return "ZeroLambda";
        case Errc::LengthTooShort: return "LengthTooShort";
        case Errc::NoGammaAvailable: return "NoGammaAvailable";
        case Errc::GammaCollision: return "GammaCollision";
        case Errc::BadDocument: return "BadDocument";
    }
    return "UnknownError";
}

/// what() is "<ErrcName> <detail>", e.g. "ZeroMultiplier index=2".
class Error : public std::runtime_error {
public:
    explicit Error(Errc code, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                            : std::string(errc_name(code)) + " " + detail),
          code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace grs
