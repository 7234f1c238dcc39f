#include "ghc/error.hpp"

namespace ghc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::OrderNotMultipleOfQ: return "OrderNotMultipleOfQ";
        case Errc::NotGH: return "NotGH";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::ParseError: return "ParseError";
        case Errc::ZeroNotInCode: return "ZeroNotInCode";
        case Errc::NotAdditive: return "NotAdditive";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::ParamRange: return "ParamRange";
        case Errc::DegreeOne: return "DegreeOne";
        case Errc::EvenPrime: return "EvenPrime";
        case Errc::UnknownId: return "UnknownId";
        case Errc::InadmissibleKernel: return "InadmissibleKernel";
        case Errc::NotConstructible: return "NotConstructible";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::SeedUnverified: return "SeedUnverified";
        case Errc::DegreeNotTwo: return "DegreeNotTwo";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::UnsupportedLambda: return "UnsupportedLambda";
        case Errc::UnknownFixture: return "UnknownFixture";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace ghc
