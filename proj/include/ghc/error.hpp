#pragma once

#include <stdexcept>
#include <string>

namespace ghc {

enum class Errc {
    NonPrime,
    NotPrimitive,
    FieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    DegreeMismatch,
    OrderNotMultipleOfQ,
    NotGH,
    IndexOutOfRange,
    NotNormalized,
    ParseError,
    ZeroNotInCode,
    NotAdditive,
    BudgetExceeded,
    SizeMismatch,
    ParamRange,
    DegreeOne,
    EvenPrime,
    UnknownId,
    InadmissibleKernel,
    NotConstructible,
    VerificationFailed,
    SeedUnverified,
    DegreeNotTwo,
    PreconditionFailed,
    UnsupportedLambda,
    UnknownFixture,
    Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ghc
