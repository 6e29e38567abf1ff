#pragma once

#include <stdexcept>
#include <string>

namespace sepdiff {

enum class Errc {
    NonPrimeCharacteristic,
    DuplicateGeneratorName,
    ReservedName,
    ElementOfK,
    ZeroPolynomial,
    ZeroSeparant,
    MultivariateInput,
    OrderTooHigh,
    Reducible,
    IrreducibilityUnknown,
    DivisionByZeroClass,
    MixedIdeals,
    OrderNotLower,
    ZeroInput,
    NotAConstantGenerator,
    DerivativeVariablePresent,
    ArityMismatch,
    ParseError,
    Exhausted,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace sepdiff
