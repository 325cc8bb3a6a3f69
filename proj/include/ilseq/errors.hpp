#pragma once

#include <stdexcept>
#include <string>

namespace ilseq {

// Every failure the library can report. The CLI prints the enumerator name
// verbatim, so these spellings are part of the output contract.
enum class Errc {
    NotPrime,
    NotCongruent1Mod4,
    FNotPerfectSquare,
    FEven,
    ModulusTooLarge,
    NotPrimitiveRoot,
    ZeroResidue,
    IndexOutOfRange,
    PeriodMismatch,
    DivisionByZeroPolynomial,
    InadmissibleCase,
    UnexpectedClassOfTwo,
    BadArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& detail = {});

} // namespace ilseq
