#include "ilseq/errors.hpp"

namespace ilseq {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotCongruent1Mod4: return "NotCongruent1Mod4";
    case Errc::FNotPerfectSquare: return "FNotPerfectSquare";
    case Errc::FEven: return "FEven";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case Errc::ZeroResidue: return "ZeroResidue";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PeriodMismatch: return "PeriodMismatch";
    case Errc::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case Errc::InadmissibleCase: return "InadmissibleCase";
    case Errc::UnexpectedClassOfTwo: return "UnexpectedClassOfTwo";
    case Errc::BadArgument: return "BadArgument";
    }
    return "UnknownError";
}

namespace {
std::string format_message(Errc code, const std::string& detail) {
    std::string msg = errc_name(code);
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}
} // namespace

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(format_message(code, detail)), code_(code) {}

void raise(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace ilseq
