#include "zlab/errors.hpp"

namespace zlab {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::DomainTooSmall: return "DomainTooSmall";
        case Errc::DomainExceeded: return "DomainExceeded";
        case Errc::PrecisionUnreachable: return "PrecisionUnreachable";
        case Errc::OutOfWindow: return "OutOfWindow";
        case Errc::WindowTooLong: return "WindowTooLong";
        case Errc::StepTooSmall: return "StepTooSmall";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::RangeViolation: return "RangeViolation";
        case Errc::DegenerateFit: return "DegenerateFit";
        case Errc::GridTooCoarse: return "GridTooCoarse";
        case Errc::NotFound: return "NotFound";
        case Errc::AmbiguousFlank: return "AmbiguousFlank";
        case Errc::QuadratureFail: return "QuadratureFail";
        case Errc::NoBracket: return "NoBracket";
        case Errc::ConfigInvalid: return "ConfigInvalid";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace zlab
