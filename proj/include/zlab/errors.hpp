#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zlab {

enum class Errc {
    DomainTooSmall,
    DomainExceeded,
    PrecisionUnreachable,
    OutOfWindow,
    WindowTooLong,
    StepTooSmall,
    NoConvergence,
    RangeViolation,
    DegenerateFit,
    GridTooCoarse,
    NotFound,
    AmbiguousFlank,
    QuadratureFail,
    NoBracket,
    ConfigInvalid,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that sweeps can sort recoverable events (NotFound) from real faults.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

}  // namespace zlab
