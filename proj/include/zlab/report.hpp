#pragma once

#include <cmath>
#include <string>

#include "zlab/zeval.hpp"

namespace zlab {

/// Value of a structured sum next to its predicted main term and the
/// O-term budget (shape times a fitted constant).
struct SumReport {
    std::string label;
    Span window;
    long count = 0;
    double value = 0.0;
    double main_term = 0.0;
    double error_budget = 0.0;
    bool pass = false;
    bool asymptotic_regime = false;  // H >= T^{35/216} psi(T); alternating sum only

    double deviation() const noexcept { return value - main_term; }
    double ratio() const noexcept { return value / main_term; }
};

/// Sets pass = |value - main_term| <= error_budget and returns the report.
inline SumReport& finalize(SumReport& r) noexcept {
    r.pass = std::isfinite(r.value) && std::fabs(r.value - r.main_term) <= r.error_budget;
    return r;
}

}  // namespace zlab
