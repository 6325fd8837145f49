#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zlab/zeval.hpp"

namespace zlab {

enum class ExtremumKind { max_of_Z, min_of_Z };

const char* to_string(ExtremumKind kind) noexcept;

/// Odd-order root of Z': a bracket across which Z' changes sign, refined
/// by bisection.
struct RootRecord {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double root = 0.0;
    ExtremumKind kind = ExtremumKind::max_of_Z;
    double zprime_residual = 0.0;
};

/// Which derivative the scan follows.
enum class DerivativeSource {
    formula2,  // fixed truncation, per admissible tile
    formula1,  // exact theta', truncation floor(sqrt(t / 2 pi))
    oracle,    // finite differences of the Euler-Maclaurin Z
};

struct ScanOptions {
    double grid_density = 8.0;  // grid points per Gram spacing pi / ln P0; >= 4
    double tolerance = 1e-9;    // final bracket width
    DerivativeSource source = DerivativeSource::formula2;
};

struct RootScan {
    long count = 0;
    std::vector<RootRecord> roots;
};

/// Every sign change of the fixed-truncation derivative on a grid over the
/// window.  GridTooCoarse when grid_density < 4.
RootScan count_roots(const Window& w, double grid_density = 8.0, const EvalConfig& cfg = {});

/// The same scan over an arbitrary span.  The grid step is set by the
/// Gram spacing at the far end of the span.
RootScan scan_roots(const Span& span, const ScanOptions& options = {}, const EvalConfig& cfg = {});

/// Generic scan of f over [lo, hi] with the given step; exposed so that
/// other functions (Z itself, synthetic tests) reuse the same bracketing.
/// kind follows the sign pattern of f: + then - is max_of_Z.
std::vector<RootRecord> sign_changes(const std::function<double(double)>& f, double lo, double hi, double step,
                                     double tolerance);

/// Zeros of the oracle Z on the span, located and refined like the roots of
/// Z'.  Requires span.T >= 10.
std::vector<double> oracle_z_zeros(const Span& span, double grid_density = 8.0, double tolerance = 1e-10);

/// Re-derives kind from the sign of the fixed-truncation Z' at root -/+ 0.05
/// spacing (on a window around the root) and cross-checks it against the second difference of Z on the same
/// points.  AmbiguousFlank when a flank is at noise level, the two flanks
/// agree in sign, or the methods disagree.
RootRecord classify_extremum(const RootRecord& r, const EvalConfig& cfg = {});

enum class PsiKind { unit, log_log, log_log_log };

const char* to_string(PsiKind kind) noexcept;
double psi(PsiKind kind, double T);

/// Length T^delta_exp psi(T) of the search interval.
double theorem_interval_length(double T, double delta_exp, PsiKind psi_kind);

/// First odd-order root of Z' in (T, T + T^delta_exp psi(T)).  Requires
/// 0 < delta_exp <= 1/6; NotFound when the interval holds no sign change.
RootRecord theorem_interval_check(double T, double delta_exp, PsiKind psi_kind = PsiKind::log_log,
                                  const EvalConfig& cfg = {});

struct FalsificationEvent {
    double T = 0.0;
    double delta_exp = 0.0;
    PsiKind psi_kind = PsiKind::log_log;
    double length = 0.0;
    std::string message;
};

class FalsificationLog {
public:
    void record(FalsificationEvent event) { events_.push_back(std::move(event)); }
    const std::vector<FalsificationEvent>& events() const noexcept { return events_; }
    bool empty() const noexcept { return events_.empty(); }
    std::size_t size() const noexcept { return events_.size(); }

private:
    std::vector<FalsificationEvent> events_;
};

struct IntervalOutcome {
    double T = 0.0;
    double length = 0.0;
    bool found = false;
    RootRecord root;
};

/// theorem_interval_check at every T; misses are appended to the log and
/// never thrown.
std::vector<IntervalOutcome> theorem_interval_sweep(std::span<const double> Ts, double delta_exp, PsiKind psi_kind,
                                                    FalsificationLog& log, const EvalConfig& cfg = {});

}  // namespace zlab
