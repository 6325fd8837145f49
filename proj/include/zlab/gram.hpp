#pragma once

#include <vector>

#include "zlab/report.hpp"
#include "zlab/theta.hpp"
#include "zlab/zeval.hpp"

namespace zlab {

/// classical: theta(t) = pi nu.  shifted: theta(t) = pi nu + pi/2, where
/// cos theta vanishes and sin theta = (-1)^nu.
enum class GramKind { classical, shifted };

const char* to_string(GramKind kind) noexcept;

struct GramPoint {
    long nu = 0;
    double t = 0.0;
    GramKind kind = GramKind::classical;
    double residual = 0.0;  // |theta(t) - target|
};

/// theta target pi nu (+ pi/2 for shifted points), in long double.
long double gram_target(long nu, GramKind kind) noexcept;

/// Solves theta(t) = target by bisection on theta_main followed by Newton on
/// the full theta.  Requires nu >= 1; NoConvergence after 50 Newton steps.
/// Results are cached per kind.
GramPoint solve_gram(long nu, GramKind kind, const EvalConfig& cfg = {});

/// Smallest index whose point lies at or beyond t.
long first_index_at_or_after(double t, GramKind kind, const EvalConfig& cfg = {});

/// Every point of the kind in the closed interval [T, T + H], ascending.
std::vector<GramPoint> enumerate_window(const Window& w, GramKind kind, const EvalConfig& cfg = {});
std::vector<GramPoint> enumerate_span(const Span& span, GramKind kind, const EvalConfig& cfg = {});

/// Consecutive gaps against pi / ln P0, P0 taken from the base of `window`.
/// main_term is pi/ln P0 and value is main_term plus the worst absolute gap
/// error, so deviation() is that error and ratio() - 1 the relative one.
/// error_budget is the O(T^{-3/4}/ln T) shape times its fitted constant.
/// Requires >= 2 points of one kind (RangeViolation otherwise).
SumReport spacing_report(const std::vector<GramPoint>& points, const Span& window);

/// Number of cached points per kind; exposed for tests.
std::size_t gram_cache_size(GramKind kind);

}  // namespace zlab
