#include "zlab/sums.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "zlab/constants.hpp"
#include "zlab/errors.hpp"
#include "zlab/phase.hpp"

namespace zlab {

namespace {

long double ln_n(long n) {
    const auto& table = phase::logs();
    return static_cast<std::size_t>(n) < table.size() ? table.ln(static_cast<std::size_t>(n))
                                                     : std::log(static_cast<long double>(n));
}

double inv_sqrt(long n) {
    const auto& table = phase::logs();
    return static_cast<std::size_t>(n) < table.size() ? table.inv_sqrt(static_cast<std::size_t>(n))
                                                     : 1.0 / std::sqrt(static_cast<double>(n));
}

// Largest integer strictly below P0.
long below(double P0) { return static_cast<long>(std::ceil(P0)) - 1; }

double log_ratio(long n, double P0) { return std::log1p((P0 - static_cast<double>(n)) / static_cast<double>(n)); }

double lemma_budget(double T) {
    const double L = std::log(T);
    return frozen_constants().lemma_sums * std::pow(T, kBudgetDelta) * L * L;
}

double log_sq_base(double T) {
    const double L = std::log(T) - static_cast<double>(phase::kLnTwoPi);
    return L * L;
}

double sign_of_index(long nu) { return (nu % 2 == 0) ? 1.0 : -1.0; }

SumReport make_report(const char* label, const Span& span, long count, double value, double main_term,
                      double budget) {
    SumReport r;
    r.label = label;
    r.window = span;
    r.count = count;
    r.value = value;
    r.main_term = main_term;
    r.error_budget = budget;
    return finalize(r);
}

struct LogLogLine {
    std::vector<double> x;
    std::vector<double> y;
};

DeltaFit fit(const LogLogLine& pts) {
    const std::size_t m = pts.x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += pts.x[i];
        my += pts.y[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (pts.x[i] - mx) * (pts.x[i] - mx);
        sxy += (pts.x[i] - mx) * (pts.y[i] - my);
    }
    if (!(sxx > 0.0)) fail(Errc::DegenerateFit, "t grid has no spread");
    DeltaFit out;
    out.delta = sxy / sxx;
    out.constant = std::exp(my - out.delta * mx);
    out.samples = m;
    return out;
}

void check_grids(std::span<const long> a_grid, std::span<const double> t_grid) {
    if (a_grid.empty() || t_grid.size() < 2) fail(Errc::DegenerateFit, "empty a or t grid");
    for (long a : a_grid) {
        if (a < 1) fail(Errc::RangeViolation, "a must be positive");
    }
    const auto [lo, hi] = std::minmax_element(t_grid.begin(), t_grid.end());
    if (!(*lo > 0.0)) fail(Errc::RangeViolation, "t values must be positive");
    if (*hi < 100.0 * *lo) fail(Errc::DegenerateFit, "t values must span at least two decades");
}

// max over a in the grid and a < b <= 2a of |S(a, b)| / sqrt a, with the
// phase of n supplied by the callback.
template <class PhaseOf>
double dyadic_peak(std::span<const long> a_grid, PhaseOf&& phase_of) {
    double best = 0.0;
    for (long a : a_grid) {
        NeumaierSum re, im;
        const double scale = 1.0 / std::sqrt(static_cast<double>(a));
        for (long n = a; n < 2 * a; ++n) {
            const double ph = phase_of(n);
            re.add(std::cos(ph));
            im.add(std::sin(ph));
            best = std::max(best, std::hypot(re.value(), im.value()) * scale);
        }
    }
    return best;
}

}  // namespace

TrigSum trig_sum(long a, long b, double t) {
    if (a < 1 || b < a || b > 2 * a) {
        fail(Errc::RangeViolation, "trig_sum needs 0 < a <= b <= 2a, got a = " + std::to_string(a) +
                                       ", b = " + std::to_string(b));
    }
    if (!(t >= 0.0)) fail(Errc::RangeViolation, "trig_sum needs t >= 0");
    ExactSum re, im;
    for (long n = a; n < b; ++n) {
        const double ph = phase::reduced(static_cast<long double>(t) * ln_n(n));
        re.add(std::cos(ph));
        im.add(std::sin(ph));
    }
    TrigSum s;
    s.a = a;
    s.b = b;
    s.t = t;
    s.value = {re.value(), im.value()};
    s.abs_over_sqrt_a = std::abs(s.value) / std::sqrt(static_cast<double>(a));
    s.short_range = static_cast<double>(b) <= std::sqrt(t / static_cast<double>(phase::kTwoPi));
    return s;
}

DeltaFit measure_delta(std::span<const long> a_grid, std::span<const double> t_grid) {
    check_grids(a_grid, t_grid);
    LogLogLine pts;
    for (double t : t_grid) {
        const long double tl = t;
        const double peak = dyadic_peak(a_grid, [&](long n) { return phase::reduced(tl * ln_n(n)); });
        if (!(peak > 0.0)) fail(Errc::DegenerateFit, "vanishing trigonometric sum");
        pts.x.push_back(std::log(t));
        pts.y.push_back(std::log(peak));
    }
    return fit(pts);
}

DeltaFit measure_delta_control(std::span<const long> a_grid, std::span<const double> t_grid, std::uint64_t seed) {
    check_grids(a_grid, t_grid);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-static_cast<double>(phase::kPi), static_cast<double>(phase::kPi));
    LogLogLine pts;
    for (double t : t_grid) {
        const double peak = dyadic_peak(a_grid, [&](long) { return uniform(rng); });
        if (!(peak > 0.0)) fail(Errc::DegenerateFit, "vanishing control sum");
        pts.x.push_back(std::log(t));
        pts.y.push_back(std::log(peak));
    }
    return fit(pts);
}

double x_cot_x(long n, double P0) {
    if (n < 1 || static_cast<double>(n) >= P0) fail(Errc::RangeViolation, "X cot X needs 1 <= n < P0");
    if (n == 1) return 0.0;
    const double X = 0.5 * static_cast<double>(phase::kPi) * log_ratio(n, P0) / std::log(P0);
    return X / std::tan(X);
}

double log_ratio_tan_half_omega(long n, double P0) {
    if (n < 1 || static_cast<double>(n) >= P0) fail(Errc::RangeViolation, "weight needs 1 <= n < P0");
    const long double P = P0;
    const long double omega = phase::kPi * ln_n(n) / std::log(P);
    return static_cast<double>(std::log(P / static_cast<long double>(n)) * std::tan(omega / 2.0L));
}

double partial_weighted_sum(long M, const Span& span, SumWeight weight, SumPhase phase_kind, const EvalConfig& cfg) {
    const double P0 = span.P0();
    if (M < 1 || static_cast<double>(M) > P0) fail(Errc::RangeViolation, "partial sum needs 1 <= M <= P0");
    const GramPoint first = solve_gram(first_index_at_or_after(span.T, GramKind::shifted, cfg), GramKind::shifted, cfg);
    if (!span.contains(first.t)) fail(Errc::RangeViolation, "span holds no shifted point");
    const long double t = first.t;
    NeumaierSum sum;
    for (long n = 1; n < M; ++n) {
        double w = 1.0;
        if (weight == SumWeight::log_ratio) w = log_ratio(n, P0);
        if (weight == SumWeight::xcotx) w = x_cot_x(n, P0);
        const double ph = phase::reduced(t * ln_n(n));
        sum.add(w * (phase_kind == SumPhase::cos ? std::cos(ph) : std::sin(ph)) * inv_sqrt(n));
    }
    return sum.value();
}

std::vector<ShiftedDerivative> shifted_derivatives(const Span& span, const EvalConfig& cfg) {
    const std::vector<GramPoint> points = enumerate_span(span, GramKind::shifted, cfg);
    std::vector<ShiftedDerivative> out;
    out.reserve(points.size());
    if (points.empty()) return out;
    const TiledDerivative derivative(span, cfg);
    for (const GramPoint& p : points) out.push_back({p.nu, p.t, derivative(p.t)});
    return out;
}

double default_psi(double T) { return std::log(std::log(T)); }

SumReport lemma1_sum(const Span& span, const EvalConfig& cfg) {
    const auto terms = shifted_derivatives(span, cfg);
    ExactSum sum;
    for (const auto& d : terms) sum.add(d.zprime);
    return make_report("lemma1", span, static_cast<long>(terms.size()), sum.value(), 0.0, lemma_budget(span.T));
}

SumReport lemma2_alt_sum(const Span& span, const EvalConfig& cfg) {
    const auto terms = shifted_derivatives(span, cfg);
    ExactSum sum;
    for (const auto& d : terms) sum.add(sign_of_index(d.nu) * d.zprime);
    const double main = -span.H * log_sq_base(span.T) / static_cast<double>(phase::kTwoPi);
    SumReport r = make_report("lemma2", span, static_cast<long>(terms.size()), sum.value(), main, lemma_budget(span.T));
    r.asymptotic_regime = span.H >= std::pow(span.T, kDeltaExponent) * default_psi(span.T) * (1.0 - 1e-12);
    return r;
}

ParitySplit lemma3_parity_sums(const Span& span, const EvalConfig& cfg) {
    const auto terms = shifted_derivatives(span, cfg);
    ParitySplit split;
    long n_even = 0;
    long n_odd = 0;
    ExactSum all;
    ExactSum alternating;
    for (const auto& d : terms) {
        all.add(d.zprime);
        alternating.add(sign_of_index(d.nu) * d.zprime);
        if (d.nu % 2 == 0) {
            split.even_terms.add(d.zprime);
            ++n_even;
        } else {
            split.odd_terms.add(d.zprime);
            ++n_odd;
        }
    }
    // all +- alternating is exactly twice the even / odd sum; halving is exact.
    split.even_from_lemmas = (all + alternating).value() / 2.0;
    split.odd_from_lemmas = (all - alternating).value() / 2.0;

    const double quarter = span.H * log_sq_base(span.T) / (2.0 * static_cast<double>(phase::kTwoPi));
    const double budget = lemma_budget(span.T);
    split.even = make_report("lemma3_even", span, n_even, split.even_terms.value(), -quarter, budget);
    split.odd = make_report("lemma3_odd", span, n_odd, split.odd_terms.value(), quarter, budget);
    return split;
}

double zprime_at_gram(long nu, const Span& span, const EvalConfig& cfg) {
    const GramPoint p = solve_gram(nu, GramKind::shifted, cfg);
    if (!span.contains(p.t)) fail(Errc::OutOfWindow, "shifted point " + std::to_string(nu) + " is outside the span");
    const std::vector<Window> tiles = tile(span);
    const auto it = std::find_if(tiles.begin(), tiles.end(), [&](const Window& w) { return w.contains(p.t); });
    const double P0 = it != tiles.end() ? it->P0 : span.P0();
    const long double t = p.t;
    NeumaierSum sum;
    for (long n = 1; n <= below(P0); ++n) {
        sum.add(inv_sqrt(n) * log_ratio(n, P0) * std::cos(phase::reduced(t * ln_n(n))));
    }
    return -2.0 * sign_of_index(nu) * sum.value();
}

WTilde w_tilde_decomposition(const Span& span, const EvalConfig& cfg) {
    const auto terms = shifted_derivatives(span, cfg);
    if (terms.size() < 2) fail(Errc::RangeViolation, "W~ needs at least two shifted points");

    WTilde w;
    w.nu_first = terms.front().nu;
    w.N = terms.back().nu - terms.front().nu;
    ExactSum direct;
    for (const auto& d : terms) direct.add(d.zprime);
    w.direct = direct.value();

    const double P0 = span.P0();
    const long double lnP0 = std::log(static_cast<long double>(P0));
    const long double t_first = terms.front().t;
    const long double N = static_cast<long double>(w.N);
    const double tan_scale = 2.0 / static_cast<double>(phase::kPi) * static_cast<double>(lnP0);
    NeumaierSum s1, s2, s3, s4;
    for (long n = 1; n <= below(P0); ++n) {
        const long double ln = ln_n(n);
        const long double phi = t_first * ln;
        const long double shifted = N * phase::kPi * ln / lnP0 + phi;
        const double a = phase::reduced(phi);
        const double b = phase::reduced(shifted);
        const double w_log = log_ratio(n, P0) * inv_sqrt(n);
        const double w_tan = tan_scale * x_cot_x(n, P0) * inv_sqrt(n);
        s1.add(w_log * std::cos(a));
        s2.add(w_log * std::cos(b));
        s3.add(w_tan * std::sin(a));
        s4.add(w_tan * std::sin(b));
    }
    const double first_sign = sign_of_index(w.nu_first);
    const double last_sign = sign_of_index(w.nu_first + w.N);
    w.w1 = 0.5 * first_sign * s1.value();
    w.w2 = 0.5 * last_sign * s2.value();
    w.w3 = 0.5 * first_sign * s3.value();
    w.w4 = -0.5 * last_sign * s4.value();

    const double L = std::log(span.T);
    w.residual = std::fabs(w.direct + 2.0 * w.total());
    w.error_budget = frozen_constants().w_tilde * L * L;
    w.pass = w.residual <= w.error_budget;
    return w;
}

std::pair<SumReport, SumReport> titchmarsh_classical_sums(long N, long nu0, const EvalConfig& cfg) {
    if (N < 1 || nu0 < 1) fail(Errc::RangeViolation, "titchmarsh sums need N >= 1 and nu0 >= 1");
    ExactSum even, odd;
    double first = 0.0;
    double last = 0.0;
    for (long nu = nu0; nu < nu0 + N; ++nu) {
        const double te = solve_gram(2 * nu, GramKind::classical, cfg).t;
        const double to = solve_gram(2 * nu + 1, GramKind::classical, cfg).t;
        if (nu == nu0) first = te;
        last = to;
        even.add(z_main_sum(te, cfg));
        odd.add(z_main_sum(to, cfg));
    }
    const double n = static_cast<double>(N);
    const double budget = frozen_constants().titchmarsh * std::pow(n, 0.75) * std::pow(std::log(n), 0.75);
    const Span span{first, last - first};
    return {make_report("titchmarsh_even", span, N, even.value(), 2.0 * n, budget),
            make_report("titchmarsh_odd", span, N, odd.value(), -2.0 * n, budget)};
}

}  // namespace zlab
