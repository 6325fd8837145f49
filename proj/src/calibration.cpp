#include "zlab/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "zlab/gram.hpp"
#include "zlab/ladder.hpp"
#include "zlab/sums.hpp"
#include "zlab/zeval.hpp"

namespace zlab {

namespace {

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, f);
    }
    return out;
}

double derive_formula1() {
    double c = 0.0;
    for (double t : log_spaced(1e3, 1e5, 24)) {
        const double err = std::fabs(zprime_formula1(t) - zprime_fd_oracle(t));
        c = std::max(c, err / (std::pow(t, -0.25) * std::log(t)));
    }
    return c;
}

double derive_formula2() {
    double c = 0.0;
    for (double T : log_spaced(1e4, 1e6, 8)) {
        const Window w = make_window(T, std::pow(T, 0.25));
        const double shape = std::pow(T, -0.25) * std::log(T);
        for (int i = 0; i <= 8; ++i) {
            const double t = T + w.H * i / 8.0;
            c = std::max(c, std::fabs(zprime_formula2(t, w) - zprime_formula1(t)) / shape);
        }
    }
    return c;
}

double derive_spacing() {
    double c = 0.0;
    for (double T : {1e4, 1e5, 1e6}) {
        const Span span{T, std::pow(T, 0.25)};
        const SumReport r = spacing_report(enumerate_span(span, GramKind::shifted), span);
        c = std::max(c, std::fabs(r.deviation()) / (std::pow(T, -0.75) / std::log(T)));
    }
    return c;
}

double derive_trig_sum() {
    double c = 0.0;
    for (long a : {10L, 100L, 1000L}) {
        for (double t : {1e3, 1e4, 1e5, 1e6}) {
            for (long b : {a + a / 2, 2 * a}) {
                const TrigSum s = trig_sum(a, b, t);
                c = std::max(c, s.abs_over_sqrt_a / std::pow(t, kBudgetDelta));
            }
        }
    }
    return c;
}

double derive_partial_sum() {
    double c = 0.0;
    for (double T : {1e4, 1e5}) {
        const Span span{T, std::pow(T, 0.25)};
        const long M = static_cast<long>(std::floor(span.P0()));
        const double shape = std::pow(T, 0.162) * std::log(T);
        for (SumWeight w : {SumWeight::unit, SumWeight::log_ratio, SumWeight::xcotx}) {
            for (SumPhase p : {SumPhase::cos, SumPhase::sin}) {
                c = std::max(c, std::fabs(partial_weighted_sum(M, span, w, p)) / shape);
            }
        }
    }
    return c;
}

double derive_lemma_sums() {
    double c = 0.0;
    for (double T : {1e4, 1e5}) {
        const Span span{T, std::pow(T, 0.25)};
        const double L = std::log(T);
        const double shape = std::pow(T, kBudgetDelta) * L * L;
        const ParitySplit p = lemma3_parity_sums(span);
        const SumReport l1 = lemma1_sum(span);
        const SumReport l2 = lemma2_alt_sum(span);
        for (double dev : {l1.deviation(), l2.deviation(), p.even.deviation(), p.odd.deviation()}) {
            c = std::max(c, std::fabs(dev) / shape);
        }
    }
    return c;
}

double derive_w_tilde() {
    double c = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double T = 1e5 + 50.0 * k;
        const WTilde w = w_tilde_decomposition(Span{T, 50.0});
        c = std::max(c, w.residual / (std::log(T) * std::log(T)));
    }
    return c;
}

double derive_titchmarsh() {
    const long N = 200;
    const auto [even, odd] = titchmarsh_classical_sums(N, 5);
    const double shape = std::pow(static_cast<double>(N), 0.75) * std::pow(std::log(static_cast<double>(N)), 0.75);
    return std::max(std::fabs(even.deviation()), std::fabs(odd.deviation())) / shape;
}

double derive_hardy_littlewood() {
    double c = 0.0;
    for (double T : {200.0, 500.0, 1000.0, 2000.0, 4000.0}) {
        c = std::max(c, std::fabs(hardy_littlewood_Q(T)) / std::pow(T, 0.25));
    }
    return c;
}

double derive_ladder_residual() {
    const double c0 = calibrate_c0(1e3, 7.0);
    double c = 0.0;
    for (double T : {2e3, 4e3}) {
        const double q1 = representation_residual(solve_phi(T, 7.0), c0);
        c = std::max(c, std::fabs(q1) * T / std::log(T));
    }
    return c;
}

}  // namespace

FittedConstants derive_constants() {
    FittedConstants c;
    c.formula1 = derive_formula1();
    c.formula2 = derive_formula2();
    c.spacing = derive_spacing();
    c.trig_sum = derive_trig_sum();
    c.partial_sum = derive_partial_sum();
    c.lemma_sums = derive_lemma_sums();
    c.w_tilde = derive_w_tilde();
    c.titchmarsh = derive_titchmarsh();
    c.hardy_littlewood = derive_hardy_littlewood();
    c.ladder_residual = derive_ladder_residual();
    return c;
}

FittedConstants constant_caps() {
    FittedConstants c;
    c.formula1 = 10.0;
    c.formula2 = 10.0;
    c.trig_sum = 10.0;
    c.w_tilde = 5.0;
    c.titchmarsh = 5.0;
    c.hardy_littlewood = 20.0;
    return c;
}

std::vector<ConstantCheck> compare_constants(const FittedConstants& frozen, const FittedConstants& derived,
                                             double factor) {
    const auto f = frozen.entries();
    const auto d = derived.entries();
    const auto caps = constant_caps().entries();
    std::vector<ConstantCheck> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        ConstantCheck row;
        row.name = f[i].name;
        row.frozen = f[i].value;
        row.derived = d[i].value;
        row.cap = caps[i].value;
        row.grew = !(row.derived <= factor * row.frozen);
        row.over_cap = row.cap > 0.0 && !(row.derived <= row.cap);
        out.push_back(row);
    }
    return out;
}

bool constants_hold(const std::vector<ConstantCheck>& checks) {
    return std::none_of(checks.begin(), checks.end(), [](const ConstantCheck& c) { return c.grew || c.over_cap; });
}

}  // namespace zlab
