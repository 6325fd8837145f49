// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zlab/constants.hpp"
#include "zlab/errors.hpp"
#include "zlab/gram.hpp"
#include "zlab/ladder.hpp"
#include "zlab/phase.hpp"
#include "zlab/roots.hpp"
#include "zlab/sums.hpp"
#include "zlab/zeval.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void run(int id, const char* title, const std::function<void(Verdict&)>& body) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
        body(v);
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail << " exception: " << e.what();
    }
    if (!v.pass) ++failures;
    std::printf("criterion %2d %-28s %s  (%.1fs)%s\n", id, title, v.pass ? "PASS" : "FAIL", seconds_since(t0),
                v.detail.str().c_str());
    std::fflush(stdout);
}

void formula1_accuracy(Verdict& v) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240101);
    std::uniform_real_distribution<double> u(1e3, 1e5);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double t = u(rng);
        const double err = std::fabs(zlab::zprime_formula1(t) - zlab::zprime_fd_oracle(t));
        worst = std::max(worst, err / (std::pow(t, -0.25) * std::log(t)));
    }
    const double elapsed = seconds_since(t0);
    v.pass = worst <= 10.0 && elapsed <= 120.0;
    v.detail << " max err/(t^-1/4 ln t) = " << worst << " (<= 10), " << elapsed << " s (<= 120)";
}

void formula2_reduction(Verdict& v) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240102);
    std::uniform_real_distribution<double> u(1e4, 1e6);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double T = u(rng);
        const zlab::Window w = zlab::make_window(T, std::pow(T, 0.25));
        for (int k = 0; k <= 20; ++k) {
            const double t = k == 20 ? w.end() : T + w.H * k / 20.0;
            const double err = std::fabs(zlab::zprime_formula2(t, w) - zlab::zprime_formula1(t));
            worst = std::max(worst, err / (std::pow(T, -0.25) * std::log(T)));
        }
    }
    const double elapsed = seconds_since(t0);
    v.pass = worst <= 10.0 && elapsed <= 120.0;
    v.detail << " max err/(T^-1/4 ln T) = " << worst << " (<= 10), " << elapsed << " s (<= 120)";
}

void shifted_gram(Verdict& v) {
    double worst_residual = 0.0;
    double worst_alignment = 1.0;
    for (long nu = 1; nu <= 10000; ++nu) {
        const zlab::GramPoint p = zlab::solve_gram(nu, zlab::GramKind::shifted);
        const double th = zlab::phase::reduced(zlab::theta(p.t).theta);
        worst_residual = std::max(worst_residual, p.residual);
        worst_alignment = std::min(worst_alignment, std::sin(th) * (nu % 2 == 0 ? 1.0 : -1.0));
    }
    v.pass = worst_residual <= 1e-8 && worst_alignment >= 1.0 - 1e-6;
    v.detail << " nu = 1..10000: max residual " << worst_residual << ", min (-1)^nu sin theta " << worst_alignment;
}

void spacing_law(Verdict& v) {
    for (auto [T, limit] : {std::pair{1e4, 0.01}, std::pair{1e6, 0.003}}) {
        const zlab::Span span{T, std::pow(T, 0.25)};
        const zlab::SumReport r = zlab::spacing_report(zlab::enumerate_span(span, zlab::GramKind::shifted), span);
        const double rel = std::fabs(r.ratio() - 1.0);
        v.pass = v.pass && rel <= limit;
        v.detail << " T=" << T << ": " << rel << " (<= " << limit << ")";
    }
}

void lemma2(Verdict& v) {
    const zlab::SumReport r = zlab::lemma2_alt_sum(zlab::Span{1e6, 1e3});
    v.pass = r.ratio() >= 0.85 && r.ratio() <= 1.15;
    v.detail << " T=1e6 H=1e3 ratio " << r.ratio() << " in [0.85, 1.15]";
    // Optional tighter band near the top of the certified domain; the Gram
    // point after the window must still lie below 1e7.  Not scored.
    const double T = 1e7 - 1.01e3;
    try {
        const zlab::SumReport big = zlab::lemma2_alt_sum(zlab::Span{T, 1e3});
        const bool ok = big.ratio() >= 0.92 && big.ratio() <= 1.08;
        v.detail << "; optional T=" << T << ": ratio " << big.ratio() << (ok ? " in" : " OUTSIDE") << " [0.92, 1.08]";
    } catch (const zlab::Error& e) {
        v.detail << "; optional run not evaluated: " << e.what();
    }
}

void lemma3(Verdict& v) {
    const zlab::Span span{1e6, 1e3};
    const zlab::ParitySplit p = zlab::lemma3_parity_sums(span);
    const double L = std::log(1e6 / (2.0 * M_PI));
    const double magnitude = 1e3 * L * L / (4.0 * M_PI);
    const double even_dev = std::fabs(-p.even.value / magnitude - 1.0);
    const double odd_dev = std::fabs(p.odd.value / magnitude - 1.0);
    const double l1 = zlab::lemma1_sum(span).value;
    const double l2 = zlab::lemma2_alt_sum(span).value;
    const bool exact = p.even.value == p.even_from_lemmas && p.odd.value == p.odd_from_lemmas &&
                       (p.even_terms + p.odd_terms).value() == l1 && (p.even_terms - p.odd_terms).value() == l2;
    v.pass = p.even.value < 0.0 && p.odd.value > 0.0 && even_dev <= 0.2 && odd_dev <= 0.2 && exact;
    v.detail << " even " << p.even.value << " odd " << p.odd.value << " vs " << magnitude << ": rel dev " << even_dev
             << ", " << odd_dev << " (<= 0.2); identities " << (exact ? "bit-exact" : "BROKEN");
}

void w_tilde(Verdict& v) {
    double worst = 0.0;
    double worst_identity = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double T = 1e5 + 50.0 * k;
        const zlab::WTilde w = zlab::w_tilde_decomposition(zlab::Span{T, 50.0});
        worst = std::max(worst, w.residual / (std::log(T) * std::log(T)));
    }
    for (double P0 : {std::sqrt(1e5 / (2.0 * M_PI)), 1e4}) {
        for (long n = 1; static_cast<double>(n) < P0; ++n) {
            const double lhs = zlab::log_ratio_tan_half_omega(n, P0);
            const double rhs = 2.0 / M_PI * std::log(P0) * zlab::x_cot_x(n, P0);
            worst_identity = std::max(worst_identity, std::fabs(lhs - rhs));
        }
    }
    bool monotone = true;
    double prev = -1.0, top = 0.0;
    for (long n = 1; n < 10000; ++n) {
        const double x = zlab::x_cot_x(n, 1e4);
        monotone = monotone && x > prev && x <= 1.0;
        prev = x;
        top = std::max(top, x);
    }
    v.pass = worst <= 5.0 && worst_identity <= 1e-12 && monotone;
    v.detail << " max residual/ln^2 T = " << worst << " (<= 5); weight identity " << worst_identity
             << " (<= 1e-12); X cot X " << (monotone ? "increasing" : "NOT increasing") << ", max " << top;
}

void theorem_interval(Verdict& v) {
    std::mt19937_64 rng(20240108);
    std::uniform_real_distribution<double> u(1e4, 1e6);
    std::vector<double> Ts(100);
    for (double& T : Ts) T = u(rng);
    zlab::FalsificationLog log;
    const auto out = zlab::theorem_interval_sweep(Ts, 35.0 / 216.0, zlab::PsiKind::log_log, log);
    const long found = std::count_if(out.begin(), out.end(), [](const zlab::IntervalOutcome& o) { return o.found; });
    v.pass = found == 100 && log.empty();
    v.detail << " " << found << "/100 intervals hold a root";
    for (const auto& e : log.events()) v.detail << "\n    falsification event: T=" << e.T << " " << e.message;
}

void root_alternation(Verdict& v) {
    const auto scan = zlab::scan_roots(zlab::Span{1e5, 700.0});
    long breaks = 0, ambiguous = 0;
    int prev = -1;
    const std::size_t n = std::min<std::size_t>(scan.roots.size(), 1000);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            const int kind = static_cast<int>(zlab::classify_extremum(scan.roots[i]).kind);
            if (kind == prev) ++breaks;
            prev = kind;
        } catch (const zlab::Error&) {
            ++ambiguous;
            prev = -1;
        }
    }
    const zlab::Span rolle{100.0, 1400.0};
    const auto zeros = zlab::oracle_z_zeros(rolle);
    const auto roots = zlab::scan_roots(rolle).roots;
    long empty = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        while (j < roots.size() && roots[j].root <= zeros[i]) ++j;
        if (j == roots.size() || roots[j].root >= zeros[i + 1]) ++empty;
    }
    v.pass = n == 1000 && breaks == 0 && ambiguous == 0 && empty == 0;
    v.detail << " " << n << " roots from T=1e5: " << breaks << " breaks, " << ambiguous << " ambiguous; " << zeros.size()
             << " zeros of Z on [100, 1500]: " << empty << " pairs without a root";
}

void titchmarsh(Verdict& v) {
    const long N = 1000;
    const auto [even, odd] = zlab::titchmarsh_classical_sums(N, 5);
    const double bound = 5.0 * std::pow(N, 0.75) * std::pow(std::log(N), 0.75);
    v.pass = std::fabs(even.value - 2.0 * N) <= bound && std::fabs(odd.value + 2.0 * N) <= bound && even.value > 0.0 &&
             odd.value < 0.0;
    v.detail << " even " << even.value << ", odd " << odd.value << ", bound " << bound;
}

void ladder(Verdict& v) {
    std::vector<double> Ts;
    for (double T = 1e3; T <= 1e5; T *= 2.0) Ts.push_back(T);
    double worst_defect = 0.0;
    for (double mu : {7.0, 9.0}) {
        for (double T : Ts) worst_defect = std::max(worst_defect, zlab::solve_phi(T, mu).defect);
    }
    const double c0 = zlab::calibrate_c0(1e3, 7.0);
    const auto rows = zlab::ladder_scan(Ts, 7.0, c0);
    const double C = zlab::frozen_constants().ladder_residual;
    bool shape = true, beats = true;
    int decreasing = 0;
    v.detail << " c0 = " << c0 << "\n   ";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        shape = shape && std::fabs(r.Q1) <= C * std::log(r.T) / r.T;
        beats = beats && std::fabs(r.Q1) < std::fabs(r.Q);
        if (i >= 2 && std::fabs(r.Q1) < std::fabs(rows[i - 1].Q1)) ++decreasing;
        v.detail << " T=" << r.T << ": Q=" << r.Q << " Q1=" << r.Q1;
    }
    v.pass = worst_defect <= 1e-6 && shape && decreasing >= 4 && beats;

    // Not scored: the constant the residual actually tends to, from
    // K(x) = c + (a ln x + b) / x through the last three grid points.
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
        const auto& r = rows[rows.size() - 3 + i];
        m[i][0] = 1.0;
        m[i][1] = std::log(r.x) / r.x;
        m[i][2] = 1.0 / r.x;
        m[i][3] = r.Q1 + c0;
    }
    for (int p = 0; p < 3; ++p) {
        for (int i = p + 1; i < 3; ++i) {
            const double f = m[i][p] / m[p][p];
            for (int k = p; k < 4; ++k) m[i][k] -= f * m[p][k];
        }
    }
    double sol[3];
    for (int i = 2; i >= 0; --i) {
        double acc = m[i][3];
        for (int k = i + 1; k < 3; ++k) acc -= m[i][k] * sol[k];
        sol[i] = acc / m[i][i];
    }
    int limit_decreasing = 0;
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const double q = std::fabs(rows[i].Q1 + c0 - sol[0]);
        const double q_prev = std::fabs(rows[i - 1].Q1 + c0 - sol[0]);
        if (q < q_prev) ++limit_decreasing;
    }
    v.detail.precision(10);
    v.detail << "\n    note (not scored): extrapolated limit constant " << sol[0] << "; with it |Q1| decreases in "
             << limit_decreasing << "/5 steps";
    v.detail.precision(6);
    v.detail << "\n    max defect " << worst_defect << " (<= 1e-6); |Q1| <= " << C << " ln T/T: " << (shape ? "yes" : "NO")
             << "; decreasing steps " << decreasing << "/5 (>= 4); |Q1| < |Q|: " << (beats ? "yes" : "NO");
}

void exponent(Verdict& v) {
    const std::vector<long> a{10, 30, 100, 300, 1000};
    std::vector<double> ts;
    for (int i = 0; i <= 12; ++i) ts.push_back(1e3 * std::pow(10.0, i * 0.25));
    const zlab::DeltaFit fit = zlab::measure_delta(a, ts);
    v.pass = fit.delta <= 35.0 / 216.0 + 0.05;
    v.detail << " fitted exponent " << fit.delta << " (<= " << 35.0 / 216.0 + 0.05 << "), constant " << fit.constant;
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    out += "\nstatus " + std::to_string(status);
    return out;
}

void determinism(Verdict& v) {
    const std::string cli = ZLAB_CLI_PATH;
    const std::vector<std::string> commands{
        "eval --t-min 1000 --t-max 1100 --points 50",
        "gram --kind shifted --nu 1..500 --format json",
        "sums lemma2 --T 1e6 --H 1e3",
        "sums delta --t-min 1e3 --t-max 1e6 --seed 9",
        "roots scan --t-min 1e5 --t-max 100050",
        "roots interval --t-min 1e4 --t-max 1e6 --samples 10 --seed 42",
        "ladder scan --t-min 1000 --t-max 2000",
        "scan --t-min 1e5 --t-max 100100 --format json",
    };
    int identical = 0;
    for (const auto& c : commands) {
        const std::string a = capture(cli + " " + c + " 2>/dev/null");
        const std::string b = capture(cli + " " + c + " 2>/dev/null");
        if (a == b && a.size() > 20) ++identical;
        else v.detail << " differs: " << c;
    }
    v.pass = identical == static_cast<int>(commands.size());
    v.detail << " " << identical << "/" << commands.size() << " commands byte-identical across two runs";
}

}  // namespace

int main() {
    run(1, "formula-1 accuracy", formula1_accuracy);
    run(2, "formula-2 reduction", formula2_reduction);
    run(3, "shifted Gram contract", shifted_gram);
    run(4, "spacing law", spacing_law);
    run(5, "alternating sum main term", lemma2);
    run(6, "parity split", lemma3);
    run(7, "W~ reconstruction", w_tilde);
    run(8, "short interval", theorem_interval);
    run(9, "alternation and interleaving", root_alternation);
    run(10, "classical Gram sums", titchmarsh);
    run(11, "ladder residual", ladder);
    run(12, "exponent ceiling", exponent);
    run(13, "determinism", determinism);
    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
