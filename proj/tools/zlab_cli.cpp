// zlab: batch front end for the Z-function laboratory.
//
// Exit status: 0 ok, 1 an invariant failed, 2 bad configuration.

#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "table.hpp"
#include "zlab/calibration.hpp"
#include "zlab/constants.hpp"
#include "zlab/errors.hpp"
#include "zlab/gram.hpp"
#include "zlab/ladder.hpp"
#include "zlab/phase.hpp"
#include "zlab/roots.hpp"
#include "zlab/sums.hpp"
#include "zlab/version.hpp"
#include "zlab/zeval.hpp"

namespace {

using zlab::cli::Cell;
using zlab::cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

constexpr double kDomainLo = 10.0;
constexpr double kDomainHi = 1e7;

struct RunConfig {
    double t_min = 0.0;
    double t_max = 0.0;
    std::optional<double> window_h;
    double grid_per_gram = 8.0;
    double mu_scale = 7.0;
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 1;
    bool strict_constants = false;

    // subcommand parameters
    std::string mode;
    std::string kind = "shifted";
    std::string nu_range;
    int points = 11;
    long N = 1000;
    long nu0 = 5;
    int samples = 100;
    double delta_exp = zlab::kDeltaExponent;
    std::string psi = "loglog";
    std::string events;
    double anchor = 1e3;
    int panels_per_gram = 1;
    std::vector<long> a_grid{10, 30, 100, 300, 1000};
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Table table;
    bool invariants_hold = true;
};

Table make_table(std::vector<std::string> columns) {
    return Table(zlab::kVersion, zlab::snapshot_hash(zlab::frozen_constants()), std::move(columns));
}

void check_range(const RunConfig& c, bool allow_point) {
    for (double v : {c.t_min, c.t_max}) {
        if (!(v >= kDomainLo && v <= kDomainHi)) {
            zlab::fail(zlab::Errc::DomainExceeded, "t range must lie within [10, 1e7]");
        }
    }
    if (c.t_max < c.t_min || (!allow_point && c.t_max == c.t_min)) throw ConfigError("empty t range");
}

zlab::Span span_of(const RunConfig& c) {
    const double H = c.window_h ? *c.window_h : c.t_max - c.t_min;
    if (!(H > 0.0)) throw ConfigError("window length must be positive");
    if (c.t_min + H > kDomainHi) zlab::fail(zlab::Errc::DomainExceeded, "window ends beyond 1e7");
    return zlab::Span{c.t_min, H};
}

std::vector<Cell> report_cells(const zlab::SumReport& r) {
    return {r.label, r.window.T, r.window.H, static_cast<long long>(r.count), r.value, r.main_term, r.error_budget,
            r.pass};
}

const std::vector<std::string> kReportColumns{"label", "T", "H", "count", "value", "main_term", "error_budget", "pass"};

Outcome run_eval(const RunConfig& c) {
    check_range(c, true);
    if (c.points < 1) throw ConfigError("--points must be >= 1");
    const zlab::Span span{c.t_min, c.t_max - c.t_min};
    const zlab::TiledDerivative f2(span);
    zlab::EvalConfig rs;
    rs.rs_correction_terms = 5;
    Outcome o{make_table({"t", "z", "z_rs", "zprime_f1", "zprime_f2", "terms_used"})};
    for (int i = 0; i < c.points; ++i) {
        const double t = c.points == 1 ? c.t_min : c.t_min + span.H * i / (c.points - 1);
        o.table.add({t, zlab::z_main_sum(t), zlab::riemann_siegel_z(t, rs), zlab::zprime_formula1(t), f2(t),
                     static_cast<long long>(zlab::main_sum_terms(t))});
    }
    return o;
}

Outcome run_gram(const RunConfig& c) {
    const zlab::GramKind kind = c.kind == "classical" ? zlab::GramKind::classical : zlab::GramKind::shifted;
    std::vector<zlab::GramPoint> points;
    if (!c.nu_range.empty()) {
        long a = 0, b = 0;
        char tail = 0;
        if (std::sscanf(c.nu_range.c_str(), "%ld..%ld%c", &a, &b, &tail) != 2 || a < 1 || b < a) {
            throw ConfigError("--nu expects a..b with 1 <= a <= b");
        }
        for (long nu = a; nu <= b; ++nu) points.push_back(zlab::solve_gram(nu, kind));
        if (points.back().t > kDomainHi) zlab::fail(zlab::Errc::DomainExceeded, "index range passes t = 1e7");
    } else {
        check_range(c, false);
        points = zlab::enumerate_span(zlab::Span{c.t_min, c.t_max - c.t_min}, kind);
    }
    Outcome o{make_table({"nu", "kind", "t", "residual", "alignment"})};
    for (const auto& p : points) {
        // (-1)^nu cos theta for classical points, (-1)^nu sin theta for shifted ones.
        const double th = zlab::phase::reduced(zlab::theta(p.t).theta);
        const double sign = p.nu % 2 == 0 ? 1.0 : -1.0;
        const double alignment = sign * (kind == zlab::GramKind::classical ? std::cos(th) : std::sin(th));
        o.table.add({static_cast<long long>(p.nu), std::string(zlab::to_string(kind)), p.t, p.residual, alignment});
        if (!(p.residual <= 1e-8) || !(alignment >= 1.0 - 1e-6)) o.invariants_hold = false;
    }
    return o;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(count == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    }
    return out;
}

Outcome run_sums(const RunConfig& c) {
    Outcome o{make_table(kReportColumns)};
    auto push = [&](const zlab::SumReport& r) {
        o.table.add(report_cells(r));
        if (!r.pass) o.invariants_hold = false;
    };
    if (c.mode == "titchmarsh") {
        if (c.N < 1 || c.nu0 < 5) throw ConfigError("titchmarsh needs --N >= 1 and --nu0 >= 5");
        const auto [even, odd] = zlab::titchmarsh_classical_sums(c.N, c.nu0);
        push(even);
        push(odd);
        return o;
    }
    if (c.mode == "delta") {
        check_range(c, false);
        if (c.points < 2) throw ConfigError("--points must be >= 2");
        const auto ts = log_grid(c.t_min, c.t_max, c.points);
        const auto fit = zlab::measure_delta(c.a_grid, ts);
        const auto control = zlab::measure_delta_control(c.a_grid, ts, c.seed);
        const zlab::Span window{c.t_min, c.t_max - c.t_min};
        for (const auto& [label, f] : {std::pair{"delta", fit}, std::pair{"delta_control", control}}) {
            zlab::SumReport r;
            r.label = label;
            r.window = window;
            r.count = static_cast<long>(f.samples);
            r.value = f.delta;
            r.main_term = zlab::kDeltaExponent;
            r.error_budget = 0.05;
            r.pass = f.delta <= r.main_term + r.error_budget;
            o.table.add(report_cells(r));
            if (label == std::string("delta") && !r.pass) o.invariants_hold = false;
        }
        return o;
    }
    if (c.t_min < kDomainLo || c.t_min > kDomainHi) zlab::fail(zlab::Errc::DomainExceeded, "T must lie within [10, 1e7]");
    const zlab::Span span = span_of(c);
    if (c.mode == "lemma1") {
        push(zlab::lemma1_sum(span));
    } else if (c.mode == "lemma2") {
        push(zlab::lemma2_alt_sum(span));
    } else if (c.mode == "lemma3") {
        const auto split = zlab::lemma3_parity_sums(span);
        push(split.even);
        push(split.odd);
        if (split.even.value != split.even_from_lemmas || split.odd.value != split.odd_from_lemmas) {
            o.invariants_hold = false;
        }
    } else if (c.mode == "wtilde") {
        const auto w = zlab::w_tilde_decomposition(span);
        zlab::SumReport r;
        r.label = "wtilde";
        r.window = span;
        r.count = w.N + 1;
        r.value = w.direct;
        r.main_term = -2.0 * w.total();
        r.error_budget = w.error_budget;
        r.pass = w.pass;
        push(r);
    }
    return o;
}

Outcome run_roots(const RunConfig& c) {
    check_range(c, false);
    if (c.mode == "interval") {
        if (c.samples < 1) throw ConfigError("--samples must be >= 1");
        zlab::PsiKind psi = zlab::PsiKind::log_log;
        if (c.psi == "unit") psi = zlab::PsiKind::unit;
        if (c.psi == "logloglog") psi = zlab::PsiKind::log_log_log;
        std::mt19937_64 rng(c.seed);
        std::uniform_real_distribution<double> dist(c.t_min, c.t_max);
        std::vector<double> Ts(static_cast<std::size_t>(c.samples));
        for (double& T : Ts) T = dist(rng);
        zlab::FalsificationLog log;
        const auto outcomes = zlab::theorem_interval_sweep(Ts, c.delta_exp, psi, log);
        Outcome o{make_table({"T", "length", "found", "root", "kind"})};
        for (const auto& r : outcomes) {
            o.table.add({r.T, r.length, r.found, r.found ? r.root.root : std::nan(""),
                         std::string(r.found ? zlab::to_string(r.root.kind) : "none")});
        }
        std::ostringstream events;
        events << "T,delta_exp,psi,length,detail\n";
        char buf[128];
        for (const auto& e : log.events()) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%.17g,", e.T, e.delta_exp, zlab::to_string(e.psi_kind), e.length);
            events << buf << '"' << e.message << "\"\n";
        }
        if (!c.events.empty()) {
            std::ofstream(c.events, std::ios::binary) << events.str();
        } else if (!log.events().empty()) {
            std::cerr << events.str();
        }
        return o;
    }
    zlab::ScanOptions opts;
    opts.grid_density = c.grid_per_gram;
    const auto scan = zlab::scan_roots(zlab::Span{c.t_min, c.t_max - c.t_min}, opts);
    Outcome o{make_table({"index", "root", "kind", "bracket_lo", "bracket_hi", "zprime_residual"})};
    int previous = -1;  // kind of the last classified root
    long long index = 0;
    for (const auto& r : scan.roots) {
        std::string kind;
        try {
            const auto classified = zlab::classify_extremum(r);
            kind = zlab::to_string(classified.kind);
            if (previous == static_cast<int>(classified.kind)) o.invariants_hold = false;
            previous = static_cast<int>(classified.kind);
        } catch (const zlab::Error& e) {
            if (e.code() != zlab::Errc::AmbiguousFlank) throw;
            kind = "ambiguous";
            previous = -1;
            o.invariants_hold = false;
        }
        o.table.add({index++, r.root, kind, r.bracket_lo, r.bracket_hi, r.zprime_residual});
    }
    return o;
}

Outcome run_ladder(const RunConfig& c) {
    check_range(c, true);
    if (c.t_min < 100.0 || c.anchor < 100.0) zlab::fail(zlab::Errc::DomainTooSmall, "the ladder needs T >= 100");
    zlab::LadderOptions opts;
    opts.quadrature.panels_per_gram = c.panels_per_gram;
    std::vector<double> Ts;
    if (c.mode == "solve") {
        Ts.push_back(c.t_min);
    } else {
        for (double T = c.t_min; T <= c.t_max; T *= 2.0) Ts.push_back(T);
    }
    const double c0 = zlab::calibrate_c0(c.anchor, c.mu_scale, opts);
    const auto rows = zlab::ladder_scan(Ts, c.mu_scale, c0, opts);
    Outcome o{make_table({"T", "x", "phi1", "Q", "Q1", "defect"})};
    double last_x = 0.0;
    for (const auto& r : rows) {
        o.table.add({r.T, r.x, r.phi1, r.Q, r.Q1, r.defect});
        if (!(r.defect <= opts.defect_target) || !(r.x > last_x)) o.invariants_hold = false;
        if (r.phi1 > r.T) std::cerr << "note: phi1 = " << r.phi1 << " lies above T = " << r.T << "\n";
        last_x = r.x;
    }
    return o;
}

Outcome run_scan(const RunConfig& c) {
    check_range(c, false);
    Outcome o{make_table(kReportColumns)};
    double T = c.t_min;
    while (T < c.t_max) {
        const double H = std::min(c.window_h ? *c.window_h : std::pow(T, 0.25), c.t_max - T);
        const zlab::Span span{T, H};
        const auto split = zlab::lemma3_parity_sums(span);
        for (const zlab::SumReport& r : {zlab::lemma1_sum(span), zlab::lemma2_alt_sum(span), split.even, split.odd}) {
            o.table.add(report_cells(r));
            if (!r.pass) o.invariants_hold = false;
        }
        T += H;
    }
    return o;
}

int strict_check() {
    const auto checks = zlab::compare_constants(zlab::frozen_constants(), zlab::derive_constants());
    for (const auto& ch : checks) {
        std::fprintf(stderr, "constant %-16s frozen %.6g derived %.6g%s%s\n", ch.name.c_str(), ch.frozen, ch.derived,
                     ch.grew ? " GREW" : "", ch.over_cap ? " OVER-CAP" : "");
    }
    return zlab::constants_hold(checks) ? kExitOk : kExitInvariant;
}

bool is_config_error(zlab::Errc code) {
    switch (code) {
        case zlab::Errc::ConfigInvalid:
        case zlab::Errc::DomainExceeded:
        case zlab::Errc::DomainTooSmall:
        case zlab::Errc::RangeViolation:
        case zlab::Errc::WindowTooLong:
        case zlab::Errc::GridTooCoarse:
        case zlab::Errc::OutOfWindow:
            return true;
        default:
            return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for Z(t), Z'(t), Gram sums and the Hardy-Littlewood integral"};
    app.require_subcommand(1);
    app.fallthrough();
    // A config named by ZLAB_CONFIG is the default and must exist.
    const char* env_config = std::getenv("ZLAB_CONFIG");
    app.set_config("--config", env_config ? env_config : "", "TOML/INI file with default option values",
                   env_config != nullptr && *env_config != '\0');

    RunConfig c;
    app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", c.out, "output file (stdout when omitted)");
    app.add_option("--seed", c.seed, "seed for randomized sweeps");
    app.add_flag("--strict-constants", c.strict_constants, "re-derive the fitted constants and fail if any grew 2x");

    auto add_range = [&](CLI::App* sub, bool need_max) {
        sub->add_option("--t-min,--T", c.t_min, "lower end of the t range")->required();
        sub->add_option("--t-max", c.t_max, "upper end of the t range")->required(need_max);
    };

    auto* eval = app.add_subcommand("eval", "Z, Z' from both formulas on an even grid");
    add_range(eval, true);
    eval->add_option("--points", c.points, "grid points");

    auto* gram = app.add_subcommand("gram", "classical or shifted Gram points");
    gram->add_option("--kind", c.kind)->check(CLI::IsMember({"classical", "shifted"}));
    gram->add_option("--nu", c.nu_range, "index range a..b");
    gram->add_option("--t-min", c.t_min);
    gram->add_option("--t-max", c.t_max);

    auto* sums = app.add_subcommand("sums", "structured sums over shifted Gram points");
    sums->add_option("which", c.mode)
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "wtilde", "titchmarsh", "delta"}));
    sums->add_option("--t-min,--T", c.t_min, "window base");
    sums->add_option("--t-max", c.t_max);
    sums->add_option("--window-h,--H", c.window_h, "window length");
    sums->add_option("--N", c.N, "titchmarsh: number of pairs");
    sums->add_option("--nu0", c.nu0, "titchmarsh: first index (>= 5)");
    sums->add_option("--points", c.points, "delta: t grid points");
    sums->add_option("--a", c.a_grid, "delta: dyadic range starts");

    auto* roots = app.add_subcommand("roots", "roots of Z' in a range, or the short-interval sweep");
    roots->add_option("mode", c.mode)->check(CLI::IsMember({"scan", "interval"}));
    add_range(roots, true);
    roots->add_option("--grid-per-gram", c.grid_per_gram, "scan points per Gram spacing");
    roots->add_option("--samples", c.samples, "interval: random T count");
    roots->add_option("--delta-exp", c.delta_exp, "interval: exponent of T");
    roots->add_option("--psi", c.psi)->check(CLI::IsMember({"unit", "loglog", "logloglog"}));
    roots->add_option("--events", c.events, "interval: falsification event log (CSV)");

    auto* ladder = app.add_subcommand("ladder", "integral equation and representation residual");
    ladder->add_option("mode", c.mode)->check(CLI::IsMember({"scan", "solve"}));
    add_range(ladder, false);
    ladder->add_option("--mu-scale", c.mu_scale, "coefficient of the upper limit, >= 7");
    ladder->add_option("--anchor", c.anchor, "T at which c0 is calibrated");
    ladder->add_option("--panels-per-gram", c.panels_per_gram, "quadrature panels per Gram spacing")
        ->check(CLI::Range(1, 8));

    auto* scan = app.add_subcommand("scan", "lemma sums over consecutive windows");
    add_range(scan, true);
    scan->add_option("--window-h", c.window_h, "window length (default T^{1/4})");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitConfig;
    }
    if (c.mode.empty()) c.mode = "scan";
    if (ladder->parsed() && ladder->count("--t-max") == 0) c.t_max = c.t_min;

    std::optional<Outcome> outcome;
    try {
        if (eval->parsed()) outcome = run_eval(c);
        if (gram->parsed()) outcome = run_gram(c);
        if (sums->parsed()) outcome = run_sums(c);
        if (roots->parsed()) outcome = run_roots(c);
        if (ladder->parsed()) outcome = run_ladder(c);
        if (scan->parsed()) outcome = run_scan(c);
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const zlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_config_error(e.code()) ? kExitConfig : kExitInvariant;
    }

    const std::string text = c.format == "json" ? outcome->table.json() : outcome->table.csv();
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(c.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open " << c.out << "\n";
            return kExitConfig;
        }
        file << text;
    }

    int status = outcome->invariants_hold ? kExitOk : kExitInvariant;
    if (c.strict_constants && strict_check() != kExitOk) status = kExitInvariant;
    return status;
}
