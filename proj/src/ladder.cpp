#include "zlab/ladder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "ladder_kernel.hpp"
#include "zlab/accumulate.hpp"
#include "zlab/errors.hpp"
#include "zlab/phase.hpp"
#include "zlab/theta.hpp"
#include "zlab/zeval.hpp"

namespace zlab {

namespace {

constexpr double kBlockWidth = 8.0;
constexpr int kMoments = 12;
constexpr double kCutFactor = 18.0;  // e^{-2t/x} < e^{-36} beyond t = 18 x
constexpr double kMinX = 2.0;
constexpr int kBracketSteps = 60;
constexpr int kBisectionSteps = 200;

const double kGamma = static_cast<double>(phase::kEulerGamma);
const double kLnTwoPi = static_cast<double>(phase::kLnTwoPi);
const double kTwoPi = static_cast<double>(phase::kTwoPi);

struct Rule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

Rule gauss_legendre(int n) {
    Rule rule;
    rule.x.resize(static_cast<std::size_t>(n));
    rule.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        long double z = std::cos(phase::kPi * (i + 0.75L) / (n + 0.5L));
        long double dp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0L);
            const long double step = p1 / dp;
            z -= step;
            if (std::fabs(step) < 1e-19L) break;
        }
        rule.x[static_cast<std::size_t>(i)] = static_cast<double>(z);
        rule.w[static_cast<std::size_t>(i)] = static_cast<double>(2.0L / ((1.0L - z * z) * dp * dp));
    }
    return rule;
}

// Z from the main sum and four corrections; theta_red is theta(t) mod 2 pi.
double fast_z(double t, double theta_red) {
    const long double alpha = std::sqrt(static_cast<long double>(t) / phase::kTwoPi);
    const long double whole = std::floor(alpha);
    const int N = static_cast<int>(whole);
    const double p = static_cast<double>(alpha - whole);
    const double inv_alpha = static_cast<double>(1.0L / alpha);
    const double main = 2.0 * detail::cosine_sum(t, theta_red, N);
    const double sign = N % 2 == 1 ? 1.0 : -1.0;
    return main + sign * std::sqrt(inv_alpha) * detail::rs_series(p, inv_alpha);
}

// Panel length: local Gram spacing 2 pi / ln(t / 2 pi), capped at 1.
double panel_length(double t, int panels_per_gram) {
    const double gram = kTwoPi / std::log(std::max(t / kTwoPi, std::exp(1.0)));
    return std::min(1.0, gram) / panels_per_gram;
}

// Gauss nodes of consecutive equal panels covering [a, b].
struct Nodes {
    std::vector<double> t;
    std::vector<double> w;
    std::vector<double> lo;  // left end of each panel
    double h = 0.0;
    std::size_t per_panel = 0;
};

Nodes panel_nodes(double a, double b, const Rule& rule, int panels_per_gram) {
    Nodes nodes;
    if (!(b > a)) return nodes;
    const long m = std::max(1L, static_cast<long>(std::ceil((b - a) / panel_length(b, panels_per_gram))));
    nodes.h = (b - a) / static_cast<double>(m);
    nodes.per_panel = rule.x.size();
    for (long i = 0; i < m; ++i) {
        const double lo = a + nodes.h * static_cast<double>(i);
        const double mid = lo + 0.5 * nodes.h;
        nodes.lo.push_back(lo);
        for (std::size_t j = 0; j < rule.x.size(); ++j) {
            nodes.t.push_back(mid + 0.5 * nodes.h * rule.x[j]);
            nodes.w.push_back(0.5 * nodes.h * rule.w[j]);
        }
    }
    return nodes;
}

// Z^2 at every node.  Panels starting below oracle_below use the oracle;
// the others expand theta to fourth order about the panel centre.
std::vector<double> z_squared_nodes(const Nodes& nodes, double oracle_below) {
    std::vector<double> out(nodes.t.size());
    std::vector<double> low;
    std::vector<std::size_t> low_index;
    for (std::size_t i = 0; i < nodes.lo.size(); ++i) {
        const std::size_t first = i * nodes.per_panel;
        if (nodes.lo[i] < oracle_below) {
            for (std::size_t j = first; j < first + nodes.per_panel; ++j) {
                low.push_back(nodes.t[j]);
                low_index.push_back(j);
            }
            continue;
        }
        const double c = nodes.lo[i] + 0.5 * nodes.h;
        const ThetaValue th = theta(c);
        const long double d3 = -1.0L / (12.0L * c * c);
        const long double d4 = 1.0L / (24.0L * c * c * c);
        for (std::size_t j = first; j < first + nodes.per_panel; ++j) {
            const long double d = static_cast<long double>(nodes.t[j]) - c;
            const long double shift = d * (th.dtheta + d * (0.5L * th.d2theta + d * (d3 + d * d4)));
            const double z = fast_z(nodes.t[j], phase::reduced(th.theta + shift));
            out[j] = z * z;
        }
    }
    if (!low.empty()) {
        const auto zetas = zeta_oracle(0.5, std::span<const double>(low));
        for (std::size_t i = 0; i < low.size(); ++i) out[low_index[i]] = std::norm(zetas[i]);
    }
    for (double v : out) {
        if (!std::isfinite(v)) fail(Errc::QuadratureFail, "non-finite Z^2 in quadrature");
    }
    return out;
}

struct Block {
    double center = 0.0;
    std::array<double, kMoments> moment{};  // int Z^2 (t - center)^k over the block
};

class MomentTable {
public:
    explicit MomentTable(const QuadratureOptions& opts) : opts_(opts), rule_(gauss_legendre(opts.nodes)) {}

    // Full blocks lying inside [0, t]; builds them on demand.
    std::size_t full_blocks(double t) {
        const auto count = static_cast<std::size_t>(std::floor(t / kBlockWidth));
        std::lock_guard lock(mutex_);
        while (blocks_.size() < count) blocks_.push_back(build(blocks_.size()));
        return count;
    }

    const Block& block(std::size_t b) const { return blocks_[b]; }

    double direct(double a, double b, double inv_x) const {
        const Nodes nodes = panel_nodes(a, b, rule_, opts_.panels_per_gram);
        const std::vector<double> z2 = z_squared_nodes(nodes, opts_.oracle_below);
        NeumaierSum sum;
        for (std::size_t j = 0; j < z2.size(); ++j) sum.add(nodes.w[j] * z2[j] * std::exp(-2.0 * nodes.t[j] * inv_x));
        return sum.value();
    }

private:
    Block build(std::size_t b) const {
        const double a = kBlockWidth * static_cast<double>(b);
        Block blk;
        blk.center = a + 0.5 * kBlockWidth;
        const Nodes nodes = panel_nodes(a, a + kBlockWidth, rule_, opts_.panels_per_gram);
        const std::vector<double> z2 = z_squared_nodes(nodes, opts_.oracle_below);
        for (std::size_t j = 0; j < z2.size(); ++j) {
            const double d = nodes.t[j] - blk.center;
            double v = nodes.w[j] * z2[j];
            for (int k = 0; k < kMoments; ++k) {
                blk.moment[static_cast<std::size_t>(k)] += v;
                v *= d;
            }
        }
        return blk;
    }

    QuadratureOptions opts_;
    Rule rule_;
    std::mutex mutex_;
    std::deque<Block> blocks_;  // stable references while growing
};

MomentTable& table_for(const QuadratureOptions& opts) {
    if (opts.panels_per_gram < 1 || opts.nodes < 2 || opts.nodes > 64 || !(opts.oracle_below >= 10.0)) {
        fail(Errc::ConfigInvalid, "quadrature needs panels_per_gram >= 1, 2 <= nodes <= 64, oracle_below >= 10");
    }
    static std::mutex registry_mutex;
    static std::map<std::tuple<int, int, double>, std::unique_ptr<MomentTable>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[{opts.panels_per_gram, opts.nodes, opts.oracle_below}];
    if (!slot) slot = std::make_unique<MomentTable>(opts);
    return *slot;
}

double upper_limit(double x, double mu_scale) { return std::min(ladder_mu(x, mu_scale), kCutFactor * x); }

// Solves ladder_main(y) = target for y; the function increases for y > 1.3.
double invert_main(double target) {
    double lo = 1.5;
    double hi = std::max(4.0, target);
    while (ladder_main(hi) < target) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ladder_main(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double z_squared(double t, const QuadratureOptions& opts) {
    if (!(t >= 0.0)) fail(Errc::RangeViolation, "Z^2 needs t >= 0");
    if (t < opts.oracle_below) return std::norm(zeta_oracle(0.5, t));
    const double z = fast_z(t, phase::reduced(theta(t).theta));
    return z * z;
}

double z_squared_integral(double T, const QuadratureOptions& opts) {
    if (!(T >= 10.0)) fail(Errc::DomainTooSmall, "the Z^2 integral needs T >= 10");
    MomentTable& table = table_for(opts);
    const std::size_t full = table.full_blocks(T);
    NeumaierSum sum;
    for (std::size_t b = 0; b < full; ++b) sum.add(table.block(b).moment[0]);
    sum.add(table.direct(kBlockWidth * static_cast<double>(full), T, 0.0));
    return sum.value();
}

double weighted_z_squared_integral(double x, double upper, const QuadratureOptions& opts) {
    if (!(x > 0.0) || !(upper >= 0.0)) fail(Errc::RangeViolation, "weighted integral needs x > 0, upper >= 0");
    MomentTable& table = table_for(opts);
    const std::size_t full = table.full_blocks(upper);
    const double inv_x = 1.0 / x;
    std::array<double, kMoments> coef{};
    double c = 1.0;
    for (int k = 0; k < kMoments; ++k) {
        coef[static_cast<std::size_t>(k)] = c;
        c *= -2.0 * inv_x / (k + 1);
    }
    NeumaierSum sum;
    for (std::size_t b = 0; b < full; ++b) {
        const Block& blk = table.block(b);
        double inner = 0.0;
        for (int k = kMoments - 1; k >= 0; --k) inner += coef[static_cast<std::size_t>(k)] * blk.moment[static_cast<std::size_t>(k)];
        sum.add(std::exp(-2.0 * blk.center * inv_x) * inner);
    }
    sum.add(table.direct(kBlockWidth * static_cast<double>(full), upper, inv_x));
    return sum.value();
}

QuadratureCheck check_quadrature(double T, double target, const QuadratureOptions& opts) {
    QuadratureOptions halved = opts;
    halved.panels_per_gram *= 2;
    QuadratureCheck check;
    check.coarse = z_squared_integral(T, opts);
    check.fine = z_squared_integral(T, halved);
    check.relative_change = std::fabs(check.fine - check.coarse) / std::fabs(check.fine);
    if (!(check.relative_change <= target)) {
        fail(Errc::QuadratureFail, "halving the panels moved the integral by " + std::to_string(check.relative_change));
    }
    return check;
}

double hardy_littlewood_Q(double T, const QuadratureOptions& opts) {
    if (!(T >= 100.0)) fail(Errc::DomainTooSmall, "Q(T) needs T >= 100");
    return z_squared_integral(T, opts) - T * std::log(T) - (2.0 * kGamma - 1.0 - kLnTwoPi) * T;
}

double ladder_main(double y) { return y * std::log(y) + (kGamma - kLnTwoPi) * y; }

double ladder_mu(double y, double mu_scale) { return mu_scale * y * std::log(y); }

LadderSolution solve_integral_equation(double rhs, double mu_scale, const LadderOptions& opts) {
    if (!(mu_scale >= 7.0)) fail(Errc::RangeViolation, "mu_scale must be >= 7");
    if (!(rhs >= 0.0)) fail(Errc::RangeViolation, "the right side must be nonnegative");
    const auto lhs = [&](double x) { return weighted_z_squared_integral(x, upper_limit(x, mu_scale), opts.quadrature); };

    LadderSolution sol;
    sol.mu_scale = mu_scale;
    sol.rhs = rhs;
    const double floor_value = lhs(kMinX);
    if (rhs <= floor_value) {
        sol.x = kMinX;
        sol.phi1 = kMinX / 2.0;
        sol.upper = upper_limit(kMinX, mu_scale);
        sol.defect = rhs > 0.0 ? (floor_value - rhs) / rhs : floor_value;
        return sol;
    }

    const double guess = 2.0 * invert_main(rhs);
    double hi = std::max(kMinX, guess * 1.01);
    double f_hi = lhs(hi);
    for (int i = 0; f_hi < rhs; ++i) {
        if (i == kBracketSteps) {
            fail(Errc::NoBracket, "no upper bracket for x in [" + std::to_string(kMinX) + ", " + std::to_string(hi) + "]");
        }
        hi *= 1.5;
        f_hi = lhs(hi);
    }
    double lo = std::max(kMinX, std::min(guess * 0.99, hi / 1.5));
    double f_lo = lhs(lo);
    while (f_lo > rhs) {
        lo = std::max(kMinX, lo / 1.5);
        f_lo = lhs(lo);
    }
    if (!(f_lo <= rhs && rhs <= f_hi)) {
        fail(Errc::NoBracket, "defect does not change sign on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = lhs(mid);
        if (f_mid < f_lo || f_mid > f_hi) fail(Errc::NoConvergence, "left side is not monotone near x = " + std::to_string(mid));
        if (f_mid < rhs) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    const bool take_lo = rhs - f_lo <= f_hi - rhs;
    sol.x = take_lo ? lo : hi;
    sol.phi1 = sol.x / 2.0;
    sol.upper = upper_limit(sol.x, mu_scale);
    sol.defect = (take_lo ? rhs - f_lo : f_hi - rhs) / rhs;
    if (!(sol.defect <= opts.defect_target)) {
        fail(Errc::NoConvergence, "defect " + std::to_string(sol.defect) + " above target");
    }
    return sol;
}

LadderSolution solve_phi(double T, double mu_scale, const LadderOptions& opts) {
    if (!(T >= 100.0)) fail(Errc::DomainTooSmall, "the ladder needs T >= 100");
    LadderSolution sol = solve_integral_equation(z_squared_integral(T, opts.quadrature), mu_scale, opts);
    sol.T = T;
    sol.below_diagonal = sol.phi1 <= T;
    return sol;
}

double representation_residual(const LadderSolution& sol, double c0) { return sol.rhs - ladder_main(sol.phi1) - c0; }

double calibrate_c0(double T_star, double mu_scale, const LadderOptions& opts) {
    const LadderSolution sol = solve_phi(T_star, mu_scale, opts);
    return sol.rhs - ladder_main(sol.phi1);
}

std::vector<LadderRow> ladder_scan(std::span<const double> Ts, double mu_scale, double c0, const LadderOptions& opts) {
    std::vector<LadderRow> rows;
    rows.reserve(Ts.size());
    for (double T : Ts) {
        const LadderSolution sol = solve_phi(T, mu_scale, opts);
        LadderRow row;
        row.T = T;
        row.x = sol.x;
        row.phi1 = sol.phi1;
        row.Q = hardy_littlewood_Q(T, opts.quadrature);
        row.Q1 = representation_residual(sol, c0);
        row.defect = sol.defect;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace zlab
