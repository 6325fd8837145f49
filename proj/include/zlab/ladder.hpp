#pragma once

#include <span>
#include <vector>

namespace zlab {

/// Z^2 quadrature layout: t is cut into blocks of width 8, each block into
/// panels no longer than 1/panels_per_gram of the local Gram spacing, and
/// each panel carries a Gauss-Legendre rule with `nodes` points.  Below
/// oracle_below the integrand is |zeta|^2 from the Euler-Maclaurin oracle,
/// above it the main sum with four Riemann-Siegel corrections.
struct QuadratureOptions {
    int panels_per_gram = 1;
    int nodes = 12;
    double oracle_below = 1000.0;
};

/// Z(t)^2 = |zeta(1/2 + it)|^2 as used by the quadrature; t >= 0.
double z_squared(double t, const QuadratureOptions& opts = {});

/// int_0^T Z^2 dt.  Requires T >= 10.  QuadratureFail if the integrand is
/// not finite.
double z_squared_integral(double T, const QuadratureOptions& opts = {});

/// int_0^{upper} Z^2 e^{-2t/x} dt from the same block moments.
double weighted_z_squared_integral(double x, double upper, const QuadratureOptions& opts = {});

struct QuadratureCheck {
    double coarse = 0.0;
    double fine = 0.0;  // panels halved
    double relative_change = 0.0;
};

/// Compares the integral with panels of half the width; QuadratureFail when
/// the relative change exceeds `target`.
QuadratureCheck check_quadrature(double T, double target = 1e-6, const QuadratureOptions& opts = {});

/// Q(T) = int_0^T Z^2 - T ln T - (2 gamma - 1 - ln 2 pi) T.  Requires T >= 100.
double hardy_littlewood_Q(double T, const QuadratureOptions& opts = {});

/// y ln y + (gamma - ln 2 pi) y, the representation without its constant.
double ladder_main(double y);

/// Upper limit mu(y) = mu_scale * y * ln y of the integral equation.
double ladder_mu(double y, double mu_scale);

struct LadderSolution {
    double T = 0.0;
    double mu_scale = 0.0;
    double x = 0.0;
    double phi1 = 0.0;      // x / 2
    double residual = 0.0;  // Q1(T) with the constant below
    double c0 = 0.0;
    double rhs = 0.0;       // int_0^T Z^2
    double defect = 0.0;    // |lhs(x) - rhs| / rhs
    double upper = 0.0;     // integration limit actually used for the left side
    bool below_diagonal = false;  // phi1 <= T
};

struct LadderOptions {
    QuadratureOptions quadrature;
    double defect_target = 1e-6;
};

/// Solves int_0^{mu(x)} Z^2 e^{-2t/x} dt = rhs for x by bracketing and
/// bisection.  The left side is cut where e^{-2t/x} drops below e^{-36}.
/// When rhs is at or below the left side at the lowest admissible x the
/// solution is that lower edge.  NoBracket when no upper bracket is found.
LadderSolution solve_integral_equation(double rhs, double mu_scale, const LadderOptions& opts = {});

/// solve_integral_equation with rhs = int_0^T Z^2.  Requires mu_scale >= 7
/// and T >= 100.  residual and c0 are left at 0 (see representation_residual).
LadderSolution solve_phi(double T, double mu_scale, const LadderOptions& opts = {});

/// Q1(T) = int_0^T Z^2 - ladder_main(phi1) - c0.
double representation_residual(const LadderSolution& sol, double c0);

/// The constant that zeroes the residual at the anchor T*.
double calibrate_c0(double T_star, double mu_scale, const LadderOptions& opts = {});

struct LadderRow {
    double T = 0.0;
    double x = 0.0;
    double phi1 = 0.0;
    double Q = 0.0;
    double Q1 = 0.0;
    double defect = 0.0;
};

std::vector<LadderRow> ladder_scan(std::span<const double> Ts, double mu_scale, double c0,
                                   const LadderOptions& opts = {});

}  // namespace zlab
