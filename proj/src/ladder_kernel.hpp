#pragma once

// Hot loops of the Z^2 quadrature.  Built in their own translation unit
// with AVX2/FMA code generation.

namespace zlab::detail {

/// sum_{n=1}^{N} n^{-1/2} cos(theta_red - t ln n), theta_red being theta(t)
/// already reduced to [-pi, pi].  N < 2^14.
double cosine_sum(double t, double theta_red, int N);

/// sum_{k=0}^{4} C_k(p) a^k with a = alpha^{-1}.
double rs_series(double p, double inv_alpha);

}  // namespace zlab::detail
