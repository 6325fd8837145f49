#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zlab/accumulate.hpp"
#include "zlab/gram.hpp"
#include "zlab/report.hpp"
#include "zlab/zeval.hpp"

namespace zlab {

/// S(a, b) = sum_{a <= n < b} n^{it} over a dyadic range 0 < a <= b <= 2a.
struct TrigSum {
    long a = 0;
    long b = 0;
    double t = 0.0;
    std::complex<double> value;
    double abs_over_sqrt_a = 0.0;
    bool short_range = false;  // b <= sqrt(t / 2 pi); recorded, not enforced
};

/// RangeViolation unless 0 < a <= b <= 2a and t >= 0.
TrigSum trig_sum(long a, long b, double t);

struct DeltaFit {
    double delta = 0.0;     // slope of ln(max_b |S| / sqrt a) against ln t
    double constant = 0.0;  // exp(intercept)
    std::size_t samples = 0;
};

/// For every t the largest |S(a, b)| / sqrt a over a in a_grid and
/// a < b <= 2a, then a least-squares line in log-log.  DegenerateFit when a
/// grid is empty or the t values span less than two decades.
DeltaFit measure_delta(std::span<const long> a_grid, std::span<const double> t_grid);

/// Same statistic with the phases t ln n replaced by independent uniform
/// draws (seeded), the square-root cancellation baseline.
DeltaFit measure_delta_control(std::span<const long> a_grid, std::span<const double> t_grid, std::uint64_t seed);

enum class SumWeight { unit, log_ratio, xcotx };
enum class SumPhase { cos, sin };

/// X(n) cot X(n) with X = (pi/2) ln(P0/n) / ln P0; exactly 0 at n = 1.
double x_cot_x(long n, double P0);

/// ln(P0/n) tan(omega/2), omega = pi ln n / ln P0, evaluated directly in
/// long double.  Equals (2/pi) ln P0 X cot X.
double log_ratio_tan_half_omega(long n, double P0);

/// sum_{n < M} weight(n) phase(t~ ln n) / sqrt n, where t~ is the first
/// shifted point in the span.  Requires 1 <= M <= P0 of the span base.
double partial_weighted_sum(long M, const Span& span, SumWeight weight, SumPhase phase, const EvalConfig& cfg = {});

/// Z' at one shifted point of the span, fixed-truncation formula on the
/// tile containing it.
struct ShiftedDerivative {
    long nu = 0;
    double t = 0.0;
    double zprime = 0.0;
};

/// Every shifted point of the span in ascending order with its Z'.
std::vector<ShiftedDerivative> shifted_derivatives(const Span& span, const EvalConfig& cfg = {});

/// psi(T) = ln ln T.
double default_psi(double T);

/// sum Z'(t~_nu); main term 0, budget C T^Delta ln^2 T.
SumReport lemma1_sum(const Span& span, const EvalConfig& cfg = {});

/// sum (-1)^nu Z'(t~_nu); main term -(1/2pi) H ln^2(T/2pi).
SumReport lemma2_alt_sum(const Span& span, const EvalConfig& cfg = {});

struct ParitySplit {
    SumReport even;  // main term -(1/4pi) H ln^2(T/2pi)
    SumReport odd;   // main term +(1/4pi) H ln^2(T/2pi)
    ExactSum even_terms;
    ExactSum odd_terms;
    double even_from_lemmas = 0.0;  // (lemma1 + lemma2) / 2, exact
    double odd_from_lemmas = 0.0;   // (lemma1 - lemma2) / 2, exact
};

/// Even- and odd-index sums computed directly and through the two lemma
/// sums.  Both channels hold the same summands, so they agree bit for bit.
ParitySplit lemma3_parity_sums(const Span& span, const EvalConfig& cfg = {});

/// 2 (-1)^{nu+1} sum_{n < P0} n^{-1/2} ln(P0/n) cos(t~_nu ln n), with P0
/// from the tile holding t~_nu.  OutOfWindow if the point is not in the span.
double zprime_at_gram(long nu, const Span& span, const EvalConfig& cfg = {});

struct WTilde {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;
    double w4 = 0.0;
    long nu_first = 0;
    long N = 0;           // index distance between the last and first point
    double direct = 0.0;  // sum Z'(t~_nu)
    double residual = 0.0;
    double error_budget = 0.0;
    bool pass = false;

    double total() const noexcept { return w1 + w2 + w3 + w4; }
};

/// The four closed-form pieces of the alternating geometric sum, with
/// P0 of the span base and phi = t~_first ln n.  residual is
/// |direct + 2 W~|, budget C ln^2 T.  Needs two or more shifted points.
WTilde w_tilde_decomposition(const Span& span, const EvalConfig& cfg = {});

/// sum Z(t_{2nu}) and sum Z(t_{2nu+1}) for nu = nu0 .. nu0 + N - 1 over
/// classical points; main terms 2N and -2N, budget C N^{3/4} ln^{3/4} N.
std::pair<SumReport, SumReport> titchmarsh_classical_sums(long N, long nu0, const EvalConfig& cfg = {});

}  // namespace zlab
