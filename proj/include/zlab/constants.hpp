#pragma once

#include <string>
#include <vector>

namespace zlab {

/// Constants in front of the O-shapes.  Each is estimated on a calibration
/// grid (derive_constants in calibration.hpp), doubled and frozen here; strict mode
/// re-derives them and fails when any grew by more than 2x.
struct FittedConstants {
    double formula1 = 0.0;          // |Z'_1 - Z'_fd| <= C t^{-1/4} ln t
    double formula2 = 0.0;          // |Z'_2 - Z'_1| <= C T^{-1/4} ln T
    double spacing = 0.0;           // |gap - pi/ln P0| <= C T^{-3/4} / ln T
    double trig_sum = 0.0;          // |S(a,b)| <= A sqrt(a) t^{35/216 + 0.01}
    double partial_sum = 0.0;       // |sum_{n<M} w cos(phi)/sqrt n| <= C T^{0.162} ln T
    double lemma_sums = 0.0;        // parity-sum O-term: C T^{35/216 + 0.01} ln^2 T
    double w_tilde = 0.0;           // |sum Z' + 2 W~| <= C ln^2 T
    double titchmarsh = 0.0;        // |sum Z(t_2nu) - 2N| <= C N^{3/4} ln^{3/4} N
    double hardy_littlewood = 0.0;  // |Q(T)| <= C T^{1/4}
    double ladder_residual = 0.0;   // |Q1(T)| <= C ln T / T

    struct Entry {
        const char* name;
        double value;
    };
    std::vector<Entry> entries() const;
};

const FittedConstants& frozen_constants();

/// Short stable digest of the constant snapshot, stamped on emitted rows.
std::string snapshot_hash(const FittedConstants& constants);

/// Exponent used in every T^Delta budget: 35/216 + 0.01.
inline constexpr double kBudgetDelta = 35.0 / 216.0 + 0.01;
inline constexpr double kDeltaExponent = 35.0 / 216.0;

}  // namespace zlab
