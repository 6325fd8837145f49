#pragma once

#include <cmath>
#include <vector>

namespace zlab {

/// Exact floating-point accumulator (Shewchuk expansion, as in Python's
/// math.fsum).  The running value is held as non-overlapping partials, so
/// adding terms or whole accumulators is exact and value() rounds once.
/// Two accumulators holding the same multiset of terms return bit-identical
/// values regardless of how the terms were grouped.
class ExactSum {
public:
    void add(double x);
    void add(const ExactSum& other);
    void negate();

    /// Correctly rounded sum of everything added so far.
    double value() const;

    friend ExactSum operator+(ExactSum a, const ExactSum& b) {
        a.add(b);
        return a;
    }
    friend ExactSum operator-(ExactSum a, ExactSum b) {
        b.negate();
        a.add(b);
        return a;
    }

private:
    std::vector<double> partials_;
    double special_ = 0.0;  // collects inf/nan so they propagate
};

/// Kahan-Babuska (Neumaier) running sum; cheap and adequate for long
/// quadrature sums where only the final value matters.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace zlab
