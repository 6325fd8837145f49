#include "zlab/accumulate.hpp"

#include <utility>

namespace zlab {

void ExactSum::add(double x) {
    if (!std::isfinite(x)) {
        special_ += x;
        return;
    }
    std::size_t i = 0;
    for (double y : partials_) {
        if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
        const double hi = x + y;
        const double lo = y - (hi - x);
        if (lo != 0.0) partials_[i++] = lo;
        x = hi;
    }
    partials_.resize(i);
    partials_.push_back(x);
}

void ExactSum::add(const ExactSum& other) {
    // Copy first: other may alias *this.
    const std::vector<double> terms = other.partials_;
    const double special = other.special_;
    for (double p : terms) add(p);
    special_ += special;
}

void ExactSum::negate() {
    for (double& p : partials_) p = -p;
    special_ = -special_;
}

double ExactSum::value() const {
    if (special_ != 0.0 || std::isnan(special_)) return special_;
    std::size_t n = partials_.size();
    if (n == 0) return 0.0;
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
        const double x = hi;
        const double y = partials_[--n];
        hi = x + y;
        const double yr = hi - x;
        lo = y - yr;
        if (lo != 0.0) break;
    }
    // Round-half-even correction when the remainder sits exactly on a tie.
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
        const double y = lo * 2.0;
        const double x = hi + y;
        const double yr = x - hi;
        if (y == yr) hi = x;
    }
    return hi;
}

}  // namespace zlab
