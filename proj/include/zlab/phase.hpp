#pragma once

// Extended-precision phase arithmetic.
//
// Every oscillatory quantity in the library is a phase of the form
// theta(t) - t ln n with t up to 1e7, i.e. magnitudes near 1e8 rad.  Plain
// doubles lose ~8 digits there, so phases are carried as x87 long double
// (64-bit mantissa) and reduced modulo 2*pi with a two-part (Cody-Waite)
// constant before being handed to double-precision sin/cos.

#include <cmath>
#include <cstddef>
#include <vector>

namespace zlab::phase {

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;
inline constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;
inline constexpr long double kLnTwoPi = 1.837877066409345483560659472811235280L;
inline constexpr long double kLnPi = 1.144729885849400174143427351353058712L;
inline constexpr long double kEulerGamma = 0.5772156649015328606065120900824024310L;

// 2*pi = kTwoPiHi + kTwoPiLo, with kTwoPiHi carrying 32 significant bits so
// that k * kTwoPiHi is exact for |k| < 2^31.
inline constexpr long double kTwoPiHi = 3373259426.0L / 536870912.0L;
inline constexpr long double kTwoPiLo = 2.43084020260247704059005768394e-10L;

/// Reduces x to [-pi, pi] (up to rounding at the endpoints).
inline long double reduce(long double x) noexcept {
    const long double k = std::nearbyint(x / kTwoPi);
    return (x - k * kTwoPiHi) - k * kTwoPiLo;
}

inline double reduced(long double x) noexcept { return static_cast<double>(reduce(x)); }

/// Table of ln n (long double and double) and n^{-1/2} for 1 <= n < size().
/// Built once on first use; immutable afterwards.
class LogTable {
public:
    explicit LogTable(std::size_t size);

    std::size_t size() const noexcept { return ln_.size(); }
    long double ln(std::size_t n) const noexcept { return ln_[n]; }
    double ln_d(std::size_t n) const noexcept { return ln_d_[n]; }
    double inv_sqrt(std::size_t n) const noexcept { return inv_sqrt_[n]; }

private:
    std::vector<long double> ln_;
    std::vector<double> ln_d_;
    std::vector<double> inv_sqrt_;
};

/// Shared table covering n < 2^14, enough for sqrt(t / 2 pi) up to t ~ 1.7e9.
const LogTable& logs();

}  // namespace zlab::phase
