#include "morsent/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace morsent::specfun {

namespace {

// Stirling series is applied once the argument has been shifted to
// Re(w) >= kAsymptoticEdge; below that the recurrence
// ln Gamma(z) = ln Gamma(z+1) - ln z accumulates the shift terms.
constexpr double kAsymptoticEdge = 12.0;

// B_{2j} / (2j (2j-1)) for the ln Gamma asymptotic series, j = 1..8.
constexpr std::array<double, 8> kLnGammaSeries = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

// B_{2j} / (2j) for the digamma asymptotic series, j = 1..7.
constexpr std::array<double, 7> kDigammaSeries = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
};

constexpr double kHalfLnTwoPi = 0.91893853320467274178032973640562;

template <typename T>
T ln_gamma_stirling(T w) {
    // ln Gamma(w) ~ (w - 1/2) ln w - w + ln(2 pi)/2 + sum B_2j/(2j(2j-1) w^(2j-1))
    const T inv = 1.0 / w;
    const T inv2 = inv * inv;
    T series = kLnGammaSeries[7] * inv2;
    for (int j = 6; j >= 0; --j) series = (series + kLnGammaSeries[j]) * inv2;
    // series now holds sum * inv2; one factor of inv remains.
    series = series * w;  // sum B_2j/(2j(2j-1)) w^(1-2j)
    using std::log;
    return (w - 0.5) * log(w) - w + kHalfLnTwoPi + series;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: argument must be > 0, got " + std::to_string(x));
    double shift = 0.0;
    while (x < kAsymptoticEdge) {
        shift += std::log(x);
        x += 1.0;
    }
    return ln_gamma_stirling(x) - shift;
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be > 0, got " + std::to_string(x));
    double shift = 0.0;
    while (x < kAsymptoticEdge) {
        shift += 1.0 / x;
        x += 1.0;
    }
    // psi(w) ~ ln w - 1/(2w) - sum B_2j/(2j w^2j)
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = kDigammaSeries[6] * inv2;
    for (int j = 5; j >= 0; --j) series = (series + kDigammaSeries[j]) * inv2;
    return std::log(x) - 0.5 * inv - series - shift;
}

std::complex<double> ln_gamma_complex(std::complex<double> z) {
    if (!(z.real() > 0.0))
        throw std::domain_error("ln_gamma_complex: Re(z) must be > 0, got Re = " +
                                std::to_string(z.real()));
    // Every shift term log(z+k) has a right-half-plane argument, so each is
    // continuous in Im(z) and conjugate-symmetric; the accumulated sum keeps
    // the final branch continuous along vertical lines instead of wrapping.
    std::complex<double> shift = 0.0;
    while (z.real() < kAsymptoticEdge) {
        shift += std::log(z);
        z += 1.0;
    }
    return ln_gamma_stirling(z) - shift;
}

double laguerre_eval(int n, double s, double xi) {
    if (n < 0) throw std::domain_error("laguerre_eval: degree must be >= 0");
    if (!(s > 0.0)) throw std::domain_error("laguerre_eval: parameter s must be > 0");
    if (xi < 0.0) throw std::domain_error("laguerre_eval: argument must be >= 0");
    if (n == 0) return 1.0;
    double lk_minus1 = 1.0;            // L_0
    double lk = 1.0 + s - xi;          // L_1
    for (int k = 2; k <= n; ++k) {
        const double next =
            ((2.0 * k - 1.0 + s - xi) * lk - (k - 1.0 + s) * lk_minus1) / k;
        lk_minus1 = lk;
        lk = next;
    }
    return lk;
}

LaguerreCoeffs laguerre_coeffs(int n, double s) {
    if (n < 0) throw std::domain_error("laguerre_coeffs: degree must be >= 0");
    if (!(s > 0.0)) throw std::domain_error("laguerre_coeffs: parameter s must be > 0");
    LaguerreCoeffs out;
    out.n = n;
    out.s = s;
    out.coeffs.resize(static_cast<std::size_t>(n) + 1);
    const double ln_top = ln_gamma(n + s + 1.0);
    for (int k = 0; k <= n; ++k) {
        const double ln_mag = ln_top - ln_gamma(s + k + 1.0) -
                              ln_gamma(static_cast<double>(n - k) + 1.0) -
                              ln_gamma(static_cast<double>(k) + 1.0);
        const double mag = std::exp(ln_mag);
        out.coeffs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? mag : -mag;
    }
    return out;
}

}  // namespace morsent::specfun
