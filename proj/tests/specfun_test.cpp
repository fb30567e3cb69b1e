#include "morsent/specfun.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "morsent/quad.hpp"
#include "test_util.hpp"

using namespace morsent;
using morsent::testing::check_abs;
using morsent::testing::check_rel;
using morsent::testing::kEulerGamma;

TEST_CASE("ln_gamma known values") {
    check_abs(specfun::ln_gamma(1.0), 0.0, 1e-13);
    // Gamma(1/2) = sqrt(pi)
    check_rel(specfun::ln_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-13);
    // Gamma(6) = 5!
    check_rel(specfun::ln_gamma(6.0), std::log(120.0), 1e-13);
    check_abs(specfun::ln_gamma(2.0), 0.0, 1e-13);
}

TEST_CASE("ln_gamma domain errors") {
    CHECK_THROWS_AS(specfun::ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::ln_gamma(-3.2), std::domain_error);
}

TEST_CASE("gamma recurrence Gamma(x+1) = x Gamma(x)") {
    for (double x : {0.3, 1.7, 9.5}) {
        const double ratio = std::exp(specfun::ln_gamma(x + 1.0) - specfun::ln_gamma(x));
        check_rel(ratio, x, 1e-12);
    }
}

TEST_CASE("digamma values from the recurrence oracle") {
    // psi(1) = -gamma; psi(x+1) = psi(x) + 1/x builds the rest.
    check_abs(specfun::digamma(1.0), -kEulerGamma, 1e-12);
    check_abs(specfun::digamma(3.0), -kEulerGamma + 1.0 + 0.5, 1e-12);
    check_abs(specfun::digamma(5.0), -kEulerGamma + 1.0 + 0.5 + 1.0 / 3.0 + 0.25, 1e-12);
    CHECK_THROWS_AS(specfun::digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::digamma(-1.0), std::domain_error);
}

TEST_CASE("complex log gamma: real axis and reflection moduli") {
    const auto at_one = specfun::ln_gamma_complex({1.0, 0.0});
    check_abs(at_one.real(), 0.0, 1e-13);
    check_abs(at_one.imag(), 0.0, 1e-13);

    // |Gamma(1/2 + ip)|^2 = pi / cosh(pi p)
    const auto lg_half = specfun::ln_gamma_complex({0.5, 1.0});
    const double mod2_half = std::exp(2.0 * lg_half.real());
    check_rel(mod2_half, std::numbers::pi / std::cosh(std::numbers::pi), 1e-12);
    check_rel(std::exp(lg_half.real()), 0.52059096361675195, 1e-12);

    // Gamma(3/2 + ip) = (1/2 + ip) Gamma(1/2 + ip), same reflection identity
    const auto lg_3half = specfun::ln_gamma_complex({1.5, 2.0});
    const double mod2 = std::exp(2.0 * lg_3half.real());
    const double expected = (0.25 + 4.0) * std::numbers::pi / std::cosh(2.0 * std::numbers::pi);
    check_rel(mod2, expected, 1e-12);
}

TEST_CASE("complex log gamma: exp(result) reproduces Gamma on integers") {
    for (int n : {1, 2, 3, 6, 12, 20}) {
        const auto lg = specfun::ln_gamma_complex({static_cast<double>(n), 0.0});
        check_rel(std::exp(lg.real()), std::tgamma(static_cast<double>(n)), 1e-12);
        check_abs(lg.imag(), 0.0, 1e-13);
    }
}

TEST_CASE("complex-real consistency") {
    for (double x : {0.5, 2.0, 10.0}) {
        const auto lg = specfun::ln_gamma_complex({x, 0.0});
        check_abs(lg.real(), specfun::ln_gamma(x), 1e-12);
        CHECK(lg.imag() == 0.0);
    }
}

TEST_CASE("conjugate symmetry of complex log gamma") {
    for (double a : {0.7, 3.3, 11.5}) {
        for (double q : {0.3, 2.7, 19.0}) {
            const auto lg = specfun::ln_gamma_complex({a, q});
            const auto lg_conj = specfun::ln_gamma_complex({a, -q});
            check_abs(lg_conj.real(), lg.real(), 1e-13);
            check_abs(lg_conj.imag(), -lg.imag(), 1e-13);
        }
    }
}

TEST_CASE("phase continuity along vertical lines") {
    // The imaginary part must accumulate smoothly in p, never jumping by 2 pi.
    for (double a : {0.3, 0.8, 2.5}) {
        double prev = specfun::ln_gamma_complex({a, 0.0}).imag();
        for (double q = 0.01; q <= 35.0; q += 0.01) {
            const double cur = specfun::ln_gamma_complex({a, q}).imag();
            CHECK(std::abs(cur - prev) < 0.5);
            prev = cur;
        }
    }
}

TEST_CASE("complex log gamma domain errors") {
    CHECK_THROWS_AS(specfun::ln_gamma_complex({0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(specfun::ln_gamma_complex({-1.5, 0.3}), std::domain_error);
}

TEST_CASE("laguerre_eval small-degree values") {
    CHECK(specfun::laguerre_eval(0, 7.0, 3.2) == 1.0);
    CHECK(specfun::laguerre_eval(1, 1.0, 0.5) == 1.5);  // 1 + s - xi
    // L_2^1(xi) = xi^2/2 - 3 xi + 3, so L_2^1(2) = -1
    check_abs(specfun::laguerre_eval(2, 1.0, 2.0), -1.0, 1e-14);
    CHECK_THROWS_AS(specfun::laguerre_eval(-1, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::laguerre_eval(2, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::laguerre_eval(2, 1.0, -0.5), std::domain_error);
}

TEST_CASE("laguerre_coeffs examples and invariants") {
    const auto c0 = specfun::laguerre_coeffs(0, 3.0);
    REQUIRE(c0.coeffs.size() == 1);
    check_rel(c0.coeffs[0], 1.0, 1e-13);

    const auto c1 = specfun::laguerre_coeffs(1, 1.0);
    REQUIRE(c1.coeffs.size() == 2);
    check_rel(c1.coeffs[0], 2.0, 1e-13);
    check_rel(c1.coeffs[1], -1.0, 1e-13);

    const auto c2 = specfun::laguerre_coeffs(2, 1.0);
    REQUIRE(c2.coeffs.size() == 3);
    check_rel(c2.coeffs[0], 3.0, 1e-13);
    check_rel(c2.coeffs[1], -3.0, 1e-13);
    check_rel(c2.coeffs[2], 0.5, 1e-13);

    for (int n = 0; n <= 8; ++n) {
        for (double s : {0.5, 1.0, 3.0, 7.5}) {
            const auto lc = specfun::laguerre_coeffs(n, s);
            REQUIRE(lc.coeffs.size() == static_cast<std::size_t>(n) + 1);
            // c_0 = Gamma(n+s+1) / (Gamma(s+1) n!)
            const double lead = std::exp(specfun::ln_gamma(n + s + 1.0) -
                                         specfun::ln_gamma(s + 1.0) -
                                         specfun::ln_gamma(n + 1.0));
            check_rel(lc.coeffs[0], lead, 1e-12);
            for (int k = 0; k <= n; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(((k % 2 == 0) ? lc.coeffs[k] > 0.0 : lc.coeffs[k] < 0.0));
            }
        }
    }
}

TEST_CASE("laguerre recurrence matches the monomial sum") {
    // The discrepancy is scaled by the Horner-propagated magnitude sum: the
    // alternating monomials cancel up to ~1e8x the value at large xi, which
    // bounds what any double-precision summation of the coefficients can give.
    for (int n = 0; n <= 8; ++n) {
        for (double s : {0.5, 1.0, 3.0, 7.5}) {
            const auto lc = specfun::laguerre_coeffs(n, s);
            for (int i = 0; i < 100; ++i) {
                const double xi = 40.0 * i / 99.0;
                double horner = lc.coeffs[n];
                double magnitude = std::abs(lc.coeffs[n]);
                for (int k = n - 1; k >= 0; --k) {
                    horner = horner * xi + lc.coeffs[k];
                    magnitude = magnitude * xi + std::abs(lc.coeffs[k]);
                }
                const double eval = specfun::laguerre_eval(n, s, xi);
                CAPTURE(n);
                CAPTURE(s);
                CAPTURE(xi);
                CHECK(std::abs(eval - horner) <= 1e-9 * std::max(magnitude, 1.0));
            }
        }
    }
}

TEST_CASE("laguerre orthogonality under quadrature") {
    // integral_0^inf e^-xi xi^s L_n^s L_m^s = delta_nm Gamma(n+s+1)/n!
    for (double s : {1.0, 3.0}) {
        for (int n = 0; n <= 4; ++n) {
            for (int m = 0; m <= n; ++m) {
                const auto f = [&](double xi) {
                    return std::exp(-xi + s * std::log(xi)) *
                           specfun::laguerre_eval(n, s, xi) *
                           specfun::laguerre_eval(m, s, xi);
                };
                const auto r = quad::integrate(f, 1e-14, 140.0, {});
                const double norm =
                    std::exp(specfun::ln_gamma(n + s + 1.0) - specfun::ln_gamma(n + 1.0));
                const double expected = (n == m) ? norm : 0.0;
                CAPTURE(s);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(std::abs(r.value - expected) <= 1e-8 * norm);
            }
        }
    }
}
