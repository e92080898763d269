#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "polyharm/cellgeom.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/kernelnum.hpp"
#include "polyharm/quadrature.hpp"
#include "polyharm/random_gen.hpp"

using namespace polyharm;
using namespace polyharm::kernelnum;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pointwise kernel values") {
    CHECK(kernel_eval({0, 3}, {0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(kernel_eval({1, 1}, {0.0, 0.0}) == doctest::Approx(1.0));  // Poisson kernel center
    // U_{2,2}(1/2) = (3/4)^3 / (1/2)^4 = 6.75
    CHECK(kernel_eval({2, 2}, {0.5, 0.0}) == doctest::Approx(6.75).epsilon(1e-13));
    CHECK_THROWS_AS(kernel_eval({1, 1}, {1.0, 0.0}), SingularPoint);
    CHECK_THROWS_AS(kernel_eval({3, 2}, {0.0, 0.0}), BadIndex);
    // j = 0 kernels are defined everywhere, including z = 1
    CHECK(kernel_eval({0, 2}, {1.0, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("kernel relation U_{j,N} = (1-|z|^2)^{N-j} U_{j,j}") {
    symcalc::Rng rng(31415);
    for (int trial = 0; trial < 100; ++trial) {
        int N = 1 + static_cast<int>(symcalc::draw(rng, 4));
        int j = 1 + static_cast<int>(symcalc::draw(rng, N));
        double r = 0.98 * (static_cast<double>(symcalc::draw(rng, 1000)) / 1000.0);
        double t = 2.0 * kPi * (static_cast<double>(symcalc::draw(rng, 1000)) / 1000.0);
        std::complex<double> z = std::polar(r, t);
        double lhs = kernel_eval({j, N}, z);
        double rhs = std::pow(1.0 - std::norm(z), N - j) * kernel_eval({j, j}, z);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        // j = 0 reduces to the pure boundary weight
        CHECK(kernel_eval({0, N}, z) ==
              doctest::Approx(std::pow(1.0 - std::norm(z), N - 1)).epsilon(1e-12));
    }
}

TEST_CASE("I(a,b): closed forms and divergence dichotomy") {
    auto i10 = I_series(1.0, 0.0, 1e-12);
    REQUIRE(i10.finite);
    CHECK(i10.series.value == doctest::Approx(kPi / 2).epsilon(1e-14));

    auto i11 = I_series(1.0, 1.0, 1e-10);
    REQUIRE(i11.finite);
    CHECK(i11.series.converged);
    CHECK(i11.series.value == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(i11.series.tail_bound <= 1e-10 * kPi * 1.01);

    CHECK_FALSE(I_series(0.0, 1.0, 1e-8).finite);   // a = 2(b-1) boundary
    CHECK_FALSE(I_series(-1.0, 0.0, 1e-8).finite);  // a = -1 boundary
    CHECK_FALSE(I_series(-1.2, 0.5, 1e-8).finite);
    CHECK(I_series(0.01, 1.0, 1e-8).finite);

    CHECK_THROWS_AS(I_series(1.0, -0.5, 1e-8), BadIndex);
}

TEST_CASE("I(a,b) series agrees with an independent log-Gamma oracle") {
    // direct evaluation of pi sum [(b)_j]^2/(j! (a+1)_{j+1}) through lgamma,
    // no shared recurrence; terms decay like j^{-4} here so 4000 terms give
    // ~1e-11 truncation
    const double a = 2.5, b = 0.75;
    double direct = 0.0;
    for (int j = 0; j < 4000; ++j) {
        const double log_term = 2.0 * (std::lgamma(b + j) - std::lgamma(b)) -
                                std::lgamma(j + 1.0) -
                                (std::lgamma(a + 2.0 + j) - std::lgamma(a + 1.0));
        direct += std::exp(log_term);
    }
    direct *= kPi;
    auto res = I_series(a, b, 1e-12);
    REQUIRE(res.finite);
    CHECK(res.series.value == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("I(a,b) verdicts match the exact lemma inequalities across both boundaries") {
    symcalc::Rng rng(60657);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // straddle either a = -1 (radial) or a = 2(b-1) (point singularity)
        const bool radial = symcalc::draw(rng, 2) == 0;
        const double off = (static_cast<double>(symcalc::draw(rng, 9)) + 1.0) / 20.0;
        const bool above = symcalc::draw(rng, 2) == 0;
        double a, b;
        if (radial) {
            b = static_cast<double>(symcalc::draw(rng, 40)) / 100.0;  // keep 2(b-1) below -1
            a = -1.0 + (above ? off : -off);
        } else {
            b = 1.0 + static_cast<double>(symcalc::draw(rng, 300)) / 100.0;
            a = 2.0 * (b - 1.0) + (above ? off : -off);
        }
        const bool expect_finite = a > -1.0 && (b == 0.0 || a > 2.0 * (b - 1.0));
        CHECK(I_series(a, b, 1e-6).finite == expect_finite);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("circle averages") {
    CHECK(circle_average(0.0, 0.7, 1e-12).value == doctest::Approx(1.0));
    CHECK(circle_average(3.0, 0.0, 1e-12).value == doctest::Approx(1.0));
    // b = 1: geometric series 1/(1-r^2)
    auto geo = circle_average(1.0, 0.5, 1e-12);
    CHECK(geo.converged);
    CHECK(geo.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    // nondecreasing in r on a grid
    for (double b : {0.4, 1.0, 2.5}) {
        double prev = 0.0;
        for (double r = 0.0; r < 0.95; r += 0.05) {
            double v = circle_average(b, r, 1e-11).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
    // matches direct angular quadrature of |1-r xi|^{-2b}
    quadrature::IntegrandSpec f;
    const double b = 1.7;
    f.evaluator = [b](const quadrature::RadialPoint& rp, double t) {
        const double s = std::sin(0.5 * t);
        return std::pow(rp.eps * rp.eps + 4.0 * rp.r * s * s, -b);
    };
    f.singular_angles = {0.0};
    for (double r : {0.3, 0.8, 0.95}) {
        const quadrature::RadialPoint rp{r, 1.0 - r};
        const double via_quad = quadrature::angular_integral(f, rp, 1e-11) / (2.0 * kPi);
        CHECK(circle_average(b, r, 1e-11).value == doctest::Approx(via_quad).epsilon(1e-9));
    }
}

TEST_CASE("uniform-density potential") {
    // theta = 0 collapses to the Poisson integral of 1
    for (double x : {0.0, 0.3, -0.72, 0.9}) {
        CHECK(olofsson_uniform_potential(0, {x, 0.05}, 1e-11) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK(olofsson_uniform_potential(1, {0.0, 0.0}, 1e-11) == doctest::Approx(1.0));
    // theta = 1, z = 1/2: (3/4)^3 sum [(2)_k/k!]^2 (1/4)^k = 5/4
    CHECK(olofsson_uniform_potential(1, {0.5, 0.0}, 1e-12) == doctest::Approx(1.25).epsilon(1e-11));
    CHECK_THROWS_AS(olofsson_uniform_potential(-1, {0.0, 0.0}, 1e-8), BadIndex);
    CHECK_THROWS_AS(olofsson_uniform_potential(1, {1.0, 0.0}, 1e-8), RadiusViolation);
}

TEST_CASE("kernel norm: finite case reduces to I(a,b)") {
    // ||U_{0,2}||_{1,0}^1 = I(1,0) = pi/2
    auto v = kernel_norm({0, 2}, 1.0, 0.0, 1e-10);
    REQUIRE(v.finite);
    CHECK(v.value == doctest::Approx(kPi / 2).epsilon(1e-10));
    CHECK(v.cross_validated);
    CHECK(std::abs(v.quadrature_value - v.value) <= 1e-6 * v.value);

    // Poisson kernel: finite iff alpha > max{p-2, -1-p}
    auto finite_side = kernel_norm({1, 1}, 0.5, -1.3, 1e-9);
    CHECK(finite_side.finite);
    auto divergent_side = kernel_norm({1, 1}, 0.5, -1.6, 1e-9,
                                      KernelNormOptions{.trace_k_max = 8, .trace_k_cap = 12});
    CHECK_FALSE(divergent_side.finite);
}

TEST_CASE("kernel norm: divergent case produces a growing trace") {
    // boundary case alpha = b_{2,2}(1/4) = -7/4 exactly
    KernelNormOptions opt;
    opt.trace_k_max = 9;
    opt.trace_k_cap = 9;
    auto v = kernel_norm({2, 2}, 0.25, -1.75, 1e-8, opt);
    REQUIRE_FALSE(v.finite);
    REQUIRE(v.divergence_trace.size() >= 6);
    for (std::size_t i = 1; i < v.divergence_trace.size(); ++i)
        CHECK(v.divergence_trace[i].second > v.divergence_trace[i - 1].second);
}

TEST_CASE("kernel norm verdicts agree with the critical curves near the boundary") {
    const double offsets[2] = {-0.1, 0.1};
    for (int N = 1; N <= 3; ++N)
        for (int j = 0; j <= N; ++j)
            for (double p : {0.25, 0.5, 1.0}) {
                const double b = rat_to_double(cellgeom::b_curve(j, N).eval(rat_from_double(p)));
                for (double off : offsets) {
                    KernelNormOptions opt;
                    opt.cross_validate = false;
                    opt.trace_k_max = 4;  // keep the unit test light
                    opt.trace_k_cap = 4;
                    auto v = kernel_norm({j, N}, p, b + off, 1e-7, opt);
                    CHECK(v.finite == (off > 0));
                }
            }
}

TEST_CASE("annulus regimes") {
    auto [e1, log1] = annulus_regime_exponent(2, 0.25);
    CHECK(e1 == doctest::Approx(1.75));
    CHECK(log1);
    auto [e2, log2] = annulus_regime_exponent(2, 1.0);
    CHECK(e2 == doctest::Approx(1.0));
    CHECK_FALSE(log2);
    auto [e3, log3] = annulus_regime_exponent(3, 0.1);
    CHECK(e3 == doctest::Approx(1.5));
    CHECK_FALSE(log3);
}

TEST_CASE("annulus norm values and divergence flag") {
    CHECK_THROWS_AS(annulus_norm(1, 2.0, 0.0, 1e-8), NonIntegrable);

    // closed form for N = 1, p = 1: int_{r<|z|<1} U_{1,1} dA = pi (1-r^2)
    // (the Poisson kernel has angular mean 1/(1-r^2) against weight (1-r^2))
    for (double r : {0.0, 0.5, 0.875}) {
        const double v = annulus_norm(1, 1.0, r, 1e-10);
        CHECK(v == doctest::Approx(kPi * (1.0 - r * r)).epsilon(1e-9));
    }

    // N = 2, p = 1: value over the whole disk equals I(3, 2) via the series
    auto direct = I_series(3.0, 2.0, 1e-11);
    REQUIRE(direct.finite);
    CHECK(annulus_norm(2, 1.0, 0.0, 1e-10) == doctest::Approx(direct.series.value).epsilon(1e-9));
}

TEST_CASE("annulus slope fit reproduces the boundary regimes (coarse radii)") {
    // light version of the acceptance scan: k = 4..8
    auto fit1 = annulus_slope_fit(2, 0.4, 4, 8, 1e-9);
    CHECK(std::abs(fit1.slope - 1.6) < 0.1);
    auto fit2 = annulus_slope_fit(2, 0.2, 4, 8, 1e-9);
    CHECK(std::abs(fit2.slope - 1.6) < 0.1);
}
