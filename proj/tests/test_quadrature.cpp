#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyharm/errors.hpp"
#include "polyharm/quadrature.hpp"

using namespace polyharm;
using namespace polyharm::quadrature;

namespace {

constexpr double kPi = std::numbers::pi;

IntegrandSpec radial_power(double a) {
    IntegrandSpec f;
    f.evaluator = [a](const RadialPoint& rp, double) {
        return std::pow(rp.eps * (1.0 + rp.r), a);
    };
    f.radial_exponent_at_1 = a;
    return f;
}

// (1-|z|^2)^a |1-z|^{-2b}
IntegrandSpec weight(double a, double b) {
    IntegrandSpec f;
    f.evaluator = [a, b](const RadialPoint& rp, double t) {
        const double s = std::sin(0.5 * t);
        const double d2 = rp.eps * rp.eps + 4.0 * rp.r * s * s;
        return std::pow(rp.eps * (1.0 + rp.r), a) * std::pow(d2, -b);
    };
    f.radial_exponent_at_1 = a + std::min(0.0, 1.0 - 2.0 * b);
    if (b > 0) f.singular_angles = {0.0};
    return f;
}

}  // namespace

TEST_CASE("constant integrates to the disk area") {
    auto res = integrate(radial_power(0.0), Region::disk(), 1e-12);
    CHECK(std::abs(res.value - kPi) < 1e-12 * kPi);
}

TEST_CASE("radial polynomial weights integrate exactly") {
    // int (1-r^2)^a dA = pi/(a+1) for integer a in [0, 8]
    for (int a = 0; a <= 8; ++a) {
        auto res = integrate(radial_power(a), Region::disk(), 1e-12);
        const double expected = kPi / (a + 1.0);
        CHECK(std::abs(res.value - expected) < 1e-10 * expected);
    }
}

TEST_CASE("fractional and near-critical boundary weights") {
    auto res = integrate(radial_power(1.5), Region::disk(), 1e-10);
    CHECK(std::abs(res.value - kPi / 2.5) < 1e-9 * kPi);

    auto near = integrate(radial_power(-0.9), Region::disk(), 1e-9);
    CHECK(std::abs(near.value - kPi / 0.1) < 1e-7 * kPi / 0.1);
}

TEST_CASE("point singularity at z = 1: I(1,1) = pi") {
    auto res = integrate(weight(1.0, 1.0), Region::disk(), 1e-9);
    CHECK(std::abs(res.value - kPi) < 1e-8 * kPi);
}

TEST_CASE("annulus and sector regions") {
    auto ann = integrate(radial_power(0.0), Region::annulus(0.5), 1e-11);
    CHECK(std::abs(ann.value - kPi * 0.75) < 1e-10);

    auto sec = integrate(radial_power(0.0), Region::sector(0.0, kPi / 2), 1e-11);
    CHECK(std::abs(sec.value - kPi / 4) < 1e-10);

    auto sec2 = integrate(weight(1.0, 0.4), Region::sector(kPi / 2, kPi), 1e-9);
    auto sec3 = integrate(weight(1.0, 0.4), Region::sector(-kPi / 2, 0.0), 1e-9);
    CHECK(sec2.value > 0);
    CHECK(sec3.value > sec2.value);  // nearer the singular point

    CHECK_THROWS(integrate(radial_power(0.0), Region::sector(0.0, 8.0), 1e-9));
}

TEST_CASE("angular rule converges spectrally on a smooth corpus") {
    // error at n nodes vs 2n nodes drops by >= 4x for smooth integrands
    IntegrandSpec f;
    f.evaluator = [](const RadialPoint& rp, double t) {
        return std::exp(rp.r * std::cos(t)) * (2.0 + std::sin(3 * t));
    };
    const RadialPoint rp{0.7, 0.3};
    auto rule = [&](int n) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += f.evaluator(rp, 2.0 * kPi * k / n);
        return s * (2.0 * kPi / n);
    };
    const double ref = angular_integral(f, rp, 1e-13);
    double err16 = std::abs(rule(16) - ref);
    double err32 = std::abs(rule(32) - ref);
    CHECK(err32 * 4.0 <= err16 + 1e-15);
}

TEST_CASE("nonintegrable boundary weight is rejected") {
    CHECK_THROWS_AS(integrate(radial_power(-1.0), Region::disk(), 1e-8), NonIntegrable);
    CHECK_THROWS_AS(integrate(radial_power(-1.5), Region::disk(), 1e-8), NonIntegrable);
}

TEST_CASE("truncated scans grow monotonically and match closed forms") {
    auto scan = truncated_scan(radial_power(0.0), {0.5, 0.75}, 1e-11);
    CHECK(std::abs(scan[0].second - kPi / 4) < 1e-10);
    CHECK(std::abs(scan[1].second - 9 * kPi / 16) < 1e-10);

    // f = 1/(1-r^2): truncated integral pi*log(1/(1-r^2))
    auto log_scan = truncated_scan(radial_power(-1.0), {0.5, 0.75, 0.875}, 1e-10);
    for (const auto& [r, v] : log_scan) {
        const double expected = kPi * std::log(1.0 / (1.0 - r * r));
        CHECK(std::abs(v - expected) < 1e-8 * expected);
    }

    // divergent weight scan stays monotone
    auto div_scan = truncated_scan(weight(-1.75, 0.25), {0.9, 0.99, 0.999, 0.9999}, 1e-8);
    for (std::size_t i = 1; i < div_scan.size(); ++i)
        CHECK(div_scan[i].second > div_scan[i - 1].second);

    CHECK_THROWS(truncated_scan(radial_power(0.0), {0.5, 0.5}, 1e-8));
}

TEST_CASE("refinement consistency: halving tol moves the value within the estimate") {
    auto coarse = integrate(weight(0.5, 0.7), Region::disk(), 1e-6);
    auto fine = integrate(weight(0.5, 0.7), Region::disk(), 5e-7);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.err_estimate + 1e-14);
}

TEST_CASE("error estimate brackets the true error on known cases") {
    for (double a : {0.5, 1.25, 3.0}) {
        auto res = integrate(radial_power(a), Region::disk(), 1e-9);
        const double expected = kPi / (a + 1.0);
        CHECK(std::abs(res.value - expected) <= std::max(res.err_estimate, 1e-10 * expected));
        CHECK(res.err_estimate <= 1e-6 * expected);
    }
}
