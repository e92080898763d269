// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Exact checks use rational arithmetic; numeric checks state their
// tolerance inline.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "polyharm/cellgeom.hpp"
#include "polyharm/decompositions.hpp"
#include "polyharm/kernelnum.hpp"
#include "polyharm/lagrange.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/quadrature.hpp"
#include "polyharm/random_gen.hpp"

using namespace polyharm;
using namespace polyharm::symcalc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 0x9E3779B97F4A7C15ull;

int failures = 0;
std::string detail;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    detail.clear();
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool expect(bool cond, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// --- criterion 1: exact operator identity suite ---------------------------

bool identities_suite() {
    Rng rng(kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        BiLaurent u = random_bilaurent(rng);
        Rational theta = random_rational(rng, 6, 4);
        if (!expect(laplacian(apply_L(u, theta)) == apply_L(laplacian(u), theta - 1),
                    "Delta L != L Delta at trial " + std::to_string(trial)))
            return false;
        BiLaurent lhs1 = apply_L(mul_disk_weight(u, 1), theta);
        BiLaurent rhs1 = mul_disk_weight(apply_L(u, theta - 1), 1) - u * (8 * theta);
        if (!expect(lhs1 == rhs1, "L M identity failed at trial " + std::to_string(trial)))
            return false;
        for (int j = 1; j <= 6; ++j) {
            BiLaurent lhs = apply_L(mul_disk_weight(u, j), theta);
            BiLaurent rhs = mul_disk_weight(apply_L(u, theta - j), j) +
                            mul_disk_weight(u, j - 1) * (Rational(4 * j) * (j - 1 - 2 * theta));
            if (!expect(lhs == rhs, "iterated L M^j failed at j=" + std::to_string(j)))
                return false;
        }
    }
    Rng rng2(kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
        BiLaurent u = random_bilaurent(rng2);
        for (int n = 1; n <= 4; ++n) {
            BiLaurent lhs = u;
            for (int theta = n - 1; theta >= 0; --theta) lhs = apply_L(lhs, Rational(theta));
            BiLaurent rhs = u;
            for (int i = 0; i < n; ++i) rhs = laplacian(rhs);
            if (!expect(lhs == mul_disk_weight(rhs, n),
                        "factorization failed at n=" + std::to_string(n)))
                return false;
        }
    }
    return true;
}

// --- criterion 2: beta(1, .) closed form -----------------------------------

bool beta1_closed_form() {
    auto beta = cellgeom::beta_curve(1);
    Rng rng(kSeed + 2);
    for (int trial = 0; trial < 1000; ++trial) {
        Rational p(1 + static_cast<long>(draw(rng, 500)), 1 + static_cast<long>(draw(rng, 50)));
        Rational expected = p <= Rational(1, 2) ? Rational(-1) - p
                            : p <= 1            ? p - 2
                                                : Rational(-1);
        if (!expect(beta.eval(p) == expected, "beta(1,.) mismatch at p=" + rat_to_string(p)))
            return false;
    }
    return true;
}

// --- criterion 3: sawtooth structure for N = 2, 3 --------------------------

bool sawtooth_structure() {
    auto b2 = cellgeom::beta_curve(2);
    const std::vector<Rational> bp2 = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)};
    const std::vector<Rational> val2 = {Rational(-7, 4), Rational(-5, 3), Rational(-2),
                                        Rational(-2)};
    const std::vector<Rational> slope2 = {Rational(-3), Rational(1), Rational(-2), Rational(0),
                                          Rational(-1)};
    if (!expect(b2.breakpoints() == bp2, "beta(2,.) breakpoints wrong")) return false;
    for (std::size_t i = 0; i < bp2.size(); ++i)
        if (!expect(b2.eval(bp2[i]) == val2[i], "beta(2,.) value wrong at breakpoint")) return false;
    for (std::size_t i = 0; i < slope2.size(); ++i)
        if (!expect(b2.segments()[i].slope == slope2[i], "beta(2,.) slope sequence wrong"))
            return false;

    auto b3 = cellgeom::beta_curve(3);
    if (!expect(b3.breakpoints().size() >= 2 && b3.breakpoints()[0] == Rational(1, 6) &&
                    b3.breakpoints()[1] == Rational(1, 5),
                "beta(3,.) leading breakpoints wrong"))
        return false;
    if (!expect(b3.eval(Rational(1, 6)) == Rational(-11, 6), "beta(3, 1/6) wrong")) return false;
    if (!expect(b3.segments()[0].slope == Rational(-5) && b3.segments()[1].slope == Rational(1),
                "beta(3,.) leading slopes wrong"))
        return false;
    return true;
}

// --- criterion 4: cellular decomposition -----------------------------------

bool cellular_decomposition() {
    // worked case
    CellularForm w = cellular_decompose(BiLaurent::one(), 2);
    BiLaurent w0 = BiLaurent::monomial(0, 0, GaussRational(Rational(1, 2))) +
                   BiLaurent::monomial(1, 1, GaussRational(Rational(1, 2)));
    if (!expect(w.pieces[0] == w0 &&
                    w.pieces[1] == BiLaurent::monomial(0, 0, GaussRational(Rational(1, 2))),
                "worked case u=1, N=2 wrong"))
        return false;

    Rng rng(kSeed + 4);
    for (int N = 1; N <= 5; ++N) {
        for (int trial = 0; trial < 100; ++trial) {
            BiLaurent u = random_n_harmonic(rng, N);
            CellularForm f = cellular_decompose(u, N);
            if (!expect(recompose(f) == u, "recomposition failed")) return false;
            for (int j = 0; j < N; ++j) {
                if (!expect(apply_L(f.pieces[j], Rational(N - j - 1)).is_zero(),
                            "L-annihilation failed"))
                    return false;
                if (!expect(f.pieces[j].is_zero() || is_n_harmonic(f.pieces[j], N - j),
                            "(N-j)-harmonicity failed"))
                    return false;
            }
            // projection idempotence on a random nonzero piece
            for (int j = 0; j < N; ++j) {
                if (f.pieces[j].is_zero()) continue;
                CellularForm g = cellular_decompose(mul_disk_weight(f.pieces[j], j), N);
                for (int k = 0; k < N; ++k) {
                    const bool same = (k == j) ? g.pieces[k] == f.pieces[j] : g.pieces[k].is_zero();
                    if (!expect(same, "projection idempotence failed")) return false;
                }
                break;
            }
        }
    }
    return true;
}

// --- criterion 5: entanglement relation ------------------------------------

bool entanglement_relation() {
    Rng rng(kSeed + 5);
    for (int trial = 0; trial < 100; ++trial) {
        BiLaurent v0 = random_harmonic(rng);
        BiLaurent v1 = entangled_v1_from_v0(v0);
        if (!expect(apply_L(v0 + mul_disk_weight(v1, 1), Rational(1)).is_zero(),
                    "L_1[v0 + M v1] != 0 at trial " + std::to_string(trial)))
            return false;
    }
    return true;
}

// --- criterion 6: kernel polyharmonicity -----------------------------------

bool kernel_polyharmonicity() {
    for (int N = 1; N <= 4; ++N)
        for (int j = 0; j <= N; ++j)
            if (!expect(is_n_harmonic(kernel_laurent_at_one(j, N), N),
                        "Delta^N U_{" + std::to_string(j) + "," + std::to_string(N) + "} != 0"))
                return false;
    return true;
}

// --- criterion 7: I(a,b) numerics ------------------------------------------

quadrature::IntegrandSpec weight_spec(double a, double b) {
    quadrature::IntegrandSpec spec;
    spec.evaluator = [a, b](const quadrature::RadialPoint& rp, double t) {
        const double s = std::sin(0.5 * t);
        const double d2 = rp.eps * rp.eps + 4.0 * rp.r * s * s;
        double v = std::pow(rp.eps * (1.0 + rp.r), a);
        if (b != 0.0) v *= std::pow(d2, -b);
        return v;
    };
    spec.radial_exponent_at_1 = a + std::min(0.0, 1.0 - 2.0 * b);
    if (b > 0.0) spec.singular_angles = {0.0};
    return spec;
}

bool lem_int_numerics() {
    auto i10 = kernelnum::I_series(1.0, 0.0, 1e-10);
    if (!expect(i10.finite && std::abs(i10.series.value - kPi / 2) <= 1e-9 * (kPi / 2),
                "I(1,0) != pi/2"))
        return false;
    auto i11 = kernelnum::I_series(1.0, 1.0, 1e-10);
    if (!expect(i11.finite && std::abs(i11.series.value - kPi) <= 1e-9 * kPi, "I(1,1) != pi"))
        return false;

    const std::vector<std::pair<double, double>> pairs = {
        {-0.5, 0.2}, {-0.5, 0.0}, {0.0, 0.5}, {0.3, 0.4}, {0.5, 1.0},
        {1.0, 0.0},  {1.0, 1.0},  {1.5, 0.8}, {2.0, 1.2}, {2.5, 1.5},
        {3.0, 2.0},  {3.5, 1.0},  {4.0, 2.5}, {4.5, 0.6}, {5.0, 3.0},
        {6.0, 3.2},  {2.2, 0.9},  {1.7, 1.3}, {0.9, 0.7}, {5.5, 2.0}};
    if (!expect(pairs.size() == 20, "need 20 pairs")) return false;
    for (const auto& [a, b] : pairs) {
        auto series = kernelnum::I_series(a, b, 1e-9);
        if (!expect(series.finite && series.series.converged,
                    "series did not converge at a=" + std::to_string(a) + " b=" + std::to_string(b)))
            return false;
        auto quad = quadrature::integrate(weight_spec(a, b), quadrature::Region::disk(), 1e-8);
        const double rel = std::abs(quad.value - series.series.value) / series.series.value;
        if (!expect(rel <= 1e-6, "quadrature/series mismatch " + std::to_string(rel) +
                                     " at a=" + std::to_string(a) + " b=" + std::to_string(b)))
            return false;
    }

    Rng rng(kSeed + 7);
    for (int trial = 0; trial < 200; ++trial) {
        const bool radial = draw(rng, 2) == 0;
        const double off = (static_cast<double>(draw(rng, 9)) + 1.0) / 20.0;
        const bool above = draw(rng, 2) == 0;
        double a, b;
        if (radial) {
            b = static_cast<double>(draw(rng, 40)) / 100.0;
            a = -1.0 + (above ? off : -off);
        } else {
            b = 1.0 + static_cast<double>(draw(rng, 300)) / 100.0;
            a = 2.0 * (b - 1.0) + (above ? off : -off);
        }
        const bool expect_finite = a > -1.0 && (b == 0.0 || a > 2.0 * (b - 1.0));
        if (!expect(kernelnum::I_series(a, b, 1e-6).finite == expect_finite,
                    "verdict mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b)))
            return false;
    }
    return true;
}

// --- criterion 8: norm dichotomy at desk scale ------------------------------

bool norm_dichotomy() {
    const std::vector<Rational> ps = {Rational(1, 8), Rational(1, 4), Rational(1, 3),
                                      Rational(1, 2), Rational(1),    Rational(2)};
    for (int N = 1; N <= 3; ++N) {
        for (int j = 0; j <= N; ++j) {
            for (const auto& p : ps) {
                const Rational b = cellgeom::b_curve(j, N).eval(p);
                // finite side: series and quadrature agree
                {
                    kernelnum::KernelNormOptions opt;
                    opt.cross_validate = true;
                    auto v = kernelnum::kernel_norm({j, N}, p, b + Rational(1, 10), 1e-8, opt);
                    if (!expect(v.finite, "exact verdict not finite on the finite side")) return false;
                    if (!expect(v.series.converged, "series did not converge on the finite side"))
                        return false;
                    const double rel = std::abs(v.quadrature_value - v.value) / std::abs(v.value);
                    if (!expect(rel <= 1e-6,
                                "series/quadrature disagreement " + std::to_string(rel) + " at j=" +
                                    std::to_string(j) + " N=" + std::to_string(N) +
                                    " p=" + rat_to_string(p)))
                        return false;
                }
                // divergent side: monotone trace with last/first > 10
                {
                    kernelnum::KernelNormOptions opt;
                    opt.cross_validate = false;
                    auto v = kernelnum::kernel_norm({j, N}, p, b - Rational(1, 10), 1e-8, opt);
                    if (!expect(!v.finite, "exact verdict not divergent on the divergent side"))
                        return false;
                    const auto& tr = v.divergence_trace;
                    if (!expect(tr.size() >= 10, "trace too short")) return false;
                    for (std::size_t i = 1; i < tr.size(); ++i)
                        if (!expect(tr[i].second > tr[i - 1].second,
                                    "trace not monotone at j=" + std::to_string(j) +
                                        " N=" + std::to_string(N) + " p=" + rat_to_string(p)))
                            return false;
                    if (!expect(tr.back().second > 10.0 * tr.front().second,
                                "growth ratio " +
                                    std::to_string(tr.back().second / tr.front().second) +
                                    " <= 10 at j=" + std::to_string(j) + " N=" + std::to_string(N) +
                                    " p=" + rat_to_string(p)))
                        return false;
                }
            }
        }
    }
    return true;
}

// --- criterion 9: annulus asymptotics ---------------------------------------

bool annulus_asymptotics() {
    auto fit1 = kernelnum::annulus_slope_fit(2, 0.4, 6, 12, 1e-9);
    if (!expect(std::abs(fit1.slope - 1.6) <= 0.05,
                "slope " + std::to_string(fit1.slope) + " vs 2-p = 1.6"))
        return false;
    auto fit2 = kernelnum::annulus_slope_fit(2, 0.2, 6, 12, 1e-9);
    if (!expect(std::abs(fit2.slope - 1.6) <= 0.05,
                "slope " + std::to_string(fit2.slope) + " vs 1+3p = 1.6"))
        return false;
    return true;
}

// --- criterion 10: Lagrange reconstruction ----------------------------------

bool lagrange_reconstruction() {
    LagrangeFrame frame({Rational(1, 2), Rational(5, 8), Rational(3, 4)});
    Rng rng(kSeed + 10);
    for (int trial = 0; trial < 20; ++trial) {
        const int N = 1 + static_cast<int>(draw(rng, 3));
        RandomPolyOptions opt;
        opt.max_exponent = 6;
        BiLaurent u = random_n_harmonic(rng, N, opt);
        for (int i = 0; i < 20; ++i) {
            const double rad = 0.49 * (static_cast<double>(draw(rng, 1000)) / 1000.0);
            const double ang = 2.0 * kPi * (static_cast<double>(draw(rng, 1000)) / 1000.0);
            const std::complex<double> z = std::polar(rad, ang);
            const std::complex<double> direct = u.eval(z);
            const std::complex<double> rec = lagrange_reconstruct(u, N, frame, z);
            const double scale = std::max(1.0, std::abs(direct));
            if (!expect(std::abs(direct - rec) <= 1e-8 * scale,
                        "reconstruction error " + std::to_string(std::abs(direct - rec)) +
                            " at trial " + std::to_string(trial)))
                return false;
        }
    }
    return true;
}

// --- criterion 11: Almansi / extension round trips --------------------------

bool almansi_round_trips() {
    Rng rng(kSeed + 11);
    for (int trial = 0; trial < 200; ++trial) {
        const int N = 1 + static_cast<int>(draw(rng, 5));
        BiLaurent u = random_n_harmonic(rng, N);
        AlmansiForm f = almansi_decompose(u, N);
        if (!expect(recompose(f) == u, "Almansi recomposition failed")) return false;
        for (const auto& piece : f.pieces)
            if (!expect(laplacian(piece).is_zero(), "Almansi piece not harmonic")) return false;
        AltAlmansiForm alt = almansi_to_alternative(f);
        if (!expect(recompose(alt) == u, "alternative recomposition failed")) return false;
        AlmansiForm back = alternative_to_almansi(alt);
        if (!expect(back.pieces == f.pieces, "binomial transform not involutive")) return false;
        if (!expect(extension_restrict(extension(f)) == u, "extension restriction failed"))
            return false;
    }
    return true;
}

}  // namespace

int main() {
    std::printf("polyharm acceptance suite\n");
    criterion(1, "exact operator identities (200 seeded instances)", identities_suite);
    criterion(2, "beta(1,p) closed form at 1000 rational p", beta1_closed_form);
    criterion(3, "beta(2,.) and beta(3,.) sawtooth structure", sawtooth_structure);
    criterion(4, "cellular decomposition, 100 instances per N in 1..5", cellular_decomposition);
    criterion(5, "entanglement relation, 100 harmonic instances", entanglement_relation);
    criterion(6, "kernel Laurent polyharmonicity, j <= N <= 4", kernel_polyharmonicity);
    criterion(7, "I(a,b): closed forms, quadrature agreement, verdicts", lem_int_numerics);
    criterion(8, "norm dichotomy at offsets +-1/10, N <= 3", norm_dichotomy);
    criterion(9, "annulus asymptotics slopes (N=2, p=0.4 and p=0.2)", annulus_asymptotics);
    criterion(10, "Lagrange reconstruction on random polynomials", lagrange_reconstruction);
    criterion(11, "Almansi/extension round trips, 200 instances", almansi_round_trips);
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
