#include "polyharm/verify.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "polyharm/cellgeom.hpp"
#include "polyharm/decompositions.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/kernelnum.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/random_gen.hpp"

namespace polyharm::verify {

using namespace polyharm::symcalc;

namespace {

struct Runner {
    Rng rng;
    int trials;
    std::vector<PropertyResult> results;

    Runner(std::uint64_t seed, int trials) : rng(seed), trials(trials) {}

    /// body returns an empty string on success, a counterexample otherwise.
    void property(const std::string& name, const std::function<std::string(Rng&)>& body,
                  int count = -1) {
        PropertyResult r;
        r.name = name;
        const int n = count > 0 ? count : trials;
        for (int i = 0; i < n; ++i) {
            std::string cex = body(rng);
            ++r.trials;
            if (!cex.empty()) {
                r.passed = false;
                r.counterexample = cex;
                break;
            }
        }
        results.push_back(std::move(r));
    }
};

std::string show(const BiLaurent& u) { return u.to_string(); }

Rational random_p(Rng& rng) {
    // positive rational spread over (0, 4]
    std::int64_t num = 1 + static_cast<std::int64_t>(draw(rng, 48));
    std::int64_t den = 1 + static_cast<std::int64_t>(draw(rng, 12));
    return Rational(num, den);
}

void add_identity_properties(Runner& run) {
    run.property("delta_L_commutation", [](Rng& rng) -> std::string {
        BiLaurent u = random_bilaurent(rng);
        Rational theta = random_rational(rng, 6, 4);
        if (laplacian(apply_L(u, theta)) == apply_L(laplacian(u), theta - 1)) return {};
        return "theta=" + rat_to_string(theta) + " u=" + show(u);
    });
    run.property("L_M_commutation", [](Rng& rng) -> std::string {
        BiLaurent u = random_bilaurent(rng);
        Rational theta = random_rational(rng, 6, 4);
        BiLaurent lhs = apply_L(mul_disk_weight(u, 1), theta);
        BiLaurent rhs = mul_disk_weight(apply_L(u, theta - 1), 1) - u * (8 * theta);
        if (lhs == rhs) return {};
        return "theta=" + rat_to_string(theta) + " u=" + show(u);
    });
    run.property("L_M_iterated", [](Rng& rng) -> std::string {
        BiLaurent u = random_bilaurent(rng);
        Rational theta = random_rational(rng, 6, 4);
        for (int j = 1; j <= 6; ++j) {
            BiLaurent lhs = apply_L(mul_disk_weight(u, j), theta);
            BiLaurent rhs = mul_disk_weight(apply_L(u, theta - j), j) +
                            mul_disk_weight(u, j - 1) * (Rational(4 * j) * (j - 1 - 2 * theta));
            if (lhs != rhs) return "j=" + std::to_string(j) + " theta=" + rat_to_string(theta);
        }
        return {};
    });
    run.property("L_factorization", [](Rng& rng) -> std::string {
        BiLaurent u = random_bilaurent(rng);
        for (int n = 1; n <= 4; ++n) {
            BiLaurent lhs = u;
            for (int theta = n - 1; theta >= 0; --theta) lhs = apply_L(lhs, Rational(theta));
            BiLaurent rhs = u;
            for (int i = 0; i < n; ++i) rhs = laplacian(rhs);
            if (lhs != mul_disk_weight(rhs, n)) return "n=" + std::to_string(n) + " u=" + show(u);
        }
        return {};
    });
    run.property("derivatives_commute", [](Rng& rng) -> std::string {
        BiLaurent u = random_bilaurent(rng);
        if (dz(dzbar(u)) != dzbar(dz(u))) return show(u);
        if (laplacian(u) != dz(dzbar(u)) * Rational(4)) return show(u);
        return {};
    });
}

void add_decomposition_properties(Runner& run) {
    run.property("almansi_round_trip", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 5));
        BiLaurent u = random_n_harmonic(rng, N);
        AlmansiForm f = almansi_decompose(u, N);
        if (recompose(f) != u) return "N=" + std::to_string(N) + " u=" + show(u);
        for (const auto& piece : f.pieces)
            if (!laplacian(piece).is_zero()) return "non-harmonic piece for u=" + show(u);
        return {};
    });
    run.property("alternative_involution", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 5));
        AlmansiForm f = almansi_decompose(random_n_harmonic(rng, N), N);
        AltAlmansiForm alt = almansi_to_alternative(f);
        if (recompose(alt) != recompose(f)) return "N=" + std::to_string(N);
        AlmansiForm back = alternative_to_almansi(alt);
        if (back.pieces != f.pieces) return "N=" + std::to_string(N);
        return {};
    });
    run.property("extension_restriction", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 5));
        AlmansiForm f = almansi_decompose(random_n_harmonic(rng, N), N);
        if (extension_restrict(extension(f)) != recompose(f)) return "N=" + std::to_string(N);
        return {};
    });
    run.property("cellular_postconditions", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 5));
        BiLaurent u = random_n_harmonic(rng, N);
        CellularForm f = cellular_decompose(u, N);  // throws if any postcondition fails
        if (recompose(f) != u) return "N=" + std::to_string(N) + " u=" + show(u);
        return {};
    });
    run.property("cellular_idempotence", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 4));
        CellularForm f = cellular_decompose(random_n_harmonic(rng, N), N);
        for (int j = 0; j < N; ++j) {
            if (f.pieces[j].is_zero()) continue;
            CellularForm g = cellular_decompose(mul_disk_weight(f.pieces[j], j), N);
            for (int k = 0; k < N; ++k) {
                const bool want_piece = k == j;
                if (want_piece && g.pieces[k] != f.pieces[j])
                    return "N=" + std::to_string(N) + " j=" + std::to_string(j);
                if (!want_piece && !g.pieces[k].is_zero())
                    return "N=" + std::to_string(N) + " j=" + std::to_string(j);
            }
        }
        return {};
    });
    run.property("cellular_uniqueness", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 4));
        CellularForm f = cellular_decompose(random_n_harmonic(rng, N), N);
        for (int j = 0; j < N; ++j)
            f.pieces[j] =
                rotate(f.pieces[j], random_unit_rotation(rng)) * random_rational(rng, 9, 5, true);
        CellularForm back = cellular_decompose(recompose(f), N);
        if (back.pieces != f.pieces) return "N=" + std::to_string(N);
        return {};
    });
    run.property("entanglement_relation", [](Rng& rng) -> std::string {
        BiLaurent v0 = random_harmonic(rng);
        BiLaurent v1 = entangled_v1_from_v0(v0);
        if (apply_L(v0 + mul_disk_weight(v1, 1), Rational(1)).is_zero()) return {};
        return "v0=" + show(v0);
    });
}

void add_kernel_properties(Runner& run) {
    run.property("kernel_laurent_polyharmonic", [](Rng&) -> std::string {
        for (int N = 1; N <= 4; ++N)
            for (int j = 0; j <= N; ++j)
                if (!is_n_harmonic(kernel_laurent_at_one(j, N), N))
                    return "j=" + std::to_string(j) + " N=" + std::to_string(N);
        return {};
    }, 1);
    run.property("kernel_relation_pointwise", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 4));
        int j = 1 + static_cast<int>(draw(rng, N));
        double r = 0.95 * (static_cast<double>(draw(rng, 1000)) / 1000.0);
        double t = 6.283185307179586 * (static_cast<double>(draw(rng, 1000)) / 1000.0);
        std::complex<double> z = std::polar(r, t);
        double lhs = kernelnum::kernel_eval({j, N}, z);
        double rhs = std::pow(1.0 - std::norm(z), N - j) * kernelnum::kernel_eval({j, j}, z);
        if (std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-300) return {};
        std::ostringstream os;
        os << "j=" << j << " N=" << N << " z=" << z;
        return os.str();
    });
    run.property("norm_membership_matches_curves", [](Rng&) -> std::string {
        const Rational offsets[2] = {Rational(-1, 10), Rational(1, 10)};
        const Rational ps[6] = {Rational(1, 8), Rational(1, 4), Rational(1, 3),
                                Rational(1, 2), Rational(1),    Rational(2)};
        for (int N = 1; N <= 4; ++N)
            for (int j = 0; j <= N; ++j)
                for (const auto& p : ps)
                    for (const auto& off : offsets) {
                        Rational alpha = cellgeom::b_curve(j, N).eval(p) + off;
                        const double a = (N + j - 1) * rat_to_double(p) + rat_to_double(alpha);
                        const double b = j * rat_to_double(p);
                        bool series_finite = kernelnum::I_series(a, b, 1e-6).finite;
                        bool exact_finite = off > 0;
                        if (series_finite != exact_finite) {
                            std::ostringstream os;
                            os << "j=" << j << " N=" << N << " p=" << rat_to_string(p)
                               << " alpha=" << rat_to_string(alpha);
                            return os.str();
                        }
                    }
        return {};
    }, 1);
}

void add_curve_properties(Runner& run) {
    run.property("b_recursion_in_N", [](Rng& rng) -> std::string {
        Rational p = random_p(rng);
        for (int N = 1; N <= 4; ++N)
            for (int j = 0; j <= N; ++j) {
                Rational lhs = cellgeom::b_curve(j, N + 1).eval(p) + p;
                if (lhs != cellgeom::b_curve(j, N).eval(p))
                    return "j=" + std::to_string(j) + " N=" + std::to_string(N) +
                           " p=" + rat_to_string(p);
            }
        return {};
    });
    run.property("a_recursion_in_N", [](Rng& rng) -> std::string {
        Rational p = random_p(rng);
        for (int N = 1; N <= 4; ++N)
            for (int j = 1; j <= N; ++j) {
                Rational lhs = cellgeom::a_curve(j, N + 1).eval(p) + p;
                if (lhs != cellgeom::a_curve(j, N).eval(p))
                    return "j=" + std::to_string(j) + " N=" + std::to_string(N) +
                           " p=" + rat_to_string(p);
            }
        return {};
    });
    run.property("beta_is_pointwise_min", [](Rng& rng) -> std::string {
        Rational p = random_p(rng);
        for (int N = 1; N <= 4; ++N) {
            Rational swept = cellgeom::beta_curve(N).eval(p);
            Rational direct = cellgeom::b_curve(0, N).eval(p);
            for (int j = 1; j <= N; ++j) direct = std::min(direct, cellgeom::b_curve(j, N).eval(p));
            if (swept != direct) return "N=" + std::to_string(N) + " p=" + rat_to_string(p);
        }
        return {};
    });
    run.property("min_a_equals_min_b", [](Rng& rng) -> std::string {
        Rational p = random_p(rng);
        for (int N = 1; N <= 4; ++N) {
            Rational min_a = cellgeom::a_curve(1, N).eval(p);
            for (int j = 2; j <= N; ++j) min_a = std::min(min_a, cellgeom::a_curve(j, N).eval(p));
            if (min_a != cellgeom::beta_curve(N).eval(p))
                return "N=" + std::to_string(N) + " p=" + rat_to_string(p);
        }
        return {};
    });
    run.property("classify_consistency", [](Rng& rng) -> std::string {
        int N = 1 + static_cast<int>(draw(rng, 4));
        Rational p = random_p(rng);
        Rational alpha = cellgeom::beta_curve(N).eval(p) + random_rational(rng, 3, 7);
        auto d = cellgeom::classify(N, {p, alpha});
        if (d.admissible != !d.j_set.empty())
            return "N=" + std::to_string(N) + " p=" + rat_to_string(p) +
                   " alpha=" + rat_to_string(alpha);
        if (d.entangled && !d.admissible) return "entangled without admissible";
        if (d.principal && (d.entangled || !d.admissible)) return "principal flag inconsistent";
        return {};
    });
    run.property("beta_nonconvex_at_peak", [](Rng&) -> std::string {
        auto beta = cellgeom::beta_curve(2);
        Rational p1(1, 4), p2(1, 3), p3(1, 2);
        Rational chord = beta.eval(p1) + (beta.eval(p3) - beta.eval(p1)) * (p2 - p1) / (p3 - p1);
        if (beta.eval(p2) > chord) return {};
        return "no nonconvexity witness at the N=2 peak";
    }, 1);
    run.property("polyanalytic_above_beta", [](Rng& rng) -> std::string {
        Rational p = random_p(rng);
        for (int N = 1; N <= 4; ++N)
            if (cellgeom::polyanalytic_beta(N, p) < cellgeom::beta_curve(N).eval(p))
                return "N=" + std::to_string(N) + " p=" + rat_to_string(p);
        return {};
    });
    run.property("local_matches_global_small_p", [](Rng& rng) -> std::string {
        for (int N = 1; N <= 4; ++N) {
            Rational p = Rational(1 + static_cast<int>(draw(rng, 100)), 100) / (2 * N);
            if (cellgeom::local_critical_alpha(N, p) != cellgeom::beta_curve(N).eval(p))
                return "N=" + std::to_string(N) + " p=" + rat_to_string(p);
        }
        return {};
    });
    run.property("piecewise_continuity", [](Rng&) -> std::string {
        for (int N = 1; N <= 4; ++N) {
            auto beta = cellgeom::beta_curve(N);
            const auto& bps = beta.breakpoints();
            const auto& segs = beta.segments();
            for (std::size_t i = 0; i < bps.size(); ++i)
                if (segs[i].eval(bps[i]) != segs[i + 1].eval(bps[i]))
                    return "discontinuity in beta(" + std::to_string(N) + ",.)";
        }
        return {};
    }, 1);
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"identities", "decomposition", "kernels", "curves"};
}

std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed, int trials) {
    Runner run(seed, trials);
    if (suite == "identities")
        add_identity_properties(run);
    else if (suite == "decomposition")
        add_decomposition_properties(run);
    else if (suite == "kernels")
        add_kernel_properties(run);
    else if (suite == "curves")
        add_curve_properties(run);
    else
        throw BadIndex("unknown verify suite '" + suite + "'");
    return std::move(run.results);
}

}  // namespace polyharm::verify
