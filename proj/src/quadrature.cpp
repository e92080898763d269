#include "polyharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm::quadrature {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Gauss-Legendre 16-point rule on [-1, 1] (positive half; rule is symmetric).
constexpr int kGaussN = 8;
constexpr double kGaussX[kGaussN] = {
    0.0950125098376374401853, 0.2816035507792589132304, 0.4580167776572273863424,
    0.6178762444026437484467, 0.7554044083550030338951, 0.8656312023878317438805,
    0.9445750230732325760780, 0.9894009349916499325962,
};
constexpr double kGaussW[kGaussN] = {
    0.1894506104550684962854, 0.1826034150449235888667, 0.1691565193950025381893,
    0.1495959888165767320815, 0.1246289712555338720525, 0.0951585116824927848099,
    0.0622535239386478928628, 0.0271524594117540948518,
};

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 4) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v, 0, v.size()); }

template <typename F>
double gauss16(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kGaussN; ++i)
        s += kGaussW[i] * (f(c - h * kGaussX[i]) + f(c + h * kGaussX[i]));
    return s * h;
}

// Adaptive bisection with a whole-vs-halves error estimate; the caller
// supplies the already-computed whole-panel value so nothing is evaluated
// twice.
template <typename F>
double adaptive_gauss(const F& f, double a, double b, double whole, double tol_abs,
                      double noise_rel, int depth, double* err) {
    const double mid = 0.5 * (a + b);
    const double left = gauss16(f, a, mid);
    const double right = gauss16(f, mid, b);
    const double split = left + right;
    const double diff = std::abs(whole - split);
    // never demand agreement below the evaluation noise of the integrand
    if (diff <= tol_abs + noise_rel * std::abs(split) || depth >= 14) {
        if (err) *err += diff;
        return split;
    }
    return adaptive_gauss(f, a, mid, left, 0.5 * tol_abs, noise_rel, depth + 1, err) +
           adaptive_gauss(f, mid, b, right, 0.5 * tol_abs, noise_rel, depth + 1, err);
}

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    return t < 0 ? t + kTwoPi : t;
}

// Offset panels: integrate g(anchor + sign*h) for h in [h_lo, h_hi]. Offsets
// from the anchor stay exact however small, which keeps the integrand
// noise-free right up against a singular angle (absolute angles like
// 2*pi - h lose the entire offset to rounding).
struct OffsetPanel {
    double anchor;
    double sign;
    double h_lo, h_hi;
};

// Geometric grading of [0, len] measured from a singular anchor, down to a
// floor scale tied to the boundary distance.
template <typename Out>
void graded_offsets(double anchor, double sign, double len, double scale, Out&& emit) {
    double h = len;
    std::vector<double> hs;
    while (h > scale) {
        hs.push_back(h);
        h *= 0.5;
    }
    hs.push_back(h);  // innermost edge; panel [0, h] is smooth at this scale
    emit(OffsetPanel{anchor, sign, 0.0, hs.back()});
    for (std::size_t i = hs.size(); i-- > 1;) emit(OffsetPanel{anchor, sign, hs[i], hs[i - 1]});
}

struct Arc {
    double lo = 0.0;
    double hi = kTwoPi;
    bool full_circle = true;
};

Arc arc_of(const Region& region) {
    if (region.kind != Region::Kind::sector) return {};
    const double len = region.arc_end - region.arc_start;
    if (!(len > 0.0) || len >= kTwoPi)
        throw Error(ErrorKind::bad_arguments, "sector: arc must be nonempty of length < 2*pi");
    const double lo = wrap_angle(region.arc_start);
    return {lo, lo + len, false};
}

// Periodic trapezoid with node doubling (halving reuse); spectrally accurate
// for smooth integrands on the circle.
double trapezoid_circle(const IntegrandSpec& f, const RadialPoint& rp, double tol) {
    int n = 32;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += f.evaluator(rp, kTwoPi * k / n);
    double prev = sum * (kTwoPi / n);
    while (n < (1 << 16)) {
        for (int k = 0; k < n; ++k) sum += f.evaluator(rp, kTwoPi * (2 * k + 1) / (2 * n));
        n *= 2;
        const double cur = sum * (kTwoPi / n);
        if (std::abs(cur - prev) <= tol * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

double graded_arcs(const IntegrandSpec& f, const Arc& arc, const RadialPoint& rp, double tol) {
    std::vector<double> sing;
    for (double s : f.singular_angles) {
        const double w = wrap_angle(s);
        if (arc.full_circle || (w >= arc.lo && w <= arc.hi)) sing.push_back(w);
    }
    std::sort(sing.begin(), sing.end());

    const double scale = std::max(rp.eps * 0.5, 1e-280);
    std::vector<OffsetPanel> panels;
    auto emit = [&](const OffsetPanel& p) { panels.push_back(p); };

    // pieces between consecutive singular anchors (or arc endpoints); each
    // graded half is anchored at its own singular angle
    auto piece = [&](double lo, double hi, bool sing_lo, bool sing_hi) {
        const double len = hi - lo;
        if (len <= 0) return;
        if (sing_lo && sing_hi) {
            graded_offsets(lo, +1.0, 0.5 * len, scale, emit);
            graded_offsets(hi, -1.0, 0.5 * len, scale, emit);
        } else if (sing_lo) {
            graded_offsets(lo, +1.0, len, scale, emit);
        } else if (sing_hi) {
            graded_offsets(hi, -1.0, len, scale, emit);
        } else {
            const int blocks = 8;
            for (int i = 0; i < blocks; ++i)
                emit(OffsetPanel{lo, +1.0, len * i / blocks, len * (i + 1) / blocks});
        }
    };

    if (arc.full_circle) {
        if (sing.empty()) {
            piece(0.0, kTwoPi, false, false);
        } else {
            for (std::size_t i = 0; i < sing.size(); ++i) {
                const double lo = sing[i];
                const double hi = (i + 1 < sing.size()) ? sing[i + 1] : sing[0] + kTwoPi;
                // anchor the wrapped right end at the original singular angle
                const double hi_anchor = (i + 1 < sing.size()) ? sing[i + 1] : sing[0];
                const double len = hi - lo;
                graded_offsets(lo, +1.0, 0.5 * len, scale, emit);
                graded_offsets(hi_anchor, -1.0, 0.5 * len, scale, emit);
            }
        }
    } else {
        double lo = arc.lo;
        bool lo_sing = false;
        for (double s : sing) {
            if (s > lo) piece(lo, s, lo_sing, true);
            lo = s;
            lo_sing = true;
        }
        if (arc.hi > lo) piece(lo, arc.hi, lo_sing, false);
    }

    std::vector<double> whole(panels.size());
    double coarse = 0.0;
    std::vector<double> vals;
    double err = 0.0;
    auto value_of = [&](const OffsetPanel& p) {
        return [&f, &rp, anchor = p.anchor, sign = p.sign](double h) {
            return f.evaluator(rp, anchor + sign * h);
        };
    };
    for (std::size_t i = 0; i < panels.size(); ++i) {
        whole[i] = gauss16(value_of(panels[i]), panels[i].h_lo, panels[i].h_hi);
        coarse += whole[i];
    }
    const double tol_abs =
        std::max(tol * std::abs(coarse), 1e-300) / static_cast<double>(panels.size() + 1);
    for (std::size_t i = 0; i < panels.size(); ++i)
        vals.push_back(adaptive_gauss(value_of(panels[i]), panels[i].h_lo, panels[i].h_hi, whole[i],
                                      tol_abs, 0.0, 0, &err));
    return pairwise_sum(vals);
}

double angular_value(const IntegrandSpec& f, const Arc& arc, const RadialPoint& rp, double tol) {
    const bool singular_nearby = !f.singular_angles.empty() && rp.eps < 0.2;
    if (arc.full_circle && !singular_nearby) return trapezoid_circle(f, rp, tol);
    return graded_arcs(f, arc, rp, tol);
}

// Radial integrand in u = -log(1-t): D(t) * t * e^{-u}.
template <typename Density>
auto radial_integrand(const Density& density) {
    return [&density](double u) {
        const double eps = std::exp(-u);
        const RadialPoint rp{1.0 - eps, eps};
        if (rp.r <= 0.0) return 0.0;  // Jacobian kills r = 0
        const double v = density(rp) * rp.r * eps;
        if (!std::isfinite(v)) throw Error(ErrorKind::domain, "quadrature: integrand overflow");
        return v;
    };
}

constexpr double kPanelWidth = 0.5;

template <typename Density>
IntegrateResult shell_u(const Density& density, double u_lo, double u_hi, double tol,
                        double noise_rel) {
    auto G = radial_integrand(density);
    const int npanels = std::max(1, static_cast<int>(std::ceil((u_hi - u_lo) / kPanelWidth)));
    std::vector<double> whole(npanels);
    double coarse = 0.0;
    auto edge = [&](int i) { return u_lo + (u_hi - u_lo) * i / npanels; };
    for (int i = 0; i < npanels; ++i) {
        whole[i] = gauss16(G, edge(i), edge(i + 1));
        coarse += whole[i];
    }
    std::vector<double> vals;
    double err = 0.0;
    const double tol_abs = std::max(tol * std::abs(coarse), 1e-300) / npanels;
    for (int i = 0; i < npanels; ++i)
        vals.push_back(adaptive_gauss(G, edge(i), edge(i + 1), whole[i], tol_abs, noise_rel, 0, &err));
    return {pairwise_sum(vals), err};
}

// Semi-infinite integral in u with a decay-based stopping rule; the panel
// magnitudes behave like e^{-(gamma+1) u} once the boundary regime dominates.
// Slowly decaying weights (gamma near -1) get wider panels; the adaptive
// bisection restores resolution wherever the integrand still varies.
template <typename Density>
IntegrateResult boundary_u(const Density& density, double u_lo, double gamma, double tol,
                           double noise_rel) {
    auto G = radial_integrand(density);
    const double width = std::clamp(0.75 / (gamma + 1.0), kPanelWidth, 8.0);
    const double q = std::exp(-(gamma + 1.0) * width);
    const double u_cap = 690.0;

    std::vector<double> vals;
    double err = 0.0;
    double prev_mag = -1.0;
    int steady = 0;
    double u = u_lo;
    double acc = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    bool done = false;
    while (u < u_cap) {
        double panel_err = 0.0;
        const double whole = gauss16(G, u, u + width);
        const double tol_abs = std::max(tol * std::max(std::abs(whole), std::abs(acc)), 1e-300) / 64.0;
        const double panel = adaptive_gauss(G, u, u + width, whole, tol_abs, noise_rel, 0, &panel_err);
        vals.push_back(panel);
        err += panel_err;
        acc += panel;
        const double mag = std::abs(panel);
        if (prev_mag >= 0.0 && mag <= prev_mag * std::min(0.999, q * 1.5))
            ++steady;
        else
            steady = 0;
        prev_mag = mag;
        u += width;
        if (steady >= 3) {
            tail = mag * q / (1.0 - q);
            if (tail <= 0.25 * tol * std::abs(acc) + 1e-300) {
                done = true;
                break;
            }
        }
    }
    if (!done)
        throw ToleranceNotReached("quadrature: radial refinement cap reached", pairwise_sum(vals),
                                  err + (std::isfinite(tail) ? tail : prev_mag));
    return {pairwise_sum(vals), err + tail};
}

double to_u(double r) { return r > 0.0 ? -std::log1p(-r) : 0.0; }

}  // namespace

double angular_integral(const IntegrandSpec& f, const RadialPoint& rp, double tol) {
    return angular_value(f, Arc{}, rp, tol);
}

IntegrateResult radial_boundary_integral(const RadialDensity& density, double r_in, double gamma,
                                         double tol, double density_noise_rel) {
    if (!(gamma > -1.0))
        throw NonIntegrable("radial integral: boundary weight (1-r)^gamma with gamma <= -1");
    return boundary_u(density, to_u(r_in), gamma, tol, density_noise_rel);
}

IntegrateResult radial_shell_integral(const RadialDensity& density, double r_lo, double r_hi,
                                      double tol, double density_noise_rel) {
    if (!(r_lo >= 0.0 && r_lo < r_hi && r_hi < 1.0))
        throw Error(ErrorKind::bad_arguments, "radial shell: need 0 <= r_lo < r_hi < 1");
    return shell_u(density, to_u(r_lo), to_u(r_hi), tol, density_noise_rel);
}

IntegrateResult integrate(const IntegrandSpec& f, const Region& region, double tol) {
    if (!(f.radial_exponent_at_1 > -1.0))
        throw NonIntegrable("integrate: radial weight (1-r)^gamma with gamma <= -1");
    if (region.r_in < 0.0 || region.r_in >= 1.0)
        throw Error(ErrorKind::bad_arguments, "integrate: need 0 <= r_in < 1");
    const Arc arc = arc_of(region);
    const double ang_tol = tol * 0.25;
    auto density = [&](const RadialPoint& rp) { return angular_value(f, arc, rp, ang_tol); };
    return boundary_u(density, to_u(region.r_in), f.radial_exponent_at_1, tol, ang_tol);
}

std::vector<std::pair<double, double>> truncated_scan(const IntegrandSpec& f,
                                                      const std::vector<double>& radii,
                                                      double tol) {
    double prev = 0.0;
    for (double r : radii) {
        if (r <= prev || r >= 1.0)
            throw Error(ErrorKind::bad_arguments, "truncated_scan: radii must increase within (0,1)");
        prev = r;
    }
    const double ang_tol = tol * 0.25;
    auto density = [&](const RadialPoint& rp) { return angular_value(f, Arc{}, rp, ang_tol); };
    std::vector<std::pair<double, double>> out;
    double acc = 0.0;
    double u_prev = 0.0;
    for (double r : radii) {
        acc += shell_u(density, u_prev, to_u(r), tol, ang_tol).value;
        out.emplace_back(r, acc);
        u_prev = to_u(r);
    }
    return out;
}

}  // namespace polyharm::quadrature
