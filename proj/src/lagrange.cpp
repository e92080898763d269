#include "polyharm/lagrange.hpp"

#include <cmath>
#include <numbers>

#include "polyharm/errors.hpp"
#include "polyharm/operators.hpp"

namespace polyharm::symcalc {

void EvenPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational EvenPoly::eval_at_rho_squared(const Rational& s) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * s + *it;
    return v;
}

double EvenPoly::eval(double rho) const {
    const double s = rho * rho;
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * s + rat_to_double(*it);
    return v;
}

EvenPoly operator+(const EvenPoly& a, const EvenPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return EvenPoly(std::move(c));
}

EvenPoly operator*(const EvenPoly& a, const EvenPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return EvenPoly{};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return EvenPoly(std::move(c));
}

EvenPoly operator*(const EvenPoly& a, const Rational& s) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return EvenPoly(std::move(c));
}

LagrangeFrame::LagrangeFrame(std::vector<Rational> rho) : radii(std::move(rho)) {
    if (radii.empty()) throw DegenerateRadii("frame needs at least one radius");
    Rational prev(0);
    for (const auto& r : radii) {
        if (r <= prev || r >= 1) throw DegenerateRadii("radii must be strictly increasing in (0,1)");
        prev = r;
    }
    delta = 0;
    for (std::size_t j = 0; j < radii.size(); ++j)
        for (std::size_t k = j + 1; k < radii.size(); ++k) {
            Rational d = abs(radii[j] * radii[j] - radii[k] * radii[k]);
            if (delta == 0 || d < delta) delta = d;
        }
    if (radii.size() == 1) delta = 1;  // no pair; any positive sentinel
}

LagrangePolys lagrange_polys(const LagrangeFrame& frame) {
    const auto& rho = frame.radii;
    const std::size_t n = rho.size();
    LagrangePolys out;
    out.L.reserve(n);
    out.M.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Rational sj = rho[j] * rho[j];
        EvenPoly Lj = EvenPoly::constant(1);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const Rational sk = rho[k] * rho[k];
            // (rho^2 - rho_k^2) / (rho_j^2 - rho_k^2)
            EvenPoly factor({-sk / (sj - sk), Rational(1) / (sj - sk)});
            Lj = Lj * factor;
        }
        // M_j = L_j (rho_j^2 - rho^2) / (2 rho_j)
        Rational inv2rho = Rational(1) / (2 * rho[j]);
        EvenPoly Mj = Lj * EvenPoly({sj * inv2rho, -inv2rho});
        out.L.push_back(std::move(Lj));
        out.M.push_back(std::move(Mj));
    }
    return out;
}

namespace {

// Circle integral int_{|zeta|=r} |z-zeta|^{-2} u(zeta) ds by the periodic
// trapezoid rule with n nodes.
std::complex<double> circle_integral(const BiLaurent& u, double r, std::complex<double> z, int n) {
    std::complex<double> sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        const std::complex<double> zeta = std::polar(r, t);
        const double d2 = std::norm(z - zeta);
        sum += u.eval(zeta) / d2;
    }
    return sum * (2.0 * std::numbers::pi * r / n);
}

}  // namespace

std::complex<double> lagrange_reconstruct(const BiLaurent& u, int N, const LagrangeFrame& frame,
                                          std::complex<double> z, int angular_nodes) {
    if (N < 1 || angular_nodes < 16) throw BadIndex("lagrange_reconstruct: need N >= 1, angular_nodes >= 16");
    if (static_cast<int>(frame.radii.size()) < N)
        throw DegenerateRadii("lagrange_reconstruct: frame must carry at least N radii");
    if (!is_n_harmonic(u, N)) throw NotPolyharmonic("lagrange_reconstruct: Delta^N u != 0");
    const double rho1 = rat_to_double(frame.radii.front());
    if (std::abs(z) >= rho1) throw RadiusViolation("lagrange_reconstruct: need |z| < rho_1");

    const LagrangePolys polys = lagrange_polys(frame);
    std::complex<double> sum = 0.0;
    for (std::size_t j = 0; j < frame.radii.size(); ++j) {
        const double rj = rat_to_double(frame.radii[j]);
        int n = angular_nodes;
        std::complex<double> prev = circle_integral(u, rj, z, n);
        std::complex<double> cur = prev;
        while (n < (1 << 16)) {
            n *= 2;
            cur = circle_integral(u, rj, z, n);
            if (std::abs(cur - prev) <= 1e-12 * (std::abs(cur) + 1e-30)) break;
            prev = cur;
        }
        sum += polys.M[j].eval(std::abs(z)) * cur;
    }
    return sum / std::numbers::pi;
}

}  // namespace polyharm::symcalc
