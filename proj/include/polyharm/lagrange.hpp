#pragma once

#include <complex>
#include <vector>

#include "polyharm/bilaurent.hpp"

namespace polyharm::symcalc {

/// Even univariate polynomial P(rho) = sum c_k rho^{2k} with exact rational
/// coefficients.
class EvenPoly {
public:
    EvenPoly() = default;
    explicit EvenPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static EvenPoly constant(Rational v) { return EvenPoly({std::move(v)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree_in_rho() const { return c_.empty() ? 0 : 2 * (static_cast<int>(c_.size()) - 1); }

    /// Exact evaluation given s = rho^2.
    Rational eval_at_rho_squared(const Rational& s) const;
    double eval(double rho) const;

    friend EvenPoly operator+(const EvenPoly& a, const EvenPoly& b);
    friend EvenPoly operator*(const EvenPoly& a, const EvenPoly& b);
    friend EvenPoly operator*(const EvenPoly& a, const Rational& s);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Interpolation radii 0 < rho_1 < ... < rho_N < 1 (exact rationals) with the
/// separation quantity delta = min_{j != k} |rho_j^2 - rho_k^2|.
struct LagrangeFrame {
    std::vector<Rational> radii;
    Rational delta;

    explicit LagrangeFrame(std::vector<Rational> rho);  // throws DegenerateRadii
};

struct LagrangePolys {
    std::vector<EvenPoly> L;  // L_j(rho_k) = delta_{jk}
    std::vector<EvenPoly> M;  // M_j = L_j (rho_j^2 - rho^2) / (2 rho_j)
};

LagrangePolys lagrange_polys(const LagrangeFrame& frame);

/// Evaluates the interpolated Poisson representation
///   u(z) ~= (1/pi) sum_j M_j(|z|) int_{|zeta|=rho_j} |z-zeta|^{-2} u(zeta) ds
/// with circle integrals by equispaced sampling, node count doubled from
/// angular_nodes until two successive evaluations agree to 1e-12 relative
/// (cap 2^16). Requires Delta^N u = 0, |z| < rho_1, angular_nodes >= 16, and
/// at least N frame radii.
std::complex<double> lagrange_reconstruct(const BiLaurent& u, int N, const LagrangeFrame& frame,
                                          std::complex<double> z, int angular_nodes = 16);

}  // namespace polyharm::symcalc
