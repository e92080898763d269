#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace polyharm::quadrature {

/// Radial sample point. eps = 1 - r is carried separately so integrands can
/// evaluate boundary weights accurately when r is within double rounding of 1
/// (the radial mesh reaches eps ~ 1e-280 through the log substitution).
struct RadialPoint {
    double r;
    double eps;
};

/// Integration region in polar coordinates. The outer boundary is always the
/// unit circle; r_in > 0 makes an annulus, and a sector restricts the arc.
struct Region {
    enum class Kind { disk, annulus, sector };
    Kind kind = Kind::disk;
    double r_in = 0.0;
    double arc_start = 0.0;
    double arc_end = 0.0;

    static Region disk() { return {}; }
    static Region annulus(double r_in) { return {Kind::annulus, r_in, 0.0, 0.0}; }
    static Region sector(double arc_start, double arc_end, double r_in = 0.0) {
        return {Kind::sector, r_in, arc_start, arc_end};
    }
};

struct IntegrandSpec {
    /// Pointwise value at (radial point, angle).
    std::function<double(const RadialPoint&, double)> evaluator;
    /// Known power gamma with integrand ~ (1-r)^gamma near r = 1 after
    /// angular averaging; must be > -1 for an integrable boundary weight.
    double radial_exponent_at_1 = 0.0;
    /// Angles of boundary points where the integrand blows up; the angular
    /// rule grades panels toward them at radii near the boundary.
    std::vector<double> singular_angles;
};

struct IntegrateResult {
    double value = 0.0;
    double err_estimate = 0.0;  // successive-refinement heuristic, not a bound
};

/// Tensor product rule: equispaced periodic angular rule with node doubling
/// (graded panels near singular angles), composite adaptive radial rule on a
/// mesh graded toward r = 1 via u = -log(1-r). Throws NonIntegrable when the
/// boundary weight is not integrable and ToleranceNotReached when refinement
/// caps out.
IntegrateResult integrate(const IntegrandSpec& f, const Region& region, double tol);

/// Integrals over the centered sub-disks D(0, r) for increasing radii;
/// computed incrementally, so values are nondecreasing for nonnegative
/// integrands.
std::vector<std::pair<double, double>> truncated_scan(const IntegrandSpec& f,
                                                      const std::vector<double>& radii,
                                                      double tol = 1e-8);

/// Angular integral of f(rp, .) over the region's arc at a fixed radial
/// point; full circle for disk/annulus. Exposed so radial-density callers can
/// mix series and quadrature angular reductions.
double angular_integral(const IntegrandSpec& f, const RadialPoint& rp, double tol);

/// Radial density D(t): everything under int D(t) t dt except the polar
/// Jacobian t (i.e. the angular integral at radius t, boundary weight
/// included).
using RadialDensity = std::function<double(const RadialPoint&)>;

/// int_{r_in}^{1} D(t) t dt on the graded/log-substituted mesh; gamma is the
/// power behavior of D at the boundary. density_noise_rel is the relative
/// evaluation noise of D (e.g. its own angular tolerance); the radial rule
/// will not chase agreement below it.
IntegrateResult radial_boundary_integral(const RadialDensity& density, double r_in, double gamma,
                                         double tol, double density_noise_rel = 0.0);

/// int_{r_lo}^{r_hi} D(t) t dt with r_hi < 1.
IntegrateResult radial_shell_integral(const RadialDensity& density, double r_lo, double r_hi,
                                      double tol, double density_noise_rel = 0.0);

}  // namespace polyharm::quadrature
