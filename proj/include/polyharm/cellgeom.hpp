#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm::cellgeom {

using polyharm::Rational;

/// Affine piece value = slope * p + intercept.
struct Affine {
    Rational slope;
    Rational intercept;
    Rational eval(const Rational& p) const { return slope * p + intercept; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// Continuous piecewise-affine function of p on (0, +inf): segment i applies
/// on (breakpoint_{i-1}, breakpoint_i], and the last segment extends to
/// infinity. Construction verifies exact continuity at every breakpoint.
class PiecewiseAffine {
public:
    PiecewiseAffine(std::vector<Rational> breakpoints, std::vector<Affine> segments);
    static PiecewiseAffine affine(Rational slope, Rational intercept);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Affine>& segments() const { return segments_; }

    Rational eval(const Rational& p) const;  // exact, p > 0
    double eval(double p) const { return rat_to_double(eval(rat_from_double(p))); }
    const Affine& segment_at(const Rational& p) const;

    /// Value as p -> 0+ (first segment's intercept).
    Rational limit_at_zero() const { return segments_.front().intercept; }

    /// Exact pointwise min/max by segment-intersection sweep.
    static PiecewiseAffine min_of(const std::vector<PiecewiseAffine>& fs);
    static PiecewiseAffine max_of(const PiecewiseAffine& f, const PiecewiseAffine& g);

private:
    static PiecewiseAffine combine(const std::vector<PiecewiseAffine>& fs, bool want_min);
    std::vector<Rational> breakpoints_;
    std::vector<Affine> segments_;  // breakpoints_.size() + 1
};

struct CellPoint {
    Rational p;      // > 0
    Rational alpha;
};

struct CellDescriptor {
    bool admissible = false;
    std::vector<int> j_set;  // sorted subset of {0..N-1}
    bool entangled = false;
    bool principal = false;
    std::string cell_id;     // canonical "{j1,j2,...}"
};

/// b_{j,N}: j = 0 gives -1-(N-1)p; j >= 1 gives
/// max{-1-(j+N-1)p, -2+(j-N+1)p} with breakpoint p = 1/(2j).
PiecewiseAffine b_curve(int j, int N);

/// a_{j,N}: three branches -1-(j+N-1)p, -2+(j-N+1)p, -1+(j-N)p with
/// breakpoints 1/(2j) and 1. Requires 1 <= j <= N.
PiecewiseAffine a_curve(int j, int N);

/// The critical integrability curve beta(N, .) = min_j b_{j,N}; exact sweep.
/// p_max is carried for export clipping only; evaluation is valid for all p.
PiecewiseAffine beta_curve(int N);

Rational local_critical_alpha(int N, const Rational& p);  // -(2N-1)p - 1
Rational polyanalytic_beta(int N, const Rational& p);     // -1-(N-1)p

std::string cell_id_of(const std::vector<int>& j_set);

CellDescriptor classify(int N, const CellPoint& pt);

struct Cell {
    std::string cell_id;
    std::vector<int> j_set;
    bool entangled = false;
    bool principal = false;
    /// Closed polyline with exact rational vertices, clipped to
    /// (0, p_max] x (beta, alpha_max].
    std::vector<std::pair<Rational, Rational>> boundary;
};

/// Partitions the strip above beta(N, .) by the curves alpha = a_{j,N}(p).
/// Requires p_max >= 2.
std::vector<Cell> enumerate_cells(int N, const Rational& p_max, const Rational& alpha_max = Rational(0));

}  // namespace polyharm::cellgeom
