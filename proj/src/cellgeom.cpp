#include "polyharm/cellgeom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polyharm/errors.hpp"

namespace polyharm::cellgeom {

PiecewiseAffine::PiecewiseAffine(std::vector<Rational> breakpoints, std::vector<Affine> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
    if (segments_.size() != breakpoints_.size() + 1)
        throw Error(ErrorKind::bad_arguments, "PiecewiseAffine: segment/breakpoint count mismatch");
    Rational prev(0);
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational& b = breakpoints_[i];
        if (b <= prev) throw Error(ErrorKind::bad_arguments, "PiecewiseAffine: breakpoints not increasing");
        prev = b;
        if (segments_[i].eval(b) != segments_[i + 1].eval(b))
            throw Error(ErrorKind::bad_arguments, "PiecewiseAffine: discontinuous at breakpoint");
    }
}

PiecewiseAffine PiecewiseAffine::affine(Rational slope, Rational intercept) {
    return PiecewiseAffine({}, {Affine{std::move(slope), std::move(intercept)}});
}

const Affine& PiecewiseAffine::segment_at(const Rational& p) const {
    std::size_t i = 0;
    while (i < breakpoints_.size() && p > breakpoints_[i]) ++i;
    return segments_[i];
}

Rational PiecewiseAffine::eval(const Rational& p) const { return segment_at(p).eval(p); }

PiecewiseAffine PiecewiseAffine::min_of(const std::vector<PiecewiseAffine>& fs) {
    return combine(fs, true);
}

PiecewiseAffine PiecewiseAffine::max_of(const PiecewiseAffine& f, const PiecewiseAffine& g) {
    return combine({f, g}, false);
}

PiecewiseAffine PiecewiseAffine::combine(const std::vector<PiecewiseAffine>& fs, bool want_min) {
    if (fs.empty()) throw Error(ErrorKind::bad_arguments, "combine: no curves");

    // Candidate breakpoints: own breakpoints plus pairwise crossings inside
    // each elementary interval.
    std::set<Rational> cuts;
    for (const auto& f : fs)
        for (const auto& b : f.breakpoints()) cuts.insert(b);

    std::vector<Rational> base(cuts.begin(), cuts.end());
    auto add_crossings = [&](const Rational& lo, const Rational& hi, bool unbounded) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t k = i + 1; k < fs.size(); ++k) {
                // representative point inside the interval
                Rational mid = unbounded ? Rational(lo + 1) : Rational((lo + hi) / 2);
                const Affine& A = fs[i].segment_at(mid);
                const Affine& B = fs[k].segment_at(mid);
                if (A.slope == B.slope) continue;
                Rational cross = (B.intercept - A.intercept) / (A.slope - B.slope);
                if (cross > lo && (unbounded || cross < hi)) cuts.insert(cross);
            }
    };
    Rational lo(0);
    for (const auto& b : base) {
        add_crossings(lo, b, false);
        lo = b;
    }
    add_crossings(lo, Rational(0), true);

    // Pick the extremal segment on each elementary interval, then merge.
    std::vector<Rational> edges(cuts.begin(), cuts.end());
    std::vector<Rational> breakpoints;
    std::vector<Affine> segments;
    lo = 0;
    for (std::size_t i = 0; i <= edges.size(); ++i) {
        const bool unbounded = i == edges.size();
        Rational mid = unbounded ? Rational(lo + 1) : Rational((lo + edges[i]) / 2);
        const Affine* best = nullptr;
        Rational best_v;
        for (const auto& f : fs) {
            const Affine& seg = f.segment_at(mid);
            Rational v = seg.eval(mid);
            if (!best || (want_min ? v < best_v : v > best_v)) {
                best = &seg;
                best_v = v;
            }
        }
        if (!segments.empty() && segments.back() == *best) {
            // same affine piece continues; drop the cut
        } else {
            if (!segments.empty()) breakpoints.push_back(lo);
            segments.push_back(*best);
        }
        if (!unbounded) lo = edges[i];
    }
    return PiecewiseAffine(std::move(breakpoints), std::move(segments));
}

PiecewiseAffine b_curve(int j, int N) {
    if (N < 1 || j < 0 || j > N) throw BadIndex("b_curve: need 0 <= j <= N, N >= 1");
    if (j == 0) return PiecewiseAffine::affine(Rational(-(N - 1)), Rational(-1));
    PiecewiseAffine first = PiecewiseAffine::affine(Rational(-(j + N - 1)), Rational(-1));
    PiecewiseAffine second = PiecewiseAffine::affine(Rational(j - N + 1), Rational(-2));
    return PiecewiseAffine::max_of(first, second);
}

PiecewiseAffine a_curve(int j, int N) {
    if (N < 1 || j < 1 || j > N) throw BadIndex("a_curve: need 1 <= j <= N, N >= 1");
    return PiecewiseAffine({Rational(1, 2 * j), Rational(1)},
                           {Affine{Rational(-(j + N - 1)), Rational(-1)},
                            Affine{Rational(j - N + 1), Rational(-2)},
                            Affine{Rational(j - N), Rational(-1)}});
}

PiecewiseAffine beta_curve(int N) {
    if (N < 1) throw BadIndex("beta_curve: N >= 1");
    std::vector<PiecewiseAffine> bs;
    bs.reserve(N + 1);
    for (int j = 0; j <= N; ++j) bs.push_back(b_curve(j, N));
    return PiecewiseAffine::min_of(bs);
}

Rational local_critical_alpha(int N, const Rational& p) {
    if (N < 1 || p <= 0) throw BadIndex("local_critical_alpha: need N >= 1, p > 0");
    return Rational(-(2 * N - 1)) * p - 1;
}

Rational polyanalytic_beta(int N, const Rational& p) {
    if (N < 1 || p <= 0) throw BadIndex("polyanalytic_beta: need N >= 1, p > 0");
    return Rational(-1) - Rational(N - 1) * p;
}

std::string cell_id_of(const std::vector<int>& j_set) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < j_set.size(); ++i) {
        if (i) os << ',';
        os << j_set[i];
    }
    os << '}';
    return os.str();
}

CellDescriptor classify(int N, const CellPoint& pt) {
    if (N < 1) throw BadIndex("classify: N >= 1");
    if (pt.p <= 0) throw BadIndex("classify: p > 0 required");
    const Rational& p = pt.p;
    const Rational& alpha = pt.alpha;

    Rational min_b = b_curve(0, N).eval(p);
    for (int j = 1; j <= N; ++j) min_b = std::min(min_b, b_curve(j, N).eval(p));

    CellDescriptor d;
    d.admissible = alpha > min_b;
    if (d.admissible) {
        for (int j = 0; j < N; ++j)
            if (alpha > a_curve(N - j, N).eval(p)) d.j_set.push_back(j);
    }
    d.cell_id = cell_id_of(d.j_set);
    // The entangled/principal cell structure is defined for N >= 2; at N = 1
    // the admissible region is a single cell and both flags stay false.
    if (N >= 2) {
        d.entangled = d.admissible && p < Rational(1, 3) && alpha <= Rational(-1) - Rational(N) * p;
        Rational principal_cap =
            std::min(Rational(-2) + Rational(3 - N) * p, Rational(-1) + Rational(2 - N) * p);
        d.principal = d.admissible && p > Rational(1, 3) && alpha <= principal_cap;
    }
    return d;
}

std::vector<Cell> enumerate_cells(int N, const Rational& p_max, const Rational& alpha_max) {
    if (N < 1) throw BadIndex("enumerate_cells: N >= 1");
    if (p_max < 2) throw BadIndex("enumerate_cells: p_max >= 2 required");

    std::vector<PiecewiseAffine> curves;  // index i holds a_{i+1,N}
    for (int i = 1; i <= N; ++i) curves.push_back(a_curve(i, N));

    // Events: curve breakpoints and pairwise crossings in (0, p_max).
    std::set<Rational> events;
    events.insert(p_max);
    for (const auto& c : curves)
        for (const auto& b : c.breakpoints())
            if (b < p_max) events.insert(b);
    auto base = events;
    Rational lo(0);
    for (const auto& hi : base) {
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (std::size_t k = i + 1; k < curves.size(); ++k) {
                Rational mid = (lo + hi) / 2;
                const Affine& A = curves[i].segment_at(mid);
                const Affine& B = curves[k].segment_at(mid);
                if (A.slope == B.slope) continue;
                Rational cross = (B.intercept - A.intercept) / (A.slope - B.slope);
                if (cross > lo && cross < hi) events.insert(cross);
            }
        lo = hi;
    }

    std::vector<Rational> edges(events.begin(), events.end());

    // Per elementary interval: curves sorted by height, one band per level.
    struct Band {
        std::size_t interval;
        int lower_curve;  // index into curves
        int upper_curve;  // -1 means clip at alpha_max
    };
    std::map<std::string, std::pair<std::vector<int>, std::vector<Band>>> cells_acc;

    lo = 0;
    for (std::size_t iv = 0; iv < edges.size(); ++iv) {
        const Rational& hi = edges[iv];
        Rational mid = (lo + hi) / 2;
        std::vector<int> order(curves.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return curves[a].eval(mid) < curves[b].eval(mid);
        });
        std::vector<int> j_set;
        for (std::size_t level = 0; level < order.size(); ++level) {
            j_set.push_back(N - (order[level] + 1));  // curve a_{i+1} bounds index j = N-(i+1)
            std::vector<int> sorted = j_set;
            std::sort(sorted.begin(), sorted.end());
            std::string id = cell_id_of(sorted);
            Band band{iv, order[level],
                      level + 1 < order.size() ? order[level + 1] : -1};
            auto& entry = cells_acc[id];
            entry.first = sorted;
            entry.second.push_back(band);
        }
        lo = hi;
    }

    auto curve_value = [&](int idx, const Rational& p) -> Rational {
        if (idx < 0) return alpha_max;
        // evaluate by the segment owning the interval to stay exact at p = 0
        if (p == 0) return curves[idx].limit_at_zero();
        return curves[idx].eval(p);
    };
    auto interval_lo = [&](std::size_t iv) { return iv == 0 ? Rational(0) : edges[iv - 1]; };

    std::vector<Cell> out;
    for (auto& [id, entry] : cells_acc) {
        auto& bands = entry.second;
        Cell cell;
        cell.cell_id = id;
        cell.j_set = entry.first;

        // Build the boundary polyline: lower edge left-to-right, right edge
        // up, upper edge right-to-left, left edge down. Bands of one cell are
        // contiguous in p for these curve families.
        std::vector<std::pair<Rational, Rational>> poly;
        auto push = [&](const Rational& p, const Rational& a) {
            if (!poly.empty() && poly.back().first == p && poly.back().second == a) return;
            poly.emplace_back(p, a);
        };
        push(interval_lo(bands.front().interval), curve_value(bands.front().lower_curve, interval_lo(bands.front().interval)));
        for (const auto& b : bands) push(edges[b.interval], curve_value(b.lower_curve, edges[b.interval]));
        const Rational p_hi = edges[bands.back().interval];
        push(p_hi, curve_value(bands.back().upper_curve, p_hi));
        for (auto it = bands.rbegin(); it != bands.rend(); ++it)
            push(interval_lo(it->interval), curve_value(it->upper_curve, interval_lo(it->interval)));
        if (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
        cell.boundary = std::move(poly);

        // Flags from one interior sample of the first band.
        const Band& b0 = bands.front();
        Rational pm = (interval_lo(b0.interval) + edges[b0.interval]) / 2;
        Rational lower = curve_value(b0.lower_curve, pm);
        Rational upper = curve_value(b0.upper_curve, pm);
        if (upper <= lower) upper = lower + 1;  // clipped band above alpha_max; sample just above
        CellDescriptor d = classify(N, CellPoint{pm, (lower + upper) / 2});
        cell.entangled = d.entangled;
        cell.principal = d.principal;
        out.push_back(std::move(cell));
    }
    return out;
}

}  // namespace polyharm::cellgeom
