#include "polyharm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyharm/errors.hpp"

namespace polyharm::io {

using symcalc::BiLaurent;

json to_json(const BiLaurent& u) {
    json terms = json::array();
    for (const auto& [e, c] : u.terms()) {
        terms.push_back({{"a", e.first},
                         {"b", e.second},
                         {"re", rat_to_string(c.re)},
                         {"im", rat_to_string(c.im)}});
    }
    return json{{"terms", terms}};
}

BiLaurent bilaurent_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("BiLaurent JSON must be {\"terms\": [...]}");
    BiLaurent u;
    for (const auto& t : j["terms"]) {
        if (!t.contains("a") || !t.contains("b"))
            throw ParseError("BiLaurent term missing exponents");
        int a = t["a"].get<int>();
        int b = t["b"].get<int>();
        Rational re = t.contains("re") ? rat_parse(t["re"].get<std::string>()) : Rational(0);
        Rational im = t.contains("im") ? rat_parse(t["im"].get<std::string>()) : Rational(0);
        u.add_term(a, b, GaussRational{re, im});
    }
    return u;
}

BiLaurent bilaurent_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("JSON parse failure: ") + e.what());
    }
    return bilaurent_from_json(j);
}

json form_to_json(int order, const std::vector<BiLaurent>& pieces) {
    json arr = json::array();
    for (const auto& p : pieces) arr.push_back(to_json(p));
    return json{{"order", order}, {"pieces", arr}};
}

std::pair<int, std::vector<BiLaurent>> form_from_json(const json& j) {
    if (!j.contains("order") || !j.contains("pieces"))
        throw ParseError("form JSON must carry order and pieces");
    int order = j["order"].get<int>();
    std::vector<BiLaurent> pieces;
    for (const auto& p : j["pieces"]) pieces.push_back(bilaurent_from_json(p));
    return {order, std::move(pieces)};
}

json to_json(const cellgeom::CellDescriptor& d) {
    json j;
    j["admissible"] = d.admissible;
    j["j_set"] = d.j_set;
    j["cell_id"] = d.cell_id;
    j["entangled"] = d.entangled;
    j["principal"] = d.principal;
    return j;
}

json cells_to_json(const std::vector<cellgeom::Cell>& cells) {
    json arr = json::array();
    for (const auto& c : cells) {
        json boundary = json::array();
        for (const auto& [p, a] : c.boundary)
            boundary.push_back({rat_to_string(p), rat_to_string(a)});
        arr.push_back({{"cell_id", c.cell_id},
                       {"j_set", c.j_set},
                       {"entangled", c.entangled},
                       {"principal", c.principal},
                       {"boundary", boundary}});
    }
    return json{{"cells", arr}};
}

json to_json(const kernelnum::NormVerdict& v, double tol) {
    json j;
    j["finite"] = v.finite;
    if (v.finite) {
        j["value"] = v.value;
        j["tol"] = tol;
        j["terms_used"] = v.series.terms_used;
        if (v.cross_validated) j["quadrature_value"] = v.quadrature_value;
    } else {
        json trace = json::array();
        for (const auto& [r, val] : v.divergence_trace) trace.push_back({r, val});
        j["trace"] = trace;
    }
    return j;
}

namespace {

void emit_curve_rows(std::ostringstream& os, const std::string& name,
                     const cellgeom::PiecewiseAffine& f, const Rational& p_max) {
    const auto& bps = f.breakpoints();
    const auto& segs = f.segments();
    os << name << ",segment,0,1," << rat_to_string(segs[0].intercept) << ",1,"
       << rat_to_string(segs[0].slope) << "\n";
    for (std::size_t i = 0; i < bps.size(); ++i) {
        if (bps[i] > p_max) break;
        Rational value = segs[i].eval(bps[i]);
        os << name << ",breakpoint," << rat_num(bps[i]) << ',' << rat_den(bps[i]) << ','
           << rat_num(value) << ',' << rat_den(value) << ',' << rat_to_string(segs[i + 1].slope)
           << "\n";
    }
}

double svg_x(double p, double p_max) { return 40.0 + p / p_max * 520.0; }
double svg_y(double alpha, double a_min) { return 20.0 + (0.25 - alpha) / (0.25 - a_min) * 400.0; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void svg_polyline(std::ostringstream& os, const cellgeom::PiecewiseAffine& f, double p_max,
                  double a_min, const char* style) {
    os << "  <polyline fill=\"none\" " << style << " points=\"";
    const int samples = 64;
    std::vector<double> ps;
    for (int i = 1; i <= samples; ++i) ps.push_back(p_max * i / samples);
    for (const auto& b : f.breakpoints()) {
        double pb = rat_to_double(b);
        if (pb < p_max) ps.push_back(pb);
    }
    std::sort(ps.begin(), ps.end());
    bool first = true;
    for (double p : ps) {
        double alpha = rat_to_double(f.eval(rat_from_double(p)));
        if (alpha < a_min) alpha = a_min;
        os << (first ? "" : " ") << fmt(svg_x(p, p_max)) << ',' << fmt(svg_y(alpha, a_min));
        first = false;
    }
    os << "\"/>\n";
}

}  // namespace

std::string curves_csv(int N, const Rational& p_max) {
    std::ostringstream os;
    os << "curve,kind,p_num,p_den,alpha_num,alpha_den,slope\n";
    emit_curve_rows(os, "beta", cellgeom::beta_curve(N), p_max);
    for (int j = 0; j <= N; ++j)
        emit_curve_rows(os, "b" + std::to_string(j), cellgeom::b_curve(j, N), p_max);
    for (int j = 1; j <= N; ++j)
        emit_curve_rows(os, "a" + std::to_string(j), cellgeom::a_curve(j, N), p_max);
    return os.str();
}

std::string curves_svg(int N, const Rational& p_max) {
    const double pm = rat_to_double(p_max);
    const double a_min = -1.5 - 2.0 * N;  // generous view; curves stay above
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"460\" "
          "viewBox=\"0 0 600 460\">\n";
    os << "  <line x1=\"40\" y1=\"20\" x2=\"40\" y2=\"440\" stroke=\"black\"/>\n";
    os << "  <line x1=\"40\" y1=\"440\" x2=\"580\" y2=\"440\" stroke=\"black\"/>\n";
    // axis ticks at the sawtooth breakpoints
    auto beta = cellgeom::beta_curve(N);
    for (const auto& b : beta.breakpoints()) {
        double x = svg_x(rat_to_double(b), pm);
        os << "  <line x1=\"" << fmt(x) << "\" y1=\"436\" x2=\"" << fmt(x)
           << "\" y2=\"444\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << fmt(x - 8) << "\" y=\"456\" font-size=\"10\">"
           << rat_to_string(b) << "</text>\n";
    }
    for (int j = 1; j <= N; ++j)
        svg_polyline(os, cellgeom::a_curve(j, N), pm, a_min,
                     "stroke=\"gray\" stroke-width=\"1\"");
    svg_polyline(os, beta, pm, a_min, "stroke=\"black\" stroke-width=\"3\"");
    // cell labels at interior representatives
    for (const auto& cell : cellgeom::enumerate_cells(N, std::max(p_max, Rational(2)))) {
        double px = 0, py = 0;
        for (const auto& [p, a] : cell.boundary) {
            px += rat_to_double(p);
            py += rat_to_double(a);
        }
        px /= static_cast<double>(cell.boundary.size());
        py /= static_cast<double>(cell.boundary.size());
        os << "  <text x=\"" << fmt(svg_x(px, pm)) << "\" y=\"" << fmt(svg_y(py, a_min))
           << "\" font-size=\"11\">" << cell.cell_id << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string scan_csv(const std::vector<std::pair<int, double>>& scan, double fitted_slope,
                     double predicted_exponent, bool log_factor) {
    std::ostringstream os;
    os << "k,r,integral,log_one_minus_r,log_integral\n";
    char buf[96];
    for (const auto& [k, v] : scan) {
        const double one_minus_r = std::ldexp(1.0, -k);
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", k, 1.0 - one_minus_r, v,
                      std::log(one_minus_r), std::log(v));
        os << buf;
    }
    std::snprintf(buf, sizeof(buf), "# fitted_slope,%.17g\n# predicted_exponent,%.17g\n", fitted_slope,
                  predicted_exponent);
    os << buf;
    os << "# log_factor," << (log_factor ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace polyharm::io
