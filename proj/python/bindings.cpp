#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyharm/cellgeom.hpp"
#include "polyharm/decompositions.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/io.hpp"
#include "polyharm/kernelnum.hpp"
#include "polyharm/lagrange.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/quadrature.hpp"
#include "polyharm/verify.hpp"

namespace py = pybind11;
using namespace polyharm;
using symcalc::BiLaurent;

namespace {

GaussRational coeff_from_strings(const std::string& re, const std::string& im) {
    return {rat_parse(re), rat_parse(im)};
}

py::list terms_list(const BiLaurent& u) {
    py::list out;
    for (const auto& [e, c] : u.terms())
        out.append(py::make_tuple(e.first, e.second, rat_to_string(c.re), rat_to_string(c.im)));
    return out;
}

py::dict series_dict(const kernelnum::SeriesResult& s) {
    py::dict d;
    d["value"] = s.value;
    d["terms_used"] = s.terms_used;
    d["tail_bound"] = s.tail_bound;
    d["converged"] = s.converged;
    return d;
}

py::dict descriptor_dict(const cellgeom::CellDescriptor& d) {
    py::dict out;
    out["admissible"] = d.admissible;
    out["j_set"] = d.j_set;
    out["cell_id"] = d.cell_id;
    out["entangled"] = d.entangled;
    out["principal"] = d.principal;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Calculus of N-harmonic functions on the unit disk: exact symbolic "
              "decompositions, critical integrability curves, kernel norms and "
              "polar quadrature. Exact rationals cross this boundary as "
              "\"num/den\" strings.";

    py::register_exception<NotPolyharmonic>(m, "NotPolyharmonicError");
    py::register_exception<NegativeExponent>(m, "NegativeExponentError");
    py::register_exception<BadIndex>(m, "BadIndexError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<Error>(m, "PolyharmError");

    py::class_<BiLaurent>(m, "BiLaurent",
                          "Sparse z/zbar Laurent polynomial with exact coefficients")
        .def(py::init<>())
        .def_static("monomial",
                    [](int a, int b, const std::string& re, const std::string& im) {
                        return BiLaurent::monomial(a, b, coeff_from_strings(re, im));
                    },
                    py::arg("a"), py::arg("b"), py::arg("re"), py::arg("im") = "0")
        .def_static("constant", [](const std::string& c) {
            return BiLaurent::constant(GaussRational(rat_parse(c)));
        })
        .def_static("z", &BiLaurent::z)
        .def_static("zbar", &BiLaurent::zbar)
        .def_static("one", &BiLaurent::one)
        .def("add_term",
             [](BiLaurent& u, int a, int b, const std::string& re, const std::string& im) {
                 u.add_term(a, b, coeff_from_strings(re, im));
             },
             py::arg("a"), py::arg("b"), py::arg("re"), py::arg("im") = "0")
        .def("terms", &terms_list)
        .def("is_zero", &BiLaurent::is_zero)
        .def("term_count", &BiLaurent::term_count)
        .def("eval", [](const BiLaurent& u, std::complex<double> z) { return u.eval(z); })
        .def("to_json", [](const BiLaurent& u) { return io::to_json(u).dump(); })
        .def_static("from_json",
                    [](const std::string& s) {
                        return io::bilaurent_from_json(io::json::parse(s, nullptr, false).is_discarded()
                                                           ? throw ParseError("invalid JSON")
                                                           : io::json::parse(s));
                    })
        .def("__eq__", [](const BiLaurent& a, const BiLaurent& b) { return a == b; })
        .def("__add__", [](const BiLaurent& a, const BiLaurent& b) { return a + b; })
        .def("__sub__", [](const BiLaurent& a, const BiLaurent& b) { return a - b; })
        .def("__mul__", [](const BiLaurent& a, const BiLaurent& b) { return a * b; })
        .def("__neg__", [](const BiLaurent& a) { return -a; })
        .def("__repr__", [](const BiLaurent& u) { return u.to_string(); });

    // differential operators and structure
    m.def("dz", &symcalc::dz);
    m.def("dzbar", &symcalc::dzbar);
    m.def("laplacian", &symcalc::laplacian);
    m.def("mul_disk_weight", &symcalc::mul_disk_weight, py::arg("u"), py::arg("j"));
    m.def("apply_L",
          [](const BiLaurent& u, const std::string& theta) {
              return symcalc::apply_L(u, rat_parse(theta));
          },
          py::arg("u"), py::arg("theta"));
    m.def("is_n_harmonic", &symcalc::is_n_harmonic, py::arg("u"), py::arg("N"));
    m.def("kernel_laurent_at_one", &symcalc::kernel_laurent_at_one, py::arg("j"), py::arg("N"));

    auto bind_form = [&m](const char* name, auto example) {
        using Form = decltype(example);
        py::class_<Form>(m, name)
            .def_readonly("order", &Form::order)
            .def_readonly("pieces", &Form::pieces);
    };
    bind_form("AlmansiForm", symcalc::AlmansiForm{});
    bind_form("AltAlmansiForm", symcalc::AltAlmansiForm{});
    bind_form("CellularForm", symcalc::CellularForm{});

    m.def("almansi_decompose", &symcalc::almansi_decompose, py::arg("u"), py::arg("N"));
    m.def("almansi_recompose",
          [](const symcalc::AlmansiForm& f) { return symcalc::recompose(f); });
    m.def("almansi_to_alternative", &symcalc::almansi_to_alternative);
    m.def("alternative_to_almansi", &symcalc::alternative_to_almansi);
    m.def("extension", [](const symcalc::AlmansiForm& f) { return symcalc::extension(f).coeffs; },
          "coefficients of rho^{2j}, harmonic in z");
    m.def("extension_restrict", [](const std::vector<BiLaurent>& coeffs) {
        return symcalc::extension_restrict(symcalc::ExtensionPoly{coeffs});
    });
    m.def("cellular_decompose", &symcalc::cellular_decompose, py::arg("u"), py::arg("N"));
    m.def("cellular_recompose",
          [](const symcalc::CellularForm& f) { return symcalc::recompose(f); });
    m.def("entangled_v1_from_v0", &symcalc::entangled_v1_from_v0);

    m.def("lagrange_reconstruct",
          [](const BiLaurent& u, int N, const std::vector<std::string>& radii,
             std::complex<double> z, int angular_nodes) {
              std::vector<Rational> rs;
              for (const auto& r : radii) rs.push_back(rat_parse(r));
              return symcalc::lagrange_reconstruct(u, N, symcalc::LagrangeFrame(rs), z,
                                                   angular_nodes);
          },
          py::arg("u"), py::arg("N"), py::arg("radii"), py::arg("z"),
          py::arg("angular_nodes") = 16);

    // cell geometry; exact values as "num/den" strings
    m.def("beta_curve",
          [](int N) {
              auto f = cellgeom::beta_curve(N);
              py::list bps;
              for (const auto& b : f.breakpoints())
                  bps.append(py::make_tuple(rat_to_string(b), rat_to_string(f.eval(b))));
              py::list slopes;
              for (const auto& s : f.segments()) slopes.append(rat_to_string(s.slope));
              py::dict d;
              d["breakpoints"] = bps;
              d["slopes"] = slopes;
              return d;
          },
          py::arg("N"));
    m.def("beta_eval",
          [](int N, const std::string& p) {
              return rat_to_string(cellgeom::beta_curve(N).eval(rat_parse(p)));
          },
          py::arg("N"), py::arg("p"));
    m.def("b_curve_eval",
          [](int j, int N, const std::string& p) {
              return rat_to_string(cellgeom::b_curve(j, N).eval(rat_parse(p)));
          },
          py::arg("j"), py::arg("N"), py::arg("p"));
    m.def("a_curve_eval",
          [](int j, int N, const std::string& p) {
              return rat_to_string(cellgeom::a_curve(j, N).eval(rat_parse(p)));
          },
          py::arg("j"), py::arg("N"), py::arg("p"));
    m.def("classify",
          [](int N, const std::string& p, const std::string& alpha) {
              return descriptor_dict(cellgeom::classify(N, {rat_parse(p), rat_parse(alpha)}));
          },
          py::arg("N"), py::arg("p"), py::arg("alpha"));
    m.def("enumerate_cells",
          [](int N, const std::string& p_max) {
              py::list out;
              for (const auto& c : cellgeom::enumerate_cells(N, rat_parse(p_max))) {
                  py::dict d;
                  d["cell_id"] = c.cell_id;
                  d["j_set"] = c.j_set;
                  d["entangled"] = c.entangled;
                  d["principal"] = c.principal;
                  py::list boundary;
                  for (const auto& [p, a] : c.boundary)
                      boundary.append(py::make_tuple(rat_to_string(p), rat_to_string(a)));
                  d["boundary"] = boundary;
                  out.append(d);
              }
              return out;
          },
          py::arg("N"), py::arg("p_max") = "3");
    m.def("local_critical_alpha", [](int N, const std::string& p) {
        return rat_to_string(cellgeom::local_critical_alpha(N, rat_parse(p)));
    });
    m.def("polyanalytic_beta", [](int N, const std::string& p) {
        return rat_to_string(cellgeom::polyanalytic_beta(N, rat_parse(p)));
    });

    // kernel numerics
    m.def("kernel_eval",
          [](int j, int N, std::complex<double> z) { return kernelnum::kernel_eval({j, N}, z); },
          py::arg("j"), py::arg("N"), py::arg("z"));
    m.def("I_series",
          [](double a, double b, double tol) {
              auto r = kernelnum::I_series(a, b, tol);
              py::dict d;
              d["finite"] = r.finite;
              if (r.finite) d["series"] = series_dict(r.series);
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);
    m.def("circle_average",
          [](double b, double r, double tol) {
              return series_dict(kernelnum::circle_average(b, r, tol));
          },
          py::arg("b"), py::arg("r"), py::arg("tol") = 1e-10);
    m.def("olofsson_uniform_potential", &kernelnum::olofsson_uniform_potential, py::arg("theta"),
          py::arg("z"), py::arg("tol") = 1e-10);
    m.def("kernel_norm",
          [](int j, int N, const std::string& p, const std::string& alpha, double tol,
             bool cross_validate) {
              kernelnum::KernelNormOptions opt;
              opt.cross_validate = cross_validate;
              auto v = kernelnum::kernel_norm({j, N}, rat_parse(p), rat_parse(alpha), tol, opt);
              py::dict d;
              d["finite"] = v.finite;
              if (v.finite) {
                  d["value"] = v.value;
                  d["series"] = series_dict(v.series);
                  if (cross_validate) {
                      d["quadrature_value"] = v.quadrature_value;
                      d["cross_validated"] = v.cross_validated;
                  }
              } else {
                  d["trace"] = v.divergence_trace;
              }
              return d;
          },
          py::arg("j"), py::arg("N"), py::arg("p"), py::arg("alpha"), py::arg("tol") = 1e-9,
          py::arg("cross_validate") = true);
    m.def("annulus_norm", &kernelnum::annulus_norm, py::arg("N"), py::arg("p"), py::arg("r"),
          py::arg("tol") = 1e-8);
    m.def("annulus_regime_exponent", &kernelnum::annulus_regime_exponent, py::arg("N"),
          py::arg("p"));
    m.def("annulus_slope_fit",
          [](int N, double p, int k_lo, int k_hi, double tol) {
              auto fit = kernelnum::annulus_slope_fit(N, p, k_lo, k_hi, tol);
              py::dict d;
              d["slope"] = fit.slope;
              d["values"] = fit.values;
              return d;
          },
          py::arg("N"), py::arg("p"), py::arg("k_lo") = 6, py::arg("k_hi") = 12,
          py::arg("tol") = 1e-8);

    // quadrature over disk/annulus/sector in polar coordinates
    m.def("integrate",
          [](const std::function<double(double, double, double)>& f, double gamma,
             const std::vector<double>& singular_angles, double r_in, double tol) {
              quadrature::IntegrandSpec spec;
              spec.evaluator = [f](const quadrature::RadialPoint& rp, double t) {
                  return f(rp.r, rp.eps, t);
              };
              spec.radial_exponent_at_1 = gamma;
              spec.singular_angles = singular_angles;
              auto region = r_in > 0 ? quadrature::Region::annulus(r_in)
                                     : quadrature::Region::disk();
              auto res = quadrature::integrate(spec, region, tol);
              return py::make_tuple(res.value, res.err_estimate);
          },
          "integrate f(r, one_minus_r, angle) over the disk or annulus", py::arg("f"),
          py::arg("radial_exponent_at_1") = 0.0,
          py::arg("singular_angles") = std::vector<double>{}, py::arg("r_in") = 0.0,
          py::arg("tol") = 1e-9);

    m.def("verify_suite",
          [](const std::string& suite, std::uint64_t seed, int trials) {
              py::list out;
              for (const auto& r : verify::run_suite(suite, seed, trials)) {
                  py::dict d;
                  d["property"] = r.name;
                  d["trials"] = r.trials;
                  d["passed"] = r.passed;
                  d["counterexample"] = r.counterexample;
                  out.append(d);
              }
              return out;
          },
          py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = 100);
}
