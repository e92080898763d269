#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "polyharm/cellgeom.hpp"
#include "polyharm/decompositions.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/io.hpp"
#include "polyharm/kernelnum.hpp"
#include "polyharm/lagrange.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/random_gen.hpp"
#include "polyharm/verify.hpp"

using namespace polyharm;
using symcalc::BiLaurent;

namespace {

Rational arg_rational(const std::string& s) {
    try {
        return rat_parse(s);
    } catch (const ParseError& e) {
        throw Error(ErrorKind::bad_arguments, std::string("bad rational argument: ") + e.what());
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::bad_arguments, "cannot write '" + out_path + "'");
    out << text;
}

std::int64_t term_cap_from_env() {
    const char* env = std::getenv("POLYHARM_TERM_CAP");
    if (!env) return kernelnum::kDefaultTermCap;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || v < 1000)
        throw Error(ErrorKind::bad_arguments, "POLYHARM_TERM_CAP must be an integer >= 1000");
    return v;
}

io::json curve_to_json(const std::string& name, const cellgeom::PiecewiseAffine& f) {
    io::json j;
    j["curve"] = name;
    io::json bps = io::json::array();
    for (const auto& b : f.breakpoints())
        bps.push_back({rat_to_string(b), rat_to_string(f.eval(b))});
    j["breakpoints"] = bps;
    io::json segs = io::json::array();
    for (const auto& s : f.segments())
        segs.push_back({{"slope", rat_to_string(s.slope)}, {"intercept", rat_to_string(s.intercept)}});
    j["segments"] = segs;
    return j;
}

int run_beta_curve(int N, const Rational& p_max, const std::string& format,
                   const std::string& out) {
    if (format == "csv") {
        write_output(io::curves_csv(N, p_max), out);
    } else if (format == "svg") {
        write_output(io::curves_svg(N, p_max), out);
    } else if (format == "json") {
        io::json j;
        j["curves"] = io::json::array();
        j["curves"].push_back(curve_to_json("beta", cellgeom::beta_curve(N)));
        for (int k = 0; k <= N; ++k)
            j["curves"].push_back(curve_to_json("b" + std::to_string(k), cellgeom::b_curve(k, N)));
        for (int k = 1; k <= N; ++k)
            j["curves"].push_back(curve_to_json("a" + std::to_string(k), cellgeom::a_curve(k, N)));
        write_output(j.dump(2), out);
    } else {
        throw Error(ErrorKind::bad_arguments, "format must be csv, svg or json");
    }
    return 0;
}

int run_decompose(const std::string& input, int N, const std::string& mode,
                  const std::string& out) {
    BiLaurent u = io::bilaurent_from_file(input);
    io::json result;
    result["mode"] = mode;
    io::json verification;

    if (mode == "almansi" || mode == "alternative") {
        symcalc::AlmansiForm f = symcalc::almansi_decompose(u, N);
        io::json checks = io::json::array();
        if (mode == "almansi") {
            result["form"] = io::form_to_json(f.order, f.pieces);
            verification["recomposition_residual_zero"] = (recompose(f) - u).is_zero();
            for (int j = 0; j < f.order; ++j)
                checks.push_back({{"piece", j}, {"harmonic", laplacian(f.pieces[j]).is_zero()}});
        } else {
            symcalc::AltAlmansiForm alt = symcalc::almansi_to_alternative(f);
            result["form"] = io::form_to_json(alt.order, alt.pieces);
            verification["recomposition_residual_zero"] = (recompose(alt) - u).is_zero();
            for (int j = 0; j < alt.order; ++j)
                checks.push_back({{"piece", j}, {"harmonic", laplacian(alt.pieces[j]).is_zero()}});
        }
        verification["checks"] = checks;
    } else if (mode == "cellular") {
        symcalc::CellularForm f = symcalc::cellular_decompose(u, N);
        result["form"] = io::form_to_json(f.order, f.pieces);
        verification["recomposition_residual_zero"] = (recompose(f) - u).is_zero();
        io::json checks = io::json::array();
        for (int j = 0; j < f.order; ++j) {
            checks.push_back(
                {{"piece", j},
                 {"L_annihilated", symcalc::apply_L(f.pieces[j], Rational(N - j - 1)).is_zero()},
                 {"harmonic_order", N - j},
                 {"polyharmonic", f.pieces[j].is_zero() || symcalc::is_n_harmonic(f.pieces[j], N - j)}});
        }
        verification["checks"] = checks;
    } else {
        throw Error(ErrorKind::bad_arguments, "mode must be almansi, alternative or cellular");
    }
    result["verification"] = verification;
    write_output(result.dump(2), out);
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int trials, const std::string& format,
               const std::string& out) {
    auto results = verify::run_suite(suite, seed, trials);
    bool all_passed = true;
    if (format == "json") {
        io::json j;
        j["suite"] = suite;
        j["seed"] = seed;
        io::json arr = io::json::array();
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            arr.push_back({{"property", r.name},
                           {"trials", r.trials},
                           {"passed", r.passed},
                           {"counterexample", r.counterexample}});
        }
        j["properties"] = arr;
        j["passed"] = all_passed;
        write_output(j.dump(2), out);
    } else {
        std::ostringstream os;
        os << "suite " << suite << " (seed " << seed << ")\n";
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            if (r.passed)
                os << "PASS " << r.name << " (trials=" << r.trials << ")\n";
            else
                os << "FAIL " << r.name << " after " << r.trials
                   << " trials; counterexample: " << r.counterexample << "\n";
        }
        write_output(os.str(), out);
    }
    return all_passed ? 0 : 1;
}

int run_extension_check(const std::string& input, int N, const std::string& radii_arg,
                        std::uint64_t seed, int trials, double tol, const std::string& out) {
    BiLaurent u = io::bilaurent_from_file(input);
    std::vector<Rational> radii;
    if (!radii_arg.empty()) {
        std::stringstream ss(radii_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) radii.push_back(arg_rational(tok));
    } else {
        const Rational defaults[3] = {Rational(1, 2), Rational(5, 8), Rational(3, 4)};
        for (int i = 0; i < std::max(N, 1) && i < 3; ++i) radii.push_back(defaults[i]);
        for (int i = 3; i < N; ++i) radii.push_back(Rational(3, 4) + Rational(i - 2, 4 * (N + 1)));
    }
    symcalc::LagrangeFrame frame(radii);
    const double rho1 = rat_to_double(frame.radii.front());

    symcalc::Rng rng(seed);
    double max_err = 0.0;
    io::json samples = io::json::array();
    for (int i = 0; i < trials; ++i) {
        const double rad = 0.98 * rho1 * (static_cast<double>(symcalc::draw(rng, 1000)) / 1000.0);
        const double ang = 6.283185307179586 * (static_cast<double>(symcalc::draw(rng, 1000)) / 1000.0);
        const std::complex<double> z = std::polar(rad, ang);
        const std::complex<double> direct = u.eval(z);
        const std::complex<double> rec = symcalc::lagrange_reconstruct(u, N, frame, z);
        const double err = std::abs(direct - rec);
        max_err = std::max(max_err, err);
        if (samples.size() < 5)
            samples.push_back({{"re", z.real()}, {"im", z.imag()}, {"error", err}});
    }
    io::json j;
    j["max_error"] = max_err;
    j["tol"] = tol;
    j["trials"] = trials;
    j["passed"] = max_err <= tol;
    j["samples"] = samples;
    write_output(j.dump(2), out);
    return max_err <= tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyharm: calculus of N-harmonic functions on the unit disk"};
    app.require_subcommand(1);

    // shared option storage
    int N = 1, j_index = 0, trials = 200, k_min = 6, k_max = 12;
    std::string p_str = "1", alpha_str = "0", format = "csv", out_path, input_path;
    std::string mode = "almansi", suite = "identities", radii_arg;
    std::string p_max_str = "3";
    double tol = 1e-9;
    std::uint64_t seed = 1;

    auto* beta = app.add_subcommand("beta-curve", "emit beta(N,.) with all b and a curves");
    beta->add_option("--n", N, "polyharmonic order")->required();
    beta->add_option("--p-max", p_max_str, "clip exports at this p (rational)");
    beta->add_option("--format", format, "csv, svg or json");
    beta->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* classify_cmd = app.add_subcommand("classify", "classify a point (p, alpha)");
    classify_cmd->add_option("--n", N)->required();
    classify_cmd->add_option("--p", p_str, "p as num/den")->required();
    classify_cmd->add_option("--alpha", alpha_str, "alpha as num/den")->required();
    classify_cmd->add_option("--out", out_path);

    auto* cells_cmd = app.add_subcommand("cells", "enumerate admissible cells");
    cells_cmd->add_option("--n", N)->required();
    cells_cmd->add_option("--p-max", p_max_str);
    cells_cmd->add_option("--format", format, "json or svg");
    cells_cmd->add_option("--out", out_path);

    auto* decomp = app.add_subcommand("decompose", "decompose a polynomial from JSON");
    decomp->add_option("input", input_path, "BiLaurent JSON file")->required();
    decomp->add_option("--n", N)->required();
    decomp->add_option("--mode", mode, "almansi, alternative or cellular");
    decomp->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "run a seeded property suite");
    verify_cmd->add_option("suite", suite, "identities, decomposition, kernels or curves")
        ->required();
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--format", format, "text or json");
    verify_cmd->add_option("--out", out_path);

    auto* norm = app.add_subcommand("kernel-norm", "finiteness verdict and value for ||U_{j,N}||");
    norm->add_option("--j", j_index)->required();
    norm->add_option("--n", N)->required();
    norm->add_option("--p", p_str)->required();
    norm->add_option("--alpha", alpha_str)->required();
    norm->add_option("--tol", tol);
    norm->add_option("--out", out_path);

    auto* scan = app.add_subcommand("annulus-scan", "boundary asymptotics of ||U_{N,N}||_p");
    scan->add_option("--n", N)->required();
    scan->add_option("--p", p_str)->required();
    scan->add_option("--k-min", k_min);
    scan->add_option("--k-max", k_max);
    scan->add_option("--tol", tol);
    scan->add_option("--out", out_path);

    auto* ext = app.add_subcommand("extension-check", "Lagrange reconstruction against direct evaluation");
    ext->add_option("input", input_path, "BiLaurent JSON file")->required();
    ext->add_option("--n", N)->required();
    ext->add_option("--radii", radii_arg, "comma-separated rational radii");
    ext->add_option("--seed", seed);
    ext->add_option("--trials", trials)->default_val(20);
    ext->add_option("--tol", tol)->default_val(1e-8);
    ext->add_option("--out", out_path);

    try {
        app.parse(argc, argv);

        if (beta->parsed()) return run_beta_curve(N, arg_rational(p_max_str), format, out_path);

        if (classify_cmd->parsed()) {
            auto d = cellgeom::classify(N, {arg_rational(p_str), arg_rational(alpha_str)});
            write_output(io::to_json(d).dump(2), out_path);
            return 0;
        }

        if (cells_cmd->parsed()) {
            if (format == "svg") {
                write_output(io::curves_svg(N, arg_rational(p_max_str)), out_path);
            } else {
                auto cells = cellgeom::enumerate_cells(N, arg_rational(p_max_str));
                write_output(io::cells_to_json(cells).dump(2), out_path);
            }
            return 0;
        }

        if (decomp->parsed()) return run_decompose(input_path, N, mode, out_path);

        if (verify_cmd->parsed()) {
            if (format == "csv") format = "text";
            return run_verify(suite, seed, trials, format, out_path);
        }

        if (norm->parsed()) {
            kernelnum::KernelNormOptions opt;
            opt.term_cap = term_cap_from_env();
            auto v = kernelnum::kernel_norm({j_index, N}, arg_rational(p_str),
                                            arg_rational(alpha_str), tol, opt);
            write_output(io::to_json(v, tol).dump(2), out_path);
            return 0;
        }

        if (scan->parsed()) {
            const Rational p = arg_rational(p_str);
            auto fit = kernelnum::annulus_slope_fit(N, rat_to_double(p), k_min, k_max,
                                                    std::min(tol, 1e-8));
            auto [predicted, log_factor] = kernelnum::annulus_regime_exponent(N, rat_to_double(p));
            write_output(io::scan_csv(fit.values, fit.slope, predicted, log_factor), out_path);
            return 0;
        }

        if (ext->parsed())
            return run_extension_check(input_path, N, radii_arg, seed, trials, tol, out_path);

        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
