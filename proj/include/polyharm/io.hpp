#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyharm/cellgeom.hpp"
#include "polyharm/decompositions.hpp"
#include "polyharm/kernelnum.hpp"

namespace polyharm::io {

using nlohmann::json;

/// {"terms":[{"a":int,"b":int,"re":"num/den","im":"num/den"}]}; terms ordered
/// by (a, b), rationals as strings to preserve exactness.
json to_json(const symcalc::BiLaurent& u);
symcalc::BiLaurent bilaurent_from_json(const json& j);
symcalc::BiLaurent bilaurent_from_file(const std::string& path);

/// {"order":N,"pieces":[BiLaurent,...]} for all structured decompositions.
json form_to_json(int order, const std::vector<symcalc::BiLaurent>& pieces);
std::pair<int, std::vector<symcalc::BiLaurent>> form_from_json(const json& j);

json to_json(const cellgeom::CellDescriptor& d);
json cells_to_json(const std::vector<cellgeom::Cell>& cells);

json to_json(const kernelnum::NormVerdict& v, double tol);

/// One CSV for beta(N,.) together with every b_{j,N} and a_{j,N}: breakpoint
/// rows carry the exact curve value, segment rows the slope taking effect at
/// that p (p = 0 row for the initial segment).
std::string curves_csv(int N, const Rational& p_max);

/// Static figure: sawtooth beta curve thick, cell boundaries a_{j,N} thin,
/// cells labeled by their index set.
std::string curves_svg(int N, const Rational& p_max);

std::string scan_csv(const std::vector<std::pair<int, double>>& scan, double fitted_slope,
                     double predicted_exponent, bool log_factor);

}  // namespace polyharm::io
