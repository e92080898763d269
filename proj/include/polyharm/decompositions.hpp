#pragma once

#include <vector>

#include "polyharm/bilaurent.hpp"

namespace polyharm::symcalc {

/// Almansi representation u = sum |z|^{2j} u_j with harmonic pieces u_j.
struct AlmansiForm {
    int order = 1;
    std::vector<BiLaurent> pieces;  // u_0 .. u_{order-1}
};

/// Alternative representation u = sum (1-|z|^2)^j v_j with harmonic v_j.
struct AltAlmansiForm {
    int order = 1;
    std::vector<BiLaurent> pieces;  // v_0 .. v_{order-1}
};

/// Extension E[u](z, rho) = sum rho^{2j} u_j(z); even polynomial of degree
/// 2N-2 in rho, harmonic in z, restricting to u on rho = |z|.
struct ExtensionPoly {
    std::vector<BiLaurent> coeffs;  // coefficient of rho^{2j}
};

/// Cellular representation u = sum M^j[w_j] where w_j is (N-j)-harmonic and
/// solves L_{N-j-1}[w_j] = 0.
struct CellularForm {
    int order = 1;
    std::vector<BiLaurent> pieces;  // w_0 .. w_{order-1}
};

/// Groups each monomial z^a zbar^b into piece min(a,b). Requires Delta^N u = 0
/// and nonnegative exponents.
AlmansiForm almansi_decompose(const BiLaurent& u, int N);
BiLaurent recompose(const AlmansiForm& f);

/// Signed binomial transform v_j = (-1)^j sum_{k>=j} C(k,j) u_k; an
/// involution, so the inverse applies the same formula.
AltAlmansiForm almansi_to_alternative(const AlmansiForm& f);
AlmansiForm alternative_to_almansi(const AltAlmansiForm& f);
BiLaurent recompose(const AltAlmansiForm& f);

ExtensionPoly extension(const AlmansiForm& f);
/// Substitutes rho^2 := z zbar; reproduces the decomposed function exactly.
BiLaurent extension_restrict(const ExtensionPoly& e);

/// Cellular decomposition by the order-reduction recursion: the base case
/// N=1 returns w_0 = u; the step decomposes L_{N-1}[u] at order N-1 into
/// pieces h_j and corrects u by H = (1/4) sum M^{j+1}[h_j] / ((j+1)(2N-2-j)).
/// All postconditions (exact recomposition, L-annihilation, harmonicity) are
/// asserted on the result.
CellularForm cellular_decompose(const BiLaurent& u, int N);
BiLaurent recompose(const CellularForm& f);

/// For harmonic v0, the unique harmonic v1 with L_1[v0 + M[v1]] = 0:
/// v1 = (z dz v0 + zbar dzbar v0)/2 - v0/2.
BiLaurent entangled_v1_from_v0(const BiLaurent& v0);

}  // namespace polyharm::symcalc
