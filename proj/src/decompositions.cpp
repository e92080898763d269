#include "polyharm/decompositions.hpp"

#include <algorithm>

#include "polyharm/errors.hpp"
#include "polyharm/operators.hpp"

namespace polyharm::symcalc {

AlmansiForm almansi_decompose(const BiLaurent& u, int N) {
    if (N < 1) throw BadIndex("almansi_decompose: N must be >= 1");
    if (u.has_negative_exponents())
        throw NegativeExponent("almansi_decompose: Laurent input, grouping by |z|^{2m} undefined");
    if (!is_n_harmonic(u, N)) throw NotPolyharmonic("almansi_decompose: Delta^N u != 0");
    AlmansiForm f;
    f.order = N;
    f.pieces.assign(N, BiLaurent{});
    for (const auto& [e, c] : u.terms()) {
        const int m = std::min(e.first, e.second);
        // m <= N-1 since Delta^N maps monomials injectively, so Delta^N u = 0 termwise.
        f.pieces[m].add_term(e.first - m, e.second - m, c);
    }
    return f;
}

BiLaurent recompose(const AlmansiForm& f) {
    BiLaurent u;
    for (int j = 0; j < f.order; ++j) u = u + f.pieces[j].shifted(j, j);
    return u;
}

AltAlmansiForm almansi_to_alternative(const AlmansiForm& f) {
    AltAlmansiForm g;
    g.order = f.order;
    g.pieces.assign(f.order, BiLaurent{});
    for (int j = 0; j < f.order; ++j) {
        BiLaurent v;
        for (int k = j; k < f.order; ++k) v = v + f.pieces[k] * Rational(binomial(k, j));
        if (j % 2 != 0) v = -v;
        g.pieces[j] = v;
    }
    return g;
}

AlmansiForm alternative_to_almansi(const AltAlmansiForm& f) {
    // The signed binomial transform is an involution.
    AlmansiForm in{f.order, f.pieces};
    AltAlmansiForm out = almansi_to_alternative(in);
    return AlmansiForm{out.order, out.pieces};
}

BiLaurent recompose(const AltAlmansiForm& f) {
    BiLaurent u;
    for (int j = 0; j < f.order; ++j) u = u + mul_disk_weight(f.pieces[j], j);
    return u;
}

ExtensionPoly extension(const AlmansiForm& f) { return ExtensionPoly{f.pieces}; }

BiLaurent extension_restrict(const ExtensionPoly& e) {
    BiLaurent u;
    for (std::size_t j = 0; j < e.coeffs.size(); ++j)
        u = u + e.coeffs[j].shifted(static_cast<int>(j), static_cast<int>(j));
    return u;
}

namespace {

// Recursion from the existence argument; input already validated.
std::vector<BiLaurent> cellular_pieces(const BiLaurent& u, int N) {
    if (N == 1) return {u};
    const int n0 = N - 1;
    std::vector<BiLaurent> h = cellular_pieces(apply_L(u, Rational(n0)), n0);
    BiLaurent H;
    for (int j = 0; j < n0; ++j) {
        Rational scale = Rational(1) / Rational(4 * (j + 1) * (2 * n0 - j));
        H = H + mul_disk_weight(h[j], j + 1) * scale;
    }
    std::vector<BiLaurent> w(N);
    w[0] = u + H;
    for (int j = 1; j <= n0; ++j)
        w[j] = h[j - 1] * (Rational(-1) / Rational(4 * j * (2 * n0 - j + 1)));
    return w;
}

}  // namespace

CellularForm cellular_decompose(const BiLaurent& u, int N) {
    if (N < 1) throw BadIndex("cellular_decompose: N must be >= 1");
    if (u.has_negative_exponents())
        throw NegativeExponent("cellular_decompose: Laurent input not supported");
    if (!is_n_harmonic(u, N)) throw NotPolyharmonic("cellular_decompose: Delta^N u != 0");

    CellularForm f;
    f.order = N;
    f.pieces = cellular_pieces(u, N);

    if (recompose(f) != u)
        throw std::logic_error("cellular_decompose: recomposition mismatch");
    for (int j = 0; j < N; ++j) {
        if (!apply_L(f.pieces[j], Rational(N - j - 1)).is_zero())
            throw std::logic_error("cellular_decompose: L-annihilation failed");
        if (!f.pieces[j].is_zero() && !is_n_harmonic(f.pieces[j], N - j))
            throw std::logic_error("cellular_decompose: piece not (N-j)-harmonic");
    }
    return f;
}

BiLaurent recompose(const CellularForm& f) {
    BiLaurent u;
    for (int j = 0; j < f.order; ++j) u = u + mul_disk_weight(f.pieces[j], j);
    return u;
}

BiLaurent entangled_v1_from_v0(const BiLaurent& v0) {
    if (!laplacian(v0).is_zero()) throw NotHarmonic("entangled_v1_from_v0: v0 not harmonic");
    Rational half(1, 2);
    return radial_derivative(v0) * half - v0 * half;
}

}  // namespace polyharm::symcalc
