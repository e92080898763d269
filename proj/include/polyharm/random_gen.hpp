#pragma once

#include <cstdint>
#include <random>

#include "polyharm/bilaurent.hpp"

namespace polyharm::symcalc {

/// Seeded generators for property tests: sparse polynomials with at most
/// max_terms terms, exponents in [0, max_exponent], coefficient numerators
/// and denominators bounded by max_coeff. Draws use explicit modulo so runs
/// are reproducible across standard libraries.
struct RandomPolyOptions {
    int max_terms = 12;
    int max_exponent = 8;
    int max_coeff = 100;
    bool gaussian = true;  // allow nonzero imaginary parts
};

using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t bound);  // uniform-ish in [0, bound)
Rational random_rational(Rng& rng, int max_abs_num, int max_den, bool nonzero = false);
GaussRational random_coeff(Rng& rng, const RandomPolyOptions& opt);

/// Unconstrained sparse polynomial (nonnegative exponents).
BiLaurent random_bilaurent(Rng& rng, const RandomPolyOptions& opt = {});

/// Polynomial with every monomial satisfying min(a,b) <= N-1, which is
/// exactly Delta^N u = 0 for polynomials.
BiLaurent random_n_harmonic(Rng& rng, int N, const RandomPolyOptions& opt = {});

/// Harmonic polynomial: monomials with a = 0 or b = 0.
BiLaurent random_harmonic(Rng& rng, const RandomPolyOptions& opt = {});

/// Exact unimodular Gaussian rational ((1-t^2) + 2ti)/(1+t^2); rotating a
/// BiLaurent termwise by lambda^{a-b} preserves |z|^2-weighted structure.
GaussRational random_unit_rotation(Rng& rng);
BiLaurent rotate(const BiLaurent& u, const GaussRational& lambda);

}  // namespace polyharm::symcalc
