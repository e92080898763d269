#pragma once

#include "polyharm/bilaurent.hpp"

namespace polyharm::symcalc {

/// Complex differentiation: termwise d/dz (z^a zbar^b) = a z^{a-1} zbar^b.
BiLaurent dz(const BiLaurent& u);
/// Conjugate differentiation: termwise a -> b analogue.
BiLaurent dzbar(const BiLaurent& u);

/// Laplacian as 4 dz dzbar; exact.
BiLaurent laplacian(const BiLaurent& u);

/// Radial derivative r d/dr = z dz + zbar dzbar; termwise scale by a+b.
BiLaurent radial_derivative(const BiLaurent& u);

/// The weight (1 - z zbar)^j as a BiLaurent.
BiLaurent disk_weight(int j);

/// Multiplication by (1 - |z|^2)^j, expanded exactly. j >= 0.
BiLaurent mul_disk_weight(const BiLaurent& u, int j);

/// The operator (1-|z|^2) Delta + 4 theta (z dz + zbar dzbar) - 4 theta^2.
BiLaurent apply_L(const BiLaurent& u, const Rational& theta);

/// True iff Delta^N u is the zero polynomial. N >= 1.
bool is_n_harmonic(const BiLaurent& u, int N);

/// Exact Laurent expansion of the kernel (1-|z|^2)^{N+j-1} / |1-z|^{2j}
/// after the substitution z = 1 - zeta, i.e. (zeta + zetabar - zeta zetabar)^{N+j-1}
/// zeta^{-j} zetabar^{-j}, with the variables reinterpreted as z, zbar.
/// Annihilated by Delta^N away from the origin. Requires 0 <= j <= N.
BiLaurent kernel_laurent_at_one(int j, int N);

}  // namespace polyharm::symcalc
