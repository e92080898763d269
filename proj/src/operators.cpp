#include "polyharm/operators.hpp"

#include "polyharm/errors.hpp"

namespace polyharm::symcalc {

BiLaurent dz(const BiLaurent& u) {
    BiLaurent r;
    for (const auto& [e, c] : u.terms()) {
        if (e.first == 0) continue;
        r.add_term(e.first - 1, e.second, c * Rational(e.first));
    }
    return r;
}

BiLaurent dzbar(const BiLaurent& u) {
    BiLaurent r;
    for (const auto& [e, c] : u.terms()) {
        if (e.second == 0) continue;
        r.add_term(e.first, e.second - 1, c * Rational(e.second));
    }
    return r;
}

BiLaurent laplacian(const BiLaurent& u) { return dz(dzbar(u)) * Rational(4); }

BiLaurent radial_derivative(const BiLaurent& u) {
    BiLaurent r;
    for (const auto& [e, c] : u.terms()) r.add_term(e.first, e.second, c * Rational(e.first + e.second));
    return r;
}

BiLaurent disk_weight(int j) {
    if (j < 0) throw BadIndex("disk_weight: j must be >= 0");
    BiLaurent w;
    for (int k = 0; k <= j; ++k) {
        Rational c(binomial(j, k));
        if (k % 2 != 0) c = -c;
        w.add_term(k, k, GaussRational(c));
    }
    return w;
}

BiLaurent mul_disk_weight(const BiLaurent& u, int j) {
    if (j < 0) throw BadIndex("mul_disk_weight: j must be >= 0");
    if (j == 0) return u;
    return u * disk_weight(j);
}

BiLaurent apply_L(const BiLaurent& u, const Rational& theta) {
    BiLaurent lap = laplacian(u);
    BiLaurent result = lap - lap.shifted(1, 1);  // (1 - z zbar) * Delta u
    result = result + radial_derivative(u) * (4 * theta);
    result = result - u * (4 * theta * theta);
    return result;
}

bool is_n_harmonic(const BiLaurent& u, int N) {
    if (N < 1) throw BadIndex("is_n_harmonic: N must be >= 1");
    BiLaurent v = u;
    for (int i = 0; i < N && !v.is_zero(); ++i) v = laplacian(v);
    return v.is_zero();
}

BiLaurent kernel_laurent_at_one(int j, int N) {
    if (N < 1 || j < 0 || j > N) throw BadIndex("kernel_laurent_at_one: need 0 <= j <= N");
    const int n = N + j - 1;
    const BigInt nfact = factorial(n);
    BiLaurent r;
    for (int alpha = 0; alpha <= n; ++alpha) {
        for (int beta = 0; alpha + beta <= n; ++beta) {
            const int gamma = n - alpha - beta;
            BigInt coeff = nfact / (factorial(alpha) * factorial(beta) * factorial(gamma));
            if (gamma % 2 != 0) coeff = -coeff;
            r.add_term(alpha + gamma - j, beta + gamma - j, GaussRational(Rational(coeff)));
        }
    }
    return r;
}

}  // namespace polyharm::symcalc
