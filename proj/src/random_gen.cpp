#include "polyharm/random_gen.hpp"

namespace polyharm::symcalc {

std::uint64_t draw(Rng& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

Rational random_rational(Rng& rng, int max_abs_num, int max_den, bool nonzero) {
    for (;;) {
        std::int64_t num = static_cast<std::int64_t>(draw(rng, 2 * max_abs_num + 1)) - max_abs_num;
        if (nonzero && num == 0) continue;
        std::int64_t den = 1 + static_cast<std::int64_t>(draw(rng, max_den));
        return Rational(num, den);
    }
}

GaussRational random_coeff(Rng& rng, const RandomPolyOptions& opt) {
    Rational re = random_rational(rng, opt.max_coeff, opt.max_coeff);
    Rational im(0);
    if (opt.gaussian && draw(rng, 2) == 0) im = random_rational(rng, opt.max_coeff, opt.max_coeff);
    if (re == 0 && im == 0) re = 1;
    return {re, im};
}

BiLaurent random_bilaurent(Rng& rng, const RandomPolyOptions& opt) {
    BiLaurent u;
    const int terms = 1 + static_cast<int>(draw(rng, opt.max_terms));
    for (int i = 0; i < terms; ++i) {
        int a = static_cast<int>(draw(rng, opt.max_exponent + 1));
        int b = static_cast<int>(draw(rng, opt.max_exponent + 1));
        u.add_term(a, b, random_coeff(rng, opt));
    }
    return u;
}

BiLaurent random_n_harmonic(Rng& rng, int N, const RandomPolyOptions& opt) {
    BiLaurent u;
    const int terms = 1 + static_cast<int>(draw(rng, opt.max_terms));
    for (int i = 0; i < terms; ++i) {
        // force min(a,b) <= N-1
        int m = static_cast<int>(draw(rng, N));
        int e = m + static_cast<int>(draw(rng, std::max(1, opt.max_exponent - m + 1)));
        bool a_small = draw(rng, 2) == 0;
        int a = a_small ? m : e;
        int b = a_small ? e : m;
        u.add_term(a, b, random_coeff(rng, opt));
    }
    return u;
}

BiLaurent random_harmonic(Rng& rng, const RandomPolyOptions& opt) {
    BiLaurent u;
    const int terms = 1 + static_cast<int>(draw(rng, opt.max_terms));
    for (int i = 0; i < terms; ++i) {
        int e = static_cast<int>(draw(rng, opt.max_exponent + 1));
        if (draw(rng, 2) == 0)
            u.add_term(e, 0, random_coeff(rng, opt));
        else
            u.add_term(0, e, random_coeff(rng, opt));
    }
    return u;
}

GaussRational random_unit_rotation(Rng& rng) {
    std::int64_t t_num = static_cast<std::int64_t>(draw(rng, 9)) - 4;
    std::int64_t t_den = 1 + static_cast<std::int64_t>(draw(rng, 4));
    Rational t(t_num, t_den);
    Rational denom = 1 + t * t;
    return {(1 - t * t) / denom, 2 * t / denom};
}

BiLaurent rotate(const BiLaurent& u, const GaussRational& lambda) {
    BiLaurent r;
    for (const auto& [e, c] : u.terms()) {
        int k = e.first - e.second;
        GaussRational factor(Rational(1));
        GaussRational base = k >= 0 ? lambda : lambda.conj();
        for (int i = 0; i < std::abs(k); ++i) factor = factor * base;
        r.add_term(e.first, e.second, c * factor);
    }
    return r;
}

}  // namespace polyharm::symcalc
