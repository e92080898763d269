#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "polyharm/gauss_rational.hpp"

namespace polyharm::symcalc {

using polyharm::GaussRational;
using polyharm::Rational;

/// Sparse bivariate Laurent polynomial sum c_{a,b} z^a zbar^b with exact
/// Gaussian-rational coefficients. No zero coefficients are stored, so two
/// values are equal iff their term maps are equal. Immutable in spirit: all
/// operations return new values.
class BiLaurent {
public:
    using Exp = std::pair<int, int>;
    using TermMap = std::map<Exp, GaussRational>;

    BiLaurent() = default;

    static BiLaurent monomial(int a, int b, GaussRational c);
    static BiLaurent constant(GaussRational c) { return monomial(0, 0, std::move(c)); }
    static BiLaurent constant(int n) { return constant(GaussRational(n)); }
    static BiLaurent zero() { return {}; }
    static BiLaurent one() { return constant(1); }
    static BiLaurent z() { return monomial(1, 0, GaussRational(1)); }
    static BiLaurent zbar() { return monomial(0, 1, GaussRational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool has_negative_exponents() const;

    friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

    friend BiLaurent operator+(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator-(const BiLaurent& a);
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator*(const BiLaurent& a, const GaussRational& c);
    friend BiLaurent operator*(const GaussRational& c, const BiLaurent& a) { return a * c; }
    friend BiLaurent operator*(const BiLaurent& a, const Rational& c) {
        return a * GaussRational(c);
    }
    friend BiLaurent operator*(const Rational& c, const BiLaurent& a) { return a * c; }

    BiLaurent pow(int k) const;  // k >= 0

    /// Shifts every exponent pair by (da, db); multiplication by z^da zbar^db.
    BiLaurent shifted(int da, int db) const;

    std::complex<double> eval(std::complex<double> z) const;

    std::string to_string() const;  // human-readable, "z" and "w" for zbar

    void add_term(int a, int b, const GaussRational& c);  // drops exact zeros

private:
    TermMap terms_;
};

}  // namespace polyharm::symcalc
