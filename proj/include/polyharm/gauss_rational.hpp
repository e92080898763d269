#pragma once

#include <string>

#include "polyharm/rational.hpp"

namespace polyharm {

/// Gaussian rational re + i*im with exact components. Equality is exact.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRational(Rational r) : re(std::move(r)) {}
    explicit GaussRational(int n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }

    friend bool operator==(const GaussRational&, const GaussRational&) = default;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator*(const GaussRational& a, const Rational& s) {
        return {a.re * s, a.im * s};
    }
    friend GaussRational operator*(const Rational& s, const GaussRational& a) { return a * s; }

    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw Error(ErrorKind::domain, "GaussRational division by zero");
        GaussRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    friend GaussRational operator/(const GaussRational& a, const Rational& s) {
        if (s == 0) throw Error(ErrorKind::domain, "GaussRational division by zero");
        return {a.re / s, a.im / s};
    }

    std::string to_string() const;
};

}  // namespace polyharm
