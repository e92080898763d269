#include "polyharm/bilaurent.hpp"

#include <sstream>

namespace polyharm {

std::string GaussRational::to_string() const {
    if (im == 0) return rat_to_string(re);
    std::ostringstream os;
    os << '(' << rat_to_string(re) << (im > 0 ? "+" : "-") << rat_to_string(abs(im)) << "i)";
    return os.str();
}

}  // namespace polyharm

namespace polyharm::symcalc {

BiLaurent BiLaurent::monomial(int a, int b, GaussRational c) {
    BiLaurent u;
    u.add_term(a, b, c);
    return u;
}

void BiLaurent::add_term(int a, int b, const GaussRational& c) {
    if (c.is_zero()) return;
    auto key = Exp{a, b};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool BiLaurent::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        if (e.first < 0 || e.second < 0) return true;
    return false;
}

BiLaurent operator+(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
    return r;
}

BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

BiLaurent operator-(const BiLaurent& a) {
    BiLaurent r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiLaurent operator*(const BiLaurent& a, const GaussRational& c) {
    BiLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, ca] : a.terms_) r.terms_.emplace(e, ca * c);
    return r;
}

BiLaurent BiLaurent::pow(int k) const {
    BiLaurent r = BiLaurent::one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

BiLaurent BiLaurent::shifted(int da, int db) const {
    BiLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exp{e.first + da, e.second + db}, c);
    return r;
}

namespace {

std::complex<double> ipow(std::complex<double> z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    std::complex<double> r = 1.0;
    std::complex<double> base = z;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

}  // namespace

std::complex<double> BiLaurent::eval(std::complex<double> z) const {
    std::complex<double> zb = std::conj(z);
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> coeff(rat_to_double(c.re), rat_to_double(c.im));
        sum += coeff * ipow(z, e.first) * ipow(zb, e.second);
    }
    return sum;
}

std::string BiLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        if (e.first != 0) os << " z^" << e.first;
        if (e.second != 0) os << " w^" << e.second;
    }
    return os.str();
}

}  // namespace polyharm::symcalc
