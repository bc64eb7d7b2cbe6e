#include "localext/kpoly.hpp"

#include "localext/error.hpp"

namespace localext {

KPoly KPoly::from_poly(const Poly& f, long m) {
    KPoly k;
    k.m = m;
    for (long i = 0; i <= f.degree(); ++i) {
        std::vector<Rational> c(static_cast<size_t>(m), Rational(0));
        c[0] = f.coeff(i);
        k.coeffs.push_back(std::move(c));
    }
    return k;
}

bool KPoly::is_rational() const {
    for (const auto& c : coeffs)
        for (size_t j = 1; j < c.size(); ++j)
            if (!c[j].is_zero()) return false;
    return true;
}

Poly KPoly::to_poly() const {
    if (!is_rational()) fail(ErrorKind::InvalidArgument, "polynomial has coefficients outside Q");
    std::vector<Rational> c;
    for (const auto& v : coeffs) c.push_back(v[0]);
    return Poly(std::move(c));
}

std::string KPoly::to_string() const {
    if (is_rational()) return to_poly().to_string();
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const auto& c = coeffs[static_cast<size_t>(i)];
        std::string term;
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            if (!term.empty()) term += " + ";
            term += c[j].to_string();
            if (j == 1) term += "*z";
            if (j > 1) term += "*z^" + std::to_string(j);
        }
        if (term.empty()) continue;
        if (!out.empty()) out += " + ";
        bool simple = term == "1";
        if (i == 0) {
            out += term;
        } else {
            if (!simple) out += "(" + term + ")*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace localext
