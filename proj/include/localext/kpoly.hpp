#pragma once

#include "localext/poly.hpp"

#include <string>
#include <vector>

namespace localext {

// Polynomial over K = Q_p(z), each coefficient given by exact coordinates in the basis 1, z, ..., z^(m-1).
struct KPoly {
    long m = 1;
    std::vector<std::vector<Rational>> coeffs;  // low degree first

    static KPoly from_poly(const Poly& f, long m);
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_rational() const;
    Poly to_poly() const;  // requires is_rational()
    std::string to_string() const;
};

}  // namespace localext
