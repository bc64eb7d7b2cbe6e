#pragma once

#include "localext/exactnum.hpp"

#include <string>
#include <vector>

namespace localext {

// Dense univariate polynomial over Q, coefficients stored low degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly monomial(const Rational& c, long degree);
    static Poly x() { return monomial(1, 1); }
    static Poly from_ints(const std::vector<long>& coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long i) const;
    const Rational& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    Poly monic() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    // f(a*x + b)
    Poly substitute_linear(const Rational& a, const Rational& b) const;
    Poly compose(const Poly& g) const;
    Poly pow(long e) const;
    // remainder of division by a nonzero polynomial
    Poly mod(const Poly& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace localext
