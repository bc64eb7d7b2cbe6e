#pragma once

#include "localext/exactnum.hpp"

#include <cstdint>
#include <vector>

namespace localext {

// F_p[z]/(mu) with word-sized arithmetic. Elements are coordinate vectors of length m.
class FiniteField {
public:
    using Elem = std::vector<long>;
    using FPoly = std::vector<Elem>;  // low degree first, trimmed

    // modulus: monic, low degree first, length m+1, irreducible mod p (checked).
    FiniteField(long p, std::vector<long> modulus);
    static FiniteField prime_field(long p);

    long p() const { return p_; }
    long degree() const { return m_; }
    const std::vector<long>& modulus() const { return mu_; }
    std::uint64_t size() const { return size_; }

    Elem zero() const { return Elem(static_cast<size_t>(m_), 0); }
    Elem one() const { return from_int(1); }
    Elem from_int(long a) const;
    Elem from_integer(const Integer& a) const;
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, const Integer& e) const;
    Elem inv(const Elem& a) const;

    std::uint64_t encode(const Elem& a) const;
    Elem decode(std::uint64_t code) const;

    // Multiplicative order of a nonzero element.
    Integer order(const Elem& a) const;
    // Least encoded element of order size()-1.
    Elem canonical_generator() const;

    // Polynomials over this field.
    FPoly poly_trim(FPoly f) const;
    FPoly poly_mulmod(const FPoly& a, const FPoly& b, const FPoly& g) const;
    FPoly poly_mod(const FPoly& a, const FPoly& g) const;
    FPoly poly_powmod(const FPoly& a, const Integer& e, const FPoly& g) const;
    FPoly poly_gcd(FPoly a, FPoly b) const;
    Elem poly_eval(const FPoly& f, const Elem& x) const;
    bool poly_is_irreducible(const FPoly& monic) const;
    std::vector<Elem> poly_roots(const FPoly& f) const;

private:
    long p_;
    long m_;
    std::vector<long> mu_;
    std::uint64_t size_;
};

bool is_irreducible_mod_p(const std::vector<long>& monic, long p);

// Least monic irreducible of degree m mod p, ordered by sum a_i p^i over the non-leading coefficients.
std::vector<long> smallest_irreducible_mod_p(long p, long m);

std::vector<long> prime_factors(long n);

}  // namespace localext
