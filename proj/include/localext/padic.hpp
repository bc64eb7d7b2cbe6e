#pragma once

#include "localext/exactnum.hpp"
#include "localext/finite_field.hpp"
#include "localext/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace localext {

// mantissa * p^(-s), known modulo p^(N - s).
class PadicApprox {
public:
    PadicApprox(long p, long precision, Integer mantissa, long denominator_exponent);
    // x known to absolute precision p^abs_precision.
    static PadicApprox from_rational(const Rational& x, long p, long abs_precision);

    long p() const { return p_; }
    long precision() const { return n_; }
    long denominator_exponent() const { return s_; }
    const Integer& mantissa() const { return mantissa_; }
    long absolute_precision() const { return n_ - s_; }

    bool is_zero() const { return mantissa_ == 0; }
    // nullopt when zero to the known precision
    std::optional<long> valuation() const;
    Rational to_rational() const;

    // Agreement modulo the smaller absolute precision.
    bool agrees_with(const PadicApprox& o) const;

    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator-() const;

    std::string to_string() const;

private:
    void normalize();
    long p_;
    long n_;
    Integer mantissa_;
    long s_;
};

class UnramElem;

// Q_p(z) with z a root of a residue-irreducible monic modulus; integers kept mod p^N.
class UnramifiedField : public std::enable_shared_from_this<UnramifiedField> {
public:
    using Coords = std::vector<Integer>;

    static std::shared_ptr<const UnramifiedField> make(long p, std::vector<long> modulus, long precision);
    // Modulus taken from the built-in table when available, otherwise the smallest irreducible.
    static std::shared_ptr<const UnramifiedField> standard(long p, long m, long precision);

    long p() const { return p_; }
    long degree() const { return m_; }
    long precision() const { return n_; }
    const Integer& modulus_power() const { return pn_; }
    const std::vector<long>& modulus() const { return mu_; }
    const FiniteField& residue_field() const { return residue_; }
    std::shared_ptr<const UnramifiedField> with_precision(long precision) const;

    Coords zero_coords() const { return Coords(static_cast<size_t>(m_), Integer(0)); }
    Coords reduce(Coords a) const;
    Coords add(const Coords& a, const Coords& b) const;
    Coords sub(const Coords& a, const Coords& b) const;
    Coords mul(const Coords& a, const Coords& b) const;
    Coords scale(const Coords& a, const Integer& c) const;
    Coords from_rational(const Rational& x) const;
    bool is_zero(const Coords& a) const;
    // nullopt when a vanishes mod p^N
    std::optional<long> valuation(const Coords& a) const;
    FiniteField::Elem residue(const Coords& a) const;
    Coords lift(const FiniteField::Elem& a) const;
    Coords inverse(const Coords& a) const;  // units only

    UnramElem element(Coords c) const;
    UnramElem element(const Rational& x) const;
    UnramElem zero() const;
    UnramElem one() const;

private:
    UnramifiedField(long p, std::vector<long> modulus, long precision);
    long p_;
    long m_;
    long n_;
    Integer pn_;
    std::vector<long> mu_;
    FiniteField residue_;
};

class UnramElem {
public:
    UnramElem(std::shared_ptr<const UnramifiedField> field, UnramifiedField::Coords c);

    const UnramifiedField& field() const { return *field_; }
    const std::shared_ptr<const UnramifiedField>& field_ptr() const { return field_; }
    const UnramifiedField::Coords& coords() const { return c_; }

    UnramElem operator+(const UnramElem& o) const;
    UnramElem operator-(const UnramElem& o) const;
    UnramElem operator*(const UnramElem& o) const;
    UnramElem operator-() const;
    UnramElem pow(const Integer& e) const;
    UnramElem inverse() const;
    bool operator==(const UnramElem& o) const { return c_ == o.c_; }

    bool is_zero() const { return field_->is_zero(c_); }
    std::optional<long> valuation() const { return field_->valuation(c_); }
    FiniteField::Elem residue() const { return field_->residue(c_); }
    std::string to_string() const;

private:
    std::shared_ptr<const UnramifiedField> field_;
    UnramifiedField::Coords c_;
};

struct TeichmullerGen {
    FiniteField::Elem residue;  // least encoded residue of maximal order
    UnramElem zeta;             // its Teichmuller lift
};

TeichmullerGen teichmuller_generator(const std::shared_ptr<const UnramifiedField>& field);

// Whether a unit is a q-th power modulo the maximal ideal (equivalently in K when p != q).
bool qth_power_residue(const UnramElem& u, long q);
bool qth_power_residue(const FiniteField& field, const FiniteField::Elem& u, long q);

// Newton lift of a root of f starting from a0, requiring v(f(a0)) > 2 v(f'(a0)).
UnramElem hensel_lift_root(const std::vector<UnramElem>& f, const UnramElem& a0, long precision);
PadicApprox hensel_lift_root(const Poly& f, long p, const Rational& a0, long precision);

struct ModulusEntry {
    long p;
    long m;
    std::vector<long> modulus;
};

// Built-in moduli for p^m <= 343.
const std::vector<ModulusEntry>& modulus_table();
std::vector<long> default_modulus(long p, long m);

}  // namespace localext
