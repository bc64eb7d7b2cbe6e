#pragma once

#include "localext/padic.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace localext {

// O_K[y]/(E) modulo p^N, where O_K is the base unramified ring and E is either
// Eisenstein over O_K (ramified, uniformizer y) or residue-irreducible (unramified, uniformizer p).
class LocalRing {
public:
    enum class Kind { Ramified, Unramified };
    using Elem = std::vector<Integer>;    // coordinate i*m + j holds y^i z^j
    using Residue = std::vector<long>;    // residue field element, same layout

    LocalRing(std::shared_ptr<const UnramifiedField> base, std::vector<UnramifiedField::Coords> ext, Kind kind);
    // Base Q_p with a rational (p-integral) extension polynomial.
    static LocalRing over_qp(long p, const Poly& ext, Kind kind, long precision);
    // Base ring itself, viewed as a trivial extension y = 0 of degree one.
    static LocalRing base_only(std::shared_ptr<const UnramifiedField> base);

    LocalRing with_precision(long precision) const;

    long p() const { return base_->p(); }
    long m() const { return m_; }
    long k() const { return k_; }
    Kind kind() const { return kind_; }
    long e() const { return kind_ == Kind::Ramified ? k_ : 1; }
    long f() const { return kind_ == Kind::Ramified ? m_ : m_ * k_; }
    long precision() const { return base_->precision(); }
    const std::shared_ptr<const UnramifiedField>& base() const { return base_; }
    const std::vector<UnramifiedField::Coords>& extension() const { return ext_; }

    Elem zero() const { return Elem(static_cast<size_t>(k_ * m_), Integer(0)); }
    Elem one() const { return from_rational(Rational(1)); }
    Elem from_rational(const Rational& x) const;
    Elem from_base(const UnramifiedField::Coords& c) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_pi(const Elem& a, long times = 1) const;
    bool is_zero(const Elem& a) const;
    // pi-adic valuation; nullopt when a vanishes at the working precision
    std::optional<long> valuation(const Elem& a) const;

    // Residue of a / pi^c for a with valuation >= c.
    Residue digit(const Elem& a, long c) const;
    Elem lift(const Residue& r) const;

    // Residue field arithmetic.
    std::uint64_t residue_count() const { return residue_count_; }
    Residue residue_decode(std::uint64_t code) const;
    Residue rzero() const { return Residue(static_cast<size_t>(k_ * m_), 0); }
    bool ris_zero(const Residue& a) const;
    Residue radd(const Residue& a, const Residue& b) const;
    Residue rsub(const Residue& a, const Residue& b) const;
    Residue rmul(const Residue& a, const Residue& b) const;
    Residue rinv(const Residue& a) const;

private:
    std::shared_ptr<const UnramifiedField> base_;
    std::vector<UnramifiedField::Coords> ext_;
    Kind kind_;
    long m_;
    long k_;
    std::uint64_t residue_count_;
    std::vector<FiniteField::Elem> ext_res_;
    FiniteField::Elem eps_inv_;  // residue of (-E_0/p)^(-1) in the ramified case
};

enum class RootStatus { Found, NoRoot, Inconclusive };

struct RootSearch {
    RootStatus status = RootStatus::NoRoot;
    std::optional<LocalRing::Elem> root;  // known modulo pi^root_digits
    long root_digits = 0;
    long nodes = 0;
};

// Decides whether a polynomial with integral coefficients (low degree first) has a root in the ring,
// refining a found root by witness_digits further pi-adic digits.
RootSearch find_root(const LocalRing& ring, const std::vector<LocalRing::Elem>& f, long witness_digits = 0);

const char* root_status_name(RootStatus s);

}  // namespace localext
