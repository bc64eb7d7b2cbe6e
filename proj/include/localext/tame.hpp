#pragma once

#include "localext/finite_field.hpp"
#include "localext/invariants.hpp"
#include "localext/kpoly.hpp"
#include "localext/polyring.hpp"

#include <string>
#include <vector>

namespace localext {

// K = Q_(p^m) together with its canonical Teichmuller generator residue.
struct TameField {
    long p;
    long m;
    std::vector<long> modulus;
    FiniteField residue;
    FiniteField::Elem zeta;

    static TameField make(long p, long m);
    // gcd(n, p^m - 1)
    long d(long n) const;
};

struct TameLabel {
    bool unramified = false;
    long r = 0;

    std::string class_id() const;
    friend bool operator==(const TameLabel& a, const TameLabel& b) {
        return a.unramified == b.unramified && (a.unramified || a.r == b.r);
    }
};

struct PowerTest {
    long r;
    FiniteField::Elem value;  // (+-) zeta^r u^l in the residue field
    bool is_power;
};

struct TameCertificate {
    Certification irreducibility;
    Rational discriminant;
    long disc_valuation = 0;
    Rational unit;
    long ell = 0;
    long d = 1;
    bool negated = false;  // the test uses -zeta^r u^l (4 | n)
    std::vector<PowerTest> transcript;
};

struct TameResult {
    TameLabel label;
    KPoly canonical;
    TameCertificate certificate;
    FieldInvariants invariants;
};

bool is_unramified_prime_degree(const Poly& f, long p, long q);

TameResult classify_tame_prime(const Poly& f, const TameField& K, long q);
TameResult classify_totally_ramified(const Poly& f, const TameField& K, long n);

// Whether two totally ramified degree-n extensions coincide, via the residue of their discriminant units.
bool same_tame_extension(const Poly& f, const Poly& g, const TameField& K, long n);

std::vector<TameLabel> tame_labels(const TameField& K, long q);
KPoly tame_canonical(const TameField& K, long q, const TameLabel& label);
FieldInvariants tame_invariants(const TameField& K, long q, const TameLabel& label);

}  // namespace localext
