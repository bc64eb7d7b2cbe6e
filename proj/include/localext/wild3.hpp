#pragma once

#include "localext/invariants.hpp"
#include "localext/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace localext {

enum class Cubic3Kind { Unramified, SqrtM1, Sqrt3, Galois, SqrtM3Wild, SqrtM3Tau };

struct Cubic3Label {
    Cubic3Kind kind = Cubic3Kind::Unramified;
    long tau = 0;  // 1, 4 or 7 for Galois and SqrtM3Tau

    std::string class_id() const;
    friend bool operator==(const Cubic3Label& a, const Cubic3Label& b) = default;
};

// The ten classes in a fixed order: unramified first, then the nine ramified rows.
const std::vector<Cubic3Label>& cubic3_labels();
Cubic3Label cubic3_label_from_id(const std::string& id);
Poly cubic3_canonical(const Cubic3Label& label);
FieldInvariants cubic3_invariants(const Cubic3Label& label);

struct Cubic3Certificate {
    Certification irreducibility;
    std::string unramified_test;  // residue-irreducible, eisenstein-segment or tower-root-search
    bool unramified = false;
    Rational discriminant;
    long disc_valuation = 0;
    Rational disc_unit;
    long disc_unit_mod3 = 0;
    std::string branch;  // unramified, galois, sqrtm1, sqrt3, sqrtm3

    // depressed form x^3 + alpha x + beta, then roots scaled by 3^-scale so that v(beta) < 3
    Rational shift;
    Rational alpha_depressed, beta_depressed;
    long scale = 0;
    Rational alpha, beta;
    long v_beta = 0;
    long m = 0;
    std::optional<long> r;  // v(alpha); empty when alpha = 0
    Rational u, w;          // unit parts of beta and alpha (w = 0 when alpha = 0)
    std::string case_id;
    std::optional<Rational> t;        // the unit whose class mod 9 gives tau
    std::optional<long> t_mod9;
};

struct Cubic3Result {
    Cubic3Label label;
    Poly canonical;
    Cubic3Certificate certificate;
    FieldInvariants invariants;
};

Cubic3Result classify_cubic_q3(const Poly& f);

// tau in {1, 4, 7} with +-tau = t mod 9
long tau_from_residue(long t_mod9);

// t for a normalized depressed Galois input.
Rational galois_t(const Rational& alpha, const Rational& beta);

struct NonGaloisCase {
    std::string case_id;  // "1".."4" following the non-Galois case list
    bool wild = false;
    std::optional<Rational> ratio;
    long tau = 0;
};
NonGaloisCase nongalois_tau(const Rational& alpha, const Rational& beta);

// a + b sqrt(-3)
struct QuadElem {
    Rational a, b;

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        return {x.a * y.a - Rational(3) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadElem& x, const QuadElem& y) = default;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    std::string to_string() const;
};

long quad_valuation(const QuadElem& x);  // in powers of sqrt(-3)
QuadElem quad_unit_part(const QuadElem& x);
bool is_cube_quad(const QuadElem& x);
bool reduced_class_rep_trivial(const QuadElem& unit);
std::vector<QuadElem> canonical_norm_group_reps(const Cubic3Label& label);
// N(theta + lambda) = -f(-lambda) for a root theta of the monic cubic f.
QuadElem norm_of_quad_shift(const Poly& f, const QuadElem& lambda);

}  // namespace localext
