#pragma once

#include "localext/local_ring.hpp"
#include "localext/padic.hpp"
#include "localext/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace localext {

// Sylvester resultant, evaluated by fraction-free elimination.
Rational resultant(const Poly& f, const Poly& g);
Rational discriminant(const Poly& f);

struct DepressedForm {
    Rational shift;  // t with g(x) = f(x - t) / a_n
    Poly poly;
};
DepressedForm depressed(const Poly& f);

struct NewtonSegment {
    long start;
    long end;
    Rational slope;
    long length() const { return end - start; }
};

struct NewtonPolygon {
    std::vector<std::pair<long, long>> vertices;  // (i, v(a_i)) on the lower hull
    std::vector<NewtonSegment> segments;
};

NewtonPolygon newton_polygon(const Poly& f, long p);

// k if f is k-Eisenstein at p: v(a_n) = 0, v(a_0) = k < n, v(a_i) + i k / n >= k.
std::optional<long> is_k_eisenstein(const Poly& f, long p);

struct EisensteinShiftData {
    long k;
    long r;
    Rational t;
    Poly shifted;  // monic rescaling of f(p^(-r) x - t)
};
EisensteinShiftData eisenstein_shift(const Poly& f, long p);

// N(theta + lambda) for a root theta of the monic f.
Rational norm_of_linear_shift(const Poly& f, const Rational& lambda);
// N(theta^2 + lambda) for a root theta of x^3 + alpha x + beta.
Rational norm_of_quadratic_shift(const Poly& depressed_cubic, const Rational& lambda);

struct ScaledPoly {
    long s;     // roots multiplied by p^s
    Poly poly;  // p^(ns) f(x / p^s), monic and p-integral
};
ScaledPoly integral_root_scaling(const Poly& monic, long p);

std::vector<LocalRing::Elem> ring_coeffs(const LocalRing& ring, const Poly& f);

enum class CertKind { ResidueIrreducible, EisensteinSegment, CubicNoRoot, QuadraticNoRoot, Unverified };
const char* cert_kind_name(CertKind kind);

struct IrreducibilityCertificate {
    CertKind kind = CertKind::Unverified;
    std::string detail;
    std::optional<Rational> shift;  // x -> x + shift used by the Newton polygon check
    std::optional<Rational> slope;
    long precision = 0;             // working precision of the root search
};

struct Certification {
    std::optional<IrreducibilityCertificate> certificate;  // absent when f was shown reducible
    std::optional<PadicApprox> root;                        // a root found in Q_p
    std::string reason;
};

Certification certify_irreducible(const Poly& f, long p);

}  // namespace localext
