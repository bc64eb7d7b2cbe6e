#pragma once

#include "localext/kpoly.hpp"
#include "localext/local_ring.hpp"
#include "localext/padic.hpp"
#include "localext/poly.hpp"

#include <memory>
#include <vector>

namespace localext {

// Characteristic polynomial of h(theta) in Q[theta]/(f), f monic.
Poly charpoly_of_element(const Poly& f, const Poly& h);
// v_p(h(theta)) for f irreducible over Q_p, read off the norm.
Valuation element_valuation(const Poly& f, const Poly& h, long p);

// An integral model of the field generated by a root of f: either an Eisenstein polynomial
// or a residue-irreducible one, together with the root it describes as a polynomial in theta.
struct FieldModel {
    LocalRing::Kind kind = LocalRing::Kind::Ramified;
    KPoly model;
    Poly generator;              // model root = generator(theta); x when the input is its own model
    Rational center;             // best approximation of theta found by the walk
};

FieldModel field_model(const Poly& f, long p);

struct OracleContext {
    long p = 3;
    long m = 1;
    long max_precision = 2048;
    std::vector<long> modulus;  // defining polynomial of K; empty means the standard choice
};

FieldModel model_for(const KPoly& g, const OracleContext& ctx);

struct RootDecision {
    bool exists = false;
    long precision = 0;
    long nodes = 0;
};

// Whether g has a root in the field described by the model; raises inconclusive past max_precision.
RootDecision root_in_model(const KPoly& g, const FieldModel& model, const OracleContext& ctx);
RootDecision root_in_unramified_tower(const KPoly& g, const OracleContext& ctx, long degree);

struct IsomorphismVerdict {
    bool isomorphic = false;
    bool forward = false;   // root of f in K(g)
    bool backward = false;  // root of g in K(f)
    long precision = 0;
};

// Both directions are run and must agree.
IsomorphismVerdict oracle_isomorphic(const KPoly& f, const KPoly& g, const OracleContext& ctx);

// Index of the unique candidate field containing a root of f.
long oracle_class(const KPoly& f, const std::vector<FieldModel>& candidates, const OracleContext& ctx);

class QuotientElem {
public:
    QuotientElem(Poly modulus, std::vector<PadicApprox> coords);
    static QuotientElem from_poly(const Poly& modulus, const Poly& h, long p, long precision);

    const Poly& modulus() const { return f_; }
    const std::vector<PadicApprox>& coords() const { return c_; }
    QuotientElem operator+(const QuotientElem& o) const;
    QuotientElem operator*(const QuotientElem& o) const;
    std::string to_string() const;

private:
    Poly f_;
    std::vector<PadicApprox> c_;
};

struct QuotientRoot {
    QuotientElem root;
    Poly exact;                // an exact representative of the approximation
    Valuation residual;        // v(g(root)) computed exactly
};

// A root of g in Q_p[theta]/(f), verified by re-substitution.
QuotientRoot find_root_in_quotient(const Poly& g, const Poly& f, long p, long digits);

}  // namespace localext
