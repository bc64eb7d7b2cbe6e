#include "doctest.h"

#include "localext/error.hpp"
#include "localext/oracle.hpp"
#include "localext/polyring.hpp"

#include <random>

using namespace localext;

namespace {

Poly P(std::initializer_list<long> c) {
    return Poly::from_ints(std::vector<long>(c));
}

KPoly K1(const Poly& f) {
    return KPoly::from_poly(f, 1);
}

OracleContext ctx_for(long p) {
    OracleContext c;
    c.p = p;
    return c;
}

}  // namespace

TEST_CASE("characteristic polynomials agree with resultants") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        long n = 2 + static_cast<long>(rng() % 3);
        std::vector<long> fc(static_cast<size_t>(n) + 1), hc(static_cast<size_t>(n));
        for (auto& x : fc) x = static_cast<long>(rng() % 13) - 6;
        fc.back() = 1;
        for (auto& x : hc) x = static_cast<long>(rng() % 9) - 4;
        Poly f = Poly::from_ints(fc), h = Poly::from_ints(hc);
        Poly chi = charpoly_of_element(f, h);
        CHECK(chi.degree() == n);
        for (long y = -3; y <= 3; ++y) CHECK(chi.eval(Rational(y)) == resultant(f, Poly({Rational(y)}) - h));
    }
    CHECK(charpoly_of_element(P({3, 3, 0, 1}), Poly::x()) == P({3, 3, 0, 1}));
}

TEST_CASE("element valuations") {
    Poly f = P({3, 3, 0, 1});
    CHECK(element_valuation(f, Poly::x(), 3) == Valuation(1, 3));
    CHECK(element_valuation(f, Poly::x() * Poly::x(), 3) == Valuation(2, 3));
    CHECK(element_valuation(f, P({3}), 3) == Valuation(1));
}

TEST_CASE("field models") {
    auto a = field_model(P({3, 3, 0, 1}), 3);
    CHECK(a.kind == LocalRing::Kind::Ramified);
    CHECK(is_k_eisenstein(a.model.to_poly(), 3) == 1);

    auto b = field_model(P({27, -9, 0, 1}), 3);
    CHECK(b.kind == LocalRing::Kind::Unramified);

    // root valuation 2/3 forces a power of the difference
    auto c = field_model(P({9, 0, 0, 1}), 3);
    CHECK(c.kind == LocalRing::Kind::Ramified);
    CHECK(is_k_eisenstein(c.model.to_poly(), 3) == 1);

    CHECK_THROWS_AS(field_model(P({-8, 0, 0, 1}), 3), Error);
}

TEST_CASE("field models describe the same field as their input") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int iter = 0; iter < 120 && checked < 40; ++iter) {
        long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
        long n = std::vector<long>{2, 3}[rng() % 2];
        std::vector<long> c(static_cast<size_t>(n) + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 200) - 100;
        c.back() = 1;
        Poly f = Poly::from_ints(c);
        auto cert = certify_irreducible(f, p);
        if (!cert.certificate) continue;
        auto model = field_model(f, p);
        // the generator really is a root of the model
        CHECK(charpoly_of_element(f, model.generator) == model.model.to_poly());
        auto ctx = ctx_for(p);
        CHECK(oracle_isomorphic(K1(f), model.model, ctx).isomorphic);
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("isomorphism of tame quadratic and cubic extensions") {
    auto c5 = ctx_for(5);
    CHECK(oracle_isomorphic(K1(P({-5, 0, 1})), K1(P({-20, 0, 1})), c5).isomorphic);
    CHECK_FALSE(oracle_isomorphic(K1(P({-5, 0, 1})), K1(P({-10, 0, 1})), c5).isomorphic);
    auto c7 = ctx_for(7);
    CHECK(oracle_isomorphic(K1(P({-7, 0, 0, 1})), K1(P({-56, 0, 0, 1})), c7).isomorphic);
    CHECK_FALSE(oracle_isomorphic(K1(P({-7, 0, 0, 1})), K1(P({-21, 0, 0, 1})), c7).isomorphic);
    // translation and scaling preserve the field
    CHECK(oracle_isomorphic(K1(P({-7, 0, 0, 1})), K1(P({-7, 0, 0, 1}).substitute_linear(Rational(2), Rational(5)).monic()), c7)
              .isomorphic);
}

TEST_CASE("wild cubic fields are told apart") {
    auto c3 = ctx_for(3);
    CHECK_FALSE(oracle_isomorphic(K1(P({3, 3, 0, 1})), K1(P({3, 0, 0, 1})), c3).isomorphic);
    CHECK_FALSE(oracle_isomorphic(K1(P({3, 0, -3, 1})), K1(P({12, 0, -3, 1})), c3).isomorphic);
    CHECK(oracle_isomorphic(K1(P({3, 3, 0, 1})), K1(P({3, 3, 0, 1}).substitute_linear(Rational(1), Rational(3))), c3)
              .isomorphic);
}

TEST_CASE("unramified tower roots") {
    auto c3 = ctx_for(3);
    CHECK(root_in_unramified_tower(K1(P({27, -9, 0, 1})), c3, 3).exists);
    CHECK_FALSE(root_in_unramified_tower(K1(P({3, 3, 0, 1})), c3, 3).exists);
    auto c5 = ctx_for(5);
    CHECK(root_in_unramified_tower(K1(P({2, -1, 0, 1})), c5, 3).exists);
}

TEST_CASE("roots in quotient rings re-substitute") {
    Poly f = P({3, 3, 0, 1});
    auto r = find_root_in_quotient(f.substitute_linear(Rational(1), Rational(1)), f, 3, 12);
    CHECK(r.residual >= Valuation(12));
    auto r2 = find_root_in_quotient(P({-7, 0, 0, 1}), P({-56, 0, 0, 1}), 7, 10);
    CHECK(r2.residual >= Valuation(10));
    CHECK(r2.root.coords().size() == 3);
    CHECK_THROWS_AS(find_root_in_quotient(P({-21, 0, 0, 1}), P({-7, 0, 0, 1}), 7, 10), Error);
}
