#include "doctest.h"

#include "localext/corpus.hpp"
#include "localext/error.hpp"
#include "localext/oracle.hpp"
#include "localext/tame.hpp"

#include <random>

using namespace localext;

namespace {

Poly P(std::initializer_list<long> c) {
    return Poly::from_ints(std::vector<long>(c));
}

OracleContext ctx_for(const TameField& K) {
    OracleContext c;
    c.p = K.p;
    c.m = K.m;
    c.modulus = K.modulus;
    return c;
}

// x^q - p u, shifted and scaled so the input is not already normalized
Poly scrambled_pure(long q, long p, long u, long shift, long scale) {
    std::vector<long> c(static_cast<size_t>(q) + 1, 0);
    c[0] = -p * u;
    c.back() = 1;
    return Poly::from_ints(c).substitute_linear(Rational(scale), Rational(shift)).monic();
}

}  // namespace

TEST_CASE("tame field data") {
    auto K = TameField::make(5, 1);
    CHECK(K.zeta == FiniteField::Elem{2});
    CHECK(K.d(2) == 2);
    CHECK(K.d(3) == 1);
    auto K7 = TameField::make(7, 1);
    CHECK(K7.zeta == FiniteField::Elem{3});
    CHECK(K7.d(3) == 3);
    CHECK(tame_labels(K7, 3).size() == 4);
}

TEST_CASE("quartic labels computed by hand") {
    auto K = TameField::make(5, 1);
    CHECK(classify_totally_ramified(P({-5, 0, 0, 0, 1}), K, 4).label.r == 0);
    CHECK(classify_totally_ramified(P({-10, 0, 0, 0, 1}), K, 4).label.r == 1);
    CHECK(classify_totally_ramified(P({-10, 0, 0, 0, 1}), K, 4).certificate.negated);
}

TEST_CASE("quadratic and cubic labels") {
    auto K5 = TameField::make(5, 1);
    auto a = classify_tame_prime(P({-5, 0, 1}), K5, 2);
    CHECK_FALSE(a.label.unramified);
    CHECK(a.label.r == 0);
    CHECK(a.certificate.transcript.size() == 2);
    CHECK(classify_tame_prime(P({-10, 0, 1}), K5, 2).label.r == 1);
    CHECK(classify_tame_prime(P({-20, 0, 1}), K5, 2).label.r == 0);
    CHECK(classify_tame_prime(P({2, 0, 1}), K5, 2).label.unramified);

    auto K7 = TameField::make(7, 1);
    CHECK(classify_tame_prime(P({-7, 0, 0, 1}), K7, 3).label.r == 0);
    CHECK(classify_tame_prime(P({-21, 0, 0, 1}), K7, 3).label.r == 1);
    auto u = classify_tame_prime(P({2, -1, 0, 1}), K7, 3);
    CHECK(u.label.unramified);
    CHECK(u.invariants.f == 3);
    CHECK(u.canonical.to_poly() == P({2, -1, 0, 1}));

    auto K52 = TameField::make(5, 2);
    CHECK_THROWS_AS(classify_tame_prime(P({2, 0, 1}), K52, 2), Error);
}

TEST_CASE("rejections") {
    auto K5 = TameField::make(5, 1);
    CHECK_THROWS_AS(classify_tame_prime(P({-1, 0, 1}), K5, 2), Error);
    CHECK_THROWS_AS(classify_tame_prime(P({-5, 0, 0, 0, 0, 1}), K5, 5), Error);
    try {
        classify_tame_prime(P({-4, 0, 1}), K5, 2);
        FAIL("expected a rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RejectedInput);
    }
}

TEST_CASE("canonical polynomials") {
    CHECK(tame_canonical(TameField::make(5, 1), 3, TameLabel{true, 0}).to_poly() == P({2, -1, 0, 1}));
    CHECK(tame_canonical(TameField::make(7, 1), 2, TameLabel{true, 0}).to_poly() == P({3, -1, 1}));
    CHECK(tame_canonical(TameField::make(2, 1), 3, TameLabel{true, 0}).to_poly() == P({1, -1, 0, 1}));
    CHECK(tame_canonical(TameField::make(7, 1), 3, TameLabel{false, 2}).to_poly() == P({-14, 0, 0, 1}));
}

TEST_CASE("labels agree with the root-search oracle") {
    std::mt19937_64 rng(7);
    struct Setting {
        long p, m, q;
    };
    for (Setting s : {Setting{5, 1, 2}, Setting{7, 1, 3}, Setting{13, 1, 3}, Setting{3, 1, 2}, Setting{5, 2, 3},
                      Setting{7, 1, 2}}) {
        auto K = TameField::make(s.p, s.m);
        auto ctx = ctx_for(K);
        auto labels = tame_labels(K, s.q);
        std::vector<KPoly> canon;
        std::vector<FieldModel> models;
        for (const auto& l : labels) {
            canon.push_back(tame_canonical(K, s.q, l));
            models.push_back(model_for(canon.back(), ctx));
        }
        // canonical fields are pairwise distinct
        for (size_t i = 0; i < canon.size(); ++i)
            for (size_t j = i + 1; j < canon.size(); ++j)
                CHECK_FALSE(oracle_isomorphic(canon[i], canon[j], ctx).isomorphic);
        int done = 0;
        for (int iter = 0; iter < 400 && done < 12; ++iter) {
            Poly f;
            if (iter % 2 == 0) {
                long u = 1 + static_cast<long>(rng() % static_cast<unsigned long>(s.p - 1));
                long k = 1 + static_cast<long>(rng() % 3);
                u *= k % 2 ? 1 : s.p * s.p;
                f = scrambled_pure(s.q, s.p, u, static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
            } else {
                std::vector<long> c(static_cast<size_t>(s.q) + 1);
                for (auto& x : c) x = static_cast<long>(rng() % 61) - 30;
                c.back() = 1;
                f = Poly::from_ints(c);
            }
            TameResult res;
            try {
                res = classify_tame_prime(f, K, s.q);
            } catch (const Error& e) {
                REQUIRE(e.kind() == ErrorKind::RejectedInput);
                continue;
            }
            size_t idx = 0;
            while (!(labels[idx] == res.label)) ++idx;
            CAPTURE(f.to_string());
            CHECK(oracle_class(KPoly::from_poly(f, s.m), models, ctx) == static_cast<long>(idx));
            ++done;
        }
        CHECK(done >= 12);
    }
}

TEST_CASE("same_tame_extension matches the oracle") {
    std::mt19937_64 rng(11);
    auto K = TameField::make(7, 1);
    auto ctx = ctx_for(K);
    for (int iter = 0; iter < 25; ++iter) {
        long n = iter % 2 ? 2 : 3;
        Poly f = scrambled_pure(n, 7, 1 + static_cast<long>(rng() % 6), static_cast<long>(rng() % 5), 1);
        Poly g = scrambled_pure(n, 7, 1 + static_cast<long>(rng() % 6), 0, 1 + static_cast<long>(rng() % 3));
        bool oracle = oracle_isomorphic(KPoly::from_poly(f, 1), KPoly::from_poly(g, 1), ctx).isomorphic;
        CHECK(same_tame_extension(f, g, K, n) == oracle);
    }
}

TEST_CASE("same_tame_extension agrees with label equality on corpus pairs") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{7, 3}, {13, 3}, {5, 2}}) {
        auto K = TameField::make(p, 1);
        std::vector<std::pair<Poly, TameLabel>> ramified;
        for (const auto& f : generate_corpus({p, q, 800, 3, 729})) {
            auto res = classify_tame_prime(f, K, q);
            if (!res.label.unramified) ramified.emplace_back(f.monic(), res.label);
        }
        REQUIRE(ramified.size() >= 10);
        for (size_t i = 0; i + 1 < ramified.size(); i += 2)
            for (size_t j = i + 1; j < std::min(ramified.size(), i + 6); ++j)
                CHECK(same_tame_extension(ramified[i].first, ramified[j].first, K, q) ==
                      (ramified[i].second == ramified[j].second));
    }
}
