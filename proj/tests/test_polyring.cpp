#include "doctest.h"

#include "localext/error.hpp"
#include "localext/polyring.hpp"

#include <random>

using namespace localext;

namespace {

Poly from_roots(const std::vector<long>& roots) {
    Poly f = Poly::from_ints({1});
    for (long r : roots) f *= Poly::from_ints({-r, 1});
    return f;
}

Poly P(std::initializer_list<long> c) {
    return Poly::from_ints(std::vector<long>(c));
}

Rational Q(long n, long d) {
    return Rational(Integer(n), Integer(d));
}

}  // namespace

TEST_CASE("resultant agrees with the product over roots") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<long> r, s;
        long n = 1 + static_cast<long>(rng() % 4), m = 1 + static_cast<long>(rng() % 4);
        for (long i = 0; i < n; ++i) r.push_back(static_cast<long>(rng() % 15) - 7);
        for (long i = 0; i < m; ++i) s.push_back(static_cast<long>(rng() % 15) - 7);
        Rational expected(1);
        for (long a : r)
            for (long b : s) expected *= Rational(a - b);
        CHECK(resultant(from_roots(r), from_roots(s)) == expected);
    }
}

TEST_CASE("discriminants") {
    CHECK(discriminant(P({3, 3, 0, 1})) == Rational(-351));
    CHECK(discriminant(P({3, 0, 0, 1})) == Rational(-243));
    CHECK(discriminant(P({3, 6, 0, 1})) == Rational(-1107));
    CHECK(discriminant(P({3, 0, 3, 1})) == Rational(-567));
    CHECK(discriminant(P({3, 0, -3, 1})) == Rational(81));
    CHECK(discriminant(P({1, -1, 0, 1})) == Rational(-23));
    CHECK(discriminant(P({5, 5, 1})) == Rational(5));

    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<long> r;
        long n = 2 + static_cast<long>(rng() % 4);
        for (long i = 0; i < n; ++i) r.push_back(static_cast<long>(rng() % 21) - 10);
        Rational expected(1);
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t j = i + 1; j < r.size(); ++j) expected *= Rational((r[i] - r[j]) * (r[i] - r[j]));
        Poly f = from_roots(r);
        CHECK(discriminant(f) == expected);
        // scaling and translation behaviour
        Rational lambda(3);
        CHECK(discriminant(f * lambda) == lambda.pow(2 * n - 2) * expected);
        CHECK(discriminant(f.substitute_linear(Rational(1), Q(2, 3))) == expected);
    }
}

TEST_CASE("depressed forms") {
    auto d = depressed(P({5, 5, 1}));
    CHECK(d.shift == Q(5, 2));
    CHECK(d.poly == Poly({Q(-5, 4), Rational(0), Rational(1)}));
    auto c = depressed(P({3, 0, 3, 1}));
    CHECK(c.poly == P({5, -3, 0, 1}));
    auto e = depressed(P({12, 0, -3, 1}));
    CHECK(e.poly == P({10, -3, 0, 1}));
    CHECK(discriminant(e.poly) == Rational(-2592));
}

TEST_CASE("Newton polygons") {
    auto np = newton_polygon(P({3, 3, 0, 1}), 3);
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == Q(-1, 3));
    CHECK(np.vertices == std::vector<std::pair<long, long>>{{0, 1}, {3, 0}});

    auto np2 = newton_polygon(Poly({Q(-5, 4), Rational(0), Rational(1)}), 5);
    CHECK(np2.vertices == std::vector<std::pair<long, long>>{{0, 1}, {2, 0}});

    // two segments: x (x - 9)(x - 1) style valuations
    auto np3 = newton_polygon(P({27, 9, 1, 1}), 3);
    CHECK(np3.vertices.size() == 3);

    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 150; ++iter) {
        long p = std::vector<long>{2, 3, 5}[rng() % 3];
        auto rand_poly = [&](long n) {
            std::vector<long> c(static_cast<size_t>(n) + 1);
            for (auto& x : c) {
                long e = static_cast<long>(rng() % 4);
                long u = 1 + static_cast<long>(rng() % 5);
                x = u;
                for (long i = 0; i < e; ++i) x *= p;
            }
            return Poly::from_ints(c);
        };
        Poly f = rand_poly(1 + static_cast<long>(rng() % 3));
        Poly g = rand_poly(1 + static_cast<long>(rng() % 3));
        auto a = newton_polygon(f, p), b = newton_polygon(g, p), ab = newton_polygon(f * g, p);
        // slopes of a product are the sorted union of the slopes with lengths
        std::vector<std::pair<Rational, long>> merged;
        for (const auto* np_ : {&a, &b})
            for (const auto& s : np_->segments) merged.emplace_back(s.slope, s.length());
        std::sort(merged.begin(), merged.end());
        std::vector<std::pair<Rational, long>> combined;
        for (const auto& m : merged) {
            if (!combined.empty() && combined.back().first == m.first) combined.back().second += m.second;
            else combined.push_back(m);
        }
        std::vector<std::pair<Rational, long>> actual;
        for (const auto& s : ab.segments) actual.emplace_back(s.slope, s.length());
        CHECK(actual == combined);
        long total = 0;
        for (const auto& s : ab.segments) total += s.length();
        CHECK(total == (f * g).degree());
    }
}

TEST_CASE("k-Eisenstein detection") {
    CHECK(is_k_eisenstein(P({3, 0, 3, 1}), 3) == 1);
    CHECK(is_k_eisenstein(P({-49, 0, 0, 1}), 7) == 2);
    CHECK(is_k_eisenstein(P({5, 5, 1}), 5) == 1);
    CHECK_FALSE(is_k_eisenstein(P({5, 3, 0, 1}), 3).has_value());
    CHECK_FALSE(is_k_eisenstein(P({9, 3, 0, 1}), 3).has_value());  // v(a_1) + k/3 < k for k = 2
    CHECK_FALSE(is_k_eisenstein(P({-343, 0, 0, 1}), 7).has_value());
}

TEST_CASE("Eisenstein shift") {
    // the shift of x^2 + 5x + 5 is x^2 - 5/4
    auto s = eisenstein_shift(P({5, 5, 1}), 5);
    CHECK(s.t == Q(5, 2));
    CHECK(s.k == 1);
    CHECK(s.r == 0);
    CHECK(s.shifted == Poly({Q(-5, 4), Rational(0), Rational(1)}));

    auto s2 = eisenstein_shift(P({-49, 0, 0, 1}), 7);
    CHECK(s2.k == 2);
    CHECK(s2.r == 0);

    auto s3 = eisenstein_shift(P({-2401, 0, 0, 1}), 7);
    CHECK(s3.k == 1);
    CHECK(s3.r == -1);
    CHECK(s3.shifted == P({-7, 0, 0, 1}));

    CHECK_THROWS_AS(eisenstein_shift(P({-343, 0, 0, 1}), 7), Error);

    // translated and rescaled Eisenstein inputs recover a k-Eisenstein shift
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 100; ++iter) {
        long p = std::vector<long>{5, 7}[rng() % 2];
        long n = 2 + static_cast<long>(rng() % 3);
        long a = 1 + static_cast<long>(rng() % 9);
        if (std::gcd(a, n) != 1) continue;
        long u = 1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1));
        Rational c0 = Rational(-u) * Rational(p).pow(a);
        std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
        coeffs[0] = c0;
        coeffs[static_cast<size_t>(n)] = Rational(1);
        Poly g(coeffs);
        Rational t(static_cast<long>(rng() % 11) - 5);
        Poly f = g.substitute_linear(Rational(1), t);
        auto sh = eisenstein_shift(f, p);
        CHECK(sh.k == mod_floor(a, n));
        CHECK(is_k_eisenstein(sh.shifted, p) == sh.k);
        Rational disc = discriminant(f);
        long vd = val_p_finite(disc, p);
        CHECK(vd % (n - 1) == 0);
        CHECK(mod_floor(vd / (n - 1), n) == sh.k);
    }
}

TEST_CASE("norms of shifts agree with resultants") {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 100; ++iter) {
        long alpha = static_cast<long>(rng() % 41) - 20, beta = static_cast<long>(rng() % 41) - 20;
        Rational lambda(Integer(static_cast<long>(rng() % 21) - 10), Integer(1 + static_cast<long>(rng() % 4)));
        Poly f = P({beta, alpha, 0, 1});
        CHECK(norm_of_linear_shift(f, lambda) == resultant(f, Poly({lambda, Rational(1)})));
        CHECK(norm_of_quadratic_shift(f, lambda) == resultant(f, Poly({lambda, Rational(0), Rational(1)})));
    }
    CHECK(norm_of_linear_shift(P({3, 3, 0, 1}), Rational(1)) == Rational(1));
    CHECK(norm_of_quadratic_shift(P({3, 3, 0, 1}), Rational(0)) == Rational(9));
    CHECK(norm_of_quadratic_shift(P({3, 0, 0, 1}), Rational(1)) == Rational(10));
    CHECK(norm_of_quadratic_shift(P({3, 3, 0, 1}), Rational(1)) == Rational(13));
}

TEST_CASE("irreducibility certificates") {
    auto a = certify_irreducible(P({1, -1, 0, 1}), 3);
    REQUIRE(a.certificate);
    CHECK(a.certificate->kind == CertKind::ResidueIrreducible);

    auto b = certify_irreducible(P({3, 3, 0, 1}), 3);
    REQUIRE(b.certificate);
    CHECK(b.certificate->kind == CertKind::EisensteinSegment);

    auto c = certify_irreducible(P({-1, 0, 0, 1}), 3);
    CHECK_FALSE(c.certificate);
    REQUIRE(c.root);
    CHECK(c.root->agrees_with(PadicApprox::from_rational(Rational(1), 3, 40)));

    // 27 U(x/3) for the unramified U = x^3 - x + 1: only the root search decides it
    auto d = certify_irreducible(P({27, -9, 0, 1}), 3);
    REQUIRE(d.certificate);
    CHECK(d.certificate->kind == CertKind::CubicNoRoot);

    // every 5-adic unit is a cube
    auto e = certify_irreducible(P({-2, 0, 0, 1}), 5);
    CHECK_FALSE(e.certificate);
    REQUIRE(e.root);
    Rational r = e.root->to_rational();
    CHECK(val_p_finite(r * r * r - Rational(2), 5) >= e.root->absolute_precision());

    auto f = certify_irreducible(P({1, 0, 1}), 3);
    REQUIRE(f.certificate);
    CHECK(f.certificate->kind == CertKind::ResidueIrreducible);

    auto g = certify_irreducible(P({-18, 0, 1}), 3);  // x^2 - 18: 2 is not a square mod 3
    REQUIRE(g.certificate);
    CHECK(g.certificate->kind == CertKind::QuadraticNoRoot);

    auto h = certify_irreducible(P({1, 2, 1}), 3);
    CHECK_FALSE(h.certificate);
}
