#include "doctest.h"

#include "localext/error.hpp"
#include "localext/local_ring.hpp"
#include "localext/padic.hpp"

#include <random>
#include <set>

using namespace localext;

namespace {

// Exhaustive factor search over F_p, independent of the Rabin test.
bool brute_irreducible(const std::vector<long>& f, long p) {
    long n = static_cast<long>(f.size()) - 1;
    for (long d = 1; d <= n / 2; ++d) {
        long count = 1;
        for (long i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<long> g(static_cast<size_t>(d) + 1);
            long c = code;
            for (long i = 0; i < d; ++i) {
                g[static_cast<size_t>(i)] = c % p;
                c /= p;
            }
            g[static_cast<size_t>(d)] = 1;
            std::vector<long> r = f;
            for (long i = n; i >= d; --i) {
                long q = mod_floor(r[static_cast<size_t>(i)], p);
                for (long j = 0; j <= d; ++j) r[static_cast<size_t>(i - d + j)] -= q * g[static_cast<size_t>(j)];
            }
            bool zero = true;
            for (long i = 0; i < d; ++i)
                if (mod_floor(r[static_cast<size_t>(i)], p) != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

long eval_int(const std::vector<long>& f, long x) {
    long acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long vp(long n, long p) {
    if (n == 0) return 1000;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("p-adic approximations track exact arithmetic") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-2000, 2000), den(1, 400);
    for (int iter = 0; iter < 300; ++iter) {
        Rational x(Integer(num(rng)), Integer(den(rng)));
        Rational y(Integer(num(rng)), Integer(den(rng)));
        for (long p : {2L, 3L, 5L}) {
            auto ax = PadicApprox::from_rational(x, p, 12);
            auto ay = PadicApprox::from_rational(y, p, 12);
            CHECK((ax + ay).agrees_with(PadicApprox::from_rational(x + y, p, 30)));
            CHECK((ax - ay).agrees_with(PadicApprox::from_rational(x - y, p, 30)));
            CHECK((ax * ay).agrees_with(PadicApprox::from_rational(x * y, p, 30)));
            CHECK(ax.absolute_precision() == 12);
        }
    }
    auto a = PadicApprox::from_rational(Rational(Integer(5), Integer(9)), 3, 4);
    CHECK(a.denominator_exponent() == 2);
    CHECK(a.valuation() == -2);
    CHECK(a.to_rational() == Rational(Integer(5), Integer(9)));
}

TEST_CASE("Hensel lifting") {
    // brute force: the roots of x^2 - 7 mod 3^5 are 68 and 175
    std::vector<long> roots;
    for (long a = 0; a < 243; ++a)
        if ((a * a - 7) % 243 == 0) roots.push_back(a);
    REQUIRE(roots == std::vector<long>{68, 175});

    Poly f = Poly::from_ints({-7, 0, 1});
    auto r = hensel_lift_root(f, 3, Rational(1), 5);
    CHECK(r.mantissa() == 175);
    auto r2 = hensel_lift_root(f, 3, Rational(2), 5);
    CHECK(r2.mantissa() == 68);

    try {
        hensel_lift_root(f, 3, Rational(0), 5);
        FAIL("expected no-lift");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoLift);
    }

    // x^2 + 7 over Q_2: f'(1) = 2, v(f(1)) = 3 > 2
    Poly g = Poly::from_ints({7, 0, 1});
    auto s = hensel_lift_root(g, 2, Rational(1), 10);
    Integer m = s.mantissa();
    CHECK((m * m + 7) % 1024 == 0);
}

TEST_CASE("Hensel lifting in an unramified extension") {
    auto K = UnramifiedField::standard(5, 2, 8);
    // x^2 - z, with z the generator: lift a residue square root found by search
    UnramElem z = K->element(UnramifiedField::Coords{Integer(0), Integer(1)});
    const FiniteField& res = K->residue_field();
    std::optional<FiniteField::Elem> seed;
    for (std::uint64_t c = 0; c < res.size(); ++c) {
        auto a = res.decode(c);
        if (res.mul(a, a) == z.residue()) seed = a;
    }
    std::vector<UnramElem> f = {-z, K->zero(), K->one()};
    if (seed) {
        auto root = hensel_lift_root(f, K->element(K->lift(*seed)), 8);
        CHECK((root * root - z).is_zero());
    } else {
        CHECK(res.order(z.residue()) % 2 == 0);
    }
}

TEST_CASE("irreducibility over F_p agrees with factor search") {
    std::mt19937_64 rng(3);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int iter = 0; iter < 60; ++iter) {
            long n = 2 + static_cast<long>(rng() % 4);
            std::vector<long> f(static_cast<size_t>(n) + 1);
            for (long i = 0; i < n; ++i) f[static_cast<size_t>(i)] = static_cast<long>(rng() % static_cast<unsigned long>(p));
            f[static_cast<size_t>(n)] = 1;
            CHECK(is_irreducible_mod_p(f, p) == brute_irreducible(f, p));
        }
    }
}

TEST_CASE("built-in modulus table matches a fresh search") {
    for (const auto& e : modulus_table()) {
        CHECK(smallest_irreducible_mod_p(e.p, e.m) == e.modulus);
        CHECK(brute_irreducible(e.modulus, e.p));
    }
    CHECK(default_modulus(3, 3) == std::vector<long>{1, 2, 0, 1});  // x^3 - x + 1
}

TEST_CASE("Teichmuller generators") {
    struct Case {
        long p, m, expected;
    };
    for (auto c : {Case{7, 1, 3}, Case{5, 1, 2}, Case{13, 1, 2}, Case{3, 1, 2}, Case{2, 1, 1}}) {
        auto K = UnramifiedField::standard(c.p, c.m, 10);
        auto t = teichmuller_generator(K);
        CHECK(t.residue[0] == c.expected);
        Integer q(static_cast<unsigned long>(K->residue_field().size()));
        CHECK(t.zeta.pow(q - 1) == K->one());
    }
    auto K = UnramifiedField::standard(3, 2, 8);
    auto t = teichmuller_generator(K);
    CHECK(K->residue_field().order(t.residue) == 8);
    CHECK(t.zeta.pow(Integer(8)) == K->one());
    CHECK_FALSE(t.zeta.pow(Integer(4)) == K->one());
}

TEST_CASE("q-th power residues agree with enumeration") {
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
        for (long m : {1L, 2L}) {
            auto K = UnramifiedField::standard(p, m, 4);
            const FiniteField& F = K->residue_field();
            for (long q : {2L, 3L, 5L}) {
                if (q == p) continue;
                std::set<std::uint64_t> powers;
                for (std::uint64_t c = 1; c < F.size(); ++c) powers.insert(F.encode(F.pow(F.decode(c), Integer(q))));
                for (std::uint64_t c = 1; c < F.size(); ++c) {
                    UnramElem u = K->element(K->lift(F.decode(c)));
                    CHECK(qth_power_residue(u, q) == (powers.count(c) == 1));
                }
            }
        }
    }
}

TEST_CASE("unramified units invert") {
    std::mt19937_64 rng(5);
    auto K = UnramifiedField::standard(3, 3, 12);
    for (int iter = 0; iter < 50; ++iter) {
        UnramifiedField::Coords c(3);
        for (auto& x : c) x = static_cast<long>(rng() % 100000);
        UnramElem a = K->element(c);
        if (a.valuation() != 0) continue;
        CHECK(a * a.inverse() == K->one());
    }
}

TEST_CASE("root search over Z_p agrees with a Hensel-criterion enumeration") {
    std::mt19937_64 rng(19);
    int compared = 0;
    int found_count = 0;
    for (int iter = 0; iter < 400; ++iter) {
        long p = std::vector<long>{2, 3, 5}[rng() % 3];
        long n = 2 + static_cast<long>(rng() % 2);
        std::vector<long> f(static_cast<size_t>(n) + 1);
        for (long i = 0; i < n; ++i) f[static_cast<size_t>(i)] = static_cast<long>(rng() % 61) - 30;
        f[static_cast<size_t>(n)] = 1;
        long disc;
        if (n == 2) {
            disc = f[1] * f[1] - 4 * f[0];
        } else {
            long a = f[2], b = f[1], c = f[0];
            disc = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
        }
        if (disc == 0) continue;
        // a root exists iff some x mod p^K meets the Hensel condition, once K > v(disc)
        long K = vp(disc, p) + 1;
        long pk = 1;
        for (long i = 0; i < K; ++i) pk *= p;
        if (pk > 20000) continue;
        bool brute = false;
        for (long x = 0; x < pk && !brute; ++x) {
            long fx = eval_int(f, x);
            long dfx = 0;
            for (long i = n; i >= 1; --i) dfx = dfx * x + i * f[static_cast<size_t>(i)];
            if (dfx != 0 && vp(fx, p) > 2 * vp(dfx, p)) brute = true;
        }
        auto ring = LocalRing::over_qp(p, Poly::from_ints({0, 1}), LocalRing::Kind::Unramified, 24);
        std::vector<LocalRing::Elem> coeffs;
        for (long c : f) coeffs.push_back(ring.from_rational(Rational(c)));
        auto res = find_root(ring, coeffs, 6);
        REQUIRE(res.status != RootStatus::Inconclusive);
        CHECK((res.status == RootStatus::Found) == brute);
        ++compared;
        if (brute) ++found_count;
    }
    CHECK(compared > 200);
    CHECK(found_count > 20);
    CHECK(found_count < compared);
}

TEST_CASE("root search in ramified and unramified quadratic extensions of Q_3") {
    // x^2 + 1 is residue-irreducible mod 3, so it splits only in the unramified quadratic extension
    Poly g = Poly::from_ints({1, 0, 1});
    auto ram = LocalRing::over_qp(3, Poly::from_ints({-3, 0, 1}), LocalRing::Kind::Ramified, 12);
    auto unr = LocalRing::over_qp(3, Poly::from_ints({1, 0, 1}), LocalRing::Kind::Unramified, 12);
    auto coeffs = [&](const LocalRing& r, const Poly& f) {
        std::vector<LocalRing::Elem> c;
        for (long i = 0; i <= f.degree(); ++i) c.push_back(r.from_rational(f.coeff(i)));
        return c;
    };
    CHECK(find_root(ram, coeffs(ram, g)).status == RootStatus::NoRoot);
    CHECK(find_root(unr, coeffs(unr, g)).status == RootStatus::Found);
    CHECK(find_root(ram, coeffs(ram, Poly::from_ints({-3, 0, 1}))).status == RootStatus::Found);
    CHECK(find_root(ram, coeffs(ram, Poly::from_ints({-12, 0, 1}))).status == RootStatus::Found);
    CHECK(find_root(ram, coeffs(ram, Poly::from_ints({-6, 0, 1}))).status == RootStatus::NoRoot);
    CHECK(find_root(ram, coeffs(ram, Poly::from_ints({3, 0, 1}))).status == RootStatus::NoRoot);
}

TEST_CASE("root witnesses satisfy the polynomial to the reported precision") {
    std::mt19937_64 rng(23);
    // Eisenstein E over Q_p; E(u x + c) has the root (y - c)/u
    for (int iter = 0; iter < 60; ++iter) {
        long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
        long k = 2 + static_cast<long>(rng() % 3);
        std::vector<long> e(static_cast<size_t>(k) + 1);
        for (long i = 1; i < k; ++i) e[static_cast<size_t>(i)] = p * (static_cast<long>(rng() % 7) - 3);
        long u0 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1));
        e[0] = p * u0;
        e[static_cast<size_t>(k)] = 1;
        Poly E = Poly::from_ints(e);
        auto ring = LocalRing::over_qp(p, E, LocalRing::Kind::Ramified, 16);
        long u = 1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1));
        long c = static_cast<long>(rng() % 20);
        Poly g = E.substitute_linear(Rational(u), Rational(c)).monic();
        std::vector<LocalRing::Elem> coeffs;
        for (long i = 0; i <= g.degree(); ++i) coeffs.push_back(ring.from_rational(g.coeff(i)));
        auto res = find_root(ring, coeffs, 20);
        REQUIRE(res.status == RootStatus::Found);
        LocalRing::Elem acc = ring.zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = ring.add(ring.mul(acc, *res.root), *it);
        auto v = ring.valuation(acc);
        CHECK((!v || *v >= res.root_digits));
        CHECK(res.root_digits >= 20);
    }
}
