#include "doctest.h"

#include "localext/error.hpp"
#include "localext/exactnum.hpp"

#include <random>

using namespace localext;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 3000);
    long n = num(rng);
    if (n == 0) n = 1;
    return Rational(Integer(n), Integer(den(rng)));
}

// Valuation by repeated division, kept separate from the GMP-based implementation.
long naive_val(long n, long p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("valuations and unit parts") {
    CHECK(val_p(Rational(Integer(-243), Integer(4)), 3) == Valuation(5));
    CHECK(val_p(Rational(Integer(5), Integer(49)), 7) == Valuation(-2));
    CHECK(val_p(Rational(0), 5).is_infinite());
    CHECK_THROWS_AS(val_p(Rational(3), 4), Error);

    auto d = unit_part(Rational(Integer(-243), Integer(4)), 3);
    CHECK(d.valuation == 5);
    CHECK(d.unit == Rational(Integer(-1), Integer(4)));
    CHECK_THROWS_AS(unit_part(Rational(0), 3), Error);
}

TEST_CASE("residues and inverses") {
    CHECK(residue(Rational(Integer(-1), Integer(4)), 9L) == 2);
    CHECK(residue(Rational(Integer(5), Integer(2)), 9L) == 7);
    CHECK(inverse_mod(2L, 3L) == 2);
    CHECK(inverse_mod(4L, 9L) == 7);
    try {
        residue(Rational(Integer(1), Integer(3)), 9L);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoInverse);
    }
}

TEST_CASE("unit squares and cubes in Q3") {
    CHECK(is_cube_unit_q3(Rational(10)));
    CHECK(is_cube_unit_q3(Rational(-1)));
    CHECK_FALSE(is_cube_unit_q3(Rational(2)));
    CHECK(is_square_unit_q3(Rational(7)));
    CHECK_FALSE(is_square_unit_q3(Rational(-1)));
    CHECK_THROWS_AS(is_cube_unit_q3(Rational(3)), Error);

    // cubes of units mod 27 reduce to +-1 mod 9 and nothing else does
    for (long u = 1; u < 81; ++u) {
        if (u % 3 == 0) continue;
        bool cube = false;
        for (long x = 1; x < 81 && !cube; ++x)
            if (x % 3 != 0 && (x * x * x - u) % 81 == 0) cube = true;
        CHECK(is_cube_unit_q3(Rational(u)) == cube);
    }
}

TEST_CASE("valuation properties") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        Rational x = random_rational(rng);
        Rational y = random_rational(rng);
        for (long p : {2L, 3L, 5L, 7L}) {
            CHECK(val_p(x * y, p) == val_p(x, p) + val_p(y, p));
            auto vx = val_p(x, p);
            auto vy = val_p(y, p);
            if (!(x + y).is_zero()) CHECK(val_p(x + y, p) >= std::min(vx, vy));
            auto d = unit_part(x, p);
            CHECK(d.unit * Rational(p).pow(d.valuation) == x);
            CHECK(val_p(d.unit, p) == Valuation(0));
            long n = x.num().get_si();
            CHECK(val_p(x.num(), p) == naive_val(n < 0 ? -n : n, p));
        }
    }
}

TEST_CASE("valuation ordering") {
    CHECK(Valuation(1, 3) < Valuation(1, 2));
    CHECK(Valuation(2, 4) == Valuation(1, 2));
    CHECK(Valuation(5) < Valuation::infinity());
    CHECK((Valuation(1, 3) + Valuation(2, 3)) == Valuation(1));
    CHECK(Valuation(2, 3).to_string() == "2/3");
    CHECK_THROWS_AS(Valuation(1, 2).value(), Error);
}
