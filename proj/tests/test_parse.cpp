#include "doctest.h"

#include "localext/error.hpp"
#include "localext/parse.hpp"
#include "localext/wild3.hpp"

#include <random>

using namespace localext;

namespace {

ErrorKind kind_of(const std::string& text) {
    try {
        parse_poly(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("expressions and coefficient lists") {
    Poly f = Poly::from_ints({3, 3, 0, 1});
    CHECK(parse_poly("x^3 + 3*x + 3") == f);
    CHECK(parse_poly("3,3,0,1") == f);
    CHECK(parse_poly("x^3 - 3*x^2 + 21") == Poly::from_ints({21, 0, -3, 1}));
    CHECK(parse_poly("(x-1)^2") == Poly::from_ints({1, -2, 1}));
    CHECK(parse_poly("x^2 - 5/4") == Poly({Rational(-5, 4), 0, 1}));
    CHECK(parse_poly("-x^2/2 + x") == Poly({0, 1, Rational(-1, 2)}));
    CHECK(parse_poly(" 1/2, -3 , 1") == Poly({Rational(1, 2), -3, 1}));
    CHECK(parse_poly("2*(x+1)*(x-1)") == Poly::from_ints({-2, 0, 2}));
}

TEST_CASE("parse errors") {
    CHECK(kind_of("x^") == ErrorKind::Parse);
    CHECK(kind_of("x + ") == ErrorKind::Parse);
    CHECK(kind_of("(x + 1") == ErrorKind::Parse);
    CHECK(kind_of("x / x") == ErrorKind::Parse);
    CHECK(kind_of("x / 0") == ErrorKind::Parse);
    CHECK(kind_of("y^2") == ErrorKind::Parse);
    CHECK(kind_of("7") == ErrorKind::Parse);
    CHECK(kind_of("x - x") == ErrorKind::Parse);
    CHECK(kind_of("1,,2") == ErrorKind::Parse);
    CHECK(kind_of("1,a") == ErrorKind::Parse);
    CHECK(kind_of("x^99999") == ErrorKind::Parse);
    try {
        parse_poly("x + $");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
}

TEST_CASE("printing and parsing round trip") {
    for (const auto& l : cubic3_labels()) {
        Poly f = cubic3_canonical(l);
        CHECK(parse_poly(f.to_string()) == f);
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        long n = 1 + static_cast<long>(rng() % 6);
        std::vector<Rational> c;
        for (long k = 0; k <= n; ++k) {
            long num = static_cast<long>(rng() % 41) - 20;
            long den = 1 + static_cast<long>(rng() % 5);
            c.push_back(rng() % 3 ? Rational(Integer(num), Integer(den)) : Rational(0));
        }
        if (c.back().is_zero()) c.back() = Rational(1);
        Poly f(c);
        CAPTURE(f.to_string());
        CHECK(parse_poly(f.to_string()) == f);
    }
}
