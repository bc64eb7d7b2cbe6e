#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace localext {

using Integer = mpz_class;

// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational parse(const std::string& text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational pow(long e) const;
    std::string to_string() const;

private:
    mpq_class q_;
};

// Possibly fractional valuation; +infinity for zero.
class Valuation {
public:
    Valuation() = default;
    Valuation(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Valuation(long num, long den);
    static Valuation infinity();

    bool is_infinite() const { return infinite_; }
    bool is_integer() const { return !infinite_ && den_ == 1; }
    long num() const { return num_; }
    long den() const { return den_; }
    // Integer value; throws Domain on infinite or fractional values.
    long value() const;

    friend bool operator==(const Valuation& a, const Valuation& b);
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
    friend Valuation operator+(const Valuation& a, const Valuation& b);

    std::string to_string() const;

private:
    bool infinite_ = false;
    long num_ = 0;
    long den_ = 1;
};

struct UnitDecomposition {
    long valuation;
    Rational unit;
};

bool is_prime(long n);
void require_prime(long p);

Integer ipow(const Integer& base, unsigned long e);
Integer ipow(long base, unsigned long e);

Valuation val_p(const Rational& x, long p);
long val_p_finite(const Rational& x, long p);  // throws Domain on zero
long val_p(const Integer& x, long p);          // throws Domain on zero

UnitDecomposition unit_part(const Rational& x, long p);

// Least nonnegative residue of x modulo n; the denominator must be invertible mod n.
Integer residue(const Rational& x, const Integer& n);
long residue(const Rational& x, long n);

Integer inverse_mod(const Integer& a, const Integer& n);
long inverse_mod(long a, long n);

Integer floor_div(const Integer& a, const Integer& b);
long floor_div(long a, long b);
long mod_floor(long a, long n);

bool is_square_unit_q3(const Rational& u);
bool is_cube_unit_q3(const Rational& u);

}  // namespace localext
