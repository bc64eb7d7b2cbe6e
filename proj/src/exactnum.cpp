#include "localext/exactnum.hpp"

#include "localext/error.hpp"

#include <numeric>

namespace localext {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Domain: return "domain-error";
    case ErrorKind::NoInverse: return "no-inverse";
    case ErrorKind::NoLift: return "no-lift";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::RejectedInput: return "rejected-input";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::Inconclusive: return "inconclusive";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::Domain, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Parse, "not a rational number: '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::Domain, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) return Rational(1) / pow(-e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::to_string() const {
    return q_.get_str();
}

Valuation::Valuation(long num, long den) {
    if (den == 0) fail(ErrorKind::Domain, "valuation with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long g = std::gcd(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

Valuation Valuation::infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
}

long Valuation::value() const {
    if (infinite_) fail(ErrorKind::Domain, "valuation is infinite");
    if (den_ != 1) fail(ErrorKind::Domain, "valuation " + to_string() + " is not an integer");
    return num_;
}

bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return Valuation::infinity();
    return Valuation(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::string Valuation::to_string() const {
    if (infinite_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(long p) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer ipow(long base, unsigned long e) {
    return ipow(Integer(base), e);
}

long val_p(const Integer& x, long p) {
    if (x == 0) fail(ErrorKind::Domain, "valuation of zero");
    Integer pp(p);
    Integer t = x;
    return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

Valuation val_p(const Rational& x, long p) {
    require_prime(p);
    if (x.is_zero()) return Valuation::infinity();
    return Valuation(val_p(x.num(), p) - val_p(x.den(), p));
}

long val_p_finite(const Rational& x, long p) {
    require_prime(p);
    if (x.is_zero()) fail(ErrorKind::Domain, "valuation of zero");
    return val_p(x.num(), p) - val_p(x.den(), p);
}

UnitDecomposition unit_part(const Rational& x, long p) {
    long v = val_p_finite(x, p);
    Rational u = x * Rational(p).pow(-v);
    return {v, u};
}

Integer residue(const Rational& x, const Integer& n) {
    if (n <= 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
    Integer inv = inverse_mod(x.den(), n);
    Integer r = x.num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
}

long residue(const Rational& x, long n) {
    return residue(x, Integer(n)).get_si();
}

Integer inverse_mod(const Integer& a, const Integer& n) {
    Integer r;
    if (n <= 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
        if (n == 1) return 0;
        fail(ErrorKind::NoInverse, a.get_str() + " is not invertible mod " + n.get_str());
    }
    return r;
}

long inverse_mod(long a, long n) {
    return inverse_mod(Integer(a), Integer(n)).get_si();
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long mod_floor(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

bool is_square_unit_q3(const Rational& u) {
    if (val_p(u, 3) != Valuation(0)) fail(ErrorKind::Domain, "not a 3-adic unit: " + u.to_string());
    return residue(u, 3L) == 1;
}

bool is_cube_unit_q3(const Rational& u) {
    if (val_p(u, 3) != Valuation(0)) fail(ErrorKind::Domain, "not a 3-adic unit: " + u.to_string());
    long r = residue(u, 9L);
    return r == 1 || r == 8;
}

}  // namespace localext
