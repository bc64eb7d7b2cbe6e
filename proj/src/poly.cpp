#include "localext/poly.hpp"

#include "localext/error.hpp"

namespace localext {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly Poly::monomial(const Rational& c, long degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(long i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) fail(ErrorKind::Domain, "leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    Rational inv = Rational(1) / leading();
    return *this * inv;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    for (auto& a : c_) a *= c;
    trim();
    return *this;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

Poly Poly::substitute_linear(const Rational& a, const Rational& b) const {
    return compose(Poly({b, a}));
}

Poly Poly::compose(const Poly& g) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + Poly({*it});
    return acc;
}

Poly Poly::pow(long e) const {
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
    Poly r({Rational(1)});
    for (long i = 0; i < e; ++i) r *= *this;
    return r;
}

Poly Poly::mod(const Poly& divisor) const {
    if (divisor.is_zero()) fail(ErrorKind::Domain, "division by the zero polynomial");
    std::vector<Rational> r = c_;
    long n = divisor.degree();
    Rational inv = Rational(1) / divisor.leading();
    for (long i = static_cast<long>(r.size()) - 1; i >= n; --i) {
        Rational q = r[static_cast<size_t>(i)] * inv;
        if (q.is_zero()) continue;
        for (long j = 0; j <= n; ++j) r[static_cast<size_t>(i - n + j)] -= q * divisor.c_[static_cast<size_t>(j)];
    }
    if (static_cast<long>(r.size()) > n) r.resize(static_cast<size_t>(n));
    return Poly(std::move(r));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag == Rational(1);
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!unit) out += mag.to_string() + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace localext
