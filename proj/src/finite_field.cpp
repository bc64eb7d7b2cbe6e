#include "localext/finite_field.hpp"

#include "localext/error.hpp"

namespace localext {

namespace {

long md(long a, long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

}  // namespace

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

FiniteField::FiniteField(long p, std::vector<long> modulus) : p_(p), mu_(std::move(modulus)) {
    require_prime(p);
    if (mu_.size() < 2 || md(mu_.back(), p) != 1)
        fail(ErrorKind::InvalidArgument, "finite field modulus must be monic of positive degree");
    for (auto& c : mu_) c = md(c, p);
    m_ = static_cast<long>(mu_.size()) - 1;
    size_ = 1;
    for (long i = 0; i < m_; ++i) {
        if (size_ > (std::uint64_t(1) << 40) / static_cast<std::uint64_t>(p))
            fail(ErrorKind::Unsupported, "residue field too large");
        size_ *= static_cast<std::uint64_t>(p);
    }
    if (m_ > 1 && !is_irreducible_mod_p(mu_, p))
        fail(ErrorKind::InvalidArgument, "finite field modulus is reducible mod " + std::to_string(p));
}

FiniteField FiniteField::prime_field(long p) {
    return FiniteField(p, {0, 1});
}

FiniteField::Elem FiniteField::from_int(long a) const {
    Elem e = zero();
    e[0] = md(a, p_);
    return e;
}

FiniteField::Elem FiniteField::from_integer(const Integer& a) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p_));
    return from_int(r.get_si());
}

bool FiniteField::is_zero(const Elem& a) const {
    for (long c : a)
        if (c != 0) return false;
    return true;
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
    Elem r(static_cast<size_t>(m_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = md(a[i] + b[i], p_);
    return r;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
    Elem r(static_cast<size_t>(m_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = md(a[i] - b[i], p_);
    return r;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const {
    return sub(zero(), a);
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    if (m_ == 1) return {md(a[0] * b[0], p_)};
    std::vector<long> t(static_cast<size_t>(2 * m_ - 1), 0);
    for (long i = 0; i < m_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < m_; ++j)
            t[static_cast<size_t>(i + j)] =
                md(t[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)], p_);
    }
    for (long k = 2 * m_ - 2; k >= m_; --k) {
        long c = t[static_cast<size_t>(k)];
        if (c == 0) continue;
        for (long j = 0; j < m_; ++j)
            t[static_cast<size_t>(k - m_ + j)] = md(t[static_cast<size_t>(k - m_ + j)] - c * mu_[static_cast<size_t>(j)], p_);
    }
    t.resize(static_cast<size_t>(m_));
    return t;
}

FiniteField::Elem FiniteField::pow(const Elem& a, const Integer& e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem r = one();
    Elem b = a;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

FiniteField::Elem FiniteField::inv(const Elem& a) const {
    if (is_zero(a)) fail(ErrorKind::NoInverse, "zero has no inverse in the residue field");
    return pow(a, Integer(static_cast<unsigned long>(size_ - 2)));
}

std::uint64_t FiniteField::encode(const Elem& a) const {
    std::uint64_t code = 0;
    for (long i = m_ - 1; i >= 0; --i) code = code * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(a[static_cast<size_t>(i)]);
    return code;
}

FiniteField::Elem FiniteField::decode(std::uint64_t code) const {
    Elem a(static_cast<size_t>(m_));
    for (long i = 0; i < m_; ++i) {
        a[static_cast<size_t>(i)] = static_cast<long>(code % static_cast<std::uint64_t>(p_));
        code /= static_cast<std::uint64_t>(p_);
    }
    return a;
}

Integer FiniteField::order(const Elem& a) const {
    if (is_zero(a)) fail(ErrorKind::Domain, "order of zero");
    Integer n(static_cast<unsigned long>(size_ - 1));
    Integer ord = n;
    for (long r : prime_factors(static_cast<long>(size_ - 1))) {
        while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
    }
    return ord;
}

FiniteField::Elem FiniteField::canonical_generator() const {
    Integer target(static_cast<unsigned long>(size_ - 1));
    for (std::uint64_t code = 1; code < size_; ++code) {
        Elem a = decode(code);
        if (order(a) == target) return a;
    }
    fail(ErrorKind::InternalInconsistency, "no generator found");
}

FiniteField::FPoly FiniteField::poly_trim(FPoly f) const {
    while (!f.empty() && is_zero(f.back())) f.pop_back();
    return f;
}

FiniteField::FPoly FiniteField::poly_mod(const FPoly& a, const FPoly& g) const {
    FPoly r = poly_trim(a);
    FPoly gg = poly_trim(g);
    if (gg.empty()) fail(ErrorKind::Domain, "polynomial division by zero");
    long n = static_cast<long>(gg.size()) - 1;
    Elem lead_inv = inv(gg.back());
    while (static_cast<long>(r.size()) - 1 >= n) {
        long d = static_cast<long>(r.size()) - 1;
        Elem q = mul(r.back(), lead_inv);
        for (long j = 0; j <= n; ++j)
            r[static_cast<size_t>(d - n + j)] = sub(r[static_cast<size_t>(d - n + j)], mul(q, gg[static_cast<size_t>(j)]));
        r = poly_trim(std::move(r));
    }
    return r;
}

FiniteField::FPoly FiniteField::poly_mulmod(const FPoly& a, const FPoly& b, const FPoly& g) const {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    return poly_mod(r, g);
}

FiniteField::FPoly FiniteField::poly_powmod(const FPoly& a, const Integer& e, const FPoly& g) const {
    FPoly r = poly_mod({one()}, g);
    FPoly b = poly_mod(a, g);
    size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mulmod(r, b, g);
        b = poly_mulmod(b, b, g);
    }
    return r;
}

FiniteField::FPoly FiniteField::poly_gcd(FPoly a, FPoly b) const {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        FPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FiniteField::Elem FiniteField::poly_eval(const FPoly& f, const Elem& x) const {
    Elem acc = zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
}

bool FiniteField::poly_is_irreducible(const FPoly& monic) const {
    FPoly g = poly_trim(monic);
    long n = static_cast<long>(g.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    Integer q(static_cast<unsigned long>(size_));
    FPoly x = {zero(), one()};
    // frob[i] = x^(q^i) mod g
    std::vector<FPoly> frob(static_cast<size_t>(n) + 1);
    frob[0] = poly_mod(x, g);
    for (long i = 1; i <= n; ++i) frob[static_cast<size_t>(i)] = poly_powmod(frob[static_cast<size_t>(i - 1)], q, g);
    auto minus_x = [&](FPoly f) {
        if (f.size() < 2) f.resize(2, zero());
        f[1] = sub(f[1], one());
        return poly_trim(std::move(f));
    };
    if (!minus_x(frob[static_cast<size_t>(n)]).empty()) return false;
    for (long r : prime_factors(n)) {
        FPoly h = poly_gcd(g, minus_x(frob[static_cast<size_t>(n / r)]));
        if (h.size() > 1) return false;
    }
    return true;
}

std::vector<FiniteField::Elem> FiniteField::poly_roots(const FPoly& f) const {
    std::vector<Elem> roots;
    for (std::uint64_t code = 0; code < size_; ++code) {
        Elem a = decode(code);
        if (is_zero(poly_eval(f, a))) roots.push_back(a);
    }
    return roots;
}

bool is_irreducible_mod_p(const std::vector<long>& monic, long p) {
    FiniteField fp = FiniteField::prime_field(p);
    FiniteField::FPoly g;
    for (long c : monic) g.push_back(fp.from_int(c));
    g = fp.poly_trim(std::move(g));
    if (g.empty() || g.back() != fp.one()) fail(ErrorKind::InvalidArgument, "polynomial is not monic mod p");
    return fp.poly_is_irreducible(g);
}

std::vector<long> smallest_irreducible_mod_p(long p, long m) {
    require_prime(p);
    if (m < 1) fail(ErrorKind::InvalidArgument, "degree must be positive");
    if (m == 1) return {0, 1};
    std::uint64_t count = 1;
    for (long i = 0; i < m; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<long> f(static_cast<size_t>(m) + 1);
        std::uint64_t c = code;
        for (long i = 0; i < m; ++i) {
            f[static_cast<size_t>(i)] = static_cast<long>(c % static_cast<std::uint64_t>(p));
            c /= static_cast<std::uint64_t>(p);
        }
        f[static_cast<size_t>(m)] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    fail(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
}

}  // namespace localext
