#include "localext/local_ring.hpp"

#include "localext/error.hpp"

namespace localext {

namespace {

using Coords = UnramifiedField::Coords;

Coords slice(const LocalRing::Elem& a, long i, long m) {
    return Coords(a.begin() + i * m, a.begin() + (i + 1) * m);
}

void put(LocalRing::Elem& a, long i, long m, const Coords& c) {
    for (long j = 0; j < m; ++j) a[static_cast<size_t>(i * m + j)] = c[static_cast<size_t>(j)];
}

FiniteField::Elem rslice(const LocalRing::Residue& a, long i, long m) {
    return FiniteField::Elem(a.begin() + i * m, a.begin() + (i + 1) * m);
}

}  // namespace

LocalRing::LocalRing(std::shared_ptr<const UnramifiedField> base, std::vector<Coords> ext, Kind kind)
    : base_(std::move(base)), ext_(std::move(ext)), kind_(kind) {
    m_ = base_->degree();
    k_ = static_cast<long>(ext_.size()) - 1;
    if (k_ < 1) fail(ErrorKind::InvalidArgument, "extension polynomial must have positive degree");
    for (auto& c : ext_) {
        if (static_cast<long>(c.size()) != m_) fail(ErrorKind::InvalidArgument, "extension coefficient has wrong size");
        c = base_->reduce(c);
    }
    if (ext_.back() != base_->one().coords()) fail(ErrorKind::InvalidArgument, "extension polynomial must be monic");
    const FiniteField& res = base_->residue_field();
    for (const auto& c : ext_) ext_res_.push_back(base_->residue(c));

    if (kind_ == Kind::Ramified) {
        for (long i = 0; i < k_; ++i)
            if (!res.is_zero(ext_res_[static_cast<size_t>(i)]))
                fail(ErrorKind::InvalidArgument, "extension polynomial is not Eisenstein");
        auto v0 = base_->valuation(ext_[0]);
        if (!v0 || *v0 != 1) fail(ErrorKind::InvalidArgument, "extension polynomial is not Eisenstein");
        Coords eps = ext_[0];
        for (auto& c : eps) c = -(c / p());
        eps_inv_ = res.inv(base_->residue(eps));
    } else if (k_ > 1) {
        if (m_ == 1) {
            std::vector<long> g;
            for (const auto& c : ext_res_) g.push_back(c[0]);
            if (!is_irreducible_mod_p(g, p()))
                fail(ErrorKind::InvalidArgument, "extension polynomial is not residue-irreducible");
        } else {
            FiniteField::FPoly g(ext_res_.begin(), ext_res_.end());
            if (!res.poly_is_irreducible(g))
                fail(ErrorKind::InvalidArgument, "extension polynomial is not residue-irreducible");
        }
    }
    residue_count_ = 1;
    for (long i = 0; i < f(); ++i) residue_count_ *= static_cast<std::uint64_t>(p());
}

LocalRing LocalRing::over_qp(long p, const Poly& ext, Kind kind, long precision) {
    auto base = UnramifiedField::make(p, {0, 1}, precision);
    std::vector<Coords> e;
    for (long i = 0; i <= ext.degree(); ++i) e.push_back(base->from_rational(ext.coeff(i)));
    return LocalRing(base, std::move(e), kind);
}

LocalRing LocalRing::base_only(std::shared_ptr<const UnramifiedField> base) {
    std::vector<Coords> e = {base->zero_coords(), base->one().coords()};
    return LocalRing(std::move(base), std::move(e), Kind::Unramified);
}

LocalRing LocalRing::with_precision(long precision) const {
    auto b = base_->with_precision(precision);
    return LocalRing(b, ext_, kind_);
}

LocalRing::Elem LocalRing::from_rational(const Rational& x) const {
    return from_base(base_->from_rational(x));
}

LocalRing::Elem LocalRing::from_base(const Coords& c) const {
    Elem r = zero();
    put(r, 0, m_, base_->reduce(c));
    return r;
}

LocalRing::Elem LocalRing::add(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    const Integer& pn = base_->modulus_power();
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= pn) r[i] -= pn;
    }
    return r;
}

LocalRing::Elem LocalRing::sub(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    const Integer& pn = base_->modulus_power();
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) r[i] += pn;
    }
    return r;
}

LocalRing::Elem LocalRing::mul(const Elem& a, const Elem& b) const {
    if (k_ == 1) return base_->mul(a, b);
    std::vector<Coords> t(static_cast<size_t>(2 * k_ - 1), base_->zero_coords());
    for (long i = 0; i < k_; ++i) {
        Coords ai = slice(a, i, m_);
        if (base_->is_zero(ai)) continue;
        for (long j = 0; j < k_; ++j) {
            Coords bj = slice(b, j, m_);
            if (base_->is_zero(bj)) continue;
            t[static_cast<size_t>(i + j)] = base_->add(t[static_cast<size_t>(i + j)], base_->mul(ai, bj));
        }
    }
    for (long d = 2 * k_ - 2; d >= k_; --d) {
        const Coords c = t[static_cast<size_t>(d)];
        if (base_->is_zero(c)) continue;
        for (long i = 0; i < k_; ++i)
            t[static_cast<size_t>(d - k_ + i)] =
                base_->sub(t[static_cast<size_t>(d - k_ + i)], base_->mul(c, ext_[static_cast<size_t>(i)]));
    }
    Elem r = zero();
    for (long i = 0; i < k_; ++i) put(r, i, m_, t[static_cast<size_t>(i)]);
    return r;
}

LocalRing::Elem LocalRing::mul_pi(const Elem& a, long times) const {
    if (times <= 0) return a;
    if (kind_ == Kind::Unramified) {
        Integer pt = ipow(p(), static_cast<unsigned long>(times));
        Elem r(a.size());
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] * pt;
            mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), base_->modulus_power().get_mpz_t());
        }
        return r;
    }
    Elem cur = a;
    for (long t = 0; t < times; ++t) {
        Coords top = slice(cur, k_ - 1, m_);
        Elem next = zero();
        for (long i = k_ - 1; i >= 1; --i) put(next, i, m_, slice(cur, i - 1, m_));
        if (!base_->is_zero(top)) {
            for (long i = 0; i < k_; ++i)
                put(next, i, m_, base_->sub(slice(next, i, m_), base_->mul(top, ext_[static_cast<size_t>(i)])));
        }
        cur = std::move(next);
    }
    return cur;
}

bool LocalRing::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

std::optional<long> LocalRing::valuation(const Elem& a) const {
    std::optional<long> best;
    for (long i = 0; i < k_; ++i) {
        auto v = base_->valuation(slice(a, i, m_));
        if (!v) continue;
        long w = kind_ == Kind::Ramified ? k_ * *v + i : *v;
        if (!best || w < *best) best = w;
    }
    return best;
}

LocalRing::Residue LocalRing::digit(const Elem& a, long c) const {
    Residue r = rzero();
    const FiniteField& res = base_->residue_field();
    if (kind_ == Kind::Unramified) {
        Integer pc = ipow(p(), static_cast<unsigned long>(c));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] % pc != 0) fail(ErrorKind::InternalInconsistency, "digit requested below the valuation");
            Integer t = a[i] / pc;
            mpz_fdiv_r_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p()));
            r[i] = t.get_si();
        }
        return r;
    }
    long q = c / k_;
    long b = c % k_;
    Integer pq = ipow(p(), static_cast<unsigned long>(q));
    Coords xb = slice(a, b, m_);
    for (auto& x : xb) {
        if (x % pq != 0) fail(ErrorKind::InternalInconsistency, "digit requested below the valuation");
        x /= pq;
    }
    FiniteField::Elem d = res.mul(base_->residue(xb), res.pow(eps_inv_, Integer(q)));
    for (long j = 0; j < m_; ++j) r[static_cast<size_t>(j)] = d[static_cast<size_t>(j)];
    return r;
}

LocalRing::Elem LocalRing::lift(const Residue& r) const {
    Elem a = zero();
    for (size_t i = 0; i < r.size(); ++i) a[i] = r[i];
    return a;
}

LocalRing::Residue LocalRing::residue_decode(std::uint64_t code) const {
    Residue r = rzero();
    long digits = f();
    for (long i = 0; i < digits; ++i) {
        r[static_cast<size_t>(i)] = static_cast<long>(code % static_cast<std::uint64_t>(p()));
        code /= static_cast<std::uint64_t>(p());
    }
    return r;
}

bool LocalRing::ris_zero(const Residue& a) const {
    for (long c : a)
        if (c != 0) return false;
    return true;
}

LocalRing::Residue LocalRing::radd(const Residue& a, const Residue& b) const {
    Residue r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p();
    return r;
}

LocalRing::Residue LocalRing::rsub(const Residue& a, const Residue& b) const {
    Residue r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i] - b[i], p());
    return r;
}

LocalRing::Residue LocalRing::rmul(const Residue& a, const Residue& b) const {
    const FiniteField& res = base_->residue_field();
    Residue r = rzero();
    if (kind_ == Kind::Ramified || k_ == 1) {
        FiniteField::Elem c = res.mul(rslice(a, 0, m_), rslice(b, 0, m_));
        for (long j = 0; j < m_; ++j) r[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
        return r;
    }
    std::vector<FiniteField::Elem> t(static_cast<size_t>(2 * k_ - 1), res.zero());
    for (long i = 0; i < k_; ++i) {
        auto ai = rslice(a, i, m_);
        if (res.is_zero(ai)) continue;
        for (long j = 0; j < k_; ++j)
            t[static_cast<size_t>(i + j)] = res.add(t[static_cast<size_t>(i + j)], res.mul(ai, rslice(b, j, m_)));
    }
    for (long d = 2 * k_ - 2; d >= k_; --d) {
        auto c = t[static_cast<size_t>(d)];
        if (res.is_zero(c)) continue;
        for (long i = 0; i < k_; ++i)
            t[static_cast<size_t>(d - k_ + i)] =
                res.sub(t[static_cast<size_t>(d - k_ + i)], res.mul(c, ext_res_[static_cast<size_t>(i)]));
    }
    for (long i = 0; i < k_; ++i)
        for (long j = 0; j < m_; ++j) r[static_cast<size_t>(i * m_ + j)] = t[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return r;
}

LocalRing::Residue LocalRing::rinv(const Residue& a) const {
    if (ris_zero(a)) fail(ErrorKind::NoInverse, "zero residue");
    std::uint64_t e = residue_count_ - 2;
    Residue r = rzero();
    r[0] = 1;
    Residue b = a;
    while (e > 0) {
        if (e & 1) r = rmul(r, b);
        b = rmul(b, b);
        e >>= 1;
    }
    return r;
}

const char* root_status_name(RootStatus s) {
    switch (s) {
    case RootStatus::Found: return "found";
    case RootStatus::NoRoot: return "no-root";
    case RootStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

using Polyn = std::vector<LocalRing::Elem>;

class Searcher {
public:
    Searcher(const LocalRing& ring, long witness_digits)
        : r_(ring), witness_digits_(witness_digits), cap_(ring.precision() * ring.e()) {}

    RootSearch run(const Polyn& f) {
        RootSearch out;
        out.status = explore(f, r_.zero(), 0);
        if (out.status == RootStatus::Found) {
            out.root = root_;
            out.root_digits = root_digits_;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    // g(x) = f(acc + pi^level x) up to the unit-free shift bookkeeping.
    RootStatus explore(const Polyn& g, const LocalRing::Elem& acc, long level) {
        ++nodes_;
        auto content = min_valuation(g);
        if (!content || *content >= cap_) return RootStatus::Inconclusive;
        long c = *content;
        std::vector<LocalRing::Residue> red = residue_poly(g, c);
        long deg = static_cast<long>(red.size()) - 1;
        while (deg > 0 && r_.ris_zero(red[static_cast<size_t>(deg)])) --deg;
        if (deg <= 0) return RootStatus::NoRoot;
        red.resize(static_cast<size_t>(deg) + 1);

        bool inconclusive = false;
        for (std::uint64_t code = 0; code < r_.residue_count(); ++code) {
            LocalRing::Residue a = r_.residue_decode(code);
            if (!r_.ris_zero(reval(red, a))) continue;
            LocalRing::Elem next_acc = r_.add(acc, r_.mul_pi(r_.lift(a), level));
            Polyn shifted = shift(g, r_.lift(a));
            if (!r_.ris_zero(reval(rderiv(red), a))) {
                refine(shifted, next_acc, level + 1);
                return RootStatus::Found;
            }
            RootStatus s = explore(shifted, next_acc, level + 1);
            if (s == RootStatus::Found) return s;
            if (s == RootStatus::Inconclusive) inconclusive = true;
        }
        return inconclusive ? RootStatus::Inconclusive : RootStatus::NoRoot;
    }

    // Past a simple residue root the residue polynomial is linear at every level.
    void refine(Polyn g, LocalRing::Elem acc, long level) {
        for (long step = 0; step < witness_digits_; ++step) {
            auto content = min_valuation(g);
            if (!content || *content >= cap_) break;
            auto red = residue_poly(g, *content);
            if (red.size() < 2 || r_.ris_zero(red[1])) break;
            LocalRing::Residue b = r_.rsub(r_.rzero(), r_.rmul(red[0], r_.rinv(red[1])));
            acc = r_.add(acc, r_.mul_pi(r_.lift(b), level));
            g = shift(g, r_.lift(b));
            ++level;
        }
        root_ = acc;
        root_digits_ = level;
    }

    std::optional<long> min_valuation(const Polyn& g) const {
        std::optional<long> best;
        for (const auto& c : g) {
            auto v = r_.valuation(c);
            if (v && (!best || *v < *best)) best = v;
        }
        return best;
    }

    std::vector<LocalRing::Residue> residue_poly(const Polyn& g, long c) const {
        std::vector<LocalRing::Residue> red;
        for (const auto& coef : g) {
            auto v = r_.valuation(coef);
            red.push_back(v && *v == c ? r_.digit(coef, c) : r_.rzero());
        }
        return red;
    }

    LocalRing::Residue reval(const std::vector<LocalRing::Residue>& f, const LocalRing::Residue& x) const {
        LocalRing::Residue acc = r_.rzero();
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = r_.radd(r_.rmul(acc, x), *it);
        return acc;
    }

    std::vector<LocalRing::Residue> rderiv(const std::vector<LocalRing::Residue>& f) const {
        std::vector<LocalRing::Residue> d;
        for (size_t i = 1; i < f.size(); ++i) {
            LocalRing::Residue c = r_.rzero();
            for (size_t t = 0; t < i % static_cast<size_t>(r_.p()); ++t) c = r_.radd(c, f[i]);
            d.push_back(c);
        }
        if (d.empty()) d.push_back(r_.rzero());
        return d;
    }

    // g(a + pi x)
    Polyn shift(const Polyn& g, const LocalRing::Elem& a) const {
        Polyn h = g;
        long n = static_cast<long>(h.size()) - 1;
        for (long i = 0; i < n; ++i)
            for (long j = n - 1; j >= i; --j)
                h[static_cast<size_t>(j)] = r_.add(h[static_cast<size_t>(j)], r_.mul(a, h[static_cast<size_t>(j + 1)]));
        for (long j = 1; j <= n; ++j) h[static_cast<size_t>(j)] = r_.mul_pi(h[static_cast<size_t>(j)], j);
        return h;
    }

    const LocalRing& r_;
    long witness_digits_;
    long cap_;
    long nodes_ = 0;
    LocalRing::Elem root_;
    long root_digits_ = 0;
};

}  // namespace

RootSearch find_root(const LocalRing& ring, const std::vector<LocalRing::Elem>& f, long witness_digits) {
    if (f.size() < 2) fail(ErrorKind::InvalidArgument, "root search needs a polynomial of positive degree");
    Searcher s(ring, witness_digits);
    return s.run(f);
}

}  // namespace localext
