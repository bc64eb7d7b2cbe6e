#include "localext/corpus.hpp"

#include "localext/error.hpp"
#include "localext/polyring.hpp"

#include <limits>
#include <random>

namespace localext {

long poly_height(const Poly& f) {
    Integer h = 0;
    for (const auto& c : f.coeffs()) {
        Integer n = abs(c.num());
        if (n > h) h = n;
        if (c.den() > h) h = c.den();
    }
    return h.fits_slong_p() ? h.get_si() : std::numeric_limits<long>::max();
}

namespace {

class Sampler {
public:
    explicit Sampler(const CorpusOptions& o) : o_(o), rng_(o.seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Poly plain() {
        std::vector<long> c(static_cast<size_t>(o_.degree) + 1);
        for (auto& x : c) x = uniform(-o_.height, o_.height);
        c.back() = 1;
        return Poly::from_ints(c);
    }

    Poly perturbed_power() {
        long n = o_.degree;
        Poly f = Poly({Rational(-uniform(-o_.p, o_.p)), Rational(1)}).pow(n);
        for (long i = 0; i < n; ++i) {
            long k = uniform(1, 3);
            long b = uniform(-o_.p * o_.p, o_.p * o_.p);
            f = f + Poly::monomial(Rational(ipow(o_.p, k)) * Rational(b), i);
        }
        return f;
    }

    Poly transformed(const Poly& g) {
        long k = uniform(0, 2);
        long unit;
        do unit = uniform(1, 2 * o_.p); while (unit % o_.p == 0);
        Rational a = Rational(unit) * (uniform(0, 1) ? Rational(ipow(o_.p, k)) : Rational(1) / Rational(ipow(o_.p, k)));
        Rational b(Integer(uniform(-o_.p * o_.p, o_.p * o_.p)), Integer(uniform(1, 4)));
        return g.substitute_linear(a, b).monic();
    }

    Poly next() {
        switch (uniform(0, 2)) {
        case 0: return plain();
        case 1: return perturbed_power();
        default: return transformed(uniform(0, 1) ? plain_small() : perturbed_power());
        }
    }

private:
    Poly plain_small() {
        std::vector<long> c(static_cast<size_t>(o_.degree) + 1);
        for (auto& x : c) x = uniform(-o_.p * o_.p * o_.p, o_.p * o_.p * o_.p);
        c.back() = 1;
        return Poly::from_ints(c);
    }

    CorpusOptions o_;
    std::mt19937_64 rng_;
};

}  // namespace

std::vector<Poly> generate_corpus(const CorpusOptions& opts) {
    require_prime(opts.p);
    if (opts.degree < 2 || opts.count < 0 || opts.height < 1) fail(ErrorKind::InvalidArgument, "bad corpus options");
    Sampler s(opts);
    std::vector<Poly> out;
    long attempts = 0;
    while (static_cast<long>(out.size()) < opts.count) {
        if (++attempts > 1000 * (opts.count + 10)) fail(ErrorKind::Inconclusive, "corpus generation stalled");
        Poly f = s.next();
        if (f.degree() != opts.degree || poly_height(f) > opts.height) continue;
        Certification c = certify_irreducible(f, opts.p);
        if (!c.certificate || c.certificate->kind == CertKind::Unverified) continue;
        out.push_back(f);
    }
    return out;
}

}  // namespace localext
