#include "localext/tame.hpp"

#include "localext/error.hpp"
#include "localext/padic.hpp"

#include <numeric>

namespace localext {

TameField TameField::make(long p, long m) {
    require_prime(p);
    if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
    std::vector<long> mu = default_modulus(p, m);
    FiniteField res(p, mu);
    FiniteField::Elem z = res.canonical_generator();
    return TameField{p, m, mu, res, z};
}

long TameField::d(long n) const {
    return std::gcd(n, static_cast<long>(residue.size() - 1));
}

std::string TameLabel::class_id() const {
    return unramified ? "unramified" : "ramified-r-" + std::to_string(r);
}

namespace {

Certification require_certificate(const Poly& f, long p) {
    Certification c = certify_irreducible(f, p);
    if (!c.certificate) fail(ErrorKind::RejectedInput, "input is reducible over Q_" + std::to_string(p) + ": " + c.reason);
    if (c.certificate->kind == CertKind::Unverified)
        fail(ErrorKind::RejectedInput, "irreducibility over Q_" + std::to_string(p) + " could not be certified");
    return c;
}

// Fills the ramified part of the certificate and picks the unique r.
long ramified_label(const TameField& K, long n, TameCertificate& cert) {
    long v = cert.disc_valuation;
    if (v % (n - 1) != 0)
        fail(ErrorKind::InternalInconsistency, "v(disc) = " + std::to_string(v) + " is not a multiple of n - 1");
    long a = v / (n - 1);
    if (std::gcd(mod_floor(a, n), n) != 1)
        fail(ErrorKind::RejectedInput, "v(disc)/(n-1) = " + std::to_string(a) + " is not prime to n");
    cert.ell = inverse_mod(mod_floor(a, n), n);
    cert.d = K.d(n);
    cert.negated = n % 4 == 0;
    const FiniteField& F = K.residue;
    FiniteField::Elem ul = F.pow(F.from_integer(residue(cert.unit, Integer(K.p))), Integer(cert.ell));
    if (cert.negated) ul = F.neg(ul);
    long found = -1;
    for (long r = 0; r < cert.d; ++r) {
        FiniteField::Elem value = F.mul(F.pow(K.zeta, Integer(r)), ul);
        bool power = qth_power_residue(F, value, n);
        cert.transcript.push_back({r, value, power});
        if (power) {
            if (found >= 0) fail(ErrorKind::InternalInconsistency, "two values of r pass the power test");
            found = r;
        }
    }
    if (found < 0) fail(ErrorKind::InternalInconsistency, "no value of r passes the power test");
    return found;
}

TameCertificate discriminant_data(const Poly& f, long p) {
    TameCertificate cert;
    cert.discriminant = discriminant(f);
    auto ud = unit_part(cert.discriminant, p);
    cert.disc_valuation = ud.valuation;
    cert.unit = ud.unit;
    return cert;
}

}  // namespace

bool is_unramified_prime_degree(const Poly& f, long p, long q) {
    if (f.degree() != q || !is_prime(q) || q == p) fail(ErrorKind::Unsupported, "expected prime degree q != p");
    require_certificate(f, p);
    long v = val_p_finite(discriminant(f.monic()), p);
    return mod_floor(v, q * (q - 1)) == 0;
}

TameResult classify_tame_prime(const Poly& input, const TameField& K, long q) {
    if (input.degree() != q) fail(ErrorKind::InvalidArgument, "degree does not match q");
    if (!is_prime(q) || q == K.p) fail(ErrorKind::Unsupported, "tame classification needs a prime degree q != p");
    Poly f = input.monic();
    TameResult out;
    Certification irr = require_certificate(f, K.p);
    out.certificate = discriminant_data(f, K.p);
    out.certificate.irreducibility = irr;
    out.certificate.d = K.d(q);
    if (mod_floor(out.certificate.disc_valuation, q * (q - 1)) == 0) {
        if (K.m % q == 0) fail(ErrorKind::RejectedInput, "the unramified degree-q extension of Q_p splits over K");
        out.label.unramified = true;
    } else {
        out.label.r = ramified_label(K, q, out.certificate);
    }
    out.canonical = tame_canonical(K, q, out.label);
    out.invariants = tame_invariants(K, q, out.label);
    return out;
}

TameResult classify_totally_ramified(const Poly& input, const TameField& K, long n) {
    if (input.degree() != n || n < 2) fail(ErrorKind::InvalidArgument, "degree does not match n");
    if (n % K.p == 0) fail(ErrorKind::Unsupported, "wild ramification is outside the tame classifier");
    Poly f = input.monic();
    TameResult out;
    Certification irr = certify_irreducible(f, K.p);
    bool ramified_cert = irr.certificate && irr.certificate->kind == CertKind::EisensteinSegment;
    if (!ramified_cert && is_prime(n)) {
        irr = require_certificate(f, K.p);
        long v = val_p_finite(discriminant(f), K.p);
        ramified_cert = mod_floor(v, n * (n - 1)) != 0;
    }
    if (!ramified_cert) fail(ErrorKind::RejectedInput, "total ramification could not be certified");
    out.certificate = discriminant_data(f, K.p);
    out.certificate.irreducibility = irr;
    out.label.r = ramified_label(K, n, out.certificate);
    out.canonical = tame_canonical(K, n, out.label);
    out.invariants = tame_invariants(K, n, out.label);
    return out;
}

bool same_tame_extension(const Poly& f, const Poly& g, const TameField& K, long n) {
    TameResult a = classify_totally_ramified(f, K, n);
    TameResult b = classify_totally_ramified(g, K, n);
    const FiniteField& F = K.residue;
    long l = a.certificate.ell;
    long s = b.certificate.ell;
    FiniteField::Elem u = F.from_integer(residue(a.certificate.unit, Integer(K.p)));
    FiniteField::Elem w = F.from_integer(residue(b.certificate.unit, Integer(K.p)));
    FiniteField::Elem value = F.mul(F.pow(u, Integer(l)), F.inv(F.pow(w, Integer(s))));
    long sign_exp = (s - l) * (1 + n * (n - 1) / 2);
    if (mod_floor(sign_exp, 2) == 1) value = F.neg(value);
    return qth_power_residue(F, value, n);
}

std::vector<TameLabel> tame_labels(const TameField& K, long q) {
    std::vector<TameLabel> out;
    TameLabel u;
    u.unramified = true;
    out.push_back(u);
    for (long r = 0; r < K.d(q); ++r) out.push_back(TameLabel{false, r});
    return out;
}

KPoly tame_canonical(const TameField& K, long q, const TameLabel& label) {
    const FiniteField& F = K.residue;
    KPoly out;
    out.m = K.m;
    out.coeffs.assign(static_cast<size_t>(q) + 1, std::vector<Rational>(static_cast<size_t>(K.m), Rational(0)));
    out.coeffs.back()[0] = Rational(1);
    if (!label.unramified) {
        FiniteField::Elem c = F.pow(K.zeta, Integer(label.r));
        for (long j = 0; j < K.m; ++j) out.coeffs[0][static_cast<size_t>(j)] = Rational(-K.p * c[static_cast<size_t>(j)]);
        return out;
    }
    // x^q - x + c for the least encoded c that makes it irreducible
    auto as_fpoly = [&](const KPoly& g) {
        FiniteField::FPoly h;
        for (const auto& c : g.coeffs) {
            FiniteField::Elem e = F.zero();
            for (long j = 0; j < K.m; ++j) e[static_cast<size_t>(j)] = residue(c[static_cast<size_t>(j)], K.p);
            h.push_back(e);
        }
        return h;
    };
    out.coeffs[1][0] = Rational(-1);
    for (std::uint64_t code = 0; code < F.size(); ++code) {
        FiniteField::Elem c = F.decode(code);
        for (long j = 0; j < K.m; ++j) out.coeffs[0][static_cast<size_t>(j)] = Rational(c[static_cast<size_t>(j)]);
        if (F.poly_is_irreducible(as_fpoly(out))) return out;
    }
    // lexicographically first monic irreducible of degree q
    std::uint64_t total = 1;
    for (long i = 0; i < q; ++i) total *= F.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (long i = 0; i < q; ++i) {
            FiniteField::Elem e = F.decode(c % F.size());
            c /= F.size();
            for (long j = 0; j < K.m; ++j) out.coeffs[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(e[static_cast<size_t>(j)]);
        }
        if (F.poly_is_irreducible(as_fpoly(out))) return out;
    }
    fail(ErrorKind::InternalInconsistency, "no irreducible polynomial of degree " + std::to_string(q));
}

FieldInvariants tame_invariants(const TameField& K, long q, const TameLabel& label) {
    FieldInvariants inv;
    std::string base = K.m == 1 ? "Q" + std::to_string(K.p) : "K";
    if (label.unramified) {
        inv.e = 1;
        inv.f = q;
        inv.galois = true;
        inv.galois_group = "C" + std::to_string(q);
        inv.inertia_group = "1";
        inv.quadratic_subextension = q == 2 ? "itself" : "none";
        inv.disc_exponent = 0;
        return inv;
    }
    inv.e = q;
    inv.f = 1;
    inv.disc_exponent = q - 1;
    inv.inertia_group = "C" + std::to_string(q);
    if (K.d(q) == q) {
        inv.galois = true;
        inv.galois_group = "C" + std::to_string(q);
        inv.quadratic_subextension = q == 2 ? "itself" : "none";
        return inv;
    }
    // the closure adjoins q-th roots of unity, an unramified extension of degree ord_q(p^m)
    long pm = static_cast<long>(K.residue.size() % static_cast<std::uint64_t>(q));
    long o = 1;
    for (long x = pm; x != 1; x = (x * pm) % q) ++o;
    inv.galois = false;
    inv.galois_group = (q == 3 && o == 2) ? "S3" : "C" + std::to_string(q) + ":C" + std::to_string(o);
    inv.quadratic_subextension = q == 3 ? base + "(sqrt(-3))" : (o % 2 == 0 ? "unramified quadratic" : "none");
    return inv;
}

}  // namespace localext
