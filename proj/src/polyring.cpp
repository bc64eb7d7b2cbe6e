#include "localext/polyring.hpp"

#include "localext/error.hpp"

#include <numeric>

namespace localext {

Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    long n = f.degree();
    long m = g.degree();
    if (n == 0 && m == 0) return Rational(1);
    if (n == 0) return f.leading().pow(m);
    if (m == 0) return g.leading().pow(n);
    long size = n + m;
    std::vector<std::vector<Rational>> a(static_cast<size_t>(size), std::vector<Rational>(static_cast<size_t>(size), Rational(0)));
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) a[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = f.coeff(n - i);
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) a[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = g.coeff(m - i);

    // Bareiss: every division below is exact
    int sign = 1;
    Rational prev(1);
    for (long k = 0; k < size - 1; ++k) {
        size_t kk = static_cast<size_t>(k);
        if (a[kk][kk].is_zero()) {
            long piv = -1;
            for (long r = k + 1; r < size; ++r)
                if (!a[static_cast<size_t>(r)][kk].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Rational(0);
            std::swap(a[kk], a[static_cast<size_t>(piv)]);
            sign = -sign;
        }
        for (long i = k + 1; i < size; ++i) {
            size_t ii = static_cast<size_t>(i);
            for (long j = k + 1; j < size; ++j) {
                size_t jj = static_cast<size_t>(j);
                a[ii][jj] = (a[ii][jj] * a[kk][kk] - a[ii][kk] * a[kk][jj]) / prev;
            }
            a[ii][kk] = Rational(0);
        }
        prev = a[kk][kk];
    }
    Rational det = a[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
    return sign > 0 ? det : -det;
}

Rational discriminant(const Poly& f) {
    long n = f.degree();
    if (n < 1) fail(ErrorKind::InvalidArgument, "discriminant needs positive degree");
    if (n == 1) return Rational(1);
    Rational r = resultant(f.derivative(), f) / f.leading();
    return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

DepressedForm depressed(const Poly& f) {
    long n = f.degree();
    if (n < 1) fail(ErrorKind::InvalidArgument, "depressed form needs positive degree");
    Rational t = f.coeff(n - 1) / (Rational(n) * f.leading());
    Poly g = f.substitute_linear(Rational(1), -t) * (Rational(1) / f.leading());
    return {t, g};
}

NewtonPolygon newton_polygon(const Poly& f, long p) {
    require_prime(p);
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "Newton polygon of the zero polynomial");
    std::vector<std::pair<long, long>> pts;
    for (long i = 0; i <= f.degree(); ++i)
        if (!f.coeff(i).is_zero()) pts.emplace_back(i, val_p_finite(f.coeff(i), p));
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b unless it lies strictly below the chord from a to pt
            long lhs = (b.second - a.second) * (pt.first - a.first);
            long rhs = (pt.second - a.second) * (b.first - a.first);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    np.vertices = hull;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        long dx = hull[i + 1].first - hull[i].first;
        long dy = hull[i + 1].second - hull[i].second;
        np.segments.push_back({hull[i].first, hull[i + 1].first, Rational(Integer(dy), Integer(dx))});
    }
    return np;
}

std::optional<long> is_k_eisenstein(const Poly& f, long p) {
    require_prime(p);
    long n = f.degree();
    if (n < 2) return std::nullopt;
    if (val_p(f.leading(), p) != Valuation(0)) return std::nullopt;
    if (f.coeff(0).is_zero()) return std::nullopt;
    long k = val_p_finite(f.coeff(0), p);
    if (k < 1 || k >= n) return std::nullopt;
    for (long i = 1; i < n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        long v = val_p_finite(f.coeff(i), p);
        if (n * v + i * k < n * k) return std::nullopt;
    }
    return k;
}

EisensteinShiftData eisenstein_shift(const Poly& f, long p) {
    require_prime(p);
    long n = f.degree();
    if (n < 2) fail(ErrorKind::PreconditionViolation, "Eisenstein shift needs degree at least 2");
    DepressedForm d = depressed(f);
    const Poly& g = d.poly;
    if (g.coeff(0).is_zero()) fail(ErrorKind::PreconditionViolation, "depressed polynomial has the root 0");
    NewtonPolygon np = newton_polygon(g, p);
    if (np.segments.size() != 1)
        fail(ErrorKind::PreconditionViolation, "depressed polynomial has a Newton polygon with several segments");
    long a = val_p_finite(g.coeff(0), p);
    if (std::gcd(a, n) != 1)
        fail(ErrorKind::PreconditionViolation, "Newton slope " + std::to_string(a) + "/" + std::to_string(n) +
                                                   " does not force total ramification");
    long k = mod_floor(a, n);
    long r = (k - a) / n;
    std::vector<Rational> h(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) h[static_cast<size_t>(i)] = g.coeff(i) * Rational(p).pow(r * (n - i));
    Poly shifted(std::move(h));
    auto check = is_k_eisenstein(shifted, p);
    if (!check || *check != k)
        fail(ErrorKind::InternalInconsistency, "shifted polynomial " + shifted.to_string() + " is not Eisenstein");
    return {k, r, d.shift, shifted};
}

Rational norm_of_linear_shift(const Poly& f, const Rational& lambda) {
    if (!f.is_monic()) fail(ErrorKind::InvalidArgument, "norm needs a monic polynomial");
    Rational v = f.eval(-lambda);
    return f.degree() % 2 == 0 ? v : -v;
}

Rational norm_of_quadratic_shift(const Poly& g, const Rational& lambda) {
    if (g.degree() != 3 || !g.is_monic() || !g.coeff(2).is_zero())
        fail(ErrorKind::InvalidArgument, "expected a depressed monic cubic");
    Rational alpha = g.coeff(1);
    Rational beta = g.coeff(0);
    // prod(theta_i^2 + lambda), with (prod theta_i)^2 = beta^2
    return beta * beta + lambda.pow(3) - Rational(2) * lambda * lambda * alpha + lambda * alpha * alpha;
}

ScaledPoly integral_root_scaling(const Poly& monic, long p) {
    if (!monic.is_monic()) fail(ErrorKind::InvalidArgument, "root scaling needs a monic polynomial");
    long n = monic.degree();
    long s = 0;
    for (long i = 0; i < n; ++i) {
        const Rational& c = monic.coeffs()[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        long v = val_p_finite(c, p);
        if (v < 0) s = std::max(s, (-v + (n - i) - 1) / (n - i));
    }
    std::vector<Rational> h(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) h[static_cast<size_t>(i)] = monic.coeff(i) * Rational(p).pow(s * (n - i));
    return {s, Poly(std::move(h))};
}

std::vector<LocalRing::Elem> ring_coeffs(const LocalRing& ring, const Poly& f) {
    std::vector<LocalRing::Elem> c;
    for (long i = 0; i <= f.degree(); ++i) c.push_back(ring.from_rational(f.coeff(i)));
    return c;
}

const char* cert_kind_name(CertKind kind) {
    switch (kind) {
    case CertKind::ResidueIrreducible: return "residue-irreducible";
    case CertKind::EisensteinSegment: return "eisenstein-segment";
    case CertKind::CubicNoRoot: return "cubic-no-root";
    case CertKind::QuadraticNoRoot: return "quadratic-no-root";
    case CertKind::Unverified: return "unverified";
    }
    return "unknown";
}

namespace {

bool p_integral(const Poly& f, long p) {
    for (const auto& c : f.coeffs())
        if (!c.is_zero() && val_p_finite(c, p) < 0) return false;
    return true;
}

std::optional<IrreducibilityCertificate> segment_certificate(const Poly& g, long p, const Rational& shift) {
    long n = g.degree();
    if (g.coeff(0).is_zero()) return std::nullopt;
    NewtonPolygon np = newton_polygon(g, p);
    if (np.segments.size() != 1) return std::nullopt;
    const Rational& slope = np.segments[0].slope;
    if (slope.den() != n) return std::nullopt;
    IrreducibilityCertificate c;
    c.kind = CertKind::EisensteinSegment;
    c.shift = shift;
    c.slope = slope;
    c.detail = "f(x + " + shift.to_string() + ") has a single Newton segment of slope " + slope.to_string();
    return c;
}

}  // namespace

Certification certify_irreducible(const Poly& input, long p) {
    require_prime(p);
    if (input.degree() < 2) fail(ErrorKind::InvalidArgument, "irreducibility certificate needs degree at least 2");
    Poly f = input.monic();
    long n = f.degree();
    Certification out;

    Rational disc = discriminant(f);
    if (disc.is_zero()) {
        out.reason = "discriminant vanishes, so f has a repeated factor";
        return out;
    }

    if (p_integral(f, p)) {
        std::vector<long> red;
        for (const auto& c : f.coeffs()) red.push_back(residue(c, p));
        if (is_irreducible_mod_p(red, p)) {
            IrreducibilityCertificate c;
            c.kind = CertKind::ResidueIrreducible;
            c.detail = "reduction mod " + std::to_string(p) + " is irreducible";
            out.certificate = c;
            return out;
        }
    }

    std::vector<std::pair<Poly, Rational>> candidates = {{f, Rational(0)}};
    DepressedForm d = depressed(f);
    candidates.emplace_back(d.poly, -d.shift);
    for (long c = 1; c < p && c <= 16; ++c) candidates.emplace_back(f.substitute_linear(Rational(1), Rational(c)), Rational(c));
    for (const auto& [g, shift] : candidates) {
        if (auto c = segment_certificate(g, p, shift)) {
            out.certificate = *c;
            return out;
        }
    }

    if (n <= 3) {
        ScaledPoly sp = integral_root_scaling(f, p);
        long vdisc = val_p_finite(discriminant(sp.poly), p);
        for (long precision = vdisc + 4; precision <= 8 * (vdisc + 4); precision *= 2) {
            LocalRing ring = LocalRing::base_only(UnramifiedField::make(p, {0, 1}, precision));
            RootSearch res = find_root(ring, ring_coeffs(ring, sp.poly), precision);
            if (res.status == RootStatus::Inconclusive) continue;
            if (res.status == RootStatus::Found) {
                long digits = std::min(res.root_digits, precision);
                Integer w = (*res.root)[0];
                mpz_fdiv_r(w.get_mpz_t(), w.get_mpz_t(), ipow(p, static_cast<unsigned long>(digits)).get_mpz_t());
                out.root = PadicApprox(p, digits, w, sp.s);
                out.reason = "root " + out.root->to_string() + " found in Q_" + std::to_string(p);
                return out;
            }
            IrreducibilityCertificate c;
            c.kind = n == 3 ? CertKind::CubicNoRoot : CertKind::QuadraticNoRoot;
            c.precision = precision;
            c.detail = "exhaustive root search in Z_" + std::to_string(p) + " at precision " + std::to_string(precision);
            out.certificate = c;
            return out;
        }
    }

    IrreducibilityCertificate c;
    c.kind = CertKind::Unverified;
    c.detail = "no certificate applies";
    out.certificate = c;
    return out;
}

}  // namespace localext
