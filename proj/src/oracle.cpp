#include "localext/oracle.hpp"

#include "localext/error.hpp"
#include "localext/polyring.hpp"

#include <algorithm>

namespace localext {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix multiplication_matrix(const Poly& f, const Poly& h) {
    long n = f.degree();
    Matrix a(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    Poly col = h.mod(f);
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
        col = (col * Poly::x()).mod(f);
    }
    return a;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix c(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

long min_coord_valuation(const std::vector<Rational>& c, long p, bool& zero) {
    long best = 0;
    zero = true;
    for (const auto& x : c) {
        if (x.is_zero()) continue;
        long v = val_p_finite(x, p);
        if (zero || v < best) best = v;
        zero = false;
    }
    return best;
}

std::vector<long> base_modulus(const OracleContext& ctx) {
    return ctx.modulus.empty() ? default_modulus(ctx.p, ctx.m) : ctx.modulus;
}

UnramifiedField::Coords to_coords(const std::vector<Rational>& c, const UnramifiedField& K) {
    UnramifiedField::Coords out = K.zero_coords();
    for (size_t j = 0; j < c.size() && j < out.size(); ++j) out[j] = residue(c[j], K.modulus_power());
    return out;
}

bool is_monic(const KPoly& g) {
    if (g.coeffs.empty()) return false;
    const auto& lead = g.coeffs.back();
    if (lead[0] != Rational(1)) return false;
    for (size_t j = 1; j < lead.size(); ++j)
        if (!lead[j].is_zero()) return false;
    return true;
}

struct ScaledKPoly {
    long s;
    KPoly poly;
};

ScaledKPoly scale_integral(const KPoly& g, long p) {
    if (!is_monic(g)) fail(ErrorKind::InvalidArgument, "oracle polynomials must be monic");
    long n = g.degree();
    long s = 0;
    for (long i = 0; i < n; ++i) {
        bool zero = false;
        long v = min_coord_valuation(g.coeffs[static_cast<size_t>(i)], p, zero);
        if (!zero && v < 0) s = std::max(s, (-v + (n - i) - 1) / (n - i));
    }
    KPoly h = g;
    for (long i = 0; i <= n; ++i)
        for (auto& c : h.coeffs[static_cast<size_t>(i)]) c *= Rational(p).pow(s * (n - i));
    return {s, h};
}

long rational_disc_valuation(const KPoly& g, long p) {
    if (!g.is_rational()) return 0;
    Rational d = discriminant(g.to_poly());
    if (d.is_zero()) fail(ErrorKind::RejectedInput, "polynomial " + g.to_string() + " has a repeated root");
    return std::max(0L, val_p_finite(d, p));
}

}  // namespace

Poly charpoly_of_element(const Poly& f, const Poly& h) {
    if (!f.is_monic()) fail(ErrorKind::InvalidArgument, "characteristic polynomial needs a monic modulus");
    long n = f.degree();
    Matrix a = multiplication_matrix(f, h);
    // Faddeev-LeVerrier
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[static_cast<size_t>(n)] = Rational(1);
    Matrix m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (long k = 1; k <= n; ++k) {
        m = matmul(a, m);
        for (long i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] += c[static_cast<size_t>(n - k + 1)];
        Matrix am = matmul(a, m);
        Rational tr(0);
        for (long i = 0; i < n; ++i) tr += am[static_cast<size_t>(i)][static_cast<size_t>(i)];
        c[static_cast<size_t>(n - k)] = -tr / Rational(k);
    }
    return Poly(std::move(c));
}

Valuation element_valuation(const Poly& f, const Poly& h, long p) {
    Poly chi = charpoly_of_element(f, h);
    Rational norm = chi.coeff(0);
    if (norm.is_zero()) return Valuation::infinity();
    return Valuation(val_p_finite(norm, p), f.degree());
}

FieldModel field_model(const Poly& input, long p) {
    require_prime(p);
    Poly f = input.monic();
    long n = f.degree();
    if (n < 2 || !is_prime(n)) fail(ErrorKind::Unsupported, "field models are built for prime degree only");
    Rational disc = discriminant(f);
    if (disc.is_zero()) fail(ErrorKind::RejectedInput, "polynomial has a repeated root");
    long limit = 64 + 8 * std::abs(val_p_finite(disc, p)) + 8 * n;

    auto checked_val = [&](const Rational& c) {
        Rational v = f.eval(c);
        if (v.is_zero()) fail(ErrorKind::RejectedInput, "polynomial has the rational root " + c.to_string());
        return val_p_finite(v, p);
    };

    Rational c(0);
    for (long iter = 0; iter < limit; ++iter) {
        long a = checked_val(c);
        if (mod_floor(a, n) != 0) {
            long s = inverse_mod(mod_floor(a, n), n);
            long t = (s * a - 1) / n;
            Poly delta = Poly({-c, Rational(1)});
            Poly h = (delta.pow(s).mod(f)) * Rational(p).pow(-t);
            Poly e = charpoly_of_element(f, h);
            auto k = is_k_eisenstein(e, p);
            if (!k || *k != 1)
                fail(ErrorKind::InternalInconsistency, "uniformizer polynomial " + e.to_string() + " is not Eisenstein");
            FieldModel out;
            out.kind = LocalRing::Kind::Ramified;
            out.model = KPoly::from_poly(e, 1);
            out.generator = h;
            out.center = c;
            return out;
        }
        long j = a / n;
        Rational pj = Rational(p).pow(j);
        bool moved = false;
        for (long d = 1; d < p; ++d) {
            Rational c2 = c + Rational(d) * pj;
            if (checked_val(c2) > a) {
                c = c2;
                moved = true;
                break;
            }
        }
        if (moved) continue;
        Poly u = f.substitute_linear(pj, c) * Rational(p).pow(-n * j);
        std::vector<long> red;
        for (const auto& coef : u.coeffs()) {
            if (!coef.is_zero() && val_p_finite(coef, p) < 0)
                fail(ErrorKind::InternalInconsistency, "unramified model is not integral");
            red.push_back(coef.is_zero() ? 0 : residue(coef, p));
        }
        if (!is_irreducible_mod_p(red, p))
            fail(ErrorKind::RejectedInput, "polynomial is reducible over Q_" + std::to_string(p));
        FieldModel out;
        out.kind = LocalRing::Kind::Unramified;
        out.model = KPoly::from_poly(u, 1);
        out.generator = Poly({-c / pj, Rational(1) / pj});
        out.center = c;
        return out;
    }
    fail(ErrorKind::InternalInconsistency, "approximation walk did not terminate");
}

FieldModel model_for(const KPoly& g, const OracleContext& ctx) {
    long p = ctx.p;
    if (!is_monic(g)) fail(ErrorKind::InvalidArgument, "oracle polynomials must be monic");
    long n = g.degree();
    bool integral = true;
    for (const auto& c : g.coeffs)
        for (const auto& x : c)
            if (!x.is_zero() && val_p_finite(x, p) < 0) integral = false;
    if (integral) {
        auto K = UnramifiedField::make(p, base_modulus(ctx), 2);
        const FiniteField& F = K->residue_field();
        std::vector<FiniteField::Elem> red;
        for (const auto& c : g.coeffs) red.push_back(K->residue(to_coords(c, *K)));
        bool eisenstein = true;
        for (long i = 0; i < n; ++i)
            if (!F.is_zero(red[static_cast<size_t>(i)])) eisenstein = false;
        if (eisenstein) {
            bool zero = false;
            long v0 = min_coord_valuation(g.coeffs[0], p, zero);
            if (!zero && v0 == 1) {
                FieldModel out;
                out.kind = LocalRing::Kind::Ramified;
                out.model = g;
                out.generator = Poly::x();
                return out;
            }
        }
        if (F.poly_is_irreducible(red)) {
            FieldModel out;
            out.kind = LocalRing::Kind::Unramified;
            out.model = g;
            out.generator = Poly::x();
            return out;
        }
    }
    if (!g.is_rational()) fail(ErrorKind::Unsupported, "no integral model for " + g.to_string());
    return field_model(g.to_poly(), p);
}

RootDecision root_in_model(const KPoly& g, const FieldModel& model, const OracleContext& ctx) {
    long p = ctx.p;
    ScaledKPoly sg = scale_integral(g, p);
    long start = 16 + 2 * g.degree() + rational_disc_valuation(sg.poly, p) + rational_disc_valuation(model.model, p);
    std::vector<long> mu = base_modulus(ctx);
    RootDecision out;
    for (long precision = start; precision <= ctx.max_precision; precision *= 2) {
        auto K = UnramifiedField::make(p, mu, precision);
        std::vector<UnramifiedField::Coords> ext;
        for (const auto& c : model.model.coeffs) ext.push_back(to_coords(c, *K));
        LocalRing ring(K, ext, model.kind);
        std::vector<LocalRing::Elem> coeffs;
        for (const auto& c : sg.poly.coeffs) coeffs.push_back(ring.from_base(to_coords(c, *K)));
        RootSearch res = find_root(ring, coeffs, 0);
        out.nodes += res.nodes;
        if (res.status == RootStatus::Inconclusive) continue;
        out.exists = res.status == RootStatus::Found;
        out.precision = precision;
        return out;
    }
    fail(ErrorKind::Inconclusive, "root search for " + g.to_string() + " undecided at precision " +
                                      std::to_string(ctx.max_precision));
}

RootDecision root_in_unramified_tower(const KPoly& g, const OracleContext& ctx, long degree) {
    if (!g.is_rational()) fail(ErrorKind::Unsupported, "tower search needs rational coefficients");
    OracleContext tower = ctx;
    tower.m = ctx.m * degree;
    tower.modulus = default_modulus(ctx.p, tower.m);
    FieldModel trivial;
    trivial.kind = LocalRing::Kind::Unramified;
    trivial.model = KPoly::from_poly(Poly::x(), tower.m);
    trivial.generator = Poly::x();
    return root_in_model(KPoly::from_poly(g.to_poly(), tower.m), trivial, tower);
}

IsomorphismVerdict oracle_isomorphic(const KPoly& f, const KPoly& g, const OracleContext& ctx) {
    IsomorphismVerdict out;
    if (f.degree() != g.degree()) return out;
    FieldModel mf = model_for(f, ctx);
    FieldModel mg = model_for(g, ctx);
    RootDecision fwd = root_in_model(f, mg, ctx);
    RootDecision bwd = root_in_model(g, mf, ctx);
    out.forward = fwd.exists;
    out.backward = bwd.exists;
    out.precision = std::max(fwd.precision, bwd.precision);
    if (out.forward != out.backward)
        fail(ErrorKind::InternalInconsistency, "oracle directions disagree for " + f.to_string() + " and " + g.to_string());
    out.isomorphic = out.forward;
    return out;
}

long oracle_class(const KPoly& f, const std::vector<FieldModel>& candidates, const OracleContext& ctx) {
    long found = -1;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].model.degree() != f.degree()) continue;
        if (!root_in_model(f, candidates[i], ctx).exists) continue;
        if (found >= 0)
            fail(ErrorKind::InternalInconsistency, f.to_string() + " has roots in two candidate fields");
        found = static_cast<long>(i);
    }
    if (found < 0) fail(ErrorKind::InternalInconsistency, f.to_string() + " has a root in no candidate field");
    return found;
}

QuotientElem::QuotientElem(Poly modulus, std::vector<PadicApprox> coords) : f_(std::move(modulus)), c_(std::move(coords)) {
    if (!f_.is_monic()) fail(ErrorKind::InvalidArgument, "quotient modulus must be monic");
    if (static_cast<long>(c_.size()) != f_.degree()) fail(ErrorKind::InvalidArgument, "wrong number of coordinates");
}

QuotientElem QuotientElem::from_poly(const Poly& modulus, const Poly& h, long p, long precision) {
    Poly r = h.mod(modulus);
    std::vector<PadicApprox> c;
    for (long i = 0; i < modulus.degree(); ++i) c.push_back(PadicApprox::from_rational(r.coeff(i), p, precision));
    return QuotientElem(modulus, std::move(c));
}

QuotientElem QuotientElem::operator+(const QuotientElem& o) const {
    std::vector<PadicApprox> c;
    for (size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] + o.c_[i]);
    return QuotientElem(f_, std::move(c));
}

QuotientElem QuotientElem::operator*(const QuotientElem& o) const {
    long n = f_.degree();
    long p = c_[0].p();
    long prec = c_[0].absolute_precision();
    for (const auto& x : c_) prec = std::min(prec, x.absolute_precision());
    for (const auto& x : o.c_) prec = std::min(prec, x.absolute_precision());
    std::vector<PadicApprox> t(static_cast<size_t>(2 * n - 1), PadicApprox::from_rational(Rational(0), p, prec + 64));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) t[static_cast<size_t>(i + j)] = t[static_cast<size_t>(i + j)] + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    for (long d = 2 * n - 2; d >= n; --d) {
        PadicApprox top = t[static_cast<size_t>(d)];
        for (long i = 0; i < n; ++i)
            t[static_cast<size_t>(d - n + i)] =
                t[static_cast<size_t>(d - n + i)] - top * PadicApprox::from_rational(f_.coeff(i), p, prec + 64);
    }
    t.resize(static_cast<size_t>(n), PadicApprox::from_rational(Rational(0), p, prec));
    return QuotientElem(f_, std::move(t));
}

std::string QuotientElem::to_string() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += " + ";
        out += "(" + c_[i].to_string() + ")";
        if (i == 1) out += "*t";
        if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out;
}

QuotientRoot find_root_in_quotient(const Poly& g_in, const Poly& f_in, long p, long digits) {
    Poly f = f_in.monic();
    Poly g = g_in.monic();
    OracleContext ctx;
    ctx.p = p;
    FieldModel model = field_model(f, p);
    ScaledKPoly sg = scale_integral(KPoly::from_poly(g, 1), p);
    long n = g.degree();
    long vdisc = rational_disc_valuation(sg.poly, p) + rational_disc_valuation(model.model, p);
    long e = model.kind == LocalRing::Kind::Ramified ? model.model.degree() : 1;
    long target = digits + n * sg.s + vdisc + 4;
    for (long precision = target + 8; precision <= 8 * (target + 8); precision *= 2) {
        LocalRing ring = LocalRing::over_qp(p, model.model.to_poly(), model.kind, precision);
        RootSearch res = find_root(ring, ring_coeffs(ring, sg.poly.to_poly()), e * target);
        if (res.status == RootStatus::NoRoot) fail(ErrorKind::NotApplicable, "no root of g in the field of f");
        if (res.status == RootStatus::Inconclusive || res.root_digits < e * target) continue;
        // map sum w_i y^i back through y = generator(theta)
        Poly acc;
        Poly ypow = Poly::from_ints({1});
        for (long i = 0; i < ring.k(); ++i) {
            acc += ypow * Rational((*res.root)[static_cast<size_t>(i)]);
            ypow = (ypow * model.generator).mod(f);
        }
        Poly rho = (acc * Rational(p).pow(-sg.s)).mod(f);
        Poly value = g.compose(rho).mod(f);
        Valuation residual = value.is_zero() ? Valuation::infinity() : element_valuation(f, value, p);
        if (residual < Valuation(digits))
            fail(ErrorKind::InternalInconsistency, "re-substituted root has residual valuation " + residual.to_string());
        return {QuotientElem::from_poly(f, rho, p, digits), rho, residual};
    }
    fail(ErrorKind::Inconclusive, "root witness not reached");
}

}  // namespace localext
