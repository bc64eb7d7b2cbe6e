#include "localext/wild3.hpp"

#include "localext/error.hpp"
#include "localext/finite_field.hpp"
#include "localext/oracle.hpp"

namespace localext {

namespace {

Poly ints(std::initializer_list<long> c) {
    return Poly::from_ints(std::vector<long>(c));
}

long mod9(const Rational& x) {
    return residue(x, 9L);
}

bool integral_at_3(const Poly& f) {
    for (const auto& c : f.coeffs())
        if (!c.is_zero() && val_p_finite(c, 3) < 0) return false;
    return true;
}

std::vector<long> reduce_mod3(const Poly& f) {
    std::vector<long> out;
    for (const auto& c : f.coeffs()) out.push_back(residue(c, 3L));
    return out;
}

}  // namespace

std::string Cubic3Label::class_id() const {
    switch (kind) {
    case Cubic3Kind::Unramified: return "unramified";
    case Cubic3Kind::SqrtM1: return "sqrtm1";
    case Cubic3Kind::Sqrt3: return "sqrt3";
    case Cubic3Kind::Galois: return "galois-tau-" + std::to_string(tau);
    case Cubic3Kind::SqrtM3Wild: return "sqrtm3-wild";
    case Cubic3Kind::SqrtM3Tau: return "sqrtm3-tau-" + std::to_string(tau);
    }
    return "unknown";
}

const std::vector<Cubic3Label>& cubic3_labels() {
    static const std::vector<Cubic3Label> labels = {
        {Cubic3Kind::Unramified, 0}, {Cubic3Kind::SqrtM3Wild, 0}, {Cubic3Kind::Sqrt3, 0},
        {Cubic3Kind::SqrtM1, 0},     {Cubic3Kind::Galois, 1},     {Cubic3Kind::Galois, 4},
        {Cubic3Kind::Galois, 7},     {Cubic3Kind::SqrtM3Tau, 1},  {Cubic3Kind::SqrtM3Tau, 4},
        {Cubic3Kind::SqrtM3Tau, 7},
    };
    return labels;
}

Cubic3Label cubic3_label_from_id(const std::string& id) {
    for (const auto& l : cubic3_labels())
        if (l.class_id() == id) return l;
    fail(ErrorKind::InvalidArgument, "unknown cubic class id " + id);
}

Poly cubic3_canonical(const Cubic3Label& label) {
    switch (label.kind) {
    case Cubic3Kind::Unramified: return ints({1, -1, 0, 1});
    case Cubic3Kind::SqrtM1: return ints({3, 0, 3, 1});
    case Cubic3Kind::Sqrt3: return ints({3, 6, 0, 1});
    case Cubic3Kind::Galois: return ints({3 * label.tau, 0, -3, 1});
    case Cubic3Kind::SqrtM3Wild: return ints({3, 3, 0, 1});
    case Cubic3Kind::SqrtM3Tau: return ints({3 * label.tau, 0, 0, 1});
    }
    fail(ErrorKind::InvalidArgument, "bad label");
}

FieldInvariants cubic3_invariants(const Cubic3Label& label) {
    FieldInvariants inv;
    inv.e = 3;
    inv.f = 1;
    inv.galois = false;
    inv.galois_group = "S3";
    inv.inertia_group = "S3";
    switch (label.kind) {
    case Cubic3Kind::Unramified:
        inv.e = 1;
        inv.f = 3;
        inv.galois = true;
        inv.galois_group = "C3";
        inv.inertia_group = "1";
        inv.quadratic_subextension = "none";
        inv.disc_exponent = 0;
        break;
    case Cubic3Kind::SqrtM1:
        inv.inertia_group = "C3";
        inv.quadratic_subextension = "Q3(sqrt(-1))";
        inv.disc_exponent = 4;
        break;
    case Cubic3Kind::Sqrt3:
        inv.quadratic_subextension = "Q3(sqrt(3))";
        inv.disc_exponent = 3;
        break;
    case Cubic3Kind::Galois:
        inv.galois = true;
        inv.galois_group = "C3";
        inv.inertia_group = "C3";
        inv.quadratic_subextension = "none";
        inv.disc_exponent = 4;
        break;
    case Cubic3Kind::SqrtM3Wild:
        inv.quadratic_subextension = "Q3(sqrt(-3))";
        inv.disc_exponent = 3;
        break;
    case Cubic3Kind::SqrtM3Tau:
        inv.quadratic_subextension = "Q3(sqrt(-3))";
        inv.disc_exponent = 5;
        break;
    }
    return inv;
}

long tau_from_residue(long t) {
    switch (mod_floor(t, 9)) {
    case 1: case 8: return 1;
    case 4: case 5: return 4;
    case 2: case 7: return 7;
    default: fail(ErrorKind::InternalInconsistency, "t = " + std::to_string(t) + " mod 9 is not a unit");
    }
}

Rational galois_t(const Rational& alpha, const Rational& beta) {
    if (beta.is_zero()) fail(ErrorKind::InvalidArgument, "beta must be nonzero");
    auto [vb, u] = unit_part(beta, 3);
    switch (mod_floor(vb, 3)) {
    case 0: {
        if (alpha.is_zero()) fail(ErrorKind::InternalInconsistency, "3 | v(beta) with alpha = 0 is not Galois and wild");
        Rational w = unit_part(alpha, 3).unit;
        long u9 = mod9(u);
        if (u9 == 1) return w + (Rational(1) - u) / Rational(3);
        if (u9 == 8) return w + (Rational(1) + u) / Rational(3);
        fail(ErrorKind::InternalInconsistency, "3 | v(beta) needs u = +-1 mod 9, got " + std::to_string(u9));
    }
    case 1: return u;
    default: return u * u;
    }
}

NonGaloisCase nongalois_tau(const Rational& alpha, const Rational& beta) {
    if (beta.is_zero()) fail(ErrorKind::InvalidArgument, "beta must be nonzero");
    auto [vb, u] = unit_part(beta, 3);
    std::optional<long> r;
    Rational w;
    if (!alpha.is_zero()) {
        auto d = unit_part(alpha, 3);
        r = d.valuation;
        w = d.unit;
    }
    if (r && 3 * *r <= 2 * vb)
        fail(ErrorKind::RejectedInput, "Newton polygon of the depressed cubic is not a single segment of slope v(beta)/3");
    long m = floor_div(vb, 3);
    NonGaloisCase out;
    long cls = mod_floor(vb, 3);
    if (cls == 0) {
        out.case_id = "1";
        out.wild = true;
        return out;
    }
    if (cls == 2) {
        out.case_id = "2";
        Rational num(1);
        if (r) num += w * Rational(-3).pow(*r - 2 * m - 1);
        out.ratio = num / u;
    } else if (!r || *r > 2 * m + 1) {
        out.case_id = "3";
        Rational den(1);
        if (r) den -= Rational(3).pow(*r - 2 * m - 1) * w;
        out.ratio = u / den;
    } else {
        out.case_id = "4";
        out.wild = true;
        return out;
    }
    out.tau = tau_from_residue(mod9(*out.ratio));
    return out;
}

Cubic3Result classify_cubic_q3(const Poly& input) {
    if (input.degree() != 3) fail(ErrorKind::InvalidArgument, "expected a cubic");
    Poly f = input.monic();
    Cubic3Result out;
    Cubic3Certificate& cert = out.certificate;
    cert.irreducibility = certify_irreducible(f, 3);
    if (!cert.irreducibility.certificate)
        fail(ErrorKind::RejectedInput, "input is reducible over Q_3: " + cert.irreducibility.reason);
    const auto& ic = *cert.irreducibility.certificate;
    if (ic.kind == CertKind::Unverified) fail(ErrorKind::RejectedInput, "irreducibility over Q_3 could not be certified");

    cert.discriminant = discriminant(f);
    auto [v, u] = unit_part(cert.discriminant, 3);
    cert.disc_valuation = v;
    cert.disc_unit = u;
    cert.disc_unit_mod3 = residue(u, 3L);

    if (integral_at_3(f) && is_irreducible_mod_p(reduce_mod3(f), 3)) {
        cert.unramified_test = "residue-irreducible";
        cert.unramified = true;
    } else if (ic.kind == CertKind::EisensteinSegment) {
        cert.unramified_test = "eisenstein-segment";
    } else {
        cert.unramified_test = "tower-root-search";
        OracleContext ctx;
        ctx.p = 3;
        cert.unramified = root_in_unramified_tower(KPoly::from_poly(f, 1), ctx, 3).exists;
    }

    DepressedForm dep = depressed(f);
    cert.shift = dep.shift;
    cert.alpha_depressed = dep.poly.coeff(1);
    cert.beta_depressed = dep.poly.coeff(0);
    long vb0 = val_p_finite(cert.beta_depressed, 3);
    cert.scale = floor_div(vb0, 3);
    Rational s3 = Rational(3).pow(cert.scale);
    cert.alpha = cert.alpha_depressed / (s3 * s3);
    cert.beta = cert.beta_depressed / (s3 * s3 * s3);
    cert.v_beta = vb0 - 3 * cert.scale;
    cert.m = 0;
    cert.u = unit_part(cert.beta, 3).unit;
    if (!cert.alpha.is_zero()) {
        auto d = unit_part(cert.alpha, 3);
        cert.r = d.valuation;
        cert.w = d.unit;
    }

    Cubic3Label& label = out.label;
    if (cert.unramified) {
        cert.branch = "unramified";
        label.kind = Cubic3Kind::Unramified;
    } else {
        bool even = v % 2 == 0;
        bool one = cert.disc_unit_mod3 == 1;
        if (even && one) {
            cert.branch = "galois";
            cert.case_id = "v(beta) = " + std::to_string(cert.v_beta) + " mod 3";
            cert.t = galois_t(cert.alpha, cert.beta);
            cert.t_mod9 = mod9(*cert.t);
            label = {Cubic3Kind::Galois, tau_from_residue(*cert.t_mod9)};
        } else if (even) {
            cert.branch = "sqrtm1";
            label.kind = Cubic3Kind::SqrtM1;
        } else if (one) {
            cert.branch = "sqrt3";
            label.kind = Cubic3Kind::Sqrt3;
        } else {
            cert.branch = "sqrtm3";
            NonGaloisCase c = nongalois_tau(cert.alpha, cert.beta);
            cert.case_id = c.case_id;
            if (c.wild) {
                label.kind = Cubic3Kind::SqrtM3Wild;
            } else {
                cert.t = c.ratio;
                cert.t_mod9 = mod9(*c.ratio);
                label = {Cubic3Kind::SqrtM3Tau, c.tau};
            }
        }
    }
    out.canonical = cubic3_canonical(label);
    out.invariants = cubic3_invariants(label);
    return out;
}

std::string QuadElem::to_string() const {
    if (b.is_zero()) return a.to_string();
    std::string bs = b == Rational(1) ? "" : (b == Rational(-1) ? "-" : b.to_string() + "*");
    std::string tail = bs + "sqrt(-3)";
    if (a.is_zero()) return tail;
    if (b.sign() < 0) return a.to_string() + " - " + tail.substr(1);
    return a.to_string() + " + " + tail;
}

long quad_valuation(const QuadElem& x) {
    if (x.is_zero()) fail(ErrorKind::Domain, "valuation of zero");
    if (x.a.is_zero()) return 2 * val_p_finite(x.b, 3) + 1;
    if (x.b.is_zero()) return 2 * val_p_finite(x.a, 3);
    return std::min(2 * val_p_finite(x.a, 3), 2 * val_p_finite(x.b, 3) + 1);
}

QuadElem quad_unit_part(const QuadElem& x) {
    long k = quad_valuation(x);
    QuadElem y = x;
    // divide by (sqrt(-3))^2 = -3 in one step, then by sqrt(-3) once if needed
    Rational scale = Rational(-3).pow(floor_div(k, 2));
    y.a /= scale;
    y.b /= scale;
    if (mod_floor(k, 2) == 1) y = QuadElem{y.b, -y.a / Rational(3)};
    return y;
}

bool is_cube_quad(const QuadElem& x) {
    if (x.is_zero()) fail(ErrorKind::Domain, "cube test of zero");
    if (mod_floor(quad_valuation(x), 3) != 0) return false;
    QuadElem u = quad_unit_part(x);
    long a = mod9(u.a);
    return (a == 1 || a == 8) && mod9(u.b) == 0;
}

bool reduced_class_rep_trivial(const QuadElem& x) {
    if (x.is_zero() || quad_valuation(x) != 0) fail(ErrorKind::Domain, "expected a sqrt(-3)-adic unit");
    return mod9(x.b) == 0;
}

std::vector<QuadElem> canonical_norm_group_reps(const Cubic3Label& label) {
    Rational t(label.tau);
    switch (label.kind) {
    case Cubic3Kind::Galois: return {{1, 0}, {Rational(3) * t, 0}, {Rational(9) * t * t, 0}};
    case Cubic3Kind::SqrtM3Tau: return {{1, 0}, {t, 1}, {t * t - Rational(3), Rational(2) * t}};
    case Cubic3Kind::SqrtM3Wild: {
        QuadElem s{0, 1};
        QuadElem s3 = s * s * s;
        return {{1, 0}, QuadElem{1, 0} + s3, QuadElem{1, 0} + QuadElem{2, 0} * s3};
    }
    default: fail(ErrorKind::NotApplicable, "no norm group representatives for " + label.class_id());
    }
}

QuadElem norm_of_quad_shift(const Poly& f, const QuadElem& lambda) {
    if (f.degree() != 3 || !f.is_monic()) fail(ErrorKind::InvalidArgument, "expected a monic cubic");
    QuadElem x{-lambda.a, -lambda.b};
    QuadElem acc{0, 0};
    for (long i = 3; i >= 0; --i) acc = acc * x + QuadElem{f.coeff(i), 0};
    return QuadElem{-acc.a, -acc.b};
}

}  // namespace localext
