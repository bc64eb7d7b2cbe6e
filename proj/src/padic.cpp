#include "localext/padic.hpp"

#include "localext/error.hpp"

#include <algorithm>

namespace localext {

namespace {

void mod_in_place(Integer& a, const Integer& n) {
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
}

}  // namespace

// ---------------------------------------------------------------- PadicApprox

PadicApprox::PadicApprox(long p, long precision, Integer mantissa, long denominator_exponent)
    : p_(p), n_(precision), mantissa_(std::move(mantissa)), s_(denominator_exponent) {
    require_prime(p);
    if (s_ < 0) fail(ErrorKind::InvalidArgument, "negative denominator exponent");
    if (n_ < 0) n_ = 0;
    normalize();
}

void PadicApprox::normalize() {
    mod_in_place(mantissa_, ipow(p_, static_cast<unsigned long>(n_)));
    while (s_ > 0 && n_ > 0 && mantissa_ % p_ == 0) {
        mantissa_ /= p_;
        --s_;
        --n_;
    }
    if (mantissa_ == 0) {
        // zero carries only its absolute precision
        n_ = std::max(0L, n_ - s_);
        s_ = 0;
    }
}

PadicApprox PadicApprox::from_rational(const Rational& x, long p, long abs_precision) {
    require_prime(p);
    if (x.is_zero()) return PadicApprox(p, std::max(0L, abs_precision), 0, 0);
    long v = val_p_finite(x, p);
    long s = std::max(0L, -v);
    long n = abs_precision + s;
    if (n <= 0) return PadicApprox(p, std::max(0L, abs_precision), 0, 0);
    Rational scaled = x * Rational(p).pow(s);
    return PadicApprox(p, n, residue(scaled, ipow(p, static_cast<unsigned long>(n))), s);
}

std::optional<long> PadicApprox::valuation() const {
    if (mantissa_ == 0) return std::nullopt;
    return val_p(mantissa_, p_) - s_;
}

Rational PadicApprox::to_rational() const {
    return Rational(mantissa_, ipow(p_, static_cast<unsigned long>(s_)));
}

bool PadicApprox::agrees_with(const PadicApprox& o) const {
    if (o.p_ != p_) fail(ErrorKind::InvalidArgument, "p-adic numbers over different primes");
    long a = std::min(absolute_precision(), o.absolute_precision());
    Rational d = to_rational() - o.to_rational();
    if (d.is_zero()) return true;
    return val_p_finite(d, p_) >= a;
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    if (o.p_ != p_) fail(ErrorKind::InvalidArgument, "p-adic numbers over different primes");
    long s = std::max(s_, o.s_);
    long a = std::min(absolute_precision(), o.absolute_precision());
    Integer m = mantissa_ * ipow(p_, static_cast<unsigned long>(s - s_)) +
                o.mantissa_ * ipow(p_, static_cast<unsigned long>(s - o.s_));
    if (a + s <= 0) return PadicApprox(p_, std::max(0L, a), 0, 0);
    return PadicApprox(p_, a + s, m, s);
}

PadicApprox PadicApprox::operator-() const {
    return PadicApprox(p_, n_, -mantissa_, s_);
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const {
    return *this + (-o);
}

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    if (o.p_ != p_) fail(ErrorKind::InvalidArgument, "p-adic numbers over different primes");
    long vx = valuation().value_or(absolute_precision());
    long vy = o.valuation().value_or(o.absolute_precision());
    long a = std::min(absolute_precision() + vy, o.absolute_precision() + vx);
    long s = s_ + o.s_;
    if (a + s <= 0) return PadicApprox(p_, std::max(0L, a), 0, 0);
    return PadicApprox(p_, a + s, mantissa_ * o.mantissa_, s);
}

std::string PadicApprox::to_string() const {
    std::string out = mantissa_.get_str();
    if (s_ > 0) out += "/" + std::to_string(p_) + "^" + std::to_string(s_);
    return out + " + O(" + std::to_string(p_) + "^" + std::to_string(absolute_precision()) + ")";
}

// ------------------------------------------------------------ UnramifiedField

UnramifiedField::UnramifiedField(long p, std::vector<long> modulus, long precision)
    : p_(p), n_(precision), mu_(std::move(modulus)), residue_(p, mu_) {
    if (precision < 1) fail(ErrorKind::InvalidArgument, "precision must be positive");
    m_ = static_cast<long>(mu_.size()) - 1;
    pn_ = ipow(p, static_cast<unsigned long>(precision));
}

std::shared_ptr<const UnramifiedField> UnramifiedField::make(long p, std::vector<long> modulus, long precision) {
    require_prime(p);
    for (size_t i = 0; i + 1 < modulus.size(); ++i) modulus[i] = mod_floor(modulus[i], p);
    return std::shared_ptr<const UnramifiedField>(new UnramifiedField(p, std::move(modulus), precision));
}

std::shared_ptr<const UnramifiedField> UnramifiedField::standard(long p, long m, long precision) {
    return make(p, default_modulus(p, m), precision);
}

std::shared_ptr<const UnramifiedField> UnramifiedField::with_precision(long precision) const {
    return make(p_, mu_, precision);
}

UnramifiedField::Coords UnramifiedField::reduce(Coords a) const {
    if (static_cast<long>(a.size()) > m_) {
        for (long k = static_cast<long>(a.size()) - 1; k >= m_; --k) {
            Integer c = a[static_cast<size_t>(k)];
            if (c == 0) continue;
            for (long j = 0; j < m_; ++j) a[static_cast<size_t>(k - m_ + j)] -= c * mu_[static_cast<size_t>(j)];
        }
    }
    a.resize(static_cast<size_t>(m_), Integer(0));
    for (auto& c : a) mod_in_place(c, pn_);
    return a;
}

UnramifiedField::Coords UnramifiedField::add(const Coords& a, const Coords& b) const {
    Coords r(static_cast<size_t>(m_));
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= pn_) r[i] -= pn_;
    }
    return r;
}

UnramifiedField::Coords UnramifiedField::sub(const Coords& a, const Coords& b) const {
    Coords r(static_cast<size_t>(m_));
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) r[i] += pn_;
    }
    return r;
}

UnramifiedField::Coords UnramifiedField::mul(const Coords& a, const Coords& b) const {
    if (m_ == 1) {
        Coords r{a[0] * b[0]};
        mod_in_place(r[0], pn_);
        return r;
    }
    Coords t(static_cast<size_t>(2 * m_ - 1), Integer(0));
    for (long i = 0; i < m_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < m_; ++j) t[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return reduce(std::move(t));
}

UnramifiedField::Coords UnramifiedField::scale(const Coords& a, const Integer& c) const {
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * c;
        mod_in_place(r[i], pn_);
    }
    return r;
}

UnramifiedField::Coords UnramifiedField::from_rational(const Rational& x) const {
    Coords r = zero_coords();
    r[0] = localext::residue(x, pn_);
    return r;
}

bool UnramifiedField::is_zero(const Coords& a) const {
    return std::all_of(a.begin(), a.end(), [](const Integer& c) { return c == 0; });
}

std::optional<long> UnramifiedField::valuation(const Coords& a) const {
    std::optional<long> best;
    for (const auto& c : a) {
        if (c == 0) continue;
        long v = val_p(c, p_);
        if (!best || v < *best) best = v;
    }
    return best;
}

FiniteField::Elem UnramifiedField::residue(const Coords& a) const {
    FiniteField::Elem r(static_cast<size_t>(m_));
    for (long i = 0; i < m_; ++i) {
        Integer t;
        mpz_fdiv_r_ui(t.get_mpz_t(), a[static_cast<size_t>(i)].get_mpz_t(), static_cast<unsigned long>(p_));
        r[static_cast<size_t>(i)] = t.get_si();
    }
    return r;
}

UnramifiedField::Coords UnramifiedField::lift(const FiniteField::Elem& a) const {
    Coords r(static_cast<size_t>(m_));
    for (long i = 0; i < m_; ++i) r[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
    return r;
}

UnramifiedField::Coords UnramifiedField::inverse(const Coords& a) const {
    FiniteField::Elem r = residue(a);
    if (residue_.is_zero(r)) fail(ErrorKind::NoInverse, "element is not a unit");
    Coords x = lift(residue_.inv(r));
    Coords two = zero_coords();
    two[0] = 2;
    // x <- x (2 - a x) doubles the number of correct digits
    for (long prec = 1; prec < n_; prec *= 2) x = mul(x, sub(two, mul(a, x)));
    return x;
}

UnramElem UnramifiedField::element(Coords c) const {
    return UnramElem(shared_from_this(), reduce(std::move(c)));
}

UnramElem UnramifiedField::element(const Rational& x) const {
    return UnramElem(shared_from_this(), from_rational(x));
}

UnramElem UnramifiedField::zero() const {
    return UnramElem(shared_from_this(), zero_coords());
}

UnramElem UnramifiedField::one() const {
    return element(Rational(1));
}

// ------------------------------------------------------------------ UnramElem

UnramElem::UnramElem(std::shared_ptr<const UnramifiedField> field, UnramifiedField::Coords c)
    : field_(std::move(field)), c_(std::move(c)) {}

UnramElem UnramElem::operator+(const UnramElem& o) const {
    return UnramElem(field_, field_->add(c_, o.c_));
}

UnramElem UnramElem::operator-(const UnramElem& o) const {
    return UnramElem(field_, field_->sub(c_, o.c_));
}

UnramElem UnramElem::operator*(const UnramElem& o) const {
    return UnramElem(field_, field_->mul(c_, o.c_));
}

UnramElem UnramElem::operator-() const {
    return UnramElem(field_, field_->sub(field_->zero_coords(), c_));
}

UnramElem UnramElem::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    UnramifiedField::Coords r = field_->one().coords();
    UnramifiedField::Coords b = c_;
    size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = field_->mul(r, b);
        b = field_->mul(b, b);
    }
    return UnramElem(field_, r);
}

UnramElem UnramElem::inverse() const {
    return UnramElem(field_, field_->inverse(c_));
}

std::string UnramElem::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += c_[i].get_str();
    }
    return out + "]";
}

// ------------------------------------------------------------- roots of unity

TeichmullerGen teichmuller_generator(const std::shared_ptr<const UnramifiedField>& field) {
    const FiniteField& res = field->residue_field();
    FiniteField::Elem g = res.canonical_generator();
    Integer q(static_cast<unsigned long>(res.size()));
    // Newton on x^(q-1) - 1; the derivative (q-1) x^(q-2) is a unit
    UnramElem z = field->element(field->lift(g));
    UnramElem one = field->one();
    UnramElem qm1 = field->element(Rational(Integer(q - 1)));
    for (long prec = 1; prec < field->precision(); prec *= 2) {
        UnramElem num = z.pow(q - 1) - one;
        UnramElem den = qm1 * z.pow(q - 2);
        z = z - num * den.inverse();
    }
    if (!(z.pow(q - 1) == one))
        fail(ErrorKind::InternalInconsistency, "Teichmuller lift failed to converge");
    return {g, z};
}

bool qth_power_residue(const FiniteField& field, const FiniteField::Elem& u, long q) {
    if (field.is_zero(u)) fail(ErrorKind::Domain, "q-th power test needs a unit");
    Integer order(static_cast<unsigned long>(field.size() - 1));
    Integer d;
    mpz_gcd_ui(d.get_mpz_t(), order.get_mpz_t(), static_cast<unsigned long>(q));
    return field.pow(u, order / d) == field.one();
}

bool qth_power_residue(const UnramElem& u, long q) {
    if (u.field().p() == q) fail(ErrorKind::Domain, "residue test is only decisive for q != p");
    return qth_power_residue(u.field().residue_field(), u.residue(), q);
}

// ------------------------------------------------------------------- Hensel

UnramElem hensel_lift_root(const std::vector<UnramElem>& f, const UnramElem& a0, long precision) {
    if (f.empty()) fail(ErrorKind::InvalidArgument, "empty polynomial");
    const UnramifiedField& base = a0.field();
    auto eval = [](const std::vector<UnramElem>& g, const UnramElem& x) {
        UnramElem acc = x.field().zero();
        for (auto it = g.rbegin(); it != g.rend(); ++it)
            acc = acc * x + x.field().element(it->coords());
        return acc;
    };
    std::vector<UnramElem> df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * base.element(Rational(static_cast<long>(i))));

    auto fx = eval(f, a0);
    auto dfx = df.empty() ? base.zero() : eval(df, a0);
    auto vf = fx.valuation();
    auto vd = dfx.valuation();
    if (!vd) fail(ErrorKind::NoLift, "derivative vanishes at the seed");
    if (vf && *vf <= 2 * *vd) fail(ErrorKind::NoLift, "seed does not satisfy v(f(a)) > 2 v(f'(a))");
    long k = *vd;

    auto work = base.with_precision(precision + 2 * k + 2);
    std::vector<UnramElem> fw, dw;
    for (const auto& c : f) fw.push_back(work->element(c.coords()));
    for (const auto& c : df) dw.push_back(work->element(c.coords()));
    UnramElem a = work->element(a0.coords());
    Integer pk = ipow(base.p(), static_cast<unsigned long>(k));
    for (int iter = 0; iter < 200; ++iter) {
        UnramElem val = eval(fw, a);
        auto v = val.valuation();
        if (!v || *v >= precision + k) break;
        UnramElem der = eval(dw, a);
        UnramifiedField::Coords unit = der.coords();
        for (auto& c : unit) c /= pk;
        UnramifiedField::Coords num = val.coords();
        for (auto& c : num) c /= pk;
        a = a - work->element(num) * work->element(unit).inverse();
    }
    UnramElem out = base.with_precision(precision)->element(a.coords());
    auto check = eval(f, base.element(out.coords()));
    auto vc = check.valuation();
    if (vc && *vc < std::min(precision, base.precision()))
        fail(ErrorKind::InternalInconsistency, "Hensel iteration did not converge");
    return out;
}

PadicApprox hensel_lift_root(const Poly& f, long p, const Rational& a0, long precision) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial");
    for (const auto& c : f.coeffs())
        if (!c.is_zero() && val_p_finite(c, p) < 0)
            fail(ErrorKind::InvalidArgument, "Hensel lifting needs p-integral coefficients");
    if (!a0.is_zero() && val_p_finite(a0, p) < 0) fail(ErrorKind::InvalidArgument, "seed must be p-integral");
    long slack = 0;
    Rational d = f.derivative().eval(a0);
    if (!d.is_zero()) slack = val_p_finite(d, p);
    auto field = UnramifiedField::make(p, {0, 1}, precision + 2 * slack + 2);
    std::vector<UnramElem> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(field->element(c));
    UnramElem root = hensel_lift_root(coeffs, field->element(a0), precision);
    return PadicApprox(p, precision, root.coords()[0], 0);
}

// ------------------------------------------------------------ modulus table

const std::vector<ModulusEntry>& modulus_table() {
    static const std::vector<ModulusEntry> table = {
#include "modulus_table.inc"
    };
    return table;
}

std::vector<long> default_modulus(long p, long m) {
    require_prime(p);
    if (m < 1) fail(ErrorKind::InvalidArgument, "degree must be positive");
    if (m == 1) return {0, 1};
    for (const auto& e : modulus_table())
        if (e.p == p && e.m == m) return e.modulus;
    return smallest_irreducible_mod_p(p, m);
}

}  // namespace localext
