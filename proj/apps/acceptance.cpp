// Runs the acceptance criteria and prints one PASS/FAIL line for each.
#include "localext/corpus.hpp"
#include "localext/error.hpp"
#include "localext/oracle.hpp"
#include "localext/tame.hpp"
#include "localext/wild3.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

using namespace localext;

namespace {

// Pinned limits.
constexpr double kTableSeconds = 1.0;
constexpr double kWildSeconds = 600.0;
constexpr long kWildCount = 1000;
constexpr std::uint64_t kWildSeed = 42;
constexpr long kWildHeight = 729;
constexpr long kTameCount = 500;
constexpr long kTameHeight = 729;
constexpr long kEisensteinCount = 500;
constexpr long kInvarianceCount = 200;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

Poly P(std::initializer_list<long> c) {
    return Poly::from_ints(std::vector<long>(c));
}

OracleContext ctx_for(long p) {
    OracleContext c;
    c.p = p;
    return c;
}

struct ExpectedRow {
    Poly f;
    long exponent;
    const char* group;
    const char* inertia;
    const char* quadratic;
};

Outcome table_reproduction() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<ExpectedRow> rows = {
        {P({3, 3, 0, 1}), 3, "S3", "S3", "Q3(sqrt(-3))"},   {P({3, 6, 0, 1}), 3, "S3", "S3", "Q3(sqrt(3))"},
        {P({3, 0, 3, 1}), 4, "S3", "C3", "Q3(sqrt(-1))"},   {P({3, 0, -3, 1}), 4, "C3", "C3", "none"},
        {P({12, 0, -3, 1}), 4, "C3", "C3", "none"},         {P({21, 0, -3, 1}), 4, "C3", "C3", "none"},
        {P({3, 0, 0, 1}), 5, "S3", "S3", "Q3(sqrt(-3))"},   {P({12, 0, 0, 1}), 5, "S3", "S3", "Q3(sqrt(-3))"},
        {P({21, 0, 0, 1}), 5, "S3", "S3", "Q3(sqrt(-3))"},
    };
    std::set<std::string> ids;
    long bad = 0;
    for (const auto& row : rows) {
        Cubic3Result r = classify_cubic_q3(row.f);
        ids.insert(r.label.class_id());
        const auto& inv = r.invariants;
        if (r.canonical != row.f || inv.disc_exponent != row.exponent || inv.galois_group != row.group ||
            inv.inertia_group != row.inertia || inv.quadratic_subextension != row.quadratic)
            ++bad;
    }
    bool unram = classify_cubic_q3(P({1, -1, 0, 1})).label.kind == Cubic3Kind::Unramified;
    double s = seconds_since(t0);
    return {bad == 0 && ids.size() == 9 && unram && s < kTableSeconds,
            std::to_string(ids.size()) + " distinct labels, " + std::to_string(bad) + " row mismatches, x^3 - x + 1 " +
                (unram ? "unramified" : "misclassified") + ", " + fmt(s)};
}

Outcome wild_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    auto ctx = ctx_for(3);
    std::vector<FieldModel> models;
    for (const auto& l : cubic3_labels()) models.push_back(model_for(KPoly::from_poly(cubic3_canonical(l), 1), ctx));
    long agree = 0, inconclusive = 0, other = 0;
    std::set<std::string> seen;
    auto corpus = generate_corpus({3, 3, kWildCount, kWildSeed, kWildHeight});
    for (const auto& f : corpus) {
        try {
            Cubic3Result r = classify_cubic_q3(f);
            long idx = oracle_class(KPoly::from_poly(f, 1), models, ctx);
            if (cubic3_labels()[static_cast<size_t>(idx)] == r.label) ++agree;
            seen.insert(r.label.class_id());
        } catch (const Error& e) {
            (e.kind() == ErrorKind::Inconclusive ? inconclusive : other)++;
        }
    }
    double s = seconds_since(t0);
    long n = static_cast<long>(corpus.size());
    return {n == kWildCount && agree == n && inconclusive == 0 && s <= kWildSeconds,
            std::to_string(agree) + "/" + std::to_string(n) + " agree, " + std::to_string(inconclusive) +
                " inconclusive, " + std::to_string(other) + " errors, " + std::to_string(seen.size()) + " classes, " +
                fmt(s)};
}

const std::vector<std::pair<long, long>> kTamePairs = {{5, 3}, {7, 3}, {13, 3}, {7, 2}, {2, 3}};

std::vector<Poly> tame_corpus(long p, long q) {
    return generate_corpus({p, q, kTameCount, static_cast<std::uint64_t>(1000 * p + q), kTameHeight});
}

Outcome tame_oracle() {
    std::string detail;
    bool pass = true;
    for (auto [p, q] : kTamePairs) {
        auto K = TameField::make(p, 1);
        auto ctx = ctx_for(p);
        auto labels = tame_labels(K, q);
        std::vector<FieldModel> models;
        for (const auto& l : labels) models.push_back(model_for(tame_canonical(K, q, l), ctx));
        long agree = 0, failures = 0;
        std::set<std::string> seen;
        auto corpus = tame_corpus(p, q);
        for (const auto& f : corpus) {
            try {
                TameResult r = classify_tame_prime(f, K, q);
                long idx = oracle_class(KPoly::from_poly(f, 1), models, ctx);
                if (labels[static_cast<size_t>(idx)] == r.label) ++agree;
                seen.insert(r.label.class_id());
            } catch (const Error&) {
                ++failures;
            }
        }
        long expected = std::gcd(q, p - 1) + 1;
        long n = static_cast<long>(corpus.size());
        bool ok = n == kTameCount && agree == n && static_cast<long>(seen.size()) == expected;
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += "(" + std::to_string(p) + "," + std::to_string(q) + ") " + std::to_string(agree) + "/" +
                  std::to_string(n) + " " + std::to_string(seen.size()) + "/" + std::to_string(expected) + " classes";
        if (failures) detail += " " + std::to_string(failures) + " errors";
    }
    return {pass, detail};
}

Outcome tame_self_classification() {
    long checked = 0, bad = 0;
    for (auto [p, q] : std::vector<std::pair<long, long>>{{5, 2}, {5, 3}, {7, 2}, {7, 3}, {2, 3}, {13, 3}}) {
        auto K = TameField::make(p, 1);
        for (long r = 0; r < K.d(q); ++r) {
            long c = K.residue.pow(K.zeta, Integer(r))[0];
            std::vector<long> coeffs(static_cast<size_t>(q) + 1, 0);
            coeffs[0] = -c * p;
            coeffs.back() = 1;
            TameResult res = classify_tame_prime(Poly::from_ints(coeffs), K, q);
            ++checked;
            if (res.label.unramified || res.label.r != r) ++bad;
        }
    }
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " canonical polynomials"};
}

Outcome eisenstein_law() {
    std::mt19937_64 rng(5);
    auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    long checked = 0, bad = 0;
    while (checked < kEisensteinCount) {
        long p = uniform(0, 1) ? 5 : 7;
        long n = uniform(2, 6);
        if (n % p == 0) continue;  // the unit formula needs p not dividing n
        long k = uniform(1, 2 * n - 1);
        if (std::gcd(k, n) != 1) continue;
        auto unit = [&] {
            long u;
            do u = uniform(-3 * p, 3 * p); while (u % p == 0);
            return u;
        };
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        c.back() = Rational(unit());
        Rational w(unit());
        c[0] = w * Rational(ipow(p, static_cast<unsigned long>(k)));
        for (long j = 1; j < n; ++j) {
            // smallest integer valuation strictly above k (n - j) / n
            long lo = (k * (n - j)) / n + 1;
            long v = lo + uniform(0, 2);
            c[static_cast<size_t>(j)] = uniform(0, 3) ? Rational(uniform(-20, 20)) * Rational(ipow(p, static_cast<unsigned long>(v))) : Rational(0);
        }
        Poly h(c);
        ++checked;
        auto [v, u] = unit_part(discriminant(h), p);
        Rational an = c.back();
        Rational predicted = Rational(n).pow(n) * an.pow(n - 1) * w.pow(n - 1);
        if ((n * (n - 1) / 2) % 2) predicted = -predicted;
        if (v != k * (n - 1) || residue(u - predicted, p) != 0) ++bad;
    }
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " k-Eisenstein polynomials"};
}

Outcome unramified_equivalence() {
    long checked = 0, bad = 0;
    std::string detail;
    for (auto [p, q] : kTamePairs) {
        auto ctx = ctx_for(p);
        for (const auto& f : tame_corpus(p, q)) {
            long v = val_p_finite(discriminant(f.monic()), p);
            bool by_disc = mod_floor(v, q * (q - 1)) == 0;
            bool by_search = root_in_unramified_tower(KPoly::from_poly(f, 1), ctx, q).exists;
            ++checked;
            if (by_disc != by_search) ++bad;
        }
    }
    return {bad == 0, std::to_string(bad) + " mismatches over " + std::to_string(checked) + " polynomials"};
}

Outcome transformation_invariance() {
    std::mt19937_64 rng(77);
    auto corpus = generate_corpus({3, 3, kInvarianceCount, 4242, kWildHeight});
    long bad = 0;
    for (const auto& f : corpus) {
        long k = static_cast<long>(rng() % 5) - 2;
        long unit = 1 + static_cast<long>(rng() % 8);
        if (unit % 3 == 0) ++unit;
        if (rng() % 2) unit = -unit;
        Rational c = Rational(unit) * Rational(3).pow(k);
        Rational d(Integer(static_cast<long>(rng() % 61) - 30), Integer(1 + static_cast<long>(rng() % 9)));
        if (!(classify_cubic_q3(f).label == classify_cubic_q3(f.substitute_linear(c, d).monic()).label)) ++bad;
    }
    return {bad == 0 && static_cast<long>(corpus.size()) == kInvarianceCount,
            std::to_string(bad) + " mismatches over " + std::to_string(corpus.size()) + " substitutions"};
}

Outcome norm_witnesses() {
    long bad = 0;
    for (long tau : {1, 4, 7}) {
        Poly g = cubic3_canonical({Cubic3Kind::Galois, tau});
        if (norm_of_linear_shift(g, Rational(0)) != Rational(-3 * tau)) ++bad;
        Poly h = cubic3_canonical({Cubic3Kind::SqrtM3Tau, tau});
        QuadElem u = quad_unit_part(norm_of_quad_shift(h, QuadElem{0, 1}));
        if (!(u == QuadElem{tau, 1}) || reduced_class_rep_trivial(u)) ++bad;
    }
    return {bad == 0, std::to_string(6 - bad) + "/6 witnesses"};
}

Outcome shift_regression() {
    auto s = eisenstein_shift(P({5, 5, 1}), 5);
    bool ok = s.t == Rational(5, 2) && s.k == 1 && is_k_eisenstein(s.shifted, 5) == 1 &&
              s.shifted == Poly({Rational(-5, 4), 0, 1});
    return {ok, "t = " + s.t.to_string() + ", shifted " + s.shifted.to_string() +
                    ", not x^2 + 45/4"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"table reproduction", table_reproduction},
        {"wild oracle agreement", wild_oracle},
        {"tame oracle agreement", tame_oracle},
        {"canonical tame self-classification", tame_self_classification},
        {"Eisenstein discriminant law", eisenstein_law},
        {"unramified criterion equivalence", unramified_equivalence},
        {"transformation invariance", transformation_invariance},
        {"norm-group witnesses", norm_witnesses},
        {"Eisenstein shift regression", shift_regression},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const Error& e) {
            o = {false, std::string("error: ") + error_kind_name(e.kind()) + ": " + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
