#include "localext/corpus.hpp"
#include "localext/error.hpp"
#include "localext/oracle.hpp"
#include "localext/parse.hpp"
#include "localext/tame.hpp"
#include "localext/wild3.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace localext;

namespace {

constexpr int kExitUsage = 1;

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::RejectedInput: return 2;
    case ErrorKind::Unsupported: return 3;
    case ErrorKind::InternalInconsistency: return 4;
    case ErrorKind::Inconclusive: return 5;
    default: return kExitUsage;
    }
}

std::string str(long v) {
    return std::to_string(v);
}

std::string str(const Rational& v) {
    return v.to_string();
}

json coords(const std::vector<long>& v) {
    json a = json::array();
    for (long x : v) a.push_back(str(x));
    return a;
}

json invariants_json(const FieldInvariants& inv) {
    return {{"e", str(inv.e)},
            {"f", str(inv.f)},
            {"galois", inv.galois},
            {"galois_group", inv.galois_group},
            {"inertia_group", inv.inertia_group},
            {"disc_valuation", str(inv.disc_exponent)},
            {"quadratic_subextension", inv.quadratic_subextension}};
}

json irreducibility_json(const Certification& c) {
    json j;
    const auto& ic = *c.certificate;
    j["kind"] = cert_kind_name(ic.kind);
    j["detail"] = ic.detail;
    if (ic.shift) j["shift"] = str(*ic.shift);
    if (ic.slope) j["slope"] = str(*ic.slope);
    if (ic.precision) j["precision"] = str(ic.precision);
    return j;
}

json wild_certificate(const Cubic3Certificate& c) {
    json j;
    j["irreducibility"] = irreducibility_json(c.irreducibility);
    j["unramified_test"] = c.unramified_test;
    j["discriminant"] = str(c.discriminant);
    j["disc_valuation"] = str(c.disc_valuation);
    j["disc_unit"] = str(c.disc_unit);
    j["disc_unit_mod3"] = str(c.disc_unit_mod3);
    j["branch"] = c.branch;
    if (c.unramified) return j;
    j["shift"] = str(c.shift);
    j["alpha_depressed"] = str(c.alpha_depressed);
    j["beta_depressed"] = str(c.beta_depressed);
    j["scale"] = str(c.scale);
    j["alpha"] = str(c.alpha);
    j["beta"] = str(c.beta);
    j["v_beta"] = str(c.v_beta);
    j["m"] = str(c.m);
    j["r"] = c.r ? str(*c.r) : "inf";
    j["u"] = str(c.u);
    j["w"] = str(c.w);
    if (!c.case_id.empty()) j["case"] = c.case_id;
    if (c.t) j["t"] = str(*c.t);
    if (c.t_mod9) j["t_mod9"] = str(*c.t_mod9);
    return j;
}

json tame_certificate(const TameCertificate& c, const TameField& K) {
    json j;
    j["irreducibility"] = irreducibility_json(c.irreducibility);
    j["discriminant"] = str(c.discriminant);
    j["disc_valuation"] = str(c.disc_valuation);
    j["disc_unit"] = str(c.unit);
    j["d"] = str(c.d);
    j["zeta"] = {{"residue", coords(K.zeta)}, {"modulus", coords(K.modulus)}};
    if (c.transcript.empty()) return j;
    j["ell"] = str(c.ell);
    j["negated"] = c.negated;
    json t = json::array();
    for (const auto& s : c.transcript)
        t.push_back({{"r", str(s.r)}, {"value", coords(s.value)}, {"is_power", s.is_power}});
    j["transcript"] = t;
    return j;
}

struct Settings {
    long p = 3;
    long m = 1;
    bool oracle_check = false;
    long precision = 2048;
};

struct Classified {
    json doc;
    KPoly input;
    KPoly canonical;
};

Classified classify_poly(const std::string& text, const Settings& s) {
    Poly f = parse_poly(text);
    Classified out;
    json& d = out.doc;
    long n = f.degree();
    d["input"] = text;
    d["polynomial"] = f.to_string();
    d["p"] = str(s.p);
    d["m"] = str(s.m);
    d["degree"] = str(n);
    d["depressed"] = depressed(f).poly.to_string();
    require_prime(s.p);
    OracleContext ctx;
    ctx.p = s.p;
    ctx.m = s.m;
    ctx.max_precision = s.precision;
    if (s.p == 3 && n == 3) {
        if (s.m != 1) fail(ErrorKind::Unsupported, "wild cubics are classified over Q_3 only");
        Cubic3Result r = classify_cubic_q3(f);
        d["module"] = "wild3";
        d["class_id"] = r.label.class_id();
        if (r.label.kind == Cubic3Kind::Galois || r.label.kind == Cubic3Kind::SqrtM3Tau) d["tau"] = str(r.label.tau);
        d["canonical"] = r.canonical.to_string();
        d["invariants"] = invariants_json(r.invariants);
        d["certificate"] = wild_certificate(r.certificate);
        out.canonical = KPoly::from_poly(r.canonical, 1);
    } else if (is_prime(n) && n != s.p) {
        TameField K = TameField::make(s.p, s.m);
        ctx.modulus = K.modulus;
        TameResult r = classify_tame_prime(f, K, n);
        d["module"] = "tame";
        d["class_id"] = r.label.class_id();
        if (!r.label.unramified) d["r"] = str(r.label.r);
        d["canonical"] = r.canonical.to_string();
        d["invariants"] = invariants_json(r.invariants);
        d["certificate"] = tame_certificate(r.certificate, K);
        out.canonical = r.canonical;
    } else {
        fail(ErrorKind::Unsupported, "no classifier for degree " + str(n) + " over Q_" + str(s.p));
    }
    out.input = KPoly::from_poly(f, s.m);
    d["oracle_checked"] = false;
    if (s.oracle_check) {
        auto v = oracle_isomorphic(out.input, out.canonical, ctx);
        d["oracle_checked"] = true;
        d["oracle"] = {{"isomorphic", v.isomorphic}, {"precision", str(v.precision)}};
        if (!v.isomorphic)
            fail(ErrorKind::InternalInconsistency, "oracle finds the input not isomorphic to its canonical polynomial");
    }
    return out;
}

json error_doc(const std::string& text, const Error& e) {
    return {{"input", text}, {"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
}

std::string human(const json& d, bool certificate) {
    std::ostringstream o;
    if (d.contains("error")) {
        o << d["input"].get<std::string>() << ": " << d["error"]["kind"].get<std::string>() << ": "
          << d["error"]["message"].get<std::string>() << "\n";
        return o.str();
    }
    const json& inv = d["invariants"];
    o << d["polynomial"].get<std::string>() << " over " << (d["m"] == "1" ? "Q_" + d["p"].get<std::string>() : "K")
      << ": " << d["class_id"].get<std::string>() << ", canonical " << d["canonical"].get<std::string>() << "\n"
      << "  e=" << inv["e"].get<std::string>() << " f=" << inv["f"].get<std::string>()
      << " group=" << inv["galois_group"].get<std::string>() << " inertia=" << inv["inertia_group"].get<std::string>()
      << " disc exponent=" << inv["disc_valuation"].get<std::string>()
      << " quadratic=" << inv["quadratic_subextension"].get<std::string>() << "\n";
    if (d["oracle_checked"].get<bool>())
        o << "  oracle: isomorphic at precision " << d["oracle"]["precision"].get<std::string>() << "\n";
    if (certificate) o << "  certificate: " << d["certificate"].dump() << "\n";
    return o.str();
}

std::vector<std::string> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(a, b - a + 1));
    }
    return out;
}

int run_classify(const Settings& s, const std::string& poly, const std::string& file, bool as_json, bool certificate) {
    std::vector<std::string> inputs = file.empty() ? std::vector<std::string>{poly} : read_batch(file);
    json all = json::array();
    int code = 0;
    for (const auto& text : inputs) {
        json d;
        try {
            d = classify_poly(text, s).doc;
        } catch (const Error& e) {
            d = error_doc(text, e);
            code = std::max(code, exit_code(e.kind()));
        }
        if (as_json) all.push_back(d);
        else std::cout << human(d, certificate);
    }
    if (as_json) std::cout << (file.empty() ? all[0] : all).dump(2) << "\n";
    return code;
}

struct TableRow {
    std::string polynomial, exponent, group, inertia, quadratic;
};

// Expected rows, in the order of the published table.
const std::vector<TableRow>& expected_table() {
    static const std::vector<TableRow> rows = {
        {"x^3 + 3*x + 3", "3", "S3", "S3", "Q3(sqrt(-3))"},
        {"x^3 + 6*x + 3", "3", "S3", "S3", "Q3(sqrt(3))"},
        {"x^3 + 3*x^2 + 3", "4", "S3", "C3", "Q3(sqrt(-1))"},
        {"x^3 - 3*x^2 + 3", "4", "C3", "C3", "none"},
        {"x^3 - 3*x^2 + 12", "4", "C3", "C3", "none"},
        {"x^3 - 3*x^2 + 21", "4", "C3", "C3", "none"},
        {"x^3 + 3", "5", "S3", "S3", "Q3(sqrt(-3))"},
        {"x^3 + 12", "5", "S3", "S3", "Q3(sqrt(-3))"},
        {"x^3 + 21", "5", "S3", "S3", "Q3(sqrt(-3))"},
    };
    return rows;
}

int run_table(long p, bool as_json) {
    if (p != 3) fail(ErrorKind::Unsupported, "the table is only available for p = 3");
    json rows = json::array();
    bool ok = true;
    for (const auto& want : expected_table()) {
        Cubic3Result r = classify_cubic_q3(parse_poly(want.polynomial));
        TableRow got{r.canonical.to_string(), str(r.invariants.disc_exponent), r.invariants.galois_group,
                     r.invariants.inertia_group, r.invariants.quadratic_subextension};
        bool match = got.polynomial == want.polynomial && got.exponent == want.exponent && got.group == want.group &&
                     got.inertia == want.inertia && got.quadratic == want.quadratic;
        if (!match) {
            ok = false;
            std::cerr << "mismatch for " << want.polynomial << ": got " << got.polynomial << " " << got.exponent << " "
                      << got.group << " " << got.inertia << " " << got.quadratic << "\n";
        }
        rows.push_back({{"polynomial", got.polynomial},
                        {"class_id", r.label.class_id()},
                        {"ramification_exponent", got.exponent},
                        {"galois_group", got.group},
                        {"inertia_group", got.inertia},
                        {"quadratic_subextension", got.quadratic}});
    }
    if (as_json) {
        std::cout << rows.dump(2) << "\n";
    } else {
        std::printf("%-18s %-9s %-6s %-8s %s\n", "polynomial", "exponent", "group", "inertia", "quadratic");
        for (const auto& r : rows)
            std::printf("%-18s %-9s %-6s %-8s %s\n", r["polynomial"].get<std::string>().c_str(),
                        r["ramification_exponent"].get<std::string>().c_str(), r["galois_group"].get<std::string>().c_str(),
                        r["inertia_group"].get<std::string>().c_str(), r["quadratic_subextension"].get<std::string>().c_str());
    }
    return ok ? 0 : 4;
}

int run_verify(const Settings& s, CorpusOptions opts, bool as_json) {
    opts.p = s.p;
    long expected;
    if (s.p == 3 && opts.degree == 3) {
        expected = static_cast<long>(cubic3_labels().size());
    } else if (is_prime(opts.degree) && opts.degree != s.p) {
        TameField K = TameField::make(s.p, s.m);
        expected = K.d(opts.degree) + (s.m % opts.degree == 0 ? 0 : 1);
    } else {
        fail(ErrorKind::Unsupported, "no classifier for degree " + str(opts.degree) + " over Q_" + str(s.p));
    }
    Settings checked = s;
    checked.oracle_check = true;
    std::map<std::string, long> histogram;
    long agree = 0, total = 0;
    std::vector<std::pair<std::string, std::string>> problems;
    int code = 0;
    for (const Poly& f : generate_corpus(opts)) {
        ++total;
        std::string text = f.to_string();
        try {
            Classified c = classify_poly(text, checked);
            ++agree;
            ++histogram[c.doc["class_id"].get<std::string>()];
        } catch (const Error& e) {
            problems.emplace_back(text, std::string(error_kind_name(e.kind())) + ": " + e.what());
            code = std::max(code, exit_code(e.kind()));
        }
    }
    bool classes_ok = static_cast<long>(histogram.size()) == expected;
    if (code == 0 && !classes_ok) code = 4;
    if (as_json) {
        json h = json::object();
        for (const auto& [k, v] : histogram) h[k] = str(v);
        json pr = json::array();
        for (const auto& [t, m] : problems) pr.push_back({{"input", t}, {"problem", m}});
        std::cout << json{{"p", str(s.p)},
                          {"m", str(s.m)},
                          {"degree", str(opts.degree)},
                          {"count", str(total)},
                          {"agreement", str(agree)},
                          {"classes_observed", str(static_cast<long>(histogram.size()))},
                          {"classes_expected", str(expected)},
                          {"histogram", h},
                          {"problems", pr}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "agreement " << agree << "/" << total << ", " << histogram.size() << " classes observed ("
                  << expected << " expected)\n";
        for (const auto& [k, v] : histogram) std::cout << "  " << k << ": " << v << "\n";
        for (const auto& [t, m] : problems) std::cout << "  problem: " << t << ": " << m << "\n";
    }
    return code;
}

long default_precision() {
    const char* env = std::getenv("LOCALEXT_PRECISION");
    if (!env) return 2048;
    try {
        long v = std::stol(env);
        if (v > 0) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::InvalidArgument, "LOCALEXT_PRECISION must be a positive integer");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify extensions of p-adic fields generated by polynomials"};
    app.require_subcommand(1);
    Settings s;
    std::string poly, file;
    bool as_json = false, certificate = false;
    long precision = 0;
    CorpusOptions corpus;

    auto* classify = app.add_subcommand("classify", "classify the field generated by a polynomial");
    classify->add_option("--p", s.p, "the prime p")->required();
    classify->add_option("--m", s.m, "degree of the unramified base K over Q_p")->check(CLI::PositiveNumber);
    auto* po = classify->add_option("--poly", poly, "polynomial expression or coefficient list c0,c1,...");
    auto* fo = classify->add_option("--file", file, "file with one polynomial per line");
    po->excludes(fo);
    classify->add_flag("--json", as_json, "emit JSON");
    classify->add_flag("--certificate", certificate, "print the certificate in text mode");
    classify->add_flag("--oracle-check", s.oracle_check, "confirm the label with the root-search oracle");
    classify->add_option("--precision", precision, "maximum oracle precision")->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "rebuild the table of ramified cubic extensions of Q_3");
    table->add_option("--p", s.p, "the prime, must be 3")->required();
    table->add_flag("--json", as_json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "classify a random corpus and check each label with the oracle");
    verify->add_option("--p", s.p, "the prime p")->required();
    verify->add_option("--m", s.m, "degree of K over Q_p")->check(CLI::PositiveNumber);
    verify->add_option("--degree", corpus.degree, "polynomial degree")->check(CLI::Range(2, 16));
    verify->add_option("--count", corpus.count, "corpus size")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", corpus.seed, "random seed");
    verify->add_option("--height", corpus.height, "coefficient height bound")->check(CLI::PositiveNumber);
    verify->add_option("--precision", precision, "maximum oracle precision")->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "emit JSON");

    auto* gen = app.add_subcommand("gen-corpus", "print a certified-irreducible random corpus");
    gen->add_option("--p", corpus.p, "the prime p")->required();
    gen->add_option("--degree", corpus.degree, "polynomial degree")->check(CLI::Range(2, 16));
    gen->add_option("--count", corpus.count, "corpus size")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", corpus.seed, "random seed");
    gen->add_option("--height", corpus.height, "coefficient height bound")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        s.precision = precision > 0 ? precision : default_precision();
        if (classify->parsed()) {
            if (poly.empty() && file.empty()) fail(ErrorKind::InvalidArgument, "one of --poly or --file is required");
            return run_classify(s, poly, file, as_json, certificate);
        }
        if (table->parsed()) return run_table(s.p, as_json);
        if (verify->parsed()) return run_verify(s, corpus, as_json);
        for (const Poly& f : generate_corpus(corpus)) std::cout << f.to_string() << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    }
}
