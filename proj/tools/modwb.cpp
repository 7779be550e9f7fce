// modwb: exact computations around classical and degree-2 Siegel modular
// forms, their zeta functions, and point counts on curves over Q.
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modwb/cache.hpp"
#include "modwb/curves.hpp"
#include "modwb/errors.hpp"
#include "modwb/forms.hpp"
#include "modwb/json_io.hpp"
#include "modwb/modcheck.hpp"
#include "modwb/numbers.hpp"
#include "modwb/siegel.hpp"
#include "modwb/zeta.hpp"

namespace {

using modwb::Rat;
using njson = nlohmann::ordered_json;

// flag values that fail semantic validation are usage errors (exit 64)
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_longs(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stol(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) +
                             ": expected comma-separated integers, got '" +
                             text + "'");
        }
    }
    if (out.empty())
        throw UsageError(std::string(what) + ": empty integer list");
    return out;
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) +
                             ": expected comma-separated reals, got '" + text +
                             "'");
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + ": empty list");
    return out;
}

Rat parse_rat(const std::string& text, const char* what) {
    try {
        return modwb::rat_from_string(text);
    } catch (const modwb::ParseError&) {
        throw UsageError(std::string(what) + ": expected a rational, got '" +
                         text + "'");
    }
}

modwb::EllipticCurveQ parse_curve(const std::string& text) {
    auto v = parse_longs(text, "--curve");
    if (v.size() != 5) throw UsageError("--curve: expected a1,a2,a3,a4,a6");
    return {v[0], v[1], v[2], v[3], v[4]};
}

modwb::Genus2CurveQ parse_genus2(const std::string& text) {
    auto v = parse_longs(text, "--poly");
    if (v.size() != 6 && v.size() != 7)
        throw UsageError("--poly: expected c0,...,c6 (degree 5 or 6)");
    std::vector<Rat> cs;
    cs.reserve(v.size());
    for (long x : v) cs.emplace_back(x);
    modwb::Genus2CurveQ c{modwb::Polynomial(cs)};
    c.validate();
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw modwb::Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw modwb::Error("cannot write " + out_path);
    out << payload;
    if (!out.good()) throw modwb::Error("short write to " + out_path);
}

// cache wrapper: identical keys reproduce identical payload bytes
template <typename Fn>
std::string with_cache(const std::string& key, Fn&& compute) {
    if (auto hit = modwb::cache_lookup(key)) return *hit;
    std::string payload = compute();
    modwb::cache_store(key, payload);
    return payload;
}

std::string dump(const njson& j) { return j.dump(2) + "\n"; }

// accepts a bare array, a single object, or an aggregate {"factors": [...]}
std::vector<njson> artifact_list(const std::string& text) {
    njson j = njson::parse(text, nullptr, false);
    if (j.is_discarded()) throw modwb::ParseError("malformed JSON input");
    if (j.is_object() && j.contains("factors")) j = j["factors"];
    if (j.is_object()) return {j};
    if (!j.is_array()) throw modwb::ParseError("expected an artifact array");
    return std::vector<njson>(j.begin(), j.end());
}

std::map<long, modwb::FrobeniusPoly> read_frobenius_map(const std::string& path) {
    std::map<long, modwb::FrobeniusPoly> out;
    for (const auto& e : artifact_list(read_file(path))) {
        auto f = modwb::parse_frobenius(e.dump());
        if (!out.emplace(f.p, f).second)
            throw modwb::ParseError("duplicate prime " + std::to_string(f.p) +
                                    " in " + path);
    }
    return out;
}

std::map<long, modwb::Polynomial> read_factor_map(const std::string& path) {
    std::map<long, modwb::Polynomial> out;
    for (const auto& e : artifact_list(read_file(path))) {
        auto f = modwb::parse_local_factor(e.dump());
        if (!out.emplace(f.p, f.poly).second)
            throw modwb::ParseError("duplicate prime " + std::to_string(f.p) +
                                    " in " + path);
    }
    return out;
}

const modwb::NewformRecord& require_level(long level) {
    const auto* rec = modwb::registry_lookup(level);
    if (rec != nullptr) return *rec;
    std::string levels;
    for (const auto& r : modwb::newform_registry())
        levels += (levels.empty() ? "" : ", ") + std::to_string(r.level);
    throw modwb::Error("level " + std::to_string(level) +
                       " is not in the registry (available: " + levels + ")");
}

struct Options {
    std::string curve, poly, omega = "0,1.2,0,0,0,1.2", format = "csv", out,
                mode, abelian, zeta, samples, ap, ap2, lambda, lambda2;
    long pmax = 0, level = 0, nmax = 100, detmax = 16, p = 0, trace_bound = 8;
    int g = 1, k = 12, weight = 10;
    double s_re = 12.0, s_im = 0.0;
    bool sk = false, self_test = false;
};

int run_ap(const Options& o) {
    if (o.pmax < 2) throw UsageError("--pmax must be at least 2");
    auto e = parse_curve(o.curve);
    std::ostringstream key;
    key << "ap|v1|" << o.curve << "|" << o.pmax << "|" << o.format;
    std::string payload = with_cache(key.str(), [&] {
        auto t = modwb::ec_ap_table(e, o.pmax);
        if (o.format == "csv") return modwb::ap_table_csv(t);
        njson j;
        j["source"] = t.source;
        j["bound"] = t.bound;
        njson rows = njson::array();
        for (const auto& [p, ap] : t.ap)
            rows.push_back(njson::array({p, ap, t.bad.count(p) ? 1 : 0}));
        j["rows"] = rows;
        return dump(j);
    });
    emit(o.out, payload);
    return 0;
}

int run_form_coeffs(const Options& o) {
    if (o.nmax < 1) throw UsageError("--nmax must be positive");
    const auto& rec = require_level(o.level);
    std::ostringstream key;
    key << "form-coeffs|v1|" << o.level << "|" << o.nmax;
    std::string payload = with_cache(key.str(), [&] {
        auto f = modwb::newform_qexp(rec, o.nmax);
        njson j;
        j["label"] = rec.label;
        j["level"] = rec.level;
        j["weight"] = f.weight;
        njson cs = njson::array();
        for (long n = 0; n <= o.nmax; ++n)
            cs.push_back(modwb::rat_to_string(f.expansion.coeff(n)));
        j["coeffs"] = cs;
        return dump(j);
    });
    emit(o.out, payload);
    return 0;
}

int run_verify(const Options& o) {
    if (o.pmax < 2) throw UsageError("--pmax must be at least 2");
    const auto& rec = require_level(o.level);
    modwb::EllipticCurveQ e{rec.curve[0], rec.curve[1], rec.curve[2],
                            rec.curve[3], rec.curve[4]};
    if (!o.curve.empty()) e = parse_curve(o.curve);
    auto report = modwb::verify_elliptic_modularity(e, rec, o.pmax);
    emit(o.out, modwb::report_json(report));
    return report.verdict == modwb::Verdict::Refuted ? 2 : 0;
}

int run_igusa(const Options& o) {
    if (o.detmax < 0) throw UsageError("--detmax must be nonnegative");
    std::ostringstream key;
    key << "igusa|v1|" << o.weight << "|" << o.detmax;
    std::string payload = with_cache(key.str(), [&] {
        return modwb::siegel_json(modwb::build_chi(o.weight, o.detmax));
    });
    emit(o.out, payload);
    return 0;
}

int run_spinor(const Options& o) {
    if (!modwb::is_prime(o.p)) throw UsageError("--p must be prime");
    modwb::LocalFactor f;
    f.p = o.p;
    f.kind = "spinor";
    if (o.g == 1) {
        if (o.ap.empty()) throw UsageError("--g 1 requires --ap");
        Rat a = parse_rat(o.ap, "--ap");
        // the scaling convention makes the degree-1 spinor factor the Hecke
        // factor itself, so it is written down exactly
        f.poly = modwb::Polynomial(
            {Rat(1), -a,
             Rat(modwb::int_pow(o.p, static_cast<unsigned long>(o.k - 1)))});
    } else {
        modwb::EigenvalueData ev;
        if (o.sk) {
            if (o.ap.empty() || o.ap2.empty())
                throw UsageError("--sk requires --ap and --ap2 (coefficients "
                                 "of the weight 2k-2 eigenform at p and p^2)");
            ev = modwb::sk_eigenvalues(parse_rat(o.ap, "--ap"),
                                       parse_rat(o.ap2, "--ap2"), o.k, o.p);
        } else {
            if (o.lambda.empty() || o.lambda2.empty())
                throw UsageError(
                    "--g 2 requires --lambda and --lambda2, or --sk");
            ev.p = o.p;
            ev.k = o.k;
            ev.g = 2;
            ev.lambda_p = parse_rat(o.lambda, "--lambda");
            ev.lambda_p2 = parse_rat(o.lambda2, "--lambda2");
        }
        f.poly = modwb::spinor_local_g2_from_eigenvalues(ev);
    }
    emit(o.out, modwb::local_factor_json(f));
    return 0;
}

int run_standard(const Options& o) {
    if (!modwb::is_prime(o.p)) throw UsageError("--p must be prime");
    modwb::LocalFactor f;
    f.p = o.p;
    f.kind = "standard";
    if (o.g == 1) {
        if (o.ap.empty()) throw UsageError("--g 1 requires --ap");
        modwb::SatakeData sd;
        sd.p = o.p;
        sd.g = 1;
        sd.k = o.k;
        sd.exact = true;
        sd.exact_ap = parse_rat(o.ap, "--ap");
        f.poly = modwb::standard_local(sd);
    } else if (o.sk) {
        if (o.ap.empty())
            throw UsageError("--sk requires --ap (coefficient of the weight "
                             "2k-2 eigenform at p)");
        f.poly =
            modwb::standard_local_g2_lift(parse_rat(o.ap, "--ap"), o.k, o.p);
    } else {
        if (o.lambda.empty() || o.lambda2.empty())
            throw UsageError("--g 2 requires --lambda and --lambda2, or --sk");
        modwb::EigenvalueData ev;
        ev.p = o.p;
        ev.k = o.k;
        ev.g = 2;
        ev.lambda_p = parse_rat(o.lambda, "--lambda");
        ev.lambda_p2 = parse_rat(o.lambda2, "--lambda2");
        auto quartic = modwb::spinor_local_g2_from_eigenvalues(ev);
        auto sd = modwb::satake_from_local(quartic, o.p, 2, o.k);
        // numeric route: coefficients are the computed doubles, exactly
        f.poly = modwb::standard_local(sd);
    }
    emit(o.out, modwb::local_factor_json(f));
    return 0;
}

int run_dseries(const Options& o) {
    if (o.detmax < 4) throw UsageError("--detmax must be at least 4");
    std::ostringstream key;
    key << "dseries|v1|" << o.weight << "|" << o.detmax << "|" << o.s_re << "|"
        << o.s_im;
    std::string payload = with_cache(key.str(), [&] {
        auto f = modwb::build_chi(o.weight, o.detmax);
        auto ev = modwb::maass_dirichlet(f, {o.s_re, o.s_im}, o.detmax);
        njson j;
        j["weight"] = o.weight;
        j["det_bound"] = o.detmax;
        j["s"] = njson::array({o.s_re, o.s_im});
        j["value"] = njson::array({ev.value.real(), ev.value.imag()});
        j["terms_used"] = ev.terms_used;
        j["tail_bound"] = ev.tail_bound;
        j["growth_exponent"] = ev.growth_exponent;
        j["growth_constant"] = ev.growth_constant;
        return dump(j);
    });
    emit(o.out, payload);
    return 0;
}

int run_genus2(const Options& o) {
    if ((o.p == 0) == (o.pmax == 0))
        throw UsageError("give exactly one of --p or --pmax");
    auto c = parse_genus2(o.poly);
    if (o.p != 0) {
        if (!modwb::is_prime(o.p)) throw UsageError("--p must be prime");
        auto [n1, n2] = modwb::genus2_counts(c, o.p);
        emit(o.out, modwb::frobenius_json(modwb::frobenius_poly(n1, n2, o.p)));
        return 0;
    }
    if (o.pmax < 3) throw UsageError("--pmax must be at least 3");
    njson j;
    j["source"] = "y^2 = f(x), f = " + c.f.to_string();
    njson factors = njson::array();
    njson skipped = njson::array();
    for (long p : modwb::primes_up_to(o.pmax)) {
        if (p == 2 || !modwb::genus2_good_reduction(c, p)) {
            skipped.push_back(p);
            continue;
        }
        auto [n1, n2] = modwb::genus2_counts(c, p);
        factors.push_back(
            njson::parse(modwb::frobenius_json(modwb::frobenius_poly(n1, n2, p))));
    }
    j["factors"] = factors;
    j["skipped"] = skipped;
    emit(o.out, dump(j));
    return 0;
}

int run_eval_siegel(const Options& o) {
    if (o.trace_bound < 1) throw UsageError("--trace-bound must be positive");
    auto v = parse_doubles(o.omega, "--omega");
    if (v.size() != 6)
        throw UsageError("--omega: expected re11,im11,re12,im12,re22,im22");
    modwb::ComplexMat omega{{{v[0], v[1]}, {v[2], v[3]}},
                            {{v[2], v[3]}, {v[4], v[5]}}};
    auto z = modwb::make_siegel_point(omega);
    auto f = modwb::build_chi(o.weight, o.trace_bound * o.trace_bound);
    auto sv = modwb::evaluate_siegel(f, z, o.trace_bound);
    njson j;
    j["weight"] = o.weight;
    j["trace_bound"] = o.trace_bound;
    j["omega"] = njson::array({njson::array({v[0], v[1]}),
                               njson::array({v[2], v[3]}),
                               njson::array({v[4], v[5]})});
    j["value"] = njson::array({sv.value.real(), sv.value.imag()});
    j["tail_bound"] = sv.tail_bound;
    emit(o.out, dump(j));
    return 0;
}

int run_trace_check(const Options& o) {
    if (o.pmax < 2) throw UsageError("--pmax must be at least 2");
    modwb::ModularityReport report;
    if (o.g == 1) {
        if (o.level == 0) throw UsageError("--g 1 requires --level");
        const auto& rec = require_level(o.level);
        modwb::EllipticCurveQ e{rec.curve[0], rec.curve[1], rec.curve[2],
                                rec.curve[3], rec.curve[4]};
        auto table = modwb::ec_ap_table(e, o.pmax);
        auto f = modwb::newform_qexp(rec, o.pmax);
        report = modwb::galois_trace_check(table, f, rec.label, o.pmax);
    } else {
        if (o.poly.empty()) throw UsageError("--g 2 requires --poly");
        auto c = parse_genus2(o.poly);
        std::map<long, modwb::FrobeniusPoly> frob;
        for (long p : modwb::primes_up_to(o.pmax)) {
            if (p == 2 || !modwb::genus2_good_reduction(c, p)) continue;
            auto [n1, n2] = modwb::genus2_counts(c, p);
            frob.emplace(p, modwb::frobenius_poly(n1, n2, p));
        }
        auto f = modwb::build_chi(o.weight, 4 * o.pmax * o.pmax);
        report = modwb::galois_trace_check(frob, f, o.pmax);
    }
    emit(o.out, modwb::report_json(report));
    return report.verdict == modwb::Verdict::Refuted ? 2 : 0;
}

int run_compare_l(const Options& o) {
    modwb::ModularityReport report;
    const long pmax = o.pmax != 0 ? o.pmax : (o.self_test ? 5 : 50);
    if (o.self_test) {
        // lift self-test: the spinor factors of the weight-10 lift of the
        // weight-18 eigenform equal the "abelian" factors built from the
        // same eigenvalue data, so the comparison must come back clean
        if (pmax < 2 || pmax > 97)
            throw UsageError("--self-test needs 2 <= --pmax <= 97");
        auto delta = modwb::delta_qexp(pmax * pmax);
        auto e6 = modwb::eisenstein_qexp(6, pmax * pmax);
        modwb::ClassicalForm f18{delta.expansion * e6.expansion, 18, 1, true};
        std::map<long, modwb::FrobeniusPoly> lhs;
        std::map<long, modwb::Polynomial> rhs;
        for (long p : modwb::primes_up_to(pmax)) {
            auto ev = modwb::sk_eigenvalues(f18.expansion.coeff(p),
                                            f18.expansion.coeff(p * p), 10, p);
            auto quartic = modwb::spinor_local_g2_from_eigenvalues(ev);
            lhs.emplace(p, modwb::FrobeniusPoly{p, 2, quartic});
            rhs.emplace(p, quartic);
        }
        report = modwb::compare_l_with_zeta(lhs, rhs, "spinor", pmax);
    } else if (o.mode == "maassD") {
        if (o.abelian.empty() || o.samples.empty())
            throw UsageError("maassD mode needs --abelian and --samples");
        auto lhs = read_frobenius_map(o.abelian);
        auto f = modwb::build_chi(o.weight, o.detmax);
        auto ss = parse_doubles(o.samples, "--samples");
        report = modwb::compare_l_with_zeta(lhs, f, ss, pmax);
    } else {
        if (o.mode.empty())
            throw UsageError("--mode is required without --self-test");
        if (o.abelian.empty() || o.zeta.empty())
            throw UsageError("exact modes need --abelian and --zeta files");
        auto lhs = read_frobenius_map(o.abelian);
        auto rhs = read_factor_map(o.zeta);
        report = modwb::compare_l_with_zeta(lhs, rhs, o.mode, pmax);
    }
    emit(o.out, modwb::report_json(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular forms, point counts, and zeta data"};
    app.require_subcommand(1);
    Options o;

    auto add_out = [&](CLI::App* c) {
        c->add_option("-o,--out", o.out, "write output to a file instead of stdout");
    };

    auto* ap = app.add_subcommand("ap", "a_p table of an elliptic curve over Q");
    ap->add_option("--curve", o.curve, "Weierstrass coefficients a1,a2,a3,a4,a6")
        ->required();
    ap->add_option("--pmax", o.pmax, "prime bound")->required();
    ap->add_option("--format", o.format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_out(ap);

    auto* fc = app.add_subcommand("form-coeffs",
                                  "q-expansion of a registry newform");
    fc->add_option("--level", o.level, "registry level")->required();
    fc->add_option("--nmax", o.nmax, "largest exponent (default 100)");
    add_out(fc);

    auto* ve = app.add_subcommand(
        "verify", "compare curve a_p against form a_p up to a bound");
    ve->add_option("--level", o.level, "registry level (selects the form)")
        ->required();
    ve->add_option("--pmax", o.pmax, "prime bound")->required();
    ve->add_option("--curve", o.curve,
                   "override the registry curve with a1,a2,a3,a4,a6");
    add_out(ve);

    auto* ig = app.add_subcommand(
        "igusa", "Fourier coefficients of the weight-k cusp form built by "
                 "lifting the Jacobi cusp form of index 1");
    ig->add_option("--weight", o.weight, "even weight >= 10 (default 10)");
    ig->add_option("--detmax", o.detmax,
                   "coverage bound on 4 det T (default 16)");
    add_out(ig);

    auto* sp = app.add_subcommand("spinor", "local spinor zeta factor");
    sp->add_option("--g", o.g, "degree (1 or 2)")->check(CLI::IsMember({1, 2}));
    sp->add_option("--k", o.k, "weight (default 12)");
    sp->add_option("--p", o.p, "prime")->required();
    sp->add_option("--ap", o.ap, "g=1: Hecke eigenvalue a_p; with --sk: a_p "
                                 "of the underlying eigenform");
    sp->add_option("--ap2", o.ap2, "with --sk: a_{p^2} of the underlying form");
    sp->add_option("--lambda", o.lambda, "g=2 eigenvalue of T(p)");
    sp->add_option("--lambda2", o.lambda2, "g=2 eigenvalue of T(p^2)");
    sp->add_flag("--sk", o.sk, "derive g=2 eigenvalues from the weight 2k-2 "
                               "eigenform coefficients");
    add_out(sp);

    auto* st = app.add_subcommand("standard", "local standard zeta factor");
    st->add_option("--g", o.g, "degree (1 or 2)")->check(CLI::IsMember({1, 2}));
    st->add_option("--k", o.k, "weight (default 12)");
    st->add_option("--p", o.p, "prime")->required();
    st->add_option("--ap", o.ap, "g=1: Hecke eigenvalue a_p; with --sk: a_p "
                                 "of the underlying eigenform");
    st->add_option("--lambda", o.lambda, "g=2 eigenvalue of T(p)");
    st->add_option("--lambda2", o.lambda2, "g=2 eigenvalue of T(p^2)");
    st->add_flag("--sk", o.sk,
                 "exact degree-5 factor of the lift of the weight 2k-2 form");
    add_out(st);

    auto* ds = app.add_subcommand(
        "dseries", "truncated Dirichlet series of the lifted weight-k form "
                   "over positive classes");
    ds->add_option("--weight", o.weight, "even weight >= 10 (default 10)");
    ds->add_option("--detmax", o.detmax, "truncation: 4 det T <= detmax");
    ds->add_option("--s", o.s_re, "evaluation point, real part")->required();
    ds->add_option("--si", o.s_im, "evaluation point, imaginary part");
    add_out(ds);

    auto* g2 = app.add_subcommand(
        "genus2", "Frobenius data of a genus-2 curve y^2 = f(x)");
    g2->add_option("--poly", o.poly, "coefficients c0,c1,... of f (degree 5 "
                                     "or 6, squarefree)")
        ->required();
    g2->add_option("--p", o.p, "single odd prime of good reduction");
    g2->add_option("--pmax", o.pmax, "all good odd primes up to the bound");
    add_out(g2);

    auto* es = app.add_subcommand("eval-siegel",
                                  "numerically evaluate the lifted form at a "
                                  "point of the degree-2 upper half space");
    es->add_option("--weight", o.weight, "even weight >= 10 (default 10)");
    es->add_option("--trace-bound", o.trace_bound,
                   "Fourier truncation: trace T <= bound (default 8)");
    es->add_option("--omega", o.omega,
                   "re11,im11,re12,im12,re22,im22 (default 1.2i identity)");
    add_out(es);

    auto* tc = app.add_subcommand(
        "trace-check", "Frobenius trace against Fourier data: g=1 registry "
                       "pair, g=2 curve against the lifted form");
    tc->add_option("--g", o.g, "degree (1 or 2)")->check(CLI::IsMember({1, 2}));
    tc->add_option("--level", o.level, "g=1: registry level");
    tc->add_option("--pmax", o.pmax, "prime bound")->required();
    tc->add_option("--poly", o.poly, "g=2: curve coefficients c0,c1,...");
    tc->add_option("--weight", o.weight, "g=2: lift weight (default 10)");
    add_out(tc);

    auto* cl = app.add_subcommand(
        "compare-l", "compare abelian L-factors with zeta factors of a "
                     "degree-2 form");
    cl->add_option("--mode", o.mode, "spinor, standard, or maassD")
        ->check(CLI::IsMember({"spinor", "standard", "maassD"}));
    cl->add_option("--abelian", o.abelian,
                   "JSON file of Frobenius polynomials");
    cl->add_option("--zeta", o.zeta, "JSON file of local zeta factors");
    cl->add_option("--pmax", o.pmax, "prime bound (default 50)");
    cl->add_option("--weight", o.weight, "maassD: lift weight (default 10)");
    cl->add_option("--detmax", o.detmax, "maassD: series truncation");
    cl->add_option("--samples", o.samples, "maassD: sample points s1,s2,...");
    cl->add_flag("--self-test", o.self_test,
                 "check the lift's spinor factors against themselves through "
                 "the abelian comparison path");
    add_out(cl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(ap)) return run_ap(o);
        if (app.got_subcommand(fc)) return run_form_coeffs(o);
        if (app.got_subcommand(ve)) return run_verify(o);
        if (app.got_subcommand(ig)) return run_igusa(o);
        if (app.got_subcommand(sp)) return run_spinor(o);
        if (app.got_subcommand(st)) return run_standard(o);
        if (app.got_subcommand(ds)) return run_dseries(o);
        if (app.got_subcommand(g2)) return run_genus2(o);
        if (app.got_subcommand(es)) return run_eval_siegel(o);
        if (app.got_subcommand(tc)) return run_trace_check(o);
        if (app.got_subcommand(cl)) return run_compare_l(o);
        std::cerr << "no subcommand selected\n";
        return 64;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const modwb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
