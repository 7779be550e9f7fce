#include "modwb/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "modwb/errors.hpp"
#include "modwb/numbers.hpp"

namespace modwb {

namespace {

using njson = nlohmann::ordered_json;

njson must_parse(const std::string& text) {
    njson j = njson::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

long get_long(const njson& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("expected integer field '") + field + "'");
    return j[field].get<long>();
}

std::string get_string(const njson& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw ParseError(std::string("expected string field '") + field + "'");
    return j[field].get<std::string>();
}

const njson& get_array(const njson& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string("expected array field '") + field + "'");
    return j[field];
}

std::string dump(const njson& j) { return j.dump(2) + "\n"; }

long entry_long(const njson& v) {
    if (!v.is_number_integer()) throw ParseError("expected integer entry");
    return v.get<long>();
}

// Frobenius coefficients are integral rationals small enough for int64
long long rat_as_int64(const Rat& x) {
    if (x.get_den() != 1)
        throw Error("expected an integer coefficient, got " + rat_to_string(x));
    const Int& n = x.get_num();
    if (!n.fits_slong_p())
        throw Error("integer coefficient out of int64 range");
    return n.get_si();
}

}  // namespace

std::string local_factor_json(const LocalFactor& f) {
    njson j;
    j["p"] = f.p;
    j["kind"] = f.kind;
    njson cs = njson::array();
    for (long i = 0; i <= f.poly.degree(); ++i)
        cs.push_back(rat_to_string(f.poly[i]));
    j["coeffs"] = cs;
    return dump(j);
}

LocalFactor parse_local_factor(const std::string& text) {
    njson j = must_parse(text);
    LocalFactor f;
    f.p = get_long(j, "p");
    f.kind = get_string(j, "kind");
    std::vector<Rat> cs;
    for (const auto& v : get_array(j, "coeffs")) {
        if (!v.is_string()) throw ParseError("coeffs entries must be strings");
        cs.push_back(rat_from_string(v.get<std::string>()));
    }
    if (cs.empty()) throw ParseError("empty coefficient list");
    f.poly = Polynomial(cs);
    return f;
}

std::string frobenius_json(const FrobeniusPoly& f) {
    njson j;
    j["p"] = f.p;
    j["g"] = f.g;
    njson cs = njson::array();
    for (long i = 0; i <= f.poly.degree(); ++i)
        cs.push_back(rat_as_int64(f.poly[i]));
    j["coeffs"] = cs;
    return dump(j);
}

FrobeniusPoly parse_frobenius(const std::string& text) {
    njson j = must_parse(text);
    FrobeniusPoly f;
    f.p = get_long(j, "p");
    long g = get_long(j, "g");
    if (g != 1 && g != 2) throw ParseError("g must be 1 or 2");
    f.g = static_cast<int>(g);
    std::vector<Rat> cs;
    for (const auto& v : get_array(j, "coeffs")) cs.push_back(Rat(entry_long(v)));
    if (static_cast<long>(cs.size()) != 2 * g + 1)
        throw ParseError("coefficient count does not match genus");
    f.poly = Polynomial(cs);
    return f;
}

std::string siegel_json(const SiegelExpansion& f) {
    njson j;
    j["weight"] = f.weight;
    j["level"] = f.level;
    j["det_bound"] = f.det_bound;
    njson cs = njson::array();
    for (const auto& [key, value] : f.coeffs) {
        const auto& [a, b, c] = key;
        cs.push_back(njson::array({a, b, c, rat_to_string(value)}));
    }
    j["coeffs"] = cs;
    return dump(j);
}

SiegelExpansion parse_siegel(const std::string& text) {
    njson j = must_parse(text);
    SiegelExpansion f;
    long w = get_long(j, "weight");
    f.weight = static_cast<int>(w);
    f.level = get_long(j, "level");
    f.det_bound = get_long(j, "det_bound");
    if (f.weight <= 0 || f.level <= 0 || f.det_bound < 0)
        throw ParseError("weight/level/det_bound out of range");
    for (const auto& v : get_array(j, "coeffs")) {
        if (!v.is_array() || v.size() != 4)
            throw ParseError("coeffs entries must be [a, b, c, value]");
        HalfIntegralMatrix t{entry_long(v[0]), entry_long(v[1]),
                             entry_long(v[2])};
        if (!v[3].is_string())
            throw ParseError("coefficient values must be rational strings");
        Rat value = rat_from_string(v[3].get<std::string>());
        if (!t.semi_positive())
            throw ParseError("class key is not positive semidefinite");
        if (t.positive_definite()) {
            auto [red, u] = reduce_class(t);
            if (red.a != t.a || red.b != t.b || red.c != t.c)
                throw ParseError("class key is not reduced");
            if (t.disc4() > f.det_bound)
                throw ParseError("class key exceeds det_bound");
        } else {
            long g = std::gcd(std::gcd(std::abs(t.a), std::abs(t.b)),
                              std::abs(t.c));
            if (t.b != 0 || t.c != 0 || t.a != g)
                throw ParseError("semidefinite keys must have the form (n,0,0)");
            if (t.a > f.det_bound)
                throw ParseError("class key exceeds det_bound");
        }
        auto [it, fresh] =
            f.coeffs.emplace(std::make_tuple(t.a, t.b, t.c), value);
        if (!fresh) throw ParseError("duplicate class key");
    }
    return f;
}

std::string report_json(const ModularityReport& r) {
    njson j;
    j["curve"] = r.curve;
    j["form"] = r.form;
    j["mode"] = r.mode;
    j["bound"] = r.bound;
    j["verdict"] = verdict_string(r.verdict);
    njson matched = njson::array();
    for (const auto& [p, v] : r.matched)
        matched.push_back(njson::array({p, v}));
    j["matched"] = matched;
    njson mism = njson::array();
    for (const auto& m : r.mismatches) {
        njson e;
        e["p"] = m.p;
        e["lhs"] = m.lhs;
        e["rhs"] = m.rhs;
        mism.push_back(e);
    }
    j["mismatches"] = mism;
    j["skipped"] = r.skipped;
    if (!r.samples.empty()) {
        njson ss = njson::array();
        for (const auto& q : r.samples) {
            njson e;
            e["s"] = q.s;
            e["lhs"] = q.lhs;
            e["rhs"] = q.rhs;
            e["diff"] = q.diff;
            e["combined_tail"] = q.combined_tail;
            ss.push_back(e);
        }
        j["samples"] = ss;
    }
    j["note"] = r.note;
    return dump(j);
}

ModularityReport parse_report(const std::string& text) {
    njson j = must_parse(text);
    ModularityReport r;
    r.curve = get_string(j, "curve");
    r.form = get_string(j, "form");
    r.mode = get_string(j, "mode");
    r.bound = get_long(j, "bound");
    const std::string v = get_string(j, "verdict");
    if (v == "verified-to-bound") {
        r.verdict = Verdict::VerifiedToBound;
    } else if (v == "refuted") {
        r.verdict = Verdict::Refuted;
    } else if (v == "inconclusive") {
        r.verdict = Verdict::Inconclusive;
    } else {
        throw ParseError("unknown verdict: " + v);
    }
    for (const auto& e : get_array(j, "matched")) {
        if (!e.is_array() || e.size() != 2 || !e[1].is_string())
            throw ParseError("matched entries must be [p, value]");
        r.matched.emplace_back(entry_long(e[0]), e[1].get<std::string>());
    }
    for (const auto& e : get_array(j, "mismatches")) {
        ModularityReport::Mismatch m;
        m.p = get_long(e, "p");
        m.lhs = get_string(e, "lhs");
        m.rhs = get_string(e, "rhs");
        r.mismatches.push_back(m);
    }
    for (const auto& e : get_array(j, "skipped")) r.skipped.push_back(entry_long(e));
    if (j.contains("samples")) {
        for (const auto& e : get_array(j, "samples")) {
            ModularityReport::Sample q;
            if (!e.contains("s") || !e["s"].is_number())
                throw ParseError("sample missing s");
            q.s = e["s"].get<double>();
            q.lhs = e.value("lhs", 0.0);
            q.rhs = e.value("rhs", 0.0);
            q.diff = e.value("diff", 0.0);
            q.combined_tail = e.value("combined_tail", 0.0);
            r.samples.push_back(q);
        }
    }
    r.note = j.value("note", std::string());
    return r;
}

std::string ap_table_csv(const ApTable& t) {
    std::ostringstream os;
    os << "p,ap,bad\n";
    for (const auto& [p, ap] : t.ap)
        os << p << "," << ap << "," << (t.bad.count(p) ? 1 : 0) << "\n";
    return os.str();
}

ApTable parse_ap_table_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "p,ap,bad")
        throw ParseError("missing ap-table header");
    ApTable t;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string pf, af, bf;
        if (!std::getline(row, pf, ',') || !std::getline(row, af, ',') ||
            !std::getline(row, bf))
            throw ParseError("short ap-table row: " + line);
        try {
            long p = std::stol(pf);
            long ap = std::stol(af);
            long bad = std::stol(bf);
            if (bad != 0 && bad != 1) throw ParseError("bad flag must be 0/1");
            if (!t.ap.emplace(p, ap).second)
                throw ParseError("duplicate prime row");
            if (bad) t.bad.insert(p);
            t.bound = std::max(t.bound, p);
        } catch (const std::invalid_argument&) {
            throw ParseError("non-numeric ap-table row: " + line);
        } catch (const std::out_of_range&) {
            throw ParseError("ap-table value out of range: " + line);
        }
    }
    return t;
}

}  // namespace modwb
