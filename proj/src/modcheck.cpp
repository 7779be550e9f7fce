#include "modwb/modcheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "modwb/errors.hpp"
#include "modwb/numbers.hpp"
#include "modwb/zeta.hpp"

namespace modwb {

namespace {

const char* kScopeNote =
    "agreement of local data up to the stated bound; analytic statements "
    "beyond finite prime data are outside the scope of this check";

std::string curve_id(const EllipticCurveQ& e) {
    std::ostringstream os;
    os << "[" << e.a1 << "," << e.a2 << "," << e.a3 << "," << e.a4 << ","
       << e.a6 << "]";
    return os.str();
}

Verdict settle(const ModularityReport& r) {
    if (!r.mismatches.empty()) return Verdict::Refuted;
    if (!r.matched.empty() && r.bound >= 100) return Verdict::VerifiedToBound;
    return Verdict::Inconclusive;
}

}  // namespace

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::VerifiedToBound: return "verified-to-bound";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ModularityReport verify_elliptic_modularity(const EllipticCurveQ& e,
                                            const ClassicalForm& f,
                                            const std::string& form_id,
                                            long bound) {
    if (bound < 2) throw Error("verify: bound must be at least 2");
    if (f.expansion.precision() < bound)
        throw PrecisionExhausted("verify: form coefficients stop before bound");
    ModularityReport r;
    r.curve = curve_id(e);
    r.form = form_id;
    r.mode = "ap-match";
    r.bound = bound;
    r.note = kScopeNote;
    const Int n_disc = Int(f.level) * e.discriminant();
    for (long p : primes_up_to(bound)) {
        if (n_disc % p == 0) {
            r.skipped.push_back(p);
            continue;
        }
        const Int lhs = ec_ap(e, p);
        const Rat& rhs = f.expansion.coeff(p);
        if (Rat(lhs) == rhs) {
            r.matched.emplace_back(p, lhs.get_str());
        } else {
            r.mismatches.push_back({p, lhs.get_str(), rat_to_string(rhs)});
        }
    }
    r.verdict = settle(r);
    return r;
}

ModularityReport verify_elliptic_modularity(const EllipticCurveQ& e,
                                            const NewformRecord& rec,
                                            long bound) {
    return verify_elliptic_modularity(e, newform_qexp(rec, bound), rec.label,
                                      bound);
}

ModularityReport galois_trace_check(const ApTable& frob, const ClassicalForm& f,
                                    const std::string& form_id, long bound) {
    if (f.expansion.precision() < bound)
        throw PrecisionExhausted("trace check: form coefficients stop early");
    ModularityReport r;
    r.curve = frob.source;
    r.form = form_id;
    r.mode = "trace";
    r.bound = bound;
    r.note = kScopeNote;
    for (long p : primes_up_to(bound)) {
        auto it = frob.ap.find(p);
        if (it == frob.ap.end() || frob.bad.count(p) || f.level % p == 0) {
            r.skipped.push_back(p);
            continue;
        }
        // trace = a_p; det = p holds by the shape of the Weil factor
        if (Rat(it->second) == f.expansion.coeff(p)) {
            r.matched.emplace_back(p, std::to_string(it->second));
        } else {
            r.mismatches.push_back({p, std::to_string(it->second),
                                    rat_to_string(f.expansion.coeff(p))});
        }
    }
    r.verdict = settle(r);
    return r;
}

ModularityReport galois_trace_check(const std::map<long, FrobeniusPoly>& frob,
                                    const SiegelExpansion& f, long bound) {
    ModularityReport r;
    r.curve = "frobenius-table";
    r.form = "siegel-form";
    r.mode = "trace";
    r.bound = bound;
    r.note = kScopeNote;
    for (const auto& [p, fp] : frob) {
        if (p > bound) continue;
        if (fp.g != 2)
            throw Error("trace check: expected genus 2 data");
        const Int trace = -fp.poly[1].get_num();
        const Int det = fp.poly[4].get_num();
        // a((p,0,p); F) throws InsufficientCoefficients when 4p^2 is out of
        // range, so an under-resolved expansion fails loudly
        const Rat rhs = f.coefficient(HalfIntegralMatrix{p, 0, p});
        const Int p2 = Int(p) * p;
        if (det != p2) {
            r.mismatches.push_back({p, "det " + det.get_str(),
                                    "det " + p2.get_str()});
        } else if (Rat(trace) == rhs) {
            r.matched.emplace_back(p, trace.get_str());
        } else {
            r.mismatches.push_back({p, trace.get_str(), rat_to_string(rhs)});
        }
    }
    r.verdict = settle(r);
    return r;
}

ModularityReport compare_l_with_zeta(const std::map<long, FrobeniusPoly>& lhs,
                                     const std::map<long, Polynomial>& rhs,
                                     const std::string& mode, long bound) {
    if (mode != "spinor" && mode != "standard")
        throw Error("compare: exact modes are spinor and standard");
    ModularityReport r;
    r.curve = "abelian-l";
    r.form = mode + "-zeta";
    r.mode = mode;
    r.bound = bound;
    r.note = kScopeNote;
    for (const auto& [p, fp] : lhs) {
        if (p > bound) continue;
        auto it = rhs.find(p);
        if (it == rhs.end()) {
            r.skipped.push_back(p);
            continue;
        }
        if (fp.poly.degree() != it->second.degree())
            throw DegreeMismatch("compare: local factors at p=" +
                                 std::to_string(p) + " have degrees " +
                                 std::to_string(fp.poly.degree()) + " and " +
                                 std::to_string(it->second.degree()));
        if (fp.poly == it->second) {
            r.matched.emplace_back(p, fp.poly.to_string());
        } else {
            r.mismatches.push_back(
                {p, fp.poly.to_string(), it->second.to_string()});
        }
    }
    r.verdict = settle(r);
    return r;
}

ModularityReport compare_l_with_zeta(const std::map<long, FrobeniusPoly>& lhs,
                                     const SiegelExpansion& f,
                                     const std::vector<double>& s_samples,
                                     long bound) {
    if (s_samples.empty())
        throw Error("compare: maassD mode needs sample points");
    ModularityReport r;
    r.curve = "abelian-l";
    r.form = "maass-dseries";
    r.mode = "maassD";
    r.bound = bound;
    r.note = kScopeNote;
    std::map<long, Polynomial> factors;
    for (const auto& [p, fp] : lhs) {
        if (p <= bound) factors.emplace(p, fp.poly);
    }
    bool any_mismatch = false;
    for (double s : s_samples) {
        auto euler = euler_product_eval(factors, s, bound);
        auto series = maass_dirichlet(f, s, f.det_bound);
        ModularityReport::Sample q;
        q.s = s;
        q.lhs = euler.value.real();
        q.rhs = series.value.real();
        q.diff = std::abs(euler.value - series.value);
        q.combined_tail = euler.tail_bound + series.tail_bound +
                          1e-12 * std::max(1.0, std::abs(euler.value));
        r.samples.push_back(q);
        if (q.diff > q.combined_tail) any_mismatch = true;
    }
    if (factors.empty()) {
        r.verdict = Verdict::Inconclusive;
    } else if (any_mismatch) {
        r.verdict = Verdict::Refuted;
    } else {
        r.verdict =
            bound >= 100 ? Verdict::VerifiedToBound : Verdict::Inconclusive;
    }
    return r;
}

}  // namespace modwb
