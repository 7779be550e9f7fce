#pragma once

#include <map>
#include <string>
#include <vector>

#include "modwb/curves.hpp"
#include "modwb/forms.hpp"
#include "modwb/siegel.hpp"

namespace modwb {

enum class Verdict { VerifiedToBound, Refuted, Inconclusive };
std::string verdict_string(Verdict v);

// Uniform comparison report. verdict rules: refuted iff mismatches nonempty;
// verified-to-bound iff no mismatch, something matched, and bound >= 100;
// otherwise inconclusive. A bounded check never claims more than the bound.
struct ModularityReport {
    std::string curve;  // left-hand object id
    std::string form;   // right-hand object id
    std::string mode;   // "ap-match", "trace", "spinor", "standard", "maassD"
    long bound = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<long, std::string>> matched;  // (p, agreed value)
    struct Mismatch {
        long p = 0;
        std::string lhs, rhs;
    };
    std::vector<Mismatch> mismatches;
    std::vector<long> skipped;  // bad primes left out of the comparison
    // numeric samples for the maassD mode: (s, lhs, rhs, diff, combined tail)
    struct Sample {
        double s = 0, lhs = 0, rhs = 0, diff = 0, combined_tail = 0;
    };
    std::vector<Sample> samples;
    std::string note;
};

// a_p(E) = a_p(f) for all p <= bound coprime to level * disc (exact integers)
ModularityReport verify_elliptic_modularity(const EllipticCurveQ& e,
                                            const NewformRecord& rec,
                                            long bound);
ModularityReport verify_elliptic_modularity(const EllipticCurveQ& e,
                                            const ClassicalForm& f,
                                            const std::string& form_id,
                                            long bound);

// trace/determinant conditions against a classical form (g = 1): trace
// Tr(Frob_p) = a_p and det = p read off the quadratic Weil factor
ModularityReport galois_trace_check(const ApTable& frob, const ClassicalForm& f,
                                    const std::string& form_id, long bound);
// g = 2: trace -c1 of the Frobenius quartic against a((p,0,p); F), det = p^2
// via the quartic's leading coefficient
ModularityReport galois_trace_check(const std::map<long, FrobeniusPoly>& frob,
                                    const SiegelExpansion& f, long bound);

// exact per-prime polynomial comparison; mode is recorded verbatim
// ("spinor" or "standard"); primes missing on either side are skipped
ModularityReport compare_l_with_zeta(const std::map<long, FrobeniusPoly>& lhs,
                                     const std::map<long, Polynomial>& rhs,
                                     const std::string& mode, long bound);

// maassD mode: numeric comparison of the truncated Euler product of the
// abelian factors against Maass's series of F at the sample points
ModularityReport compare_l_with_zeta(const std::map<long, FrobeniusPoly>& lhs,
                                     const SiegelExpansion& f,
                                     const std::vector<double>& s_samples,
                                     long bound);

}  // namespace modwb
