#pragma once

#include <string>

#include "modwb/curves.hpp"
#include "modwb/modcheck.hpp"
#include "modwb/siegel.hpp"

namespace modwb {

// JSON writers: fixed field order, 2-space indent, trailing newline, exact
// rationals as strings. Every writer has a parser; round trips are identity.
// Parsers throw ParseError on malformed input.

std::string local_factor_json(const LocalFactor& f);
LocalFactor parse_local_factor(const std::string& text);

// coefficients of a Frobenius polynomial are integers and appear as JSON
// numbers: {"p": p, "g": g, "coeffs": [1, c1, ...]}
std::string frobenius_json(const FrobeniusPoly& f);
FrobeniusPoly parse_frobenius(const std::string& text);

// {"weight", "level", "det_bound", "coeffs": [[a, b, c, "p/q"], ...]} with
// entries sorted by class key; this is also the import format for external
// expansions, so the parser enforces reduced keys and coverage sanity
std::string siegel_json(const SiegelExpansion& f);
SiegelExpansion parse_siegel(const std::string& text);

std::string report_json(const ModularityReport& r);
ModularityReport parse_report(const std::string& text);

// header "p,ap,bad"; one row per prime in ascending order, bad flag 0/1
std::string ap_table_csv(const ApTable& t);
ApTable parse_ap_table_csv(const std::string& text);

}  // namespace modwb
