#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "modwb/qexp.hpp"

namespace modwb {

// Classical modular form presented by a truncated q-expansion plus the
// (weight, level) it is asserted to carry. is_cusp implies coeff(0) == 0.
struct ClassicalForm {
    QExpansion expansion;
    int weight = 0;
    long level = 1;
    bool is_cusp = false;
};

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
// even weight k >= 4.
ClassicalForm eisenstein_qexp(int k, long precision);

// Discriminant cusp form (E_4^3 - E_6^2)/1728, weight 12 level 1.
ClassicalForm delta_qexp(long precision);

// Hecke operator T_p at a prime p not dividing the level:
// a_n(T_p f) = a_{np} + p^{k-1} a_{n/p}. Output precision floor(prec/p).
ClassicalForm hecke_tp(const ClassicalForm& f, long p);

// For a normalized (a_1 = 1) expansion, certify T_p f = a_p f on every
// computable coefficient and return the eigenvalue a_p.
Rat hecke_eigenvalue(const ClassicalForm& f, long p);

// Multiplicative generation of a_1..a_{n_max} from prime eigenvalues:
// good p: a_{p^{r+1}} = a_p a_{p^r} - p^{k-1} a_{p^{r-1}}; p | N: a_{p^r} = a_p^r.
// Every prime <= n_max must have an eigenvalue supplied.
std::vector<Rat> coefficients_from_eigenvalues(const std::map<long, Rat>& ap,
                                               int k, long level, long n_max);

struct NewformRecord {
    std::string label;
    long level = 0;
    std::vector<std::pair<long, long>> eta_spec;  // (d, r_d)
    std::array<long, 5> curve{};                  // a1, a2, a3, a4, a6
};

// Weight-2 eta-product newforms with their modular elliptic curves,
// levels 11, 14, 15, 20, 24, 27, 32, 36.
const std::vector<NewformRecord>& newform_registry();
// nullptr when the level is not in the registry
const NewformRecord* registry_lookup(long level);

// q-expansion of a registry form (weight 2, cuspidal, normalized)
ClassicalForm newform_qexp(const NewformRecord& rec, long precision);

// raw JSON text the registry is parsed from (embedded at build time)
const char* newform_registry_json();

}  // namespace modwb
