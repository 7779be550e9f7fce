#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "modwb/dirichlet.hpp"
#include "modwb/poly.hpp"

namespace modwb {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
// Local operations assume the model is minimal at the primes they touch
// (true for every registry curve and for the small random models exercised).
struct EllipticCurveQ {
    long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

    Int b2() const; Int b4() const; Int b6() const; Int b8() const;
    Int c4() const; Int c6() const;
    Int discriminant() const;
};

// Number of projective points of the reduction mod p, singular point
// included when reduction is bad.
long ec_point_count(const EllipticCurveQ& e, long p);

// Trace of Frobenius a_p = p + 1 - #E(F_p); requires good reduction.
long ec_ap(const EllipticCurveQ& e, long p);

enum class ReductionType { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };
ReductionType reduction_type(const EllipticCurveQ& e, long p);

struct LocalFactor {
    long p = 0;
    std::string kind;  // "frobenius", "spinor", "standard"
    Polynomial poly;
};

// Euler factor at p: good 1 - a_p t + p t^2; multiplicative 1 -+ t; additive 1.
LocalFactor ec_local_factor(const EllipticCurveQ& e, long p);

// Genus-2 curve y^2 = f(x), f integral of degree 5 or 6 and squarefree.
struct Genus2CurveQ {
    Polynomial f;
    void validate() const;  // degree and squarefreeness over Q
};

// true when the reduction mod an odd prime p is a smooth genus-2 curve
// (degree preserved and f mod p squarefree)
bool genus2_good_reduction(const Genus2CurveQ& c, long p);

// (|C(F_p)|, |C(F_{p^2})|) of the smooth projective model; p odd, good.
std::pair<long, long> genus2_counts(const Genus2CurveQ& c, long p);

// Frobenius characteristic polynomial (inverse-root form)
// g=2: 1 + c1 t + c2 t^2 + p c1 t^3 + p^2 t^4, c1 = N1-(p+1),
//      c2 = (N2-(p^2+1)+c1^2)/2;  g=1: 1 + c1 t + p t^2 (N2 ignored).
struct FrobeniusPoly {
    long p = 0;
    int g = 2;
    Polynomial poly;
};
FrobeniusPoly frobenius_poly(long n1, long n2, long p, int g = 2);

// exact Weil-symmetry residual check: c_{2g-i} == p^{g-i} c_i
bool weil_symmetric(const FrobeniusPoly& f);
// numeric check that every complex root has modulus p^{-1/2} within tol
double max_root_modulus_error(const FrobeniusPoly& f);

// Local L-factor of the abelian variety attached to a Frobenius polynomial
// (the polynomial itself, tagged).
LocalFactor abelian_local_lfactor(const FrobeniusPoly& f);

struct ApTable {
    std::string source;  // model description
    long bound = 0;
    std::map<long, long> ap;  // p -> a_p (bad primes carry the local invariant)
    std::set<long> bad;
};
ApTable ec_ap_table(const EllipticCurveQ& e, long bound);

// Truncated Euler product over p <= p_max, cross-expanded as a Dirichlet
// series over n <= p_max from the same local data. The two values agree
// within the combined recorded tails; both are returned.
struct GlobalLValue {
    DirichletEval euler;
    DirichletEval series;
    double fp_allowance = 0.0;  // roundoff term included in comparisons
};
GlobalLValue global_l_eval(const std::map<long, LocalFactor>& factors,
                           std::complex<double> s, long p_max);

}  // namespace modwb
