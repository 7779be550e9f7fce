#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "modwb/dirichlet.hpp"
#include "modwb/forms.hpp"
#include "modwb/poly.hpp"

namespace modwb {

// p-Satake parameters (alpha_0, ..., alpha_g) in the scaling fixed by
// alpha_0^2 prod_{i>=1} alpha_i = p^{gk - g(g+1)/2}, the one under which the
// g = 1 spinor factor is the Hecke factor 1 - a_p t + p^{k-1} t^2.
struct SatakeData {
    long p = 2;
    int g = 1;
    int k = 12;
    std::vector<std::complex<double>> alpha;  // size g + 1
    // request certified integer reconstruction of local factors
    bool exact = false;
    // exact Hecke eigenvalue backing the g = 1 exact paths, when known
    std::optional<Rat> exact_ap;
};

// |alpha_0^2 prod alpha_i - p^{gk - g(g+1)/2}| relative to the target
double satake_consistency(const SatakeData& sd);

// Degree 2^g spinor factor: product of (1 - alpha_0 alpha_{i_1}...alpha_{i_r} t)
// over all subsets of {1..g}. With sd.exact, coefficients are certified
// integers: the low half is rounded from numerics (refused when the scale
// makes rounding ambiguous) and the top half follows from the pairing
// c_{2^g - i} = w^{2^{g-1} - i} c_i, w = p^{gk - g(g+1)/2}, computed exactly.
Polynomial spinor_local(const SatakeData& sd);

// Degree 2g+1 standard factor (1 - t) prod (1 - alpha_i t)(1 - alpha_i^{-1} t).
// Exact rational route at g = 1 when exact_ap is present:
// (1 - t)(1 - ((a_p^2 - 2p^{k-1})/p^{k-1}) t + t^2).
Polynomial standard_local(const SatakeData& sd);

// degree-2 Hecke eigenvalue pair at p
struct EigenvalueData {
    long p = 2;
    Rat lambda_p;
    Rat lambda_p2;
    int k = 10;
    int g = 2;
};

// 1 - l(p) t + (l(p)^2 - l(p^2) - p^{2k-4}) t^2 - l(p) p^{2k-3} t^3 + p^{4k-6} t^4
Polynomial spinor_local_g2_from_eigenvalues(const EigenvalueData& ev);

// Exact degree-5 standard factor of the degree-2 weight-k lift of f: with
// Satake parameters grouped as alpha_0 = p^{k-1} paired against p^{k-2},
// the standard set {alpha_i^{+-1}} is {a/p^{k-1}, b/p^{k-1}, a/p^{k-2},
// b/p^{k-2}} for f's inverse roots a, b, giving
// (1 - t)(1 - (a_p/p^{k-1}) t + (1/p) t^2)(1 - (a_p/p^{k-2}) t + p t^2).
Polynomial standard_local_g2_lift(const Rat& ap_f, int k, long p);

// Eigenvalues of the degree-2 weight-k lift of the weight 2k-2 eigenform f:
// l(p) = a_p(f) + p^{k-1} + p^{k-2};
// l(p^2) = a_{p^2}(f) + p^{2k-2} + p^{2k-3} + a_p(f)(p^{k-1} + p^{k-2}),
// the value forced by the quartic's factorization through f's Hecke factor.
EigenvalueData sk_eigenvalues(const Rat& ap_f, const Rat& ap2_f, int k, long p);

// Numeric Satake recovery from a degree-2^g spinor factor (g <= 2): roots
// are grouped by the pairing u * u' = p^{gk - g(g+1)/2} and validated by a
// spinor_local round trip within 1e-8.
SatakeData satake_from_local(const Polynomial& poly, long p, int g, int k);

// Euler product over the supplied primes <= p_max of local_p(p^{-s})^{-1}.
// The tail assumption |inverse roots| <= p^growth_exponent is read off the
// supplied factors themselves and recorded.
DirichletEval euler_product_eval(const std::map<long, Polynomial>& local,
                                 std::complex<double> s, long p_max);

// Two-route check of the degree-1 standard-zeta square identity
//   D_f(s - k + 1) = prod_p (1 - p^{2(k-s-1)})^{-1} * sum_n a(n^2) n^{-s}.
// rhs_printed carries the variant with factor prod_p (1 + p^{k-s-1})^{-1};
// the two readings differ by zeta(s - k + 1).
struct SquareIdentityReport {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    std::complex<double> rhs_printed{0.0, 0.0};
    double difference = 0.0;
    double combined_tail = 0.0;  // analytic tails plus roundoff allowance
};

// f must carry coefficients to n_max (prime data is read off the expansion)
SquareIdentityReport standard_square_identity(const ClassicalForm& f, double s,
                                              long p_max, long n_max);

}  // namespace modwb
