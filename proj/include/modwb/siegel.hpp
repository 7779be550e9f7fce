#pragma once

#include <complex>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "modwb/dirichlet.hpp"
#include "modwb/forms.hpp"
#include "modwb/numbers.hpp"

namespace modwb {

using IntMat = std::vector<std::vector<Int>>;
using ComplexMat = std::vector<std::vector<std::complex<double>>>;

// gamma = (A B; C D) with g x g integer blocks, gamma^T J gamma = J
struct SymplecticMatrix {
    int g = 1;
    IntMat A, B, C, D;
};

SymplecticMatrix sp_identity(int g);
// J = (0 I; -I 0)
SymplecticMatrix sp_inversion(int g);
// (I S; 0 I) for symmetric integer S
SymplecticMatrix sp_translation(const IntMat& s);
// (U^T 0; 0 U^{-1}) for unimodular U
SymplecticMatrix sp_gl_embed(const IntMat& u);
SymplecticMatrix sp_mul(const SymplecticMatrix& x, const SymplecticMatrix& y);
bool is_symplectic(const SymplecticMatrix& m);

// point of the Siegel space H_g: symmetric Omega with Im(Omega) > 0
struct SiegelPoint {
    ComplexMat omega;
};
// validates exact symmetry and positive definiteness of the imaginary part
// (leading principal minors > 1e-12)
SiegelPoint make_siegel_point(const ComplexMat& omega);
// (A Omega + B)(C Omega + D)^{-1}
SiegelPoint sp_action(const SymplecticMatrix& m, const SiegelPoint& z);

enum class SubgroupKind { Full, Principal, Gamma1, Gamma0 };
// Full: any symplectic; Principal: gamma = I mod N; Gamma1: A = D = I,
// C = 0 mod N; Gamma0: C = 0 mod N. Exact residue tests.
bool congruence_member(const SymplecticMatrix& m, long n, SubgroupKind kind);

// T = (a, b/2; b/2, c) half-integral; disc4 = 4 det T = 4ac - b^2
struct HalfIntegralMatrix {
    long a = 0, b = 0, c = 0;
    long disc4() const { return 4 * a * c - b * b; }
    long trace() const { return a + c; }
    bool positive_definite() const { return a > 0 && disc4() > 0; }
    bool semi_positive() const { return a >= 0 && c >= 0 && disc4() >= 0; }
};

struct Unimodular2 {
    long u11 = 1, u12 = 0, u21 = 0, u22 = 1;
};

// Gauss reduction of a positive definite class: returns (T', U) with
// T' = U^T T U, -a < b <= a <= c, and b >= 0 when a = c
std::pair<HalfIntegralMatrix, Unimodular2> reduce_class(HalfIntegralMatrix t);

// number of U in GL_2(Z) with U^T T U = T
long epsilon_units(const HalfIntegralMatrix& t);

// SL2-reduced positive definite classes with 4 det T <= det_bound,
// ordered by (a, b, c)
std::vector<HalfIntegralMatrix> reduced_classes(long det_bound);
// one representative per GL_2(Z)-class: 0 <= b <= a <= c
std::vector<HalfIntegralMatrix> gl2_class_representatives(long det_bound);

// Cohen's function H(r, n), exact rational; H(r, 0) = zeta(1 - 2r)
Rat cohen_h(long r, long n);

// c_k(D) tables for weight-k index-1 Jacobi series, D = 4n - r^2 >= 0
struct JacobiTable {
    int weight = 0;
    long d_max = 0;
    std::map<long, Rat> c;
    const Rat& at(long d) const;
};

// Eisenstein coefficients c_k(D) = H(k-1, D)/H(k-1, 0), c_k(0) = 1
JacobiTable jacobi_eisenstein(int k, long d_max);
// cuspidal phi_{k,1} for k in {10, 12}, normalized c(3) = 1
JacobiTable jacobi_cusp_form(int k, long d_max);

// degree-2 Fourier coefficient table over reduced classes
struct SiegelExpansion {
    int weight = 0;
    long level = 1;
    // coverage: positive classes with 4 det T <= det_bound and semidefinite
    // classes (n, 0, 0) with n <= det_bound
    long det_bound = 0;
    std::map<std::tuple<long, long, long>, Rat> coeffs;

    // a(T) for semi-positive T, resolved through class reduction;
    // reads past coverage throw InsufficientCoefficients
    Rat coefficient(const HalfIntegralMatrix& t) const;
};

// a(T) = sum_{d | gcd(a,b,c)} d^{k-1} c(4 det T / d^2) for T > 0
SiegelExpansion maass_lift(const JacobiTable& phi, long det_bound);
// the weight-10/12 level-1 cusp eigenforms, normalized a((1,1,1)) = 1
SiegelExpansion build_chi(int k, long det_bound);

// degree-lowering operator: q-series n -> a((n, 0, 0)), precision det_bound
ClassicalForm phi_operator(const SiegelExpansion& f);

// D(F,s) = sum over GL_2(Z)-classes T > 0 of a(T)/eps(T) (det T)^{-s},
// truncated at 4 det T <= det_bound
DirichletEval maass_dirichlet(const SiegelExpansion& f, std::complex<double> s,
                              long det_bound);

struct SiegelValue {
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
};

// truncated Fourier sum over all semi-positive T with trace <= trace_bound;
// tail estimated from exponential decay in the smallest eigenvalue of Im(Omega)
SiegelValue evaluate_siegel(const SiegelExpansion& f, const SiegelPoint& z,
                            long trace_bound);

}  // namespace modwb
