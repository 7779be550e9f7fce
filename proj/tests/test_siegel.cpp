#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <tuple>

#include "modwb/errors.hpp"
#include "modwb/siegel.hpp"

using namespace modwb;
using C = std::complex<double>;

namespace {

IntMat im2(long a, long b, long c, long d) {
    return {{Int(a), Int(b)}, {Int(c), Int(d)}};
}

ComplexMat om2(C a, C b, C c) { return {{a, b}, {b, c}}; }

C j_factor(const SymplecticMatrix& m, const ComplexMat& om) {
    C e[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            C acc(m.D[static_cast<size_t>(i)][static_cast<size_t>(j)].get_d(), 0.0);
            for (int l = 0; l < 2; ++l)
                acc += C(m.C[static_cast<size_t>(i)][static_cast<size_t>(l)].get_d(), 0.0) *
                       om[static_cast<size_t>(l)][static_cast<size_t>(j)];
            e[i][j] = acc;
        }
    return e[0][0] * e[1][1] - e[0][1] * e[1][0];
}

double point_gap(const SiegelPoint& x, const SiegelPoint& y) {
    double worst = 0.0;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            worst = std::max(worst, std::abs(x.omega[i][j] - y.omega[i][j]));
    return worst;
}

// small pool of exactly-known symplectic matrices in Sp_4(Z)
std::vector<SymplecticMatrix> sample_pool() {
    std::vector<SymplecticMatrix> pool;
    pool.push_back(sp_identity(2));
    pool.push_back(sp_inversion(2));
    pool.push_back(sp_translation(im2(1, 0, 0, -1)));
    pool.push_back(sp_translation(im2(2, 1, 1, 0)));
    pool.push_back(sp_gl_embed(im2(1, 1, 0, 1)));
    pool.push_back(sp_gl_embed(im2(0, -1, 1, 0)));
    pool.push_back(sp_mul(pool[1], pool[3]));
    pool.push_back(sp_mul(pool[4], sp_mul(pool[2], pool[1])));
    return pool;
}

long brute_epsilon(const HalfIntegralMatrix& t, long box) {
    // automorphs of a reduced positive class have small entries; a box scan
    // is an independent oracle for epsilon_units
    long found = 0;
    for (long u11 = -box; u11 <= box; ++u11)
        for (long u12 = -box; u12 <= box; ++u12)
            for (long u21 = -box; u21 <= box; ++u21)
                for (long u22 = -box; u22 <= box; ++u22) {
                    long det = u11 * u22 - u12 * u21;
                    if (det != 1 && det != -1) continue;
                    long a2 = t.a * u11 * u11 + t.b * u11 * u21 + t.c * u21 * u21;
                    long c2 = t.a * u12 * u12 + t.b * u12 * u22 + t.c * u22 * u22;
                    long b2 = 2 * t.a * u11 * u12 + t.b * (u11 * u22 + u12 * u21) +
                              2 * t.c * u21 * u22;
                    if (a2 == t.a && b2 == t.b && c2 == t.c) ++found;
                }
    return found;
}

HalfIntegralMatrix apply_u(const HalfIntegralMatrix& t, long u11, long u12,
                           long u21, long u22) {
    HalfIntegralMatrix r;
    r.a = t.a * u11 * u11 + t.b * u11 * u21 + t.c * u21 * u21;
    r.c = t.a * u12 * u12 + t.b * u12 * u22 + t.c * u22 * u22;
    r.b = 2 * t.a * u11 * u12 + t.b * (u11 * u22 + u12 * u21) + 2 * t.c * u21 * u22;
    return r;
}

bool is_reduced(const HalfIntegralMatrix& t) {
    if (!(-t.a < t.b && t.b <= t.a && t.a <= t.c)) return false;
    if (t.a == t.c && t.b < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("symplectic constructors and recognition") {
    for (const auto& m : sample_pool()) CHECK(is_symplectic(m));
    auto bad = sp_identity(2);
    bad.B[0][1] = 1;  // asymmetric B breaks the relations
    CHECK_FALSE(is_symplectic(bad));
    CHECK_THROWS_AS(sp_gl_embed(im2(1, 1, 1, 1)), Error);
    CHECK_THROWS_AS(sp_translation(im2(0, 1, 2, 0)), Error);
}

TEST_CASE("Siegel point validation") {
    auto z = make_siegel_point(om2(C(0, 1.2), C(0, 0), C(0, 1.2)));
    CHECK(z.omega[0][0] == C(0, 1.2));
    ComplexMat asym = {{C(0, 1), C(0.3, 0.1)}, {C(0.2, 0.1), C(0, 1)}};
    CHECK_THROWS_AS(make_siegel_point(asym), NotInSiegelSpace);
    CHECK_THROWS_AS(make_siegel_point(om2(C(0, 1), C(0, 0), C(0, -1))),
                    NotInSiegelSpace);
    CHECK_THROWS_AS(make_siegel_point(om2(C(0, 1), C(0, 2), C(0, 1))),
                    NotInSiegelSpace);  // det of Im < 0
}

TEST_CASE("J fixes i I_2; action composes; cocycle holds") {
    auto z0 = make_siegel_point(om2(C(0, 1), C(0, 0), C(0, 1)));
    auto jz = sp_action(sp_inversion(2), z0);
    CHECK(point_gap(jz, z0) < 1e-12);

    auto z = make_siegel_point(om2(C(0.3, 1.1), C(0.2, 0.15), C(-0.4, 1.3)));
    auto pool = sample_pool();
    for (const auto& g1 : pool)
        for (const auto& g2 : pool) {
            auto composed = sp_action(sp_mul(g1, g2), z);
            auto stepped = sp_action(g1, sp_action(g2, z));
            CHECK(point_gap(composed, stepped) < 1e-10);
            C lhs = j_factor(sp_mul(g1, g2), z.omega);
            C rhs = j_factor(g1, sp_action(g2, z).omega) * j_factor(g2, z.omega);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }

    auto bad = sp_identity(2);
    bad.A[0][1] = 3;
    CHECK_THROWS_AS(sp_action(bad, z), NotSymplectic);
}

TEST_CASE("congruence membership chain") {
    const long n = 4;
    auto principal = sp_translation(im2(4, 8, 8, -4));
    CHECK(congruence_member(principal, n, SubgroupKind::Principal));
    auto gamma1_only = sp_translation(im2(1, 0, 0, 0));
    CHECK(congruence_member(gamma1_only, n, SubgroupKind::Gamma1));
    CHECK_FALSE(congruence_member(gamma1_only, n, SubgroupKind::Principal));
    auto gamma0_only = sp_gl_embed(im2(1, 1, 0, 1));
    CHECK(congruence_member(gamma0_only, n, SubgroupKind::Gamma0));
    CHECK_FALSE(congruence_member(gamma0_only, n, SubgroupKind::Gamma1));
    auto outside = sp_inversion(2);
    CHECK(congruence_member(outside, n, SubgroupKind::Full));
    CHECK_FALSE(congruence_member(outside, n, SubgroupKind::Gamma0));

    // inclusion chain Principal < Gamma1 < Gamma0 < Full on a sample set
    for (const auto& m : sample_pool()) {
        if (congruence_member(m, n, SubgroupKind::Principal))
            CHECK(congruence_member(m, n, SubgroupKind::Gamma1));
        if (congruence_member(m, n, SubgroupKind::Gamma1))
            CHECK(congruence_member(m, n, SubgroupKind::Gamma0));
        if (congruence_member(m, n, SubgroupKind::Gamma0))
            CHECK(congruence_member(m, n, SubgroupKind::Full));
        CHECK(congruence_member(m, 1, SubgroupKind::Principal));
    }
}

TEST_CASE("Gauss reduction: invariants, certificate, canonical form") {
    auto [r, u] = reduce_class({2, 2, 3});
    CHECK(is_reduced(r));
    CHECK(r.disc4() == HalfIntegralMatrix{2, 2, 3}.disc4());
    auto back = apply_u({2, 2, 3}, u.u11, u.u12, u.u21, u.u22);
    CHECK(back.a == r.a);
    CHECK(back.b == r.b);
    CHECK(back.c == r.c);

    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> small(-3, 3);
    auto classes = reduced_classes(60);
    for (const auto& t : classes) {
        CHECK(is_reduced(t));
        // random SL2 transform, then reduce back to the same representative
        long x = small(rng), y = small(rng);
        // U = T1^x * T2^y with T1 = (1 1; 0 1), T2 = (1 0; 1 1): det 1
        auto moved = apply_u(t, 1, x, 0, 1);
        moved = apply_u(moved, 1, 0, y, 1);
        auto [r2, u2] = reduce_class(moved);
        (void)u2;
        CHECK(r2.a == t.a);
        CHECK(r2.b == t.b);
        CHECK(r2.c == t.c);
    }
    CHECK_THROWS_AS(reduce_class({0, 0, 1}), NotPositiveDefinite);
    CHECK_THROWS_AS(reduce_class({1, 3, 1}), NotPositiveDefinite);
}

TEST_CASE("epsilon oracle values and invariance") {
    CHECK(epsilon_units({1, 0, 1}) == 8);
    CHECK(epsilon_units({1, 1, 1}) == 12);
    CHECK(epsilon_units({2, 1, 3}) == 2);
    CHECK(epsilon_units({1, 1, 2}) == 4);
    const std::vector<HalfIntegralMatrix> samples = {
        {1, 0, 1}, {1, 1, 1}, {2, 1, 3}, {1, 1, 2}, {1, 0, 2}, {3, 2, 5}};
    for (const auto& t : samples)
        CHECK(epsilon_units(t) == brute_epsilon(t, 3));
    // equivalence invariance
    auto moved = apply_u({2, 1, 3}, 1, 2, 1, 3);  // det 1
    CHECK(epsilon_units(moved) == 2);
    CHECK_THROWS_AS(epsilon_units({1, 2, 1}), NotPositiveDefinite);
}

TEST_CASE("reduced class enumeration matches a direct scan") {
    const long bound = 60;
    std::set<std::tuple<long, long, long>> brute;
    for (long a = 1; 3 * a * a <= bound; ++a)
        for (long b = -a + 1; b <= a; ++b)
            for (long c = a; 4 * a * c - b * b <= bound; ++c) {
                if (a == c && b < 0) continue;
                if (4 * a * c - b * b <= 0) continue;
                brute.insert({a, b, c});
            }
    auto got = reduced_classes(bound);
    CHECK(got.size() == brute.size());
    std::tuple<long, long, long> prev{0, 0, 0};
    for (const auto& t : got) {
        std::tuple<long, long, long> key{t.a, t.b, t.c};
        CHECK(brute.count(key) == 1);
        CHECK(prev < key);  // strict (a, b, c) ordering
        prev = key;
    }
    // GL2 representatives carry 0 <= b <= a <= c and absorb the b sign
    for (const auto& t : gl2_class_representatives(bound)) {
        CHECK(0 <= t.b);
        CHECK(t.b <= t.a);
        CHECK(t.a <= t.c);
        CHECK(brute.count({t.a, t.b, t.c}) == 1);
    }
}

TEST_CASE("Cohen H frozen values") {
    CHECK(cohen_h(1, 0) == Rat(-1, 12));
    CHECK(cohen_h(1, 3) == Rat(1, 3));
    CHECK(cohen_h(1, 4) == Rat(1, 2));
    CHECK(cohen_h(3, 0) == Rat(-1, 252));
    CHECK(cohen_h(3, 3) == Rat(-2, 9));
    CHECK(cohen_h(3, 4) == Rat(-1, 2));
    CHECK(cohen_h(5, 0) == Rat(-1, 132));
    CHECK(cohen_h(5, 3) == Rat(2, 3));
    // vanishing outside (-1)^r n = 0, 1 mod 4
    CHECK(cohen_h(1, 1) == 0);
    CHECK(cohen_h(1, 2) == 0);
    CHECK(cohen_h(2, 3) == 0);
    CHECK_THROWS_AS(cohen_h(0, 3), Error);
    CHECK_THROWS_AS(cohen_h(1, -1), Error);
}

TEST_CASE("Jacobi tables: Eisenstein and cusp") {
    auto e4 = jacobi_eisenstein(4, 8);
    CHECK(e4.at(0) == 1);
    CHECK(e4.at(1) == 0);
    CHECK(e4.at(2) == 0);
    CHECK(e4.at(3) == 56);
    CHECK(e4.at(4) == 126);
    auto e6 = jacobi_eisenstein(6, 4);
    CHECK(e6.at(3) == -88);
    CHECK(e6.at(4) == -330);
    CHECK_THROWS_AS(e4.at(9), InsufficientCoefficients);
    CHECK_THROWS_AS(jacobi_eisenstein(5, 8), UnsupportedWeight);
    CHECK_THROWS_AS(jacobi_eisenstein(2, 8), UnsupportedWeight);

    const std::vector<long> phi10 = {0, 0, 0,    1,    -2, 0, 0,    -16, 36,
                                     0, 0, 99,   -272, 0,  0, -240, 1056};
    const std::vector<long> phi12 = {0, 0, 0,     1,   10, 0, 0,     -88, -132,
                                     0, 0, 1275,  736, 0,  0, -8040, -2880};
    auto c10 = jacobi_cusp_form(10, 16);
    auto c12 = jacobi_cusp_form(12, 16);
    for (long d = 0; d <= 16; ++d) {
        CHECK(c10.at(d) == phi10[static_cast<size_t>(d)]);
        CHECK(c12.at(d) == phi12[static_cast<size_t>(d)]);
    }
    CHECK_THROWS_AS(jacobi_cusp_form(8, 16), UnsupportedWeight);
}

TEST_CASE("Maass lift frozen coefficients") {
    auto chi10 = build_chi(10, 20);
    CHECK(chi10.weight == 10);
    CHECK(chi10.coefficient({1, 1, 1}) == 1);
    CHECK(chi10.coefficient({1, 0, 1}) == -2);
    CHECK(chi10.coefficient({1, 0, 2}) == 36);
    CHECK(chi10.coefficient({1, 0, 3}) == -272);
    CHECK(chi10.coefficient({1, 0, 4}) == 1056);
    CHECK(chi10.coefficient({1, 1, 2}) == -16);
    CHECK(chi10.coefficient({1, 1, 3}) == 99);
    CHECK(chi10.coefficient({1, 1, 4}) == -240);
    // divisor sum: a((2,0,2)) = c(16) + 2^9 c(4)
    CHECK(chi10.coefficient({2, 0, 2}) == 32);
    CHECK(chi10.coefficient({2, 1, 2}) == -240);
    CHECK(chi10.coefficient({2, 2, 2}) == 240);
    // reduction inside coefficient(): (2,-2,2) ~ (2,2,2)
    CHECK(chi10.coefficient({2, -2, 2}) == 240);
    // cuspidal: semidefinite classes vanish
    CHECK(chi10.coefficient({0, 0, 0}) == 0);
    CHECK(chi10.coefficient({3, 0, 0}) == 0);

    auto chi12 = build_chi(12, 16);
    CHECK(chi12.coefficient({1, 1, 1}) == 1);
    CHECK(chi12.coefficient({1, 0, 1}) == 10);

    CHECK_THROWS_AS(chi10.coefficient({1, 3, 1}), Error);
    CHECK_THROWS_AS(chi10.coefficient({-1, 0, 1}), Error);
    CHECK_THROWS_AS(chi10.coefficient({5, 0, 5}), InsufficientCoefficients);
    CHECK_THROWS_AS(chi10.coefficient({0, 0, 25}), InsufficientCoefficients);
    CHECK_THROWS_AS(maass_lift(jacobi_eisenstein(4, 40), 40), Error);
    CHECK_THROWS_AS(maass_lift(jacobi_cusp_form(10, 10), 40),
                    InsufficientCoefficients);
}

TEST_CASE("Phi operator kills the lifts of cusp forms") {
    auto chi10 = build_chi(10, 40);
    auto phi = phi_operator(chi10);
    CHECK(phi.weight == 10);
    CHECK(phi.expansion.is_zero());
    CHECK(phi.expansion.precision() == 40);
}

TEST_CASE("Maass Dirichlet series: convergence frame and monotonicity") {
    auto chi = build_chi(10, 400);
    C s(12.0, 0.0);
    auto v100 = maass_dirichlet(chi, s, 100);
    auto v200 = maass_dirichlet(chi, s, 200);
    auto v400 = maass_dirichlet(chi, s, 400);
    CHECK(v400.terms_used > v200.terms_used);
    CHECK(v200.tail_bound <= v100.tail_bound);
    CHECK(v400.tail_bound <= v200.tail_bound);
    CHECK(std::abs(v400.value - v200.value) <=
          v200.tail_bound + v400.tail_bound + 1e-12);
    CHECK(std::abs(v400.value) > 1.0);  // leading class contributes 1/eps
    CHECK_THROWS_AS(maass_dirichlet(chi, C(6.0, 0.0), 400), DivergenceRisk);
    CHECK_THROWS_AS(maass_dirichlet(chi, s, 500), InsufficientCoefficients);
}

TEST_CASE("evaluate_siegel satisfies the weight-10 transformation law") {
    auto chi = build_chi(10, 150);
    auto z = make_siegel_point(om2(C(0.0, 1.1), C(0.2, 0.15), C(0.0, 1.3)));
    auto base = evaluate_siegel(chi, z, 12);
    CHECK(std::abs(base.value) > 1e-9);  // nonzero away from the diagonal

    std::vector<SymplecticMatrix> gammas = {
        sp_inversion(2), sp_translation(im2(1, 0, 0, -1)),
        sp_translation(im2(0, 1, 1, 1)), sp_gl_embed(im2(1, 1, 0, 1)),
        sp_gl_embed(im2(0, -1, 1, 0))};
    for (const auto& g : gammas) {
        auto moved = evaluate_siegel(chi, sp_action(g, z), 12);
        C j = j_factor(g, z.omega);
        C predicted = std::pow(j, 10) * base.value;
        double budget = moved.tail_bound +
                        std::pow(std::abs(j), 10.0) * base.tail_bound + 1e-9;
        CHECK(std::abs(moved.value - predicted) <= budget);
    }

    // translations leave the value exactly invariant up to truncation
    auto shifted = evaluate_siegel(
        chi, sp_action(sp_translation(im2(1, 0, 0, -1)), z), 12);
    CHECK(std::abs(shifted.value - base.value) <=
          shifted.tail_bound + base.tail_bound + 1e-12);

    CHECK_THROWS_AS(evaluate_siegel(build_chi(10, 100), z, 11),
                    InsufficientCoefficients);
}
