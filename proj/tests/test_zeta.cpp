#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <map>

#include "modwb/dirichlet.hpp"
#include "modwb/errors.hpp"
#include "modwb/forms.hpp"
#include "modwb/zeta.hpp"

using namespace modwb;
using C = std::complex<double>;

namespace {

// numeric Satake data of a weight-k eigenform from its exact a_p, in the
// scaling alpha_0^2 alpha_1 = p^{k-1}
SatakeData hecke_satake(const Rat& ap, int k, long p, bool exact) {
    double a = ap.get_d();
    double w = std::pow(static_cast<double>(p), k - 1);
    C alpha = (C(a, 0.0) + std::sqrt(C(a * a - 4.0 * w, 0.0))) / 2.0;
    C beta = C(w, 0.0) / alpha;  // exact product relation, no cancellation
    SatakeData sd;
    sd.p = p;
    sd.g = 1;
    sd.k = k;
    sd.alpha = {alpha, beta / alpha};
    sd.exact = exact;
    return sd;
}

double coeff_gap(const Polynomial& a, const Polynomial& b) {
    double worst = 0.0;
    long deg = std::max(a.degree(), b.degree());
    for (long i = 0; i <= deg; ++i) {
        double want = b[i].get_d();
        worst = std::max(worst, std::abs(a[i].get_d() - want) /
                                    std::max(1.0, std::abs(want)));
    }
    return worst;
}

ClassicalForm weight18_form(long precision) {
    auto d = delta_qexp(precision);
    auto e6 = eisenstein_qexp(6, precision);
    ClassicalForm f{d.expansion * e6.expansion, 18, 1, true};
    return f;
}

}  // namespace

TEST_CASE("certified spinor factor equals the Hecke factor at g = 1") {
    auto delta = delta_qexp(60);
    for (long p : primes_up_to(50)) {
        Rat ap = delta.expansion.coeff(p);
        auto sd = hecke_satake(ap, 12, p, /*exact=*/true);
        CHECK(satake_consistency(sd) < 1e-12);
        Polynomial want({Rat(1), -ap, Rat(int_pow(p, 11))});
        CHECK(spinor_local(sd) == want);
    }
    // registry weight-2 form, good primes only
    auto rec = registry_lookup(11);
    REQUIRE(rec != nullptr);
    auto f = newform_qexp(*rec, 60);
    for (long p : primes_up_to(50)) {
        if (p == 11) continue;
        Rat ap = f.expansion.coeff(p);
        auto sd = hecke_satake(ap, 2, p, /*exact=*/true);
        CHECK(spinor_local(sd) == Polynomial({Rat(1), -ap, Rat(p)}));
    }
}

TEST_CASE("certified rounding refuses ambiguous scales") {
    SatakeData sd;
    sd.p = 2;
    sd.g = 1;
    sd.k = 30;
    double w = std::pow(2.0, 29);
    sd.alpha = {C(1e20, 0.0), C(w / 1e40, 0.0)};
    sd.exact = true;
    CHECK_THROWS_AS(spinor_local(sd), UnresolvedSatake);
    sd.exact = false;  // numeric route still answers
    CHECK(spinor_local(sd).degree() == 2);
}

TEST_CASE("exact standard factor at g = 1") {
    SatakeData sd;
    sd.p = 2;
    sd.g = 1;
    sd.k = 12;
    sd.alpha = {C(1, 0), C(1, 0)};
    sd.exact_ap = Rat(-24);
    auto st = standard_local(sd);
    CHECK(st == Polynomial({Rat(1), Rat(23, 32), Rat(-23, 32), Rat(-1)}));

    // antisymmetric palindrome c_{3-i} = -c_i for every registry form
    auto delta = delta_qexp(25);
    for (long p : primes_up_to(20)) {
        SatakeData s2;
        s2.p = p;
        s2.g = 1;
        s2.k = 12;
        s2.alpha = {C(1, 0), C(1, 0)};
        s2.exact_ap = delta.expansion.coeff(p);
        auto poly = standard_local(s2);
        CHECK(poly.degree() == 3);
        for (long i = 0; i <= 3; ++i) CHECK(poly[3 - i] == -poly[i]);
    }

    SatakeData zero;
    zero.p = 2;
    zero.g = 1;
    zero.k = 12;
    zero.alpha = {C(1, 0), C(0, 0)};
    CHECK_THROWS_AS(standard_local(zero), SingularSatake);
}

TEST_CASE("lift eigenvalue data and quartic factorization") {
    auto f18 = weight18_form(30);
    CHECK(f18.expansion.coeff(2) == -528);
    for (long p : {2L, 3L, 5L}) {
        Rat ap = f18.expansion.coeff(p);
        Rat ap2 = f18.expansion.coeff(p * p);
        auto ev = sk_eigenvalues(ap, ap2, 10, p);
        Rat p9(int_pow(p, 9)), p8(int_pow(p, 8)), p17(int_pow(p, 17));
        CHECK(ev.lambda_p == ap + p9 + p8);
        auto quartic = spinor_local_g2_from_eigenvalues(ev);
        auto target = Polynomial({Rat(1), -p9}) * Polynomial({Rat(1), -p8}) *
                      Polynomial({Rat(1), -ap, p17});
        CHECK(quartic == target);
    }
    auto ev2 = sk_eigenvalues(Rat(-528), weight18_form(10).expansion.coeff(4),
                              10, 2);
    CHECK(ev2.lambda_p == 240);
    auto q2 = spinor_local_g2_from_eigenvalues(ev2);
    CHECK(q2 == Polynomial({Rat(1), Rat(-240), Rat(-143360), Rat(-31457280),
                            Rat(int_pow(2, 34))}));
    EigenvalueData wrong_g;
    wrong_g.g = 1;
    CHECK_THROWS_AS(spinor_local_g2_from_eigenvalues(wrong_g), Error);
}

TEST_CASE("standard factor of the lift: exact formula vs numeric Satake") {
    auto f18 = weight18_form(30);
    for (long p : {2L, 3L, 5L}) {
        Rat ap = f18.expansion.coeff(p);
        auto ev = sk_eigenvalues(ap, f18.expansion.coeff(p * p), 10, p);
        auto quartic = spinor_local_g2_from_eigenvalues(ev);
        auto sd = satake_from_local(quartic, p, 2, 10);
        CHECK(satake_consistency(sd) < 1e-8);
        auto numeric = standard_local(sd);
        auto exact = standard_local_g2_lift(ap, 10, p);
        CHECK(numeric.degree() == 5);
        CHECK(coeff_gap(numeric, exact) < 1e-8);
        // antisymmetric palindrome at degree 5 as well, exactly
        for (long i = 0; i <= 5; ++i) CHECK(exact[5 - i] == -exact[i]);
    }
    CHECK_THROWS_AS(standard_local_g2_lift(Rat(1), 3, 2), Error);
}

TEST_CASE("satake round trips") {
    // g = 1 from the Delta Hecke factor at p = 2
    Polynomial hecke({Rat(1), Rat(24), Rat(2048)});
    auto sd = satake_from_local(hecke, 2, 1, 12);
    CHECK(sd.alpha.size() == 2);
    CHECK(satake_consistency(sd) < 1e-10);
    auto back = spinor_local(sd);
    CHECK(coeff_gap(back, hecke) < 1e-8);
    auto st = standard_local(sd);  // numeric route, no exact_ap
    CHECK(coeff_gap(st, Polynomial({Rat(1), Rat(23, 32), Rat(-23, 32),
                                    Rat(-1)})) < 1e-8);

    // g = 2 from the lift quartic at p = 3
    auto f18 = weight18_form(10);
    auto ev = sk_eigenvalues(f18.expansion.coeff(3), f18.expansion.coeff(9),
                             10, 3);
    auto quartic = spinor_local_g2_from_eigenvalues(ev);
    auto sd2 = satake_from_local(quartic, 3, 2, 10);
    CHECK(sd2.alpha.size() == 3);
    CHECK(coeff_gap(spinor_local(sd2), quartic) < 1e-8);

    CHECK_THROWS_AS(satake_from_local(Polynomial({Rat(1), Rat(1)}), 2, 1, 12),
                    DegreeMismatch);
    CHECK_THROWS_AS(satake_from_local(hecke, 2, 3, 12), UnresolvedSatake);
}

TEST_CASE("euler product vs direct Dirichlet series for Delta") {
    auto delta = delta_qexp(100);
    std::map<long, Polynomial> local;
    for (long p : primes_up_to(100))
        local[p] = Polynomial({Rat(1), -delta.expansion.coeff(p),
                               Rat(int_pow(p, 11))});
    C s(14.0, 0.0);
    auto euler = euler_product_eval(local, s, 100);
    CHECK(euler.terms_used == 25);
    CHECK(euler.growth_exponent == doctest::Approx(5.5).epsilon(1e-6));
    auto series = dirichlet_partial(
        [&](long n) { return delta.expansion.coeff(n); }, s, 100, 6.5);
    double gap = std::abs(euler.value - series.value);
    CHECK(gap <= euler.tail_bound + series.tail_bound + 1e-12);
    CHECK(std::abs(euler.value) > 0.5);

    CHECK_THROWS_AS(euler_product_eval(local, C(6.0, 0.0), 100),
                    DivergenceRisk);
    std::map<long, Polynomial> pole{{2, Polynomial({Rat(1), Rat(-2)})}};
    CHECK_THROWS_AS(euler_product_eval(pole, C(1.0, 0.0), 2), PoleAtPrime);
    std::map<long, Polynomial> empty;
    auto trivial = euler_product_eval(empty, s, 100);
    CHECK(trivial.value == C(1.0, 0.0));
    CHECK(trivial.tail_bound == 0.0);
}

TEST_CASE("standard square identity for Delta at desk scale") {
    auto delta = delta_qexp(500);
    auto rep = standard_square_identity(delta, 18.0, 100, 500);
    CHECK(rep.difference <= rep.combined_tail);
    CHECK(rep.difference < 1e-9);
    // the variant with prod (1 + p^{k-s-1})^{-1} misses by zeta(s - k + 1)
    CHECK(std::abs(rep.lhs - rep.rhs_printed) > 100.0 * rep.combined_tail);

    CHECK_THROWS_AS(standard_square_identity(delta, 12.5, 100, 500),
                    DivergenceRisk);
    CHECK_THROWS_AS(standard_square_identity(delta_qexp(50), 18.0, 100, 500),
                    PrecisionExhausted);
}
