#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "json.hpp"
#include "modwb/errors.hpp"
#include "modwb/forms.hpp"
#include "modwb/numbers.hpp"

using namespace modwb;

TEST_CASE("normalized Eisenstein series") {
    auto e4 = eisenstein_qexp(4, 6);
    CHECK(e4.expansion.coeff(0) == Rat(1));
    CHECK(e4.expansion.coeff(1) == Rat(240));
    CHECK(e4.expansion.coeff(2) == Rat(2160));
    CHECK(e4.expansion.coeff(3) == Rat(6720));
    auto e6 = eisenstein_qexp(6, 4);
    CHECK(e6.expansion.coeff(1) == Rat(-504));
    CHECK(e6.expansion.coeff(2) == Rat(-16632));
    CHECK(e6.weight == 6);
    CHECK_FALSE(e6.is_cusp);
    CHECK_THROWS_AS(eisenstein_qexp(2, 10), UnsupportedWeight);
    CHECK_THROWS_AS(eisenstein_qexp(5, 10), UnsupportedWeight);
}

TEST_CASE("discriminant form: Eisenstein route equals eta route") {
    auto d = delta_qexp(120);
    auto eta = eta_expand({{1, 24}}, 120);
    for (long n = 0; n <= 120; ++n) CHECK(d.expansion.coeff(n) == eta.coeff(n));
    CHECK(d.weight == 12);
    CHECK(d.is_cusp);
}

TEST_CASE("Hecke operator on the discriminant form") {
    auto d = delta_qexp(100);
    auto t2 = hecke_tp(d, 2);
    CHECK(t2.expansion.precision() == 50);
    for (long n = 0; n <= 50; ++n)
        CHECK(t2.expansion.coeff(n) == Rat(-24) * d.expansion.coeff(n));
    CHECK(hecke_eigenvalue(d, 2) == Rat(-24));
    CHECK(hecke_eigenvalue(d, 3) == Rat(252));
    CHECK(hecke_eigenvalue(d, 5) == Rat(4830));
}

TEST_CASE("tau satisfies the prime-square recursion") {
    auto d = delta_qexp(450);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
        Rat tp = d.expansion.coeff(p);
        Rat tp2 = d.expansion.coeff(p * p);
        CHECK(tp2 == tp * tp - Rat(int_pow(p, 11)));
    }
}

TEST_CASE("hecke_eigenvalue rejects non-eigen data") {
    auto e4 = eisenstein_qexp(4, 40);
    // a_1 = 240 != 1: not normalized
    CHECK_THROWS_AS(hecke_eigenvalue(e4, 2), NotNormalized);
    // normalized but not an eigenvector: delta + q-normalized junk
    auto d = delta_qexp(40);
    ClassicalForm f = d;
    f.expansion.set_coeff(7, d.expansion.coeff(7) + 1);
    CHECK_THROWS_AS(hecke_eigenvalue(f, 2), NotAnEigenvector);
}

TEST_CASE("hecke_tp requires p coprime to the level") {
    const auto* rec = registry_lookup(11);
    REQUIRE(rec != nullptr);
    auto f = newform_qexp(*rec, 60);
    CHECK_THROWS_AS(hecke_tp(f, 11), BadPrimeForLevel);
    CHECK(hecke_eigenvalue(f, 3) == Rat(-1));
}

TEST_CASE("coefficient reconstruction from eigenvalues") {
    auto d = delta_qexp(50);
    std::map<long, Rat> ap;
    for (long p : primes_up_to(50)) ap[p] = d.expansion.coeff(p);
    auto coeffs = coefficients_from_eigenvalues(ap, 12, 1, 50);
    REQUIRE(coeffs.size() == 51);
    for (long n = 1; n <= 50; ++n) CHECK(coeffs[n] == d.expansion.coeff(n));

    ap.erase(47);
    CHECK_THROWS_AS(coefficients_from_eigenvalues(ap, 12, 1, 50),
                    IncompleteEigenData);
}

TEST_CASE("bad primes use the geometric recursion a_{p^r} = a_p^r") {
    const auto* rec = registry_lookup(11);
    REQUIRE(rec != nullptr);
    auto f = newform_qexp(*rec, 125);
    std::map<long, Rat> ap;
    for (long p : primes_up_to(125)) ap[p] = f.expansion.coeff(p);
    auto coeffs = coefficients_from_eigenvalues(ap, 2, 11, 125);
    for (long n = 1; n <= 125; ++n) CHECK(coeffs[n] == f.expansion.coeff(n));
    // 11 | N: a_{121} = a_11^2, not a_11^2 - 11 a_1
    CHECK(coeffs[121] == f.expansion.coeff(11) * f.expansion.coeff(11));
}

TEST_CASE("registry content") {
    const auto& reg = newform_registry();
    REQUIRE(reg.size() == 8);
    std::set<long> levels;
    for (const auto& r : reg) levels.insert(r.level);
    CHECK(levels == std::set<long>{11, 14, 15, 20, 24, 27, 32, 36});
    CHECK(registry_lookup(13) == nullptr);
    CHECK(registry_lookup(11)->label == "11a");

    for (const auto& r : reg) {
        auto f = newform_qexp(r, 30);
        CHECK(f.weight == 2);
        CHECK(f.level == r.level);
        CHECK(f.is_cusp);
        CHECK(f.expansion.coeff(0) == Rat(0));
        CHECK(f.expansion.coeff(1) == Rat(1));
        // eta data is consistent: sum d r_d = 24 for a weight-2 shape with
        // leading exponent 1
        long wsum = 0, dsum = 0;
        for (auto [d, rd] : r.eta_spec) {
            wsum += rd;
            dsum += d * rd;
        }
        CHECK(wsum == 4);   // weight 2 = 4/2
        CHECK(dsum == 24);  // leading exponent 24/24 = 1
    }
}

TEST_CASE("registry spot values against published tables") {
    // frozen a_p for the level-14 and level-27 newforms
    const auto* r14 = registry_lookup(14);
    REQUIRE(r14 != nullptr);
    auto f14 = newform_qexp(*r14, 20);
    CHECK(f14.expansion.coeff(2) == Rat(-1));
    CHECK(f14.expansion.coeff(3) == Rat(-2));
    CHECK(f14.expansion.coeff(5) == Rat(0));
    CHECK(f14.expansion.coeff(7) == Rat(1));
    CHECK(f14.expansion.coeff(13) == Rat(-4));

    const auto* r27 = registry_lookup(27);
    REQUIRE(r27 != nullptr);
    auto f27 = newform_qexp(*r27, 20);
    CHECK(f27.expansion.coeff(2) == Rat(0));
    CHECK(f27.expansion.coeff(4) == Rat(-2));
    CHECK(f27.expansion.coeff(7) == Rat(-1));
    CHECK(f27.expansion.coeff(13) == Rat(5));
}

TEST_CASE("embedded registry JSON parses and matches the records") {
    auto j = nlohmann::json::parse(newform_registry_json());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 8);
    for (const auto& e : j) {
        const auto* rec = registry_lookup(e["level"].get<long>());
        REQUIRE(rec != nullptr);
        CHECK(rec->label == e["label"].get<std::string>());
    }
}
