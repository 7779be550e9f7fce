#include "modwb/forms.hpp"

#include <mutex>

#include <nlohmann/json.hpp>

#include "modwb/errors.hpp"

namespace modwb {

namespace detail {
const char* newform_registry_json_raw();
}

ClassicalForm eisenstein_qexp(int k, long precision) {
    if (k < 4 || k % 2 != 0)
        throw UnsupportedWeight("Eisenstein weight must be even and >= 4, got " +
                                std::to_string(k));
    QExpansion q(precision);
    q.set_coeff(0, Rat(1));
    Rat factor = Rat(-2 * k) / bernoulli_number(static_cast<unsigned>(k));
    for (long n = 1; n <= precision; ++n)
        q.set_coeff(n, factor * Rat(divisor_sigma(n, static_cast<unsigned>(k - 1))));
    q.weight = k;
    q.level = 1;
    return ClassicalForm{std::move(q), k, 1, false};
}

ClassicalForm delta_qexp(long precision) {
    ClassicalForm e4 = eisenstein_qexp(4, precision);
    ClassicalForm e6 = eisenstein_qexp(6, precision);
    QExpansion num = series_mul(series_mul(e4.expansion, e4.expansion), e4.expansion) -
                     series_mul(e6.expansion, e6.expansion);
    QExpansion q = Rat(1, 1728) * num;
    q.weight = 12;
    q.level = 1;
    return ClassicalForm{std::move(q), 12, 1, true};
}

ClassicalForm hecke_tp(const ClassicalForm& f, long p) {
    if (!is_prime(p)) throw Error("hecke_tp: " + std::to_string(p) + " is not prime");
    if (f.level % p == 0)
        throw BadPrimeForLevel("p = " + std::to_string(p) + " divides level " +
                               std::to_string(f.level));
    long out_prec = f.expansion.precision() / p;
    if (out_prec < 1)
        throw PrecisionExhausted("precision " +
                                 std::to_string(f.expansion.precision()) +
                                 " too small for T_" + std::to_string(p));
    Rat pk1(int_pow(p, static_cast<unsigned long>(f.weight - 1)));
    QExpansion out(out_prec);
    for (long n = 0; n <= out_prec; ++n) {
        Rat v = f.expansion.coeff(n * p);
        if (n % p == 0) v += pk1 * f.expansion.coeff(n / p);
        out.set_coeff(n, std::move(v));
    }
    out.weight = f.weight;
    out.level = f.level;
    return ClassicalForm{std::move(out), f.weight, f.level, f.is_cusp};
}

Rat hecke_eigenvalue(const ClassicalForm& f, long p) {
    if (f.expansion.precision() < 1 || f.expansion.coeff(1) != 1)
        throw NotNormalized("eigenvalue check requires a_1 = 1");
    ClassicalForm tf = hecke_tp(f, p);
    Rat lambda = tf.expansion.coeff(1);  // = a_p
    for (long n = 0; n <= tf.expansion.precision(); ++n)
        if (tf.expansion.coeff(n) != lambda * f.expansion.coeff(n))
            throw NotAnEigenvector("T_" + std::to_string(p) +
                                   " mismatch at coefficient " + std::to_string(n));
    return lambda;
}

std::vector<Rat> coefficients_from_eigenvalues(const std::map<long, Rat>& ap,
                                               int k, long level, long n_max) {
    if (n_max < 1) throw Error("coefficients_from_eigenvalues: n_max < 1");
    for (long p : primes_up_to(n_max))
        if (!ap.count(p))
            throw IncompleteEigenData("no eigenvalue for p = " + std::to_string(p));

    // a_{p^{r+1}} = a_p a_{p^r} - p^{k-1} a_{p^{r-1}} (a_p^r at bad p)
    auto prime_power_coeff = [&](long p, int e) {
        if (e == 0) return Rat(1);
        const Rat& ap_v = ap.at(p);
        Rat pk1(int_pow(p, static_cast<unsigned long>(k - 1)));
        Rat prev(1), cur = ap_v;
        for (int i = 2; i <= e; ++i) {
            Rat next = (level % p == 0) ? Rat(ap_v * cur)
                                        : Rat(ap_v * cur - pk1 * prev);
            prev = cur;
            cur = std::move(next);
        }
        return cur;
    };

    std::vector<long> spf(static_cast<size_t>(n_max) + 1, 0);
    for (long i = 2; i <= n_max; ++i)
        if (!spf[static_cast<size_t>(i)])
            for (long j = i; j <= n_max; j += i)
                if (!spf[static_cast<size_t>(j)]) spf[static_cast<size_t>(j)] = i;

    std::vector<Rat> a(static_cast<size_t>(n_max) + 1, Rat(0));
    a[1] = 1;
    for (long n = 2; n <= n_max; ++n) {
        long p = spf[static_cast<size_t>(n)];
        long m = n;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        a[static_cast<size_t>(n)] = prime_power_coeff(p, e) * a[static_cast<size_t>(m)];
    }
    return a;
}

const char* newform_registry_json() { return detail::newform_registry_json_raw(); }

namespace {

std::vector<NewformRecord> parse_registry() {
    nlohmann::json j = nlohmann::json::parse(detail::newform_registry_json_raw());
    std::vector<NewformRecord> out;
    for (const auto& rec : j) {
        NewformRecord r;
        r.label = rec.at("label").get<std::string>();
        r.level = rec.at("level").get<long>();
        for (const auto& pr : rec.at("eta"))
            r.eta_spec.emplace_back(pr.at(0).get<long>(), pr.at(1).get<long>());
        auto cv = rec.at("curve");
        for (int i = 0; i < 5; ++i) r.curve[static_cast<size_t>(i)] = cv.at(i).get<long>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

const std::vector<NewformRecord>& newform_registry() {
    static const std::vector<NewformRecord> reg = parse_registry();
    return reg;
}

const NewformRecord* registry_lookup(long level) {
    for (const auto& r : newform_registry())
        if (r.level == level) return &r;
    return nullptr;
}

ClassicalForm newform_qexp(const NewformRecord& rec, long precision) {
    QExpansion q = eta_expand(rec.eta_spec, precision);
    q.weight = 2;
    q.level = rec.level;
    return ClassicalForm{std::move(q), 2, rec.level, true};
}

}  // namespace modwb
