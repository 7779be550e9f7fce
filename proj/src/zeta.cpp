#include "modwb/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace modwb {

namespace {

using CVec = std::vector<std::complex<double>>;

CVec cpoly_mul(const CVec& a, const CVec& b) {
    CVec r(a.size() + b.size() - 1, {0.0, 0.0});
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

long exponent_gk(int g, int k) { return static_cast<long>(g) * k - g * (g + 1) / 2; }

// numeric coefficient vector of the degree-2^g spinor product
CVec spinor_coeffs_numeric(const SatakeData& sd) {
    if (sd.alpha.size() != static_cast<size_t>(sd.g) + 1)
        throw Error("SatakeData must carry g + 1 parameters");
    CVec poly{{1.0, 0.0}};
    for (unsigned mask = 0; mask < (1u << sd.g); ++mask) {
        std::complex<double> root = sd.alpha[0];
        for (int i = 0; i < sd.g; ++i)
            if (mask & (1u << i)) root *= sd.alpha[static_cast<size_t>(i) + 1];
        poly = cpoly_mul(poly, CVec{{1.0, 0.0}, -root});
    }
    return poly;
}

Rat dyadic(double x) { return Rat(mpq_class(x)); }

}  // namespace

double satake_consistency(const SatakeData& sd) {
    if (sd.alpha.size() != static_cast<size_t>(sd.g) + 1)
        throw Error("SatakeData must carry g + 1 parameters");
    std::complex<double> prod = sd.alpha[0] * sd.alpha[0];
    for (int i = 1; i <= sd.g; ++i) prod *= sd.alpha[static_cast<size_t>(i)];
    double target = std::pow(static_cast<double>(sd.p),
                             static_cast<double>(exponent_gk(sd.g, sd.k)));
    return std::abs(prod - target) / target;
}

Polynomial spinor_local(const SatakeData& sd) {
    CVec num = spinor_coeffs_numeric(sd);
    long deg = static_cast<long>(num.size()) - 1;  // 2^g
    if (!sd.exact) {
        std::vector<Rat> c(num.size());
        for (size_t i = 0; i < num.size(); ++i) c[i] = dyadic(num[i].real());
        return Polynomial(std::move(c));
    }
    // certified reconstruction: round the low half, pair for the top half
    long half = deg / 2;
    Int w = int_pow(sd.p, static_cast<unsigned long>(exponent_gk(sd.g, sd.k)));
    std::vector<Rat> c(num.size());
    c[0] = 1;
    for (long i = 1; i <= half; ++i) {
        std::complex<double> v = num[static_cast<size_t>(i)];
        double re = v.real();
        if (std::abs(v.imag()) > 0.25 || std::abs(re) > 9.0e15 ||
            std::abs(re - std::round(re)) > 0.25)
            throw UnresolvedSatake(
                "spinor coefficient too large or too far from an integer "
                "for certified rounding");
        c[static_cast<size_t>(i)] = Rat(Int(static_cast<long>(std::llround(re))));
    }
    for (long i = 0; i < half; ++i)
        c[static_cast<size_t>(deg - i)] =
            Rat(int_pow(w, static_cast<unsigned long>(half - i))) *
            c[static_cast<size_t>(i)];
    return Polynomial(std::move(c));
}

Polynomial standard_local(const SatakeData& sd) {
    if (sd.g == 1 && sd.exact_ap) {
        Rat w(int_pow(sd.p, static_cast<unsigned long>(sd.k - 1)));
        Rat lam = ((*sd.exact_ap) * (*sd.exact_ap) - 2 * w) / w;
        return Polynomial({Rat(1), Rat(-1)}) *
               Polynomial({Rat(1), -lam, Rat(1)});
    }
    if (sd.alpha.size() != static_cast<size_t>(sd.g) + 1)
        throw Error("SatakeData must carry g + 1 parameters");
    CVec poly{{1.0, 0.0}, {-1.0, 0.0}};  // (1 - t)
    for (int i = 1; i <= sd.g; ++i) {
        std::complex<double> a = sd.alpha[static_cast<size_t>(i)];
        if (std::abs(a) < 1e-300)
            throw SingularSatake("alpha_i = 0 has no inverse");
        poly = cpoly_mul(poly, CVec{{1.0, 0.0}, -a});
        poly = cpoly_mul(poly, CVec{{1.0, 0.0}, -1.0 / a});
    }
    std::vector<Rat> c(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) c[i] = dyadic(poly[i].real());
    return Polynomial(std::move(c));
}

Polynomial spinor_local_g2_from_eigenvalues(const EigenvalueData& ev) {
    if (ev.g != 2) throw Error("eigenvalue quartic is a degree-2 formula");
    Rat p2k3(int_pow(ev.p, static_cast<unsigned long>(2 * ev.k - 3)));
    Rat p2k4(int_pow(ev.p, static_cast<unsigned long>(2 * ev.k - 4)));
    Rat p4k6 = p2k3 * p2k3;
    return Polynomial({Rat(1), -ev.lambda_p,
                       ev.lambda_p * ev.lambda_p - ev.lambda_p2 - p2k4,
                       -ev.lambda_p * p2k3, p4k6});
}

Polynomial standard_local_g2_lift(const Rat& ap_f, int k, long p) {
    if (k < 4) throw Error("lift weight must be at least 4");
    Rat pk1(int_pow(p, static_cast<unsigned long>(k - 1)));
    Rat pk2(int_pow(p, static_cast<unsigned long>(k - 2)));
    Rat pr(p);
    return Polynomial({Rat(1), Rat(-1)}) *
           Polynomial({Rat(1), -ap_f / pk1, 1 / pr}) *
           Polynomial({Rat(1), -ap_f / pk2, pr});
}

EigenvalueData sk_eigenvalues(const Rat& ap_f, const Rat& ap2_f, int k, long p) {
    Rat pk1(int_pow(p, static_cast<unsigned long>(k - 1)));
    Rat pk2(int_pow(p, static_cast<unsigned long>(k - 2)));
    EigenvalueData ev;
    ev.p = p;
    ev.k = k;
    ev.g = 2;
    ev.lambda_p = ap_f + pk1 + pk2;
    ev.lambda_p2 = ap2_f + pk1 * pk1 + pk1 * pk2 + ap_f * (pk1 + pk2);
    return ev;
}

namespace {

bool roundtrip_close(const SatakeData& sd, const Polynomial& target) {
    CVec num = spinor_coeffs_numeric(sd);
    if (static_cast<long>(num.size()) - 1 != target.degree()) return false;
    for (size_t i = 0; i < num.size(); ++i) {
        double want = target[static_cast<long>(i)].get_d();
        if (std::abs(num[i] - want) > 1e-8 * std::max(1.0, std::abs(want)))
            return false;
    }
    return true;
}

}  // namespace

SatakeData satake_from_local(const Polynomial& poly, long p, int g, int k) {
    if (g < 1 || g > 2)
        throw UnresolvedSatake("satake recovery implemented for g <= 2");
    if (poly.degree() != (1L << g))
        throw DegreeMismatch("spinor factor must have degree 2^g");
    std::vector<std::complex<double>> u;
    for (const auto& r : complex_roots(poly)) {
        if (std::abs(r) < 1e-300) throw UnresolvedSatake("zero root");
        u.push_back(1.0 / r);  // inverse roots alpha_0 * subset products
    }
    SatakeData sd;
    sd.p = p;
    sd.g = g;
    sd.k = k;
    if (g == 1) {
        sd.alpha = {u[0], u[1] / u[0]};
        if (roundtrip_close(sd, poly)) return sd;
        sd.alpha = {u[1], u[0] / u[1]};
        if (roundtrip_close(sd, poly)) return sd;
        throw UnresolvedSatake("round trip failed at g = 1");
    }
    double w = std::pow(static_cast<double>(p),
                        static_cast<double>(exponent_gk(g, k)));
    // partitions into two pairs with both products = w
    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& q : pairings) {
        if (std::abs(u[static_cast<size_t>(q[0])] * u[static_cast<size_t>(q[1])] - w) >
                1e-6 * w ||
            std::abs(u[static_cast<size_t>(q[2])] * u[static_cast<size_t>(q[3])] - w) >
                1e-6 * w)
            continue;
        // q[0] as alpha_0, q[1] = alpha_0 a1 a2, the other pair gives a1, a2
        for (int swap = 0; swap < 2; ++swap) {
            std::complex<double> a0 = u[static_cast<size_t>(q[0])];
            std::complex<double> a1 = u[static_cast<size_t>(q[swap ? 3 : 2])] / a0;
            std::complex<double> a2 = u[static_cast<size_t>(q[swap ? 2 : 3])] / a0;
            sd.alpha = {a0, a1, a2};
            if (roundtrip_close(sd, poly)) return sd;
        }
    }
    throw UnresolvedSatake("no root pairing reproduces the factor at g = 2");
}

DirichletEval euler_product_eval(const std::map<long, Polynomial>& local,
                                 std::complex<double> s, long p_max) {
    DirichletEval out;
    out.s = s;
    std::complex<double> prod(1.0, 0.0);
    long used = 0;
    double theta = 0.0;  // empirical inverse-root exponent
    long deg = 0;
    for (const auto& [p, poly] : local) {
        if (p > p_max) continue;
        std::complex<double> t = std::exp(-s * std::log(static_cast<double>(p)));
        std::complex<double> den = poly.eval(t);
        double scale = 0.0;
        for (long i = 0; i <= poly.degree(); ++i)
            scale += std::abs(poly[i].get_d()) * std::pow(std::abs(t), i);
        if (std::abs(den) < 1e-14 * std::max(1.0, scale))
            throw PoleAtPrime("local factor vanishes near p^{-s}, p = " +
                              std::to_string(p));
        prod /= den;
        ++used;
        deg = std::max(deg, poly.degree());
        if (poly.degree() >= 1) {
            for (const auto& r : complex_roots(poly)) {
                double mod = std::abs(r);
                if (mod > 1e-300)
                    theta = std::max(theta, std::log(1.0 / mod) /
                                                std::log(static_cast<double>(p)));
            }
        }
    }
    out.value = prod;
    out.terms_used = used;
    out.growth_exponent = theta;
    out.growth_constant = 1.0;
    double sigma = s.real();
    if (used == 0) {
        out.tail_bound = 0.0;
        return out;
    }
    if (!(sigma > theta + 1))
        throw DivergenceRisk("Re(s) inside the recorded inverse-root exponent");
    // |log of the omitted product| <= deg sum_{p > P} p^{theta - sigma} / (1 - r0)
    double r0 = std::pow(static_cast<double>(p_max), theta - sigma);
    double logtail = static_cast<double>(deg) / (1.0 - r0) *
                     std::pow(static_cast<double>(p_max), theta - sigma + 1) /
                     (sigma - theta - 1);
    out.tail_bound = std::abs(prod) * std::expm1(logtail);
    return out;
}

SquareIdentityReport standard_square_identity(const ClassicalForm& f, double s,
                                              long p_max, long n_max) {
    int k = f.weight;
    if (!(s > k + 1))
        throw DivergenceRisk("square identity needs s > k + 1");
    if (f.expansion.precision() < std::max(p_max, n_max))
        throw PrecisionExhausted("square identity needs coefficients to n_max");
    double sp = s - k + 1;

    // LHS: product over p <= p_max of the exact standard factor at p^{-sp}
    std::complex<double> lhs(1.0, 0.0);
    for (long p : primes_up_to(p_max)) {
        SatakeData sd;
        sd.p = p;
        sd.g = 1;
        sd.k = k;
        sd.alpha = {{1.0, 0.0}, {1.0, 0.0}};  // unused by the exact route
        sd.exact_ap = f.expansion.coeff(p);
        Polynomial dloc = standard_local(sd);
        lhs /= dloc.eval(std::complex<double>(std::pow(p, -sp), 0.0));
    }

    // RHS series: a(n^2) n^{-s} through per-prime power tables
    std::vector<long> spf(static_cast<size_t>(n_max) + 1, 0);
    for (long i = 2; i <= n_max; ++i)
        if (!spf[static_cast<size_t>(i)])
            for (long j = i; j <= n_max; j += i)
                if (!spf[static_cast<size_t>(j)]) spf[static_cast<size_t>(j)] = i;
    std::map<long, std::vector<Rat>> pw;  // p -> a(p^0..p^{2m})
    for (long p = 2; p <= n_max; ++p) {
        if (spf[static_cast<size_t>(p)] != p) continue;
        int m = 0;
        long q = 1;
        while (q <= n_max / p) { q *= p; ++m; }
        std::vector<Rat> v(static_cast<size_t>(2 * m) + 1);
        v[0] = 1;
        v[1] = f.expansion.coeff(p);
        Rat wk(int_pow(p, static_cast<unsigned long>(k - 1)));
        for (size_t j = 2; j < v.size(); ++j)
            v[j] = v[1] * v[j - 1] - wk * v[j - 2];
        pw[p] = std::move(v);
    }
    std::vector<Rat> asq(static_cast<size_t>(n_max) + 1, Rat(0));
    asq[1] = 1;
    for (long n = 2; n <= n_max; ++n) {
        long p = spf[static_cast<size_t>(n)];
        long m = n;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        asq[static_cast<size_t>(n)] =
            pw.at(p)[static_cast<size_t>(2 * e)] * asq[static_cast<size_t>(m)];
    }
    std::complex<double> series(0.0, 0.0);
    double cmax = 0.0;
    double ge = k - 0.2;  // |a(n^2)| <= C n^{k-0.2} recorded empirically
    for (long n = 1; n <= n_max; ++n) {
        double term = asq[static_cast<size_t>(n)].get_d();
        series += term * std::pow(static_cast<double>(n), -s);
        cmax = std::max(cmax, std::abs(term) / std::pow(static_cast<double>(n), ge));
    }

    std::complex<double> zfac(1.0, 0.0), zfac_printed(1.0, 0.0);
    for (long p : primes_up_to(p_max)) {
        double x = std::pow(static_cast<double>(p), k - s - 1);
        zfac /= 1.0 - x * x;
        zfac_printed /= 1.0 + x;
    }

    SquareIdentityReport rep;
    rep.lhs = lhs;
    rep.rhs = zfac * series;
    rep.rhs_printed = zfac_printed * series;
    rep.difference = std::abs(rep.lhs - rep.rhs);

    // analytic tails: standard factors have unit-circle inverse roots under
    // the Ramanujan frame, so both products truncate like sum_{p>P} p^{-sp}
    double pd = static_cast<double>(p_max);
    double prod_tail = 3.0 * std::pow(pd, 1.0 - sp) / (sp - 1.0);
    double series_tail =
        cmax * std::pow(static_cast<double>(n_max), ge - s + 1) / (s - ge - 1);
    double mag = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
    double fp_allowance =
        1e-15 * static_cast<double>(2 * p_max + n_max) * std::max(1.0, mag);
    rep.combined_tail = mag * (2.0 * prod_tail) + std::abs(zfac) * series_tail +
                        fp_allowance;
    return rep;
}

}  // namespace modwb
