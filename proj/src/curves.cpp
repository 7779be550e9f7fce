#include "modwb/curves.hpp"

#include <algorithm>
#include <cmath>

#include "modwb/errors.hpp"
#include "modwb/numbers.hpp"

namespace modwb {

Int EllipticCurveQ::b2() const { return Int(a1) * a1 + 4 * Int(a2); }
Int EllipticCurveQ::b4() const { return 2 * Int(a4) + Int(a1) * a3; }
Int EllipticCurveQ::b6() const { return Int(a3) * a3 + 4 * Int(a6); }
Int EllipticCurveQ::b8() const {
    return Int(a1) * a1 * a6 + 4 * Int(a2) * a6 - Int(a1) * a3 * a4 +
           Int(a2) * a3 * a3 - Int(a4) * a4;
}
Int EllipticCurveQ::c4() const { return b2() * b2() - 24 * b4(); }
Int EllipticCurveQ::c6() const {
    return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6();
}
Int EllipticCurveQ::discriminant() const {
    return -b2() * b2() * b8() - 8 * b4() * b4() * b4() - 27 * b6() * b6() +
           9 * b2() * b4() * b6();
}

namespace {

long mod_reduce(const Int& v, long p) {
    Int r = v % p;
    long x = static_cast<long>(r.get_si());
    return x < 0 ? x + p : x;
}

}  // namespace

long ec_point_count(const EllipticCurveQ& e, long p) {
    if (p < 2 || !is_prime(p)) throw Error("ec_point_count: p must be prime");
    if (p == 2) {
        long cnt = 1;  // [0:1:0]
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) {
                long lhs = (y * y + e.a1 * x * y + e.a3 * y) % 2;
                long rhs = (x * x * x + e.a2 * x * x + e.a4 * x + e.a6) % 2;
                if (((lhs - rhs) % 2 + 2) % 2 == 0) ++cnt;
            }
        return cnt;
    }
    // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    long b2 = mod_reduce(e.b2(), p), b4 = mod_reduce(e.b4(), p),
         b6 = mod_reduce(e.b6(), p);
    std::vector<int> chi(static_cast<size_t>(p), -1);
    chi[0] = 0;
    for (long t = 1; t < p; ++t) chi[static_cast<size_t>(t * t % p)] = 1;
    long cnt = 1 + p;  // infinity plus one y-average per x
    for (long x = 0; x < p; ++x) {
        long g = (((4 * x % p) * x % p + b2 * x % p) % p * x % p +
                  (2 * b4 % p) * x % p + b6) % p;
        cnt += chi[static_cast<size_t>(g)];
    }
    return cnt;
}

long ec_ap(const EllipticCurveQ& e, long p) {
    if (mod_reduce(e.discriminant(), p) == 0)
        throw BadReduction("p = " + std::to_string(p) + " divides the discriminant");
    return p + 1 - ec_point_count(e, p);
}

ReductionType reduction_type(const EllipticCurveQ& e, long p) {
    if (mod_reduce(e.discriminant(), p) != 0) return ReductionType::Good;
    if (mod_reduce(e.c4(), p) == 0) return ReductionType::Additive;
    // multiplicative: the full projective count of the minimal reduction
    // (node included) gives p for a split torus, p + 2 for a nonsplit one
    long t = p + 1 - ec_point_count(e, p);
    if (t == 1) return ReductionType::SplitMultiplicative;
    if (t == -1) return ReductionType::NonsplitMultiplicative;
    throw BadReduction("count at multiplicative prime " + std::to_string(p) +
                       " gave invariant " + std::to_string(t) +
                       "; model not minimal at p");
}

LocalFactor ec_local_factor(const EllipticCurveQ& e, long p) {
    switch (reduction_type(e, p)) {
        case ReductionType::Good:
            return {p, "frobenius",
                    Polynomial({Rat(1), Rat(-ec_ap(e, p)), Rat(p)})};
        case ReductionType::SplitMultiplicative:
            return {p, "frobenius", Polynomial({Rat(1), Rat(-1)})};
        case ReductionType::NonsplitMultiplicative:
            return {p, "frobenius", Polynomial({Rat(1), Rat(1)})};
        case ReductionType::Additive:
            return {p, "frobenius", Polynomial({Rat(1)})};
    }
    throw Error("unreachable");
}

void Genus2CurveQ::validate() const {
    long d = f.degree();
    if (d != 5 && d != 6)
        throw SingularCurve("genus-2 model needs deg f in {5, 6}, got " +
                            std::to_string(d));
    for (long i = 0; i <= d; ++i)
        if (f[i].get_den() != 1)
            throw SingularCurve("genus-2 model must have integral coefficients");
    if (poly_gcd(f, f.derivative()).degree() != 0)
        throw SingularCurve("f has a repeated root; curve is singular");
}

bool genus2_good_reduction(const Genus2CurveQ& c, long p) {
    if (p == 2) throw UnsupportedPrime("p = 2 counts are not supported");
    long d = c.f.degree();
    std::vector<long> fp(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i)
        fp[static_cast<size_t>(i)] = mod_reduce(c.f[i].get_num(), p);
    if (fp[static_cast<size_t>(d)] == 0) return false;  // degree drops
    // squarefree over F_p: gcd(f, f') = 1
    auto trim = [](std::vector<long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto pmod = [&](std::vector<long> a, std::vector<long> b) {
        trim(a); trim(b);
        long binv = mod_pow(b.back(), p - 2, p);
        while (a.size() >= b.size() && !a.empty()) {
            long f0 = a.back() * binv % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = ((a[shift + i] - f0 * b[i]) % p + p) % p;
            trim(a);
        }
        return a;
    };
    std::vector<long> a = fp, b(static_cast<size_t>(d));
    for (long i = 1; i <= d; ++i)
        b[static_cast<size_t>(i - 1)] = static_cast<long>(i) * fp[static_cast<size_t>(i)] % p;
    trim(a); trim(b);
    while (!b.empty()) {
        auto r = pmod(a, b);
        a = b;
        b = r;
    }
    return a.size() == 1;  // constant gcd
}

std::pair<long, long> genus2_counts(const Genus2CurveQ& c, long p) {
    c.validate();
    if (p == 2) throw UnsupportedPrime("p = 2 counts are not supported");
    if (!is_prime(p)) throw Error("genus2_counts: p must be prime");
    if (!genus2_good_reduction(c, p))
        throw BadReduction("bad reduction at p = " + std::to_string(p));

    long d = c.f.degree();
    std::vector<long> fp(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i)
        fp[static_cast<size_t>(i)] = mod_reduce(c.f[i].get_num(), p);

    std::vector<int> chi(static_cast<size_t>(p), -1);
    chi[0] = 0;
    for (long t = 1; t < p; ++t) chi[static_cast<size_t>(t * t % p)] = 1;

    // |C(F_p)|: affine points plus the smooth model's points at infinity
    long n1 = p;
    for (long x = 0; x < p; ++x) {
        long v = 0;
        for (long i = d; i >= 0; --i) v = (v * x + fp[static_cast<size_t>(i)]) % p;
        n1 += chi[static_cast<size_t>(v)];
    }
    if (d == 5)
        n1 += 1;
    else
        n1 += chi[static_cast<size_t>(fp[static_cast<size_t>(d)])] == 1 ? 2 : 0;

    // |C(F_{p^2})| over F_p[z]/(z^2 - nu), nu a nonresidue;
    // chi_{p^2}(w) = chi_p(Norm(w)), Norm(u + vz) = u^2 - nu v^2
    long nu = 0;
    for (long t = 1; t < p; ++t)
        if (chi[static_cast<size_t>(t)] == -1) { nu = t; break; }
    long n2 = p * p;
    for (long u = 0; u < p; ++u)
        for (long v = 0; v < p; ++v) {
            long ru = 0, rv = 0;  // f(u + v z) by Horner
            for (long i = d; i >= 0; --i) {
                long nru = (ru * u % p + rv * v % p * nu % p +
                            fp[static_cast<size_t>(i)]) % p;
                long nrv = (ru * v + rv * u) % p;
                ru = nru;
                rv = nrv;
            }
            long norm = ((ru * ru - nu * rv % p * rv) % p + p) % p;
            n2 += chi[static_cast<size_t>(norm)];
        }
    // every element of F_p is a square in F_{p^2}: deg-6 models always have
    // two rational points at infinity there
    n2 += (d == 5) ? 1 : 2;
    return {n1, n2};
}

FrobeniusPoly frobenius_poly(long n1, long n2, long p, int g) {
    if (g == 1) {
        long c1 = n1 - (p + 1);
        if (c1 * c1 > 4 * p)
            throw InconsistentCounts("|N1 - (p+1)| exceeds the Weil bound");
        return {p, 1, Polynomial({Rat(1), Rat(c1), Rat(p)})};
    }
    if (g != 2) throw Error("frobenius_poly: only g = 1, 2 supported");
    long c1 = n1 - (p + 1);
    long num = n2 - (p * p + 1) + c1 * c1;
    if (num % 2 != 0)
        throw InconsistentCounts("N2 - (p^2+1) + c1^2 is odd; counts inconsistent");
    long c2 = num / 2;
    return {p, 2,
            Polynomial({Rat(1), Rat(c1), Rat(c2), Rat(p) * Rat(c1),
                        Rat(p) * Rat(p)})};
}

bool weil_symmetric(const FrobeniusPoly& f) {
    long g = f.g;
    if (f.poly.degree() != 2 * g) return false;
    for (long i = 0; i < g; ++i) {
        Rat scale(int_pow(f.p, static_cast<unsigned long>(g - i)));
        if (f.poly[2 * g - i] != scale * f.poly[i]) return false;
    }
    return f.poly[0] == 1;
}

double max_root_modulus_error(const FrobeniusPoly& f) {
    double target = 1.0 / std::sqrt(static_cast<double>(f.p));
    double worst = 0.0;
    for (const auto& r : complex_roots(f.poly))
        worst = std::max(worst, std::abs(std::abs(r) - target));
    return worst;
}

LocalFactor abelian_local_lfactor(const FrobeniusPoly& f) {
    return {f.p, "frobenius", f.poly};
}

ApTable ec_ap_table(const EllipticCurveQ& e, long bound) {
    ApTable t;
    t.source = "[" + std::to_string(e.a1) + "," + std::to_string(e.a2) + "," +
               std::to_string(e.a3) + "," + std::to_string(e.a4) + "," +
               std::to_string(e.a6) + "]";
    t.bound = bound;
    for (long p : primes_up_to(bound)) {
        switch (reduction_type(e, p)) {
            case ReductionType::Good: t.ap[p] = ec_ap(e, p); break;
            case ReductionType::SplitMultiplicative: t.ap[p] = 1; t.bad.insert(p); break;
            case ReductionType::NonsplitMultiplicative: t.ap[p] = -1; t.bad.insert(p); break;
            case ReductionType::Additive: t.ap[p] = 0; t.bad.insert(p); break;
        }
    }
    return t;
}

GlobalLValue global_l_eval(const std::map<long, LocalFactor>& factors,
                           std::complex<double> s, long p_max) {
    double sigma = s.real();
    if (!(sigma > 1.9))
        throw DivergenceRisk("global L evaluation requires Re(s) > 1.9");

    GlobalLValue out;
    long ops = 0;

    // Euler route
    std::complex<double> prod(1.0, 0.0);
    for (long p : primes_up_to(p_max)) {
        auto it = factors.find(p);
        if (it == factors.end())
            throw Error("missing local factor at p = " + std::to_string(p));
        std::complex<double> t =
            std::exp(-s * std::log(static_cast<double>(p)));
        std::complex<double> den = it->second.poly.eval(t);
        if (std::abs(den) < 1e-12)
            throw PoleAtPrime("local factor vanishes at p = " + std::to_string(p));
        prod /= den;
        ++ops;
    }
    out.euler.s = s;
    out.euler.value = prod;
    out.euler.terms_used = ops;
    // tail of the product under the Weil-type assumption |inverse roots| <= sqrt(p):
    // |log prod_{p>P}| <= d * sum_{p>P} r/(1-r), r = p^{1/2-sigma}
    long deg = 0;
    for (const auto& [p, lf] : factors) { (void)p; deg = std::max(deg, lf.poly.degree()); }
    double r0 = std::pow(static_cast<double>(p_max), 0.5 - sigma);
    double logtail = static_cast<double>(deg) / (1.0 - r0) *
                     std::pow(static_cast<double>(p_max), 1.5 - sigma) /
                     (sigma - 1.5);
    out.euler.tail_bound = std::abs(prod) * std::expm1(logtail);
    out.euler.growth_exponent = 0.5;  // assumption on inverse-root modulus
    out.euler.growth_constant = 1.0;

    // Dirichlet route: expand each 1/P_p(t) to the needed prime-power depth
    long n_max = p_max;
    std::map<long, std::vector<Rat>> ppow;  // p -> [b_{p^0}, b_{p^1}, ...]
    for (long p : primes_up_to(p_max)) {
        int depth = 0;
        long q = 1;
        while (q <= n_max / p) { q *= p; ++depth; }
        const Polynomial& P = factors.at(p).poly;
        std::vector<Rat> inv(static_cast<size_t>(depth) + 1, Rat(0));
        inv[0] = Rat(1) / P[0];
        for (int n = 1; n <= depth; ++n) {
            Rat acc(0);
            for (long k = 1; k <= std::min<long>(n, P.degree()); ++k)
                acc += P[k] * inv[static_cast<size_t>(n - k)];
            inv[static_cast<size_t>(n)] = -acc / P[0];
        }
        ppow[p] = std::move(inv);
    }
    std::vector<long> spf(static_cast<size_t>(n_max) + 1, 0);
    for (long i = 2; i <= n_max; ++i)
        if (!spf[static_cast<size_t>(i)])
            for (long j = i; j <= n_max; j += i)
                if (!spf[static_cast<size_t>(j)]) spf[static_cast<size_t>(j)] = i;
    std::vector<Rat> b(static_cast<size_t>(n_max) + 1, Rat(0));
    b[1] = 1;
    for (long n = 2; n <= n_max; ++n) {
        long p = spf[static_cast<size_t>(n)];
        long m = n;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        b[static_cast<size_t>(n)] =
            ppow.at(p)[static_cast<size_t>(e)] * b[static_cast<size_t>(m)];
    }
    out.series = dirichlet_partial(
        [&](long n) { return b[static_cast<size_t>(n)]; }, s, n_max,
        /*growth_exponent=*/0.9);
    out.fp_allowance = 1e-15 * static_cast<double>(p_max + n_max) *
                       std::max(std::abs(out.euler.value), std::abs(out.series.value));
    return out;
}

}  // namespace modwb
