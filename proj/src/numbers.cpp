#include "modwb/numbers.hpp"

#include <algorithm>
#include <mutex>

namespace modwb {

std::string rat_to_string(const Rat& x) {
    return x.get_str();  // gmp prints "n" or "n/d" in lowest terms
}

Rat rat_from_string(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: " + s);
    x.canonicalize();
    if (x.get_den() == 0)
        throw ParseError("zero denominator: " + s);
    return x;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {
std::vector<Rat> bern_table = {Rat(1)};
std::mutex bern_mutex;
}  // namespace

Rat bernoulli_number(unsigned n) {
    std::lock_guard<std::mutex> lock(bern_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    while (bern_table.size() <= n) {
        unsigned m = static_cast<unsigned>(bern_table.size());
        Rat acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rat(binomial(m + 1, j)) * bern_table[j];
        bern_table.push_back(-acc / Rat(binomial(m + 1, m)));
    }
    return bern_table[n];
}

Rat bernoulli_poly(unsigned n, const Rat& x) {
    Rat acc(0), xp(1);
    // B_n(x) = sum_j C(n, j) B_{n-j} x^j
    for (unsigned j = 0; j <= n; ++j) {
        acc += Rat(binomial(n, j)) * bernoulli_number(n - j) * xp;
        xp *= x;
    }
    return acc;
}

int kronecker_symbol(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker_symbol(long a, long n) {
    return kronecker_symbol(Int(a), Int(n));
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_pow(long base, long exp, long mod) {
    unsigned long long r = 1, b = static_cast<unsigned long long>(((base % mod) + mod) % mod);
    while (exp > 0) {
        if (exp & 1) r = r * b % static_cast<unsigned long long>(mod);
        b = b * b % static_cast<unsigned long long>(mod);
        exp >>= 1;
    }
    return static_cast<long>(r);
}

int quadratic_character(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    long t = mod_pow(a, (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

std::vector<std::pair<long, int>> factor(long n) {
    if (n < 1) throw Error("factor: argument must be positive");
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out = {1};
    for (auto [p, e] : factor(n)) {
        size_t sz = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(long n) {
    int sign = 1;
    for (auto [p, e] : factor(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

Int divisor_sigma(long n, unsigned k) {
    Int acc(0);
    for (long d : divisors(n)) acc += int_pow(d, k);
    return acc;
}

}  // namespace modwb
