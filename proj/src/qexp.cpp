#include "modwb/qexp.hpp"

#include <algorithm>
#include <string>

namespace modwb {

QExpansion::QExpansion(long precision) : precision_(precision) {
    if (precision < 0) throw Error("QExpansion: negative precision");
    c_.assign(static_cast<size_t>(precision) + 1, Rat(0));
}

QExpansion::QExpansion(long precision, std::vector<Rat> coeffs)
    : QExpansion(precision) {
    if (coeffs.size() > c_.size())
        throw Error("QExpansion: coefficient list longer than precision");
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

const Rat& QExpansion::coeff(long n) const {
    if (n < 0 || n > precision_)
        throw PrecisionExhausted("coefficient of q^" + std::to_string(n) +
                                 " requested at precision " +
                                 std::to_string(precision_));
    return c_[static_cast<size_t>(n)];
}

void QExpansion::set_coeff(long n, Rat value) {
    if (n < 0 || n > precision_)
        throw PrecisionExhausted("coefficient of q^" + std::to_string(n) +
                                 " set past precision " +
                                 std::to_string(precision_));
    c_[static_cast<size_t>(n)] = std::move(value);
}

bool QExpansion::is_zero() const { return last_nonzero() < 0; }

long QExpansion::last_nonzero() const {
    for (long n = precision_; n >= 0; --n)
        if (c_[static_cast<size_t>(n)] != 0) return n;
    return -1;
}

namespace {

void merge_tags(QExpansion& out, const QExpansion& a, const QExpansion& b,
                bool add_weights) {
    if (add_weights) {
        if (a.weight && b.weight) out.weight = *a.weight + *b.weight;
    } else {
        if (a.weight && b.weight && *a.weight == *b.weight) out.weight = a.weight;
    }
    if (a.level && b.level && *a.level == *b.level) out.level = a.level;
}

}  // namespace

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    long prec = std::min(a.precision(), b.precision());
    QExpansion out(prec);
    for (long n = 0; n <= prec; ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
    merge_tags(out, a, b, /*add_weights=*/false);
    return out;
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
    long prec = std::min(a.precision(), b.precision());
    QExpansion out(prec);
    for (long n = 0; n <= prec; ++n) out.set_coeff(n, a.coeff(n) - b.coeff(n));
    merge_tags(out, a, b, /*add_weights=*/false);
    return out;
}

QExpansion operator*(const Rat& c, const QExpansion& a) {
    QExpansion out(a.precision());
    for (long n = 0; n <= a.precision(); ++n) out.set_coeff(n, c * a.coeff(n));
    out.weight = a.weight;
    out.level = a.level;
    return out;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    return series_mul(a, b);
}

bool QExpansion::operator==(const QExpansion& other) const {
    if (precision_ != other.precision_) return false;
    return c_ == other.c_;
}

QExpansion series_mul(const QExpansion& a, const QExpansion& b) {
    long prec = std::min(a.precision(), b.precision());
    QExpansion out(prec);

    // integer fast path: denominator-free inputs convolve in mpz, which is
    // several times faster than canonicalizing mpq at every step
    bool integral = true;
    for (long n = 0; n <= prec && integral; ++n)
        if (a.coeff(n).get_den() != 1 || b.coeff(n).get_den() != 1)
            integral = false;

    if (integral) {
        std::vector<Int> av(static_cast<size_t>(prec) + 1),
            bv(static_cast<size_t>(prec) + 1),
            cv(static_cast<size_t>(prec) + 1, Int(0));
        for (long n = 0; n <= prec; ++n) {
            av[static_cast<size_t>(n)] = a.coeff(n).get_num();
            bv[static_cast<size_t>(n)] = b.coeff(n).get_num();
        }
        for (long i = 0; i <= prec; ++i) {
            if (av[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; i + j <= prec; ++j) {
                if (bv[static_cast<size_t>(j)] == 0) continue;
                mpz_addmul(cv[static_cast<size_t>(i + j)].get_mpz_t(),
                           av[static_cast<size_t>(i)].get_mpz_t(),
                           bv[static_cast<size_t>(j)].get_mpz_t());
            }
        }
        for (long n = 0; n <= prec; ++n)
            out.set_coeff(n, Rat(cv[static_cast<size_t>(n)]));
    } else {
        for (long i = 0; i <= prec; ++i) {
            if (a.coeff(i) == 0) continue;
            for (long j = 0; i + j <= prec; ++j) {
                if (b.coeff(j) == 0) continue;
                out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
            }
        }
    }
    merge_tags(out, a, b, /*add_weights=*/true);
    return out;
}

QExpansion series_invert(const QExpansion& a) {
    if (a.coeff(0) == 0)
        throw NotInvertible("series has zero constant term");
    long prec = a.precision();
    QExpansion out(prec);
    Rat inv0 = Rat(1) / a.coeff(0);
    out.set_coeff(0, inv0);
    for (long n = 1; n <= prec; ++n) {
        Rat acc(0);
        for (long k = 1; k <= n; ++k) acc += a.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, -inv0 * acc);
    }
    return out;
}

QExpansion series_pow(const QExpansion& a, long e) {
    if (e < 0) return series_pow(series_invert(a), -e);
    QExpansion acc(a.precision());
    acc.set_coeff(0, Rat(1));
    QExpansion base = a;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = series_mul(acc, base);
        k >>= 1;
        if (k) base = series_mul(base, base);
    }
    return acc;
}

namespace {

// prod_{n>=1} (1 - x^{dn}) truncated at degree M, via the pentagonal
// number expansion (sparse, exact)
QExpansion euler_product(long d, long M) {
    QExpansion out(M);
    out.set_coeff(0, Rat(1));
    for (long j = 1;; ++j) {
        long e1 = d * (j * (3 * j - 1) / 2);
        long e2 = d * (j * (3 * j + 1) / 2);
        if (e1 > M && e2 > M) break;
        Rat s(j % 2 == 0 ? 1 : -1);
        if (e1 <= M) out.set_coeff(e1, out.coeff(e1) + s);
        if (e2 <= M) out.set_coeff(e2, out.coeff(e2) + s);
    }
    return out;
}

}  // namespace

QExpansion eta_expand(const std::vector<std::pair<long, long>>& quotient,
                      long precision) {
    long weighted = 0;
    for (auto [d, r] : quotient) {
        if (d <= 0)
            throw UnsupportedEtaQuotient("eta argument multiplier must be positive");
        weighted += d * r;
    }
    if (weighted % 24 != 0)
        throw UnsupportedEtaQuotient(
            "sum of d*r_d is " + std::to_string(weighted) +
            ", not divisible by 24: leading exponent not integral");
    long shift = weighted / 24;
    if (shift < 0)
        throw UnsupportedEtaQuotient("negative leading exponent; not a q-series");

    QExpansion out(precision);
    if (shift > precision) return out;  // all representable coefficients vanish

    long M = precision - shift;
    QExpansion acc(M);
    acc.set_coeff(0, Rat(1));
    for (auto [d, r] : quotient)
        acc = series_mul(acc, series_pow(euler_product(d, M), r));
    for (long n = 0; n <= M; ++n) out.set_coeff(n + shift, acc.coeff(n));
    return out;
}

}  // namespace modwb
