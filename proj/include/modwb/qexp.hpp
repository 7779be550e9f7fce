#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modwb/numbers.hpp"

namespace modwb {

// Truncated q-expansion with exact rational coefficients. Precision N means
// the coefficients of q^0..q^N are known; reading past N is an error, never
// a silent zero. Binary operations truncate to the smaller precision.
class QExpansion {
  public:
    explicit QExpansion(long precision);
    QExpansion(long precision, std::vector<Rat> coeffs);

    long precision() const { return precision_; }
    const Rat& coeff(long n) const;
    void set_coeff(long n, Rat value);
    bool is_zero() const;
    // largest exponent <= precision with nonzero coefficient, or -1
    long last_nonzero() const;

    // optional classical-form tags carried through arithmetic when equal
    std::optional<int> weight;
    std::optional<long> level;

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator*(const Rat& c, const QExpansion& a);
    bool operator==(const QExpansion& other) const;

  private:
    long precision_;
    std::vector<Rat> c_;
};

// Cauchy product truncated to min precision.
QExpansion series_mul(const QExpansion& a, const QExpansion& b);
// Multiplicative inverse; requires nonzero constant term.
QExpansion series_invert(const QExpansion& a);
// a^e for e in Z (negative e inverts first).
QExpansion series_pow(const QExpansion& a, long e);

// Expansion of prod_d (q^{d/24} prod_{n>=1} (1 - q^{dn}))^{r_d}.
// Requires sum d*r_d == 0 mod 24 and a nonnegative leading exponent.
QExpansion eta_expand(const std::vector<std::pair<long, long>>& quotient,
                      long precision);

}  // namespace modwb
