#pragma once

#include <complex>
#include <string>
#include <vector>

#include "modwb/numbers.hpp"

namespace modwb {

// Dense univariate polynomial over Q, ascending coefficients, normalized so
// the leading stored coefficient is nonzero (zero polynomial has degree -1).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    static Polynomial constant(Rat c);
    static Polynomial from_longs(const std::vector<long>& coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // coefficient of t^i; zero beyond the degree
    const Rat& operator[](long i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rat& c, const Polynomial& a);
    bool operator==(const Polynomial& other) const { return c_ == other.c_; }

    Polynomial derivative() const;
    Rat eval(const Rat& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    // quotient and remainder of division by a nonzero polynomial
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                    const Polynomial& b);
    // division that must be exact; throws on nonzero remainder
    static Polynomial divexact(const Polynomial& a, const Polynomial& b);

    std::string to_string(const std::string& var = "t") const;

  private:
    std::vector<Rat> c_;
    void trim();
};

// monic gcd (constant 1 for coprime inputs)
Polynomial poly_gcd(Polynomial a, Polynomial b);
// product of distinct irreducible factors, monic-normalized input scale kept
Polynomial squarefree_part(const Polynomial& p);
// Yun decomposition: list of (factor, multiplicity), factors squarefree and
// pairwise coprime, product of factor^multiplicity = p up to a constant
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// All complex roots with multiplicity. Exact squarefree splitting first, so
// multiple roots do not degrade the numeric accuracy of the simple solver.
std::vector<std::complex<double>> complex_roots(const Polynomial& p);

}  // namespace modwb
