#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "modwb/errors.hpp"

namespace modwb {

using Int = mpz_class;
using Rat = mpq_class;

// "p/q" with the "/q" omitted when q == 1; parse accepts both shapes.
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

Int int_pow(const Int& base, unsigned long e);
Int int_pow(long base, unsigned long e);

// Bernoulli number B_n (B_1 = -1/2). Memoized; safe for concurrent readers.
Rat bernoulli_number(unsigned n);
// Bernoulli polynomial B_n(x).
Rat bernoulli_poly(unsigned n, const Rat& x);
Int binomial(unsigned n, unsigned k);

// Kronecker symbol (a|n), defined for all integers (n may be negative,
// even, or zero).
int kronecker_symbol(const Int& a, const Int& n);
int kronecker_symbol(long a, long n);

std::vector<long> primes_up_to(long bound);
bool is_prime(long n);
long mod_pow(long base, long exp, long mod);
// Legendre/quadratic-character value in {-1, 0, 1}; p an odd prime.
int quadratic_character(long a, long p);

// trial-division factorization, n >= 1
std::vector<std::pair<long, int>> factor(long n);
std::vector<long> divisors(long n);
int mobius(long n);
Int divisor_sigma(long n, unsigned k);

}  // namespace modwb
