#pragma once

#include <complex>
#include <functional>

#include "modwb/numbers.hpp"

namespace modwb {

// Truncated Dirichlet series value together with the data needed to judge
// it: the truncation point and an integral-comparison tail bound computed
// under the recorded growth assumption |a_n| <= growth_constant * n^growth_exponent
// (the constant is taken from the computed range; the exponent is the
// caller's stated assumption).
struct DirichletEval {
    std::complex<double> s;
    long terms_used = 0;
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
    double growth_exponent = 0.0;
    double growth_constant = 0.0;
};

// Partial sum sum_{n=1}^{n_max} a(n) n^{-s}. Requires
// Re(s) > growth_exponent + 1, else the tail integral diverges.
DirichletEval dirichlet_partial(const std::function<Rat(long)>& a,
                                std::complex<double> s, long n_max,
                                double growth_exponent);

}  // namespace modwb
