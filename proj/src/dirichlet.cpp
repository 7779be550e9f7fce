#include "modwb/dirichlet.hpp"

#include <cmath>
#include <string>

#include "modwb/errors.hpp"

namespace modwb {

DirichletEval dirichlet_partial(const std::function<Rat(long)>& a,
                                std::complex<double> s, long n_max,
                                double growth_exponent) {
    if (n_max < 1) throw Error("dirichlet_partial: n_max must be >= 1");
    double sigma = s.real();
    if (!(sigma > growth_exponent + 1.0))
        throw DivergenceRisk("Re(s) = " + std::to_string(sigma) +
                             " not above growth exponent + 1 = " +
                             std::to_string(growth_exponent + 1.0));

    DirichletEval out;
    out.s = s;
    out.terms_used = n_max;
    out.growth_exponent = growth_exponent;

    std::complex<double> acc(0.0, 0.0);
    double cmax = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        Rat an = a(n);
        if (an == 0) continue;
        double av = an.get_d();
        cmax = std::max(cmax, std::abs(av) / std::pow(static_cast<double>(n),
                                                      growth_exponent));
        // n^{-s} = exp(-s log n)
        acc += av * std::exp(-s * std::log(static_cast<double>(n)));
    }
    out.value = acc;
    out.growth_constant = cmax;
    // integral comparison: sum_{n>N} C n^{g-sigma} <= C N^{g-sigma+1}/(sigma-g-1)
    out.tail_bound = cmax *
                     std::pow(static_cast<double>(n_max),
                              growth_exponent - sigma + 1.0) /
                     (sigma - growth_exponent - 1.0);
    return out;
}

}  // namespace modwb
