#include "modwb/poly.hpp"

#include <algorithm>
#include <cmath>

namespace modwb {

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rat c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::from_longs(const std::vector<long>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Polynomial::operator[](long i) const {
    static const Rat zero(0);
    if (i < 0 || i > degree()) return zero;
    return c_[static_cast<size_t>(i)];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rat& c, const Polynomial& a) {
    std::vector<Rat> v(a.c_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(v));
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + std::complex<double>(it->get_d(), 0.0);
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Polynomial r = a;
    std::vector<Rat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                       Rat(0));
    Rat lead = b.c_.back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        Rat f = r.c_.back() / lead;
        q[static_cast<size_t>(shift)] = f;
        std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
        for (const Rat& bc : b.c_) sub.push_back(f * bc);
        r = r - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::divexact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error("inexact polynomial division, remainder " + r.to_string());
    return q;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = 0; i <= degree(); ++i) {
        const Rat& c = (*this)[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_to_string(c);
        if (i >= 1) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = Polynomial::divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a[a.degree()]) * a;  // monic
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() < 1) return p;
    Polynomial g = poly_gcd(p, p.derivative());
    return Polynomial::divexact(p, g);
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    // Yun's algorithm over a field of characteristic zero
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() < 1) return out;
    Polynomial a = poly_gcd(p, p.derivative());
    Polynomial b = Polynomial::divexact(p, a);
    Polynomial c = Polynomial::divexact(p.derivative(), a);
    Polynomial d = c - b.derivative();
    int mult = 1;
    while (b.degree() >= 1) {
        Polynomial g = poly_gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, mult);
        b = Polynomial::divexact(b, g);
        c = Polynomial::divexact(d, g);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

namespace {

// Durand-Kerner on a squarefree polynomial, then Newton polish
std::vector<std::complex<double>> simple_roots(const Polynomial& p) {
    long n = p.degree();
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    double lead = std::abs(p[n].get_d());
    double radius = 0.0;
    for (long i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::abs(p[i].get_d()) / lead,
                                           1.0 / static_cast<double>(n - i)));
    radius = 2.0 * radius + 1.0;
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (auto& zi : z) {
        w *= seed;
        zi = radius * w;
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0.0;
        for (size_t i = 0; i < z.size(); ++i) {
            std::complex<double> num = p.eval(z[i]);
            std::complex<double> den(p[n].get_d(), 0.0);
            for (size_t j = 0; j < z.size(); ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> delta = num / den;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-15 * radius) break;
    }
    Polynomial dp = p.derivative();
    for (auto& zi : z)
        for (int it = 0; it < 4; ++it) {
            std::complex<double> d = dp.eval(zi);
            if (std::abs(d) == 0.0) break;
            zi -= p.eval(zi) / d;
        }
    return z;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<std::complex<double>> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        auto roots = simple_roots(factor);
        for (const auto& r : roots)
            for (int i = 0; i < mult; ++i) out.push_back(r);
    }
    return out;
}

}  // namespace modwb
