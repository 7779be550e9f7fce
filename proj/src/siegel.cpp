#include "modwb/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

namespace modwb {

namespace {

IntMat int_identity(int g) {
    IntMat m(static_cast<size_t>(g), std::vector<Int>(static_cast<size_t>(g), 0));
    for (int i = 0; i < g; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

IntMat int_zero(int g) {
    return IntMat(static_cast<size_t>(g), std::vector<Int>(static_cast<size_t>(g), 0));
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    size_t g = a.size();
    IntMat r(g, std::vector<Int>(g, 0));
    for (size_t i = 0; i < g; ++i)
        for (size_t k = 0; k < g; ++k)
            for (size_t j = 0; j < g; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

IntMat int_add(const IntMat& a, const IntMat& b) {
    size_t g = a.size();
    IntMat r(g, std::vector<Int>(g, 0));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

IntMat int_transpose(const IntMat& a) {
    size_t g = a.size();
    IntMat r(g, std::vector<Int>(g, 0));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) r[j][i] = a[i][j];
    return r;
}

bool int_eq(const IntMat& a, const IntMat& b) {
    size_t g = a.size();
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

// determinant by cofactor expansion; fine at the g <= 3 scale used here
Int int_det(const IntMat& a) {
    size_t g = a.size();
    if (g == 1) return a[0][0];
    if (g == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Int d = 0;
    for (size_t j = 0; j < g; ++j) {
        IntMat minor(g - 1, std::vector<Int>(g - 1, 0));
        for (size_t r = 1; r < g; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < g; ++c)
                if (c != j) minor[r - 1][cc++] = a[r][c];
        }
        Int term = a[0][j] * int_det(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

// inverse of a unimodular matrix via the adjugate
IntMat unimodular_inverse(const IntMat& u) {
    size_t g = u.size();
    Int det = int_det(u);
    if (det != 1 && det != -1)
        throw Error("sp_gl_embed: matrix is not unimodular");
    IntMat inv(g, std::vector<Int>(g, 0));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) {
            IntMat minor(g - 1, std::vector<Int>(g - 1, 0));
            size_t rr = 0;
            for (size_t r = 0; r < g; ++r) {
                if (r == j) continue;
                size_t cc = 0;
                for (size_t c = 0; c < g; ++c)
                    if (c != i) minor[rr][cc++] = u[r][c];
                ++rr;
            }
            Int cof = (g == 1) ? Int(1) : int_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof * det;  // det = 1/det for det = +-1
        }
    return inv;
}

bool int_symmetric(const IntMat& a) { return int_eq(a, int_transpose(a)); }

bool blocks_consistent(const SymplecticMatrix& m) {
    size_t g = static_cast<size_t>(m.g);
    auto ok = [g](const IntMat& x) {
        if (x.size() != g) return false;
        for (const auto& row : x)
            if (row.size() != g) return false;
        return true;
    };
    return m.g >= 1 && ok(m.A) && ok(m.B) && ok(m.C) && ok(m.D);
}

// complex dense helpers for the action on H_g
using CMat = ComplexMat;

CMat c_from_int(const IntMat& a) {
    size_t g = a.size();
    CMat r(g, std::vector<std::complex<double>>(g));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) r[i][j] = a[i][j].get_d();
    return r;
}

CMat c_mul(const CMat& a, const CMat& b) {
    size_t g = a.size();
    CMat r(g, std::vector<std::complex<double>>(g, 0.0));
    for (size_t i = 0; i < g; ++i)
        for (size_t k = 0; k < g; ++k)
            for (size_t j = 0; j < g; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

CMat c_add(const CMat& a, const CMat& b) {
    size_t g = a.size();
    CMat r(g, std::vector<std::complex<double>>(g));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

// Gauss-Jordan inverse with partial pivoting
CMat c_inverse(const CMat& a) {
    size_t g = a.size();
    CMat m = a;
    CMat inv(g, std::vector<std::complex<double>>(g, 0.0));
    for (size_t i = 0; i < g; ++i) inv[i][i] = 1.0;
    for (size_t col = 0; col < g; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < g; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-12)
            throw Error("matrix numerically singular in sp_action");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        std::complex<double> d = m[col][col];
        for (size_t j = 0; j < g; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < g; ++r) {
            if (r == col) continue;
            std::complex<double> f = m[r][col];
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (size_t j = 0; j < g; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

SymplecticMatrix sp_identity(int g) {
    return {g, int_identity(g), int_zero(g), int_zero(g), int_identity(g)};
}

SymplecticMatrix sp_inversion(int g) {
    IntMat mi = int_identity(g);
    for (auto& row : mi)
        for (auto& x : row) x = -x;
    return {g, int_zero(g), int_identity(g), mi, int_zero(g)};
}

SymplecticMatrix sp_translation(const IntMat& s) {
    int g = static_cast<int>(s.size());
    if (!int_symmetric(s)) throw Error("sp_translation: S must be symmetric");
    return {g, int_identity(g), s, int_zero(g), int_identity(g)};
}

SymplecticMatrix sp_gl_embed(const IntMat& u) {
    int g = static_cast<int>(u.size());
    return {g, int_transpose(u), int_zero(g), int_zero(g), unimodular_inverse(u)};
}

SymplecticMatrix sp_mul(const SymplecticMatrix& x, const SymplecticMatrix& y) {
    if (x.g != y.g) throw Error("sp_mul: degree mismatch");
    SymplecticMatrix r;
    r.g = x.g;
    r.A = int_add(int_mul(x.A, y.A), int_mul(x.B, y.C));
    r.B = int_add(int_mul(x.A, y.B), int_mul(x.B, y.D));
    r.C = int_add(int_mul(x.C, y.A), int_mul(x.D, y.C));
    r.D = int_add(int_mul(x.C, y.B), int_mul(x.D, y.D));
    return r;
}

bool is_symplectic(const SymplecticMatrix& m) {
    if (!blocks_consistent(m)) return false;
    // gamma^T J gamma = J  <=>  A^T C, B^T D symmetric and A^T D - C^T B = I
    IntMat atc = int_mul(int_transpose(m.A), m.C);
    if (!int_symmetric(atc)) return false;
    IntMat btd = int_mul(int_transpose(m.B), m.D);
    if (!int_symmetric(btd)) return false;
    IntMat atd = int_mul(int_transpose(m.A), m.D);
    IntMat ctb = int_mul(int_transpose(m.C), m.B);
    size_t g = static_cast<size_t>(m.g);
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j)
            if (atd[i][j] - ctb[i][j] != ((i == j) ? 1 : 0)) return false;
    return true;
}

SiegelPoint make_siegel_point(const ComplexMat& omega) {
    size_t g = omega.size();
    if (g == 0) throw NotInSiegelSpace("empty matrix");
    for (const auto& row : omega)
        if (row.size() != g) throw NotInSiegelSpace("matrix not square");
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j)
            if (omega[i][j] != omega[j][i])
                throw NotInSiegelSpace("matrix not symmetric");
    // Im > 0 via leading principal minors (Sylvester)
    std::vector<std::vector<double>> y(g, std::vector<double>(g));
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j) y[i][j] = omega[i][j].imag();
    for (size_t k = 1; k <= g; ++k) {
        std::vector<std::vector<double>> sub(k, std::vector<double>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = y[i][j];
        // Gaussian elimination determinant
        double det = 1.0;
        for (size_t col = 0; col < k; ++col) {
            size_t piv = col;
            for (size_t r = col + 1; r < k; ++r)
                if (std::abs(sub[r][col]) > std::abs(sub[piv][col])) piv = r;
            if (piv != col) {
                std::swap(sub[piv], sub[col]);
                det = -det;
            }
            det *= sub[col][col];
            if (sub[col][col] == 0.0) break;
            for (size_t r = col + 1; r < k; ++r) {
                double f = sub[r][col] / sub[col][col];
                for (size_t j = col; j < k; ++j) sub[r][j] -= f * sub[col][j];
            }
        }
        if (!(det > 1e-12))
            throw NotInSiegelSpace("imaginary part not positive definite");
    }
    return {omega};
}

SiegelPoint sp_action(const SymplecticMatrix& m, const SiegelPoint& z) {
    if (!is_symplectic(m)) throw NotSymplectic("sp_action: gamma^T J gamma != J");
    if (z.omega.size() != static_cast<size_t>(m.g))
        throw Error("sp_action: dimension mismatch");
    CMat num = c_add(c_mul(c_from_int(m.A), z.omega), c_from_int(m.B));
    CMat den = c_add(c_mul(c_from_int(m.C), z.omega), c_from_int(m.D));
    CMat r = c_mul(num, c_inverse(den));
    // the exact result is symmetric; remove roundoff asymmetry so the
    // SiegelPoint invariant holds bit-for-bit
    size_t g = r.size();
    for (size_t i = 0; i < g; ++i)
        for (size_t j = i + 1; j < g; ++j) {
            std::complex<double> avg = 0.5 * (r[i][j] + r[j][i]);
            r[i][j] = avg;
            r[j][i] = avg;
        }
    return make_siegel_point(r);
}

namespace {

bool mat_zero_mod(const IntMat& a, long n) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x % n != 0) return false;
    return true;
}

bool mat_identity_mod(const IntMat& a, long n) {
    size_t g = a.size();
    for (size_t i = 0; i < g; ++i)
        for (size_t j = 0; j < g; ++j)
            if ((a[i][j] - ((i == j) ? 1 : 0)) % n != 0) return false;
    return true;
}

}  // namespace

bool congruence_member(const SymplecticMatrix& m, long n, SubgroupKind kind) {
    if (!is_symplectic(m)) return false;
    if (kind == SubgroupKind::Full) return true;
    if (n < 1) throw Error("congruence_member: level must be positive");
    switch (kind) {
        case SubgroupKind::Principal:
            return mat_identity_mod(m.A, n) && mat_zero_mod(m.B, n) &&
                   mat_zero_mod(m.C, n) && mat_identity_mod(m.D, n);
        case SubgroupKind::Gamma1:
            return mat_identity_mod(m.A, n) && mat_zero_mod(m.C, n) &&
                   mat_identity_mod(m.D, n);
        case SubgroupKind::Gamma0:
            return mat_zero_mod(m.C, n);
        default:
            return true;
    }
}

std::pair<HalfIntegralMatrix, Unimodular2> reduce_class(HalfIntegralMatrix t) {
    if (!t.positive_definite())
        throw NotPositiveDefinite("reduce_class needs T > 0");
    Unimodular2 u;
    auto apply_shear = [&](long s) {  // U <- U * (1 s; 0 1)
        u.u12 += u.u11 * s;
        u.u22 += u.u21 * s;
        long a = t.a;
        t.c += a * s * s + t.b * s;
        t.b += 2 * a * s;
    };
    auto apply_swap = [&]() {  // U <- U * (0 -1; 1 0)
        long n11 = u.u12, n21 = u.u22;
        u.u12 = -u.u11;
        u.u22 = -u.u21;
        u.u11 = n11;
        u.u21 = n21;
        std::swap(t.a, t.c);
        t.b = -t.b;
    };
    for (;;) {
        // bring b into (-a, a]
        if (t.b > t.a || t.b <= -t.a) {
            long twoa = 2 * t.a;
            long s = (t.a - t.b) / twoa;
            if (t.a - t.b < 0 && (t.a - t.b) % twoa != 0) --s;  // floor division
            apply_shear(s);
        }
        if (t.a > t.c)
            apply_swap();
        else
            break;
    }
    if (t.a == t.c && t.b < 0) apply_swap();  // (a, b, a) -> (a, -b, a)
    return {t, u};
}

namespace {

// canonical key of a semi-positive class: positive definite classes reduce
// by Gauss; rank-one classes are equivalent to (gcd(a,b,c), 0, 0); zero is
// (0,0,0)
std::tuple<long, long, long> class_key(const HalfIntegralMatrix& t) {
    if (t.positive_definite()) {
        HalfIntegralMatrix r = reduce_class(t).first;
        return {r.a, r.b, r.c};
    }
    long m = std::gcd(std::gcd(std::abs(t.a), std::abs(t.b)), std::abs(t.c));
    return {m, 0, 0};
}

// integer square root test
bool is_square_long(long n, long* root) {
    if (n < 0) return false;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// all (x, y) with a x^2 + b x y + c y^2 = v for positive definite (a,b,c)
std::vector<std::pair<long, long>> represent(const HalfIntegralMatrix& t, long v) {
    std::vector<std::pair<long, long>> out;
    long d4 = t.disc4();
    // (2ax + by)^2 + (4ac - b^2) y^2 = 4av
    double ymax = std::sqrt(4.0 * static_cast<double>(t.a) * v / d4) + 1;
    for (long y = -static_cast<long>(ymax); y <= static_cast<long>(ymax); ++y) {
        long rhs = 4 * t.a * v - d4 * y * y;
        long r = 0;
        if (!is_square_long(rhs, &r)) continue;
        for (long sgn : {1, -1}) {
            long num = sgn * r - t.b * y;
            if (num % (2 * t.a) != 0) continue;
            out.push_back({num / (2 * t.a), y});
            if (r == 0) break;
        }
    }
    return out;
}

}  // namespace

long epsilon_units(const HalfIntegralMatrix& t) {
    if (!t.positive_definite())
        throw NotPositiveDefinite("epsilon_units needs T > 0");
    auto cols1 = represent(t, t.a);
    auto cols2 = represent(t, t.c);
    long count = 0;
    for (const auto& [x1, y1] : cols1)
        for (const auto& [x2, y2] : cols2) {
            long det = x1 * y2 - x2 * y1;
            if (det != 1 && det != -1) continue;
            // off-diagonal entry of U^T T U must equal b/2
            long bil = 2 * t.a * x1 * x2 + t.b * (x1 * y2 + x2 * y1) +
                       2 * t.c * y1 * y2;
            if (bil == t.b) ++count;
        }
    return count;
}

std::vector<HalfIntegralMatrix> reduced_classes(long det_bound) {
    std::vector<HalfIntegralMatrix> out;
    for (long a = 1; 3 * a * a <= det_bound; ++a)
        for (long b = -a; b <= a; ++b)
            for (long c = a; 4 * a * c - b * b <= det_bound; ++c) {
                if (4 * a * c - b * b <= 0) continue;
                if (b == -a) continue;          // representative uses b = +a
                if (b < 0 && a == c) continue;  // tie-break b >= 0 on the diagonal
                out.push_back({a, b, c});
            }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

std::vector<HalfIntegralMatrix> gl2_class_representatives(long det_bound) {
    std::vector<HalfIntegralMatrix> out;
    for (long a = 1; 3 * a * a <= det_bound; ++a)
        for (long b = 0; b <= a; ++b)
            for (long c = a; 4 * a * c - b * b <= det_bound; ++c) {
                if (4 * a * c - b * b <= 0) continue;
                out.push_back({a, b, c});
            }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

Rat cohen_h(long r, long n) {
    if (r < 1 || n < 0) throw Error("cohen_h: need r >= 1 and n >= 0");
    static std::map<std::pair<long, long>, Rat> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({r, n});
        if (it != memo.end()) return it->second;
    }
    Rat value;
    if (n == 0) {
        value = -bernoulli_number(static_cast<unsigned>(2 * r)) / Rat(2 * r);
    } else {
        long m = (r % 2 == 0) ? n : -n;
        long m4 = ((m % 4) + 4) % 4;
        if (m4 != 0 && m4 != 1) {
            value = 0;
        } else {
            // split m = D f^2 with D a fundamental discriminant (or 1)
            long s = 1;
            for (const auto& [p, e] : factor(n))
                if (e % 2 == 1) s *= p;
            if (m < 0) s = -s;
            long d = (((s % 4) + 4) % 4 == 1) ? s : 4 * s;
            long f = 0;
            is_square_long(m / d, &f);
            // L(1 - r, chi_D) = -B_{r, chi_D} / r via Bernoulli polynomials
            long ad = std::abs(d);
            Rat b(0);
            for (long x = 1; x <= ad; ++x) {
                int chi = kronecker_symbol(d, x);
                if (chi != 0) b += Rat(chi) * bernoulli_poly(static_cast<unsigned>(r), Rat(x, ad));
            }
            b *= Rat(int_pow(ad, static_cast<unsigned long>(r - 1)));
            Rat lval = -b / Rat(r);
            Rat total(0);
            for (long dd : divisors(f)) {
                int mu_d = mobius(dd);
                if (mu_d == 0) continue;
                int chi = kronecker_symbol(d, dd);
                if (chi == 0) continue;
                total += Rat(mu_d * chi) *
                         Rat(int_pow(dd, static_cast<unsigned long>(r - 1))) *
                         Rat(divisor_sigma(f / dd, static_cast<unsigned>(2 * r - 1)));
            }
            value = lval * total;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::pair<long, long>{r, n}, value);
    return value;
}

const Rat& JacobiTable::at(long d) const {
    if (d < 0 || d > d_max)
        throw InsufficientCoefficients("Jacobi table read past d_max");
    static const Rat zero(0);
    auto it = c.find(d);
    return it == c.end() ? zero : it->second;
}

JacobiTable jacobi_eisenstein(int k, long d_max) {
    if (k < 4 || k % 2 != 0)
        throw UnsupportedWeight("jacobi_eisenstein needs even k >= 4");
    JacobiTable t;
    t.weight = k;
    t.d_max = d_max;
    Rat h0 = cohen_h(k - 1, 0);
    for (long d = 0; d <= d_max; ++d) {
        if (d % 4 != 0 && d % 4 != 3) continue;
        t.c[d] = cohen_h(k - 1, d) / h0;
    }
    return t;
}

JacobiTable jacobi_cusp_form(int k, long d_max) {
    if (k != 10 && k != 12)
        throw UnsupportedWeight("jacobi_cusp_form supports k = 10, 12");
    // phi_{k,1} = E_{k-4} E_{4,1} - E_{k-6} E_{6,1}, rescaled so c(3) = 1.
    // For fixed r the q-coefficient is a 1-d convolution since E_{k-4},
    // E_{k-6} carry no elliptic variable.
    long n_max = (d_max + 1) / 4 + 1;
    JacobiTable e4 = jacobi_eisenstein(4, d_max + 4);
    JacobiTable e6 = jacobi_eisenstein(6, d_max + 4);
    ClassicalForm ea = eisenstein_qexp(k - 4, n_max);
    ClassicalForm eb = eisenstein_qexp(k - 6, n_max);
    auto raw = [&](long d) -> Rat {
        long r = (d % 4 == 0) ? 0 : 1;
        long n = (d + r * r) / 4;
        Rat acc(0);
        for (long m = 0; m <= n; ++m) {
            long dd = 4 * (n - m) - r * r;
            if (dd < 0) continue;
            acc += ea.expansion.coeff(m) * e4.at(dd);
            acc -= eb.expansion.coeff(m) * e6.at(dd);
        }
        return acc;
    };
    Rat c3 = raw(3);
    if (c3 == 0) throw Error("jacobi_cusp_form: degenerate normalization");
    JacobiTable t;
    t.weight = k;
    t.d_max = d_max;
    for (long d = 0; d <= d_max; ++d) {
        if (d % 4 != 0 && d % 4 != 3) continue;
        t.c[d] = raw(d) / c3;
    }
    return t;
}

Rat SiegelExpansion::coefficient(const HalfIntegralMatrix& t) const {
    if (!t.semi_positive())
        throw Error("coefficient: Fourier support is semi-positive T only");
    auto key = class_key(t);
    if (t.positive_definite()) {
        if (t.disc4() > det_bound)
            throw InsufficientCoefficients("class beyond det_bound");
    } else {
        if (std::get<0>(key) > det_bound)
            throw InsufficientCoefficients("semidefinite class beyond coverage");
    }
    auto it = coeffs.find(key);
    return it == coeffs.end() ? Rat(0) : it->second;
}

SiegelExpansion maass_lift(const JacobiTable& phi, long det_bound) {
    if (det_bound > phi.d_max)
        throw InsufficientCoefficients("maass_lift: Jacobi data below det_bound");
    if (phi.at(0) != 0)
        throw Error("maass_lift requires cuspidal input (c(0) = 0)");
    SiegelExpansion f;
    f.weight = phi.weight;
    f.level = 1;
    f.det_bound = det_bound;
    for (const auto& t : reduced_classes(det_bound)) {
        long content = std::gcd(std::gcd(t.a, std::abs(t.b)), t.c);
        long d4 = t.disc4();
        Rat acc(0);
        for (long d : divisors(content))
            acc += Rat(int_pow(d, static_cast<unsigned long>(phi.weight - 1))) *
                   phi.at(d4 / (d * d));
        f.coeffs[{t.a, t.b, t.c}] = acc;
    }
    return f;
}

SiegelExpansion build_chi(int k, long det_bound) {
    return maass_lift(jacobi_cusp_form(k, det_bound), det_bound);
}

ClassicalForm phi_operator(const SiegelExpansion& f) {
    QExpansion q(f.det_bound);
    for (long n = 0; n <= f.det_bound; ++n) {
        auto it = f.coeffs.find({n, 0, 0});
        if (it != f.coeffs.end()) q.set_coeff(n, it->second);
    }
    ClassicalForm out{std::move(q), f.weight, f.level, false};
    out.is_cusp = out.expansion.coeff(0) == 0;
    out.expansion.weight = f.weight;
    out.expansion.level = f.level;
    return out;
}

DirichletEval maass_dirichlet(const SiegelExpansion& f, std::complex<double> s,
                              long det_bound) {
    if (det_bound > f.det_bound)
        throw InsufficientCoefficients("maass_dirichlet: det_bound exceeds coverage");
    // |a(T)/eps(T)| <= C (det T)^{k/2 + 3/4} recorded as the growth frame
    double ge = f.weight / 2.0 + 0.75;
    double sigma = s.real();
    if (!(sigma > ge + 1))
        throw DivergenceRisk("maass_dirichlet: Re(s) below recorded growth frame");
    std::complex<double> acc(0.0, 0.0);
    double cmax = 0.0;
    long used = 0;
    for (const auto& t : gl2_class_representatives(det_bound)) {
        Rat a = f.coefficient(t);
        if (a == 0) continue;
        long eps = epsilon_units(t);
        double dett = t.disc4() / 4.0;
        double term = a.get_d() / static_cast<double>(eps);
        acc += term * std::exp(-s * std::log(dett));
        cmax = std::max(cmax, std::abs(term) / std::pow(dett, ge));
        ++used;
    }
    DirichletEval out;
    out.s = s;
    out.terms_used = used;
    out.value = acc;
    out.growth_exponent = ge;
    out.growth_constant = cmax;
    double x0 = det_bound / 4.0;
    out.tail_bound = cmax * std::pow(x0, ge - sigma + 1) / (sigma - ge - 1);
    return out;
}

SiegelValue evaluate_siegel(const SiegelExpansion& f, const SiegelPoint& z,
                            long trace_bound) {
    if (z.omega.size() != 2)
        throw Error("evaluate_siegel implements degree 2");
    if (trace_bound < 1) throw Error("evaluate_siegel: trace_bound must be >= 1");
    if (trace_bound * trace_bound > f.det_bound)
        throw InsufficientCoefficients(
            "trace_bound^2 exceeds det_bound coverage of the expansion");
    const std::complex<double> i2pi(0.0, 2.0 * std::acos(-1.0));
    std::complex<double> w11 = z.omega[0][0], w12 = z.omega[0][1],
                         w22 = z.omega[1][1];
    std::complex<double> acc(0.0, 0.0);
    double amax = 0.0;
    for (long a = 0; a <= trace_bound; ++a)
        for (long c = 0; a + c <= trace_bound; ++c) {
            long bmax = 0;
            while ((bmax + 1) * (bmax + 1) <= 4 * a * c) ++bmax;
            for (long b = -bmax; b <= bmax; ++b) {
                HalfIntegralMatrix t{a, b, c};
                Rat av = f.coefficient(t);
                if (av == 0) continue;
                double ad = av.get_d();
                amax = std::max(amax, std::abs(ad) /
                                          std::pow(1.0 + t.disc4(),
                                                   f.weight / 2.0));
                acc += ad * std::exp(i2pi * (static_cast<double>(a) * w11 +
                                             static_cast<double>(b) * w12 +
                                             static_cast<double>(c) * w22));
            }
        }
    // tail: |a(T)| <= amax (1 + 4 det T)^{k/2} and |e^{2 pi i tr(T Omega)}|
    //       <= e^{-2 pi lambda_min tr(T)}; at most 5(t+1)^3 terms of trace t
    double y11 = w11.imag(), y12 = w12.imag(), y22 = w22.imag();
    double lam = 0.5 * (y11 + y22 -
                        std::sqrt((y11 - y22) * (y11 - y22) + 4 * y12 * y12));
    double tail = 0.0;
    for (long t = trace_bound + 1; t <= trace_bound + 400; ++t) {
        double add = 5.0 * std::pow(t + 1.0, 3.0) * amax *
                     std::pow(1.0 + t * t, f.weight / 2.0) *
                     std::exp(-2.0 * std::acos(-1.0) * lam * t);
        tail += add;
        if (add < 1e-300) break;
    }
    return {acc, tail};
}

}  // namespace modwb
