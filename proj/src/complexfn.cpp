#include "aes/complexfn.hpp"

#include <array>
#include <cmath>

#include "aes/error.hpp"

namespace aes {
namespace {

#if defined(__SIZEOF_FLOAT128__) && (defined(__x86_64__) || defined(__i386__))
using ext = __float128;
constexpr double kExtEps = 1.0e-33;
#else
using ext = long double;
constexpr double kExtEps = static_cast<double>(__LDBL_EPSILON__);
#endif

struct qc {
    ext re = 0, im = 0;
    qc() = default;
    qc(ext r, ext i) : re(r), im(i) {}
    explicit qc(cplx z) : re(z.real()), im(z.imag()) {}
    cplx to() const { return {static_cast<double>(re), static_cast<double>(im)}; }
    ext norm() const { return re * re + im * im; }
};

inline qc operator+(qc a, qc b) { return {a.re + b.re, a.im + b.im}; }
inline qc operator*(qc a, qc b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline qc operator*(qc a, ext s) { return {a.re * s, a.im * s}; }
inline qc operator/(qc a, qc b) {
    ext n = b.norm();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

constexpr int kMaxTerms = 5000;
constexpr double kBudget = 1e-11;

// sum of term_0 * prod_k ratio(k); stops when the series has settled
template <class Ratio>
qc sum_series(qc first, Ratio ratio, long last_index, const char* what) {
    qc term = first, sum = first;
    ext maxterm = term.norm();
    int quiet = 0;
    const ext eps2 = static_cast<ext>(kExtEps) * static_cast<ext>(kExtEps) * 1e6;
    for (long k = 0; k < kMaxTerms; ++k) {
        if (last_index >= 0 && k >= last_index) return sum;
        qc prev = term;
        term = term * ratio(k);
        sum = sum + term;
        ext tn = term.norm();
        if (tn > maxterm) maxterm = tn;
        if (tn <= eps2 * sum.norm() && tn <= 0.25 * prev.norm()) {
            if (++quiet >= 3) {
                ext sn = sum.norm();
                if (sn > 0 && maxterm / sn * static_cast<ext>(kExtEps) * static_cast<ext>(kExtEps) >
                                  static_cast<ext>(kBudget * kBudget))
                    throw Error(ErrorKind::NoConvergence, std::string(what) + ": cancellation exceeds budget");
                return sum;
            }
        } else {
            quiet = 0;
        }
        if (tn == 0 && prev.norm() == 0) return sum;
    }
    throw Error(ErrorKind::NoConvergence, std::string(what) + ": series did not settle");
}

void check_finite(cplx z, const char* what) {
    if (!finite(z)) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": non-finite argument");
}

// number of terms of a terminating series, or -1
long check_pole(cplx d, cplx c) {
    long nc = 0, nd = 0;
    bool dpoly = nonpositive_integer(d, 1e-12, nd);
    if (nonpositive_integer(c, 1e-12, nc)) {
        if (!(dpoly && nd > nc)) throw Error(ErrorKind::PoleAtC, "1F1 parameter c is a nonpositive integer");
    }
    return dpoly ? -nd : -1;
}

cplx to_double(qc s, const char* what) {
    cplx r = s.to();
    if (!finite(r)) throw Error(ErrorKind::Overflow, what);
    return r;
}

}  // namespace

cplx kummer_1f1_series(cplx d, cplx c, cplx x) {
    check_finite(d, "kummer_1f1");
    check_finite(c, "kummer_1f1");
    check_finite(x, "kummer_1f1");
    long last = check_pole(d, c);
    const qc qd(d), qc_(c), qx(x);
    auto ratio = [&](long k) {
        ext kk = static_cast<ext>(k);
        return (qd + qc(kk, 0)) * qx / ((qc_ + qc(kk, 0)) * (kk + 1));
    };
    return to_double(sum_series(qc(1, 0), ratio, last, "kummer_1f1"), "kummer_1f1 overflow");
}

cplx kummer_1f1(cplx d, cplx c, cplx x) {
    check_finite(x, "kummer_1f1");
    long nd = 0;
    bool dpoly = nonpositive_integer(d, 1e-12, nd);
    if (!dpoly && x.real() < -5.0) {
        check_pole(d, c);
        cplx r = std::exp(x) * kummer_1f1_series(c - d, c, -x);
        if (!finite(r)) throw Error(ErrorKind::Overflow, "kummer_1f1 overflow");
        return r;
    }
    return kummer_1f1_series(d, c, x);
}

std::pair<cplx, cplx> kummer_transform_pair(cplx d, cplx c, cplx x) {
    cplx lhs = kummer_1f1_series(d, c, x);
    cplx rhs = std::exp(x) * kummer_1f1_series(c - d, c, -x);
    return {lhs, rhs};
}

cplx hermite(int n, cplx t) {
    if (n < 0 || n > 10000) throw Error(ErrorKind::InvalidArgument, "hermite order out of range");
    if (n == 0) return 1.0;
    cplx h0 = 1.0, h1 = 2.0 * t;
    for (int k = 1; k < n; ++k) {
        cplx h2 = 2.0 * t * h1 - 2.0 * static_cast<double>(k) * h0;
        h0 = h1;
        h1 = h2;
        if (!finite(h1)) throw Error(ErrorKind::Overflow, "hermite recurrence overflow");
    }
    return h1;
}

cplx lgamma_c(cplx z) {
    static constexpr std::array<double, 9> g{0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        long n = 0;
        if (nonpositive_integer(z, 0.0, n)) throw Error(ErrorKind::GammaPole, "lgamma at a pole");
        return std::log(PI / std::sin(PI * z)) - lgamma_c(1.0 - z);
    }
    z -= 1.0;
    cplx x = g[0];
    for (int i = 1; i < 9; ++i) x += g[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx rgamma(cplx z) {
    long n = 0;
    if (nonpositive_integer(z, 0.0, n)) return 0.0;
    if (z.real() < 0.5) return std::sin(PI * z) / PI * std::exp(lgamma_c(1.0 - z));
    return std::exp(-lgamma_c(z));
}

cplx parabolic_cylinder_D(cplx nu, cplx x) {
    check_finite(nu, "parabolic_cylinder_D");
    check_finite(x, "parabolic_cylinder_D");
    long n1 = 0, n2 = 0;
    if (nonpositive_integer((1.0 - nu) / 2.0, 0.0, n1) && nonpositive_integer(-nu / 2.0, 0.0, n2))
        throw Error(ErrorKind::GammaPole, "both gamma factors at poles");
    cplx x2 = x * x / 2.0;
    cplx r1 = rgamma((1.0 - nu) / 2.0), r2 = rgamma(-nu / 2.0);
    cplx t1 = r1 == 0.0 ? 0.0 : r1 * kummer_1f1(-nu / 2.0, 0.5, x2);
    cplx t2 = r2 == 0.0 ? 0.0 : std::sqrt(2.0) * x * r2 * kummer_1f1((1.0 - nu) / 2.0, 1.5, x2);
    return std::sqrt(PI) * std::pow(2.0, nu / 2.0) * std::exp(-x * x / 4.0) * (t1 - t2);
}

namespace {

// sum_k (-1)^k (c^2/9)^k x^{3k+s} / (k! Gamma(k+g)), or its x-derivative
cplx kernel_series(cplx c, cplx x, Parity parity, bool deriv) {
    check_finite(c, "degenerate_kernel");
    check_finite(x, "degenerate_kernel");
    if (c == 0.0) throw Error(ErrorKind::InvalidArgument, "degenerate_kernel needs c != 0");
    const bool odd = parity == Parity::Odd;
    const double gam = odd ? 4.0 / 3.0 : 2.0 / 3.0;
    const cplx w = -(c * c / 9.0) * x * x * x;
    const qc qw(w);
    cplx pref = odd ? std::pow(c / 3.0, 1.0 / 3.0) : std::pow(c / 3.0, -1.0 / 3.0);
    if (!deriv) {
        qc first(rgamma(gam));
        auto ratio = [&](long k) {
            ext kk = static_cast<ext>(k);
            return qw * (1 / ((kk + 1) * (kk + gam)));
        };
        cplx sum = to_double(sum_series(first, ratio, -1, "degenerate_kernel"), "degenerate_kernel overflow");
        return pref * (odd ? x * sum : sum);
    }
    // d/dx x^{3k+s} = (3k+s) x^{3k+s-1}; even series starts at k=1
    if (odd) {
        qc first(rgamma(gam));
        auto ratio = [&](long k) {
            ext kk = static_cast<ext>(k);
            return qw * ((3 * kk + 4) / ((3 * kk + 1) * (kk + 1) * (kk + gam)));
        };
        return pref * to_double(sum_series(first, ratio, -1, "degenerate_kernel"), "degenerate_kernel overflow");
    }
    // shift k = j+1: 3 x^2 (-c^2/9) sum_j w^j / (j! Gamma(j+1+g))
    qc first(rgamma(gam + 1.0));
    auto ratio = [&](long j) {
        ext jj = static_cast<ext>(j);
        return qw * (1 / ((jj + 1) * (jj + 1 + gam)));
    };
    cplx sum = to_double(sum_series(first, ratio, -1, "degenerate_kernel"), "degenerate_kernel overflow");
    return pref * (-(c * c / 9.0)) * 3.0 * x * x * sum;
}

}  // namespace

cplx degenerate_kernel(cplx c, cplx x, Parity parity) { return kernel_series(c, x, parity, false); }

cplx degenerate_kernel_deriv(cplx c, cplx x, Parity parity) { return kernel_series(c, x, parity, true); }

cplx airy_ai(cplx x) {
    return (degenerate_kernel(1.0, -x, Parity::Odd) + degenerate_kernel(1.0, -x, Parity::Even)) / 3.0;
}

cplx airy_bi(cplx x) {
    return (degenerate_kernel(1.0, -x, Parity::Even) - degenerate_kernel(1.0, -x, Parity::Odd)) / std::sqrt(3.0);
}

}  // namespace aes
