#pragma once

#include <cmath>
#include <complex>

namespace aes {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// nearest integer if z is within tol of one on the real axis
inline bool near_integer(cplx z, double tol, long& n) {
    double r = std::round(z.real());
    if (std::abs(z.imag()) > tol || std::abs(z.real() - r) > tol) return false;
    n = static_cast<long>(r);
    return true;
}

inline bool nonpositive_integer(cplx z, double tol, long& n) {
    return near_integer(z, tol, n) && n <= 0;
}

}  // namespace aes
