#pragma once

#include <utility>

#include "aes/complex.hpp"

namespace aes {

enum class Parity { Even, Odd };

// 1F1(d|c|x)
cplx kummer_1f1(cplx d, cplx c, cplx x);

// 1F1 by the plain series, no automatic Kummer transform
cplx kummer_1f1_series(cplx d, cplx c, cplx x);

// (1F1(d|c|x), e^x 1F1(c-d|c|-x)), both by direct series
std::pair<cplx, cplx> kummer_transform_pair(cplx d, cplx c, cplx x);

cplx hermite(int n, cplx t);

cplx rgamma(cplx z);
cplx lgamma_c(cplx z);

cplx parabolic_cylinder_D(cplx nu, cplx x);

// sqrt(x) J_{1/3}(2/3 c x^{3/2}) (Odd) or sqrt(x) J_{-1/3}(...) (Even), as a power series in x
cplx degenerate_kernel(cplx c, cplx x, Parity parity);
// d/dx of degenerate_kernel
cplx degenerate_kernel_deriv(cplx c, cplx x, Parity parity);

cplx airy_ai(cplx x);
cplx airy_bi(cplx x);

}  // namespace aes
