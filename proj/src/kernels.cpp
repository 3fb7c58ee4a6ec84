#include "aes/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aes/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aes {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

double ComplexMatrix::norm1() const {
    double best = 0.0;
    for (int j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (auto z : data_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c;
    kernels::matmul(a, b, c);
    return c;
}

namespace kernels {
namespace {

void check_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matmul shape mismatch");
}

inline void mul_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c, int i) {
    const int K = a.cols(), M = b.cols();
    cplx* ci = c.data() + static_cast<size_t>(i) * M;
    for (int k = 0; k < K; ++k) {
        const cplx aik = a(i, k);
        if (aik == 0.0) continue;
        const cplx* bk = b.data() + static_cast<size_t>(k) * M;
        for (int j = 0; j < M; ++j) ci[j] += aik * bk[j];
    }
}

inline cplx dot_row(const ComplexMatrix& a, const std::vector<cplx>& x, int i) {
    cplx s = 0.0;
    const cplx* ai = a.data() + static_cast<size_t>(i) * a.cols();
    for (int k = 0; k < a.cols(); ++k) s += ai[k] * x[k];
    return s;
}

}  // namespace

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c) {
    check_mul(a, b);
    c = ComplexMatrix(a.rows(), b.cols());
    const int R = a.rows();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < R; ++i) mul_row(a, b, c, i);
}

void matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c) {
    check_mul(a, b);
    c = ComplexMatrix(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) mul_row(a, b, c, i);
}

void matvec(const ComplexMatrix& a, const std::vector<cplx>& x, std::vector<cplx>& y) {
    if (static_cast<int>(x.size()) != a.cols()) throw Error(ErrorKind::InvalidArgument, "matvec shape mismatch");
    y.assign(a.rows(), 0.0);
    const int R = a.rows();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < R; ++i) y[i] = dot_row(a, x, i);
}

void matvec_serial(const ComplexMatrix& a, const std::vector<cplx>& x, std::vector<cplx>& y) {
    if (static_cast<int>(x.size()) != a.cols()) throw Error(ErrorKind::InvalidArgument, "matvec shape mismatch");
    y.assign(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) y[i] = dot_row(a, x, i);
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace kernels

ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b) {
    const int n = a.rows();
    if (a.cols() != n || b.rows() != n) throw Error(ErrorKind::InvalidArgument, "lu_solve shape mismatch");
    const int m = b.cols();
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        if (best == 0.0) throw Error(ErrorKind::InvalidArgument, "singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (int j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
        }
        const cplx inv = 1.0 / a(k, k);
#pragma omp parallel for schedule(static)
        for (int i = k + 1; i < n; ++i) {
            const cplx f = a(i, k) * inv;
            if (f == 0.0) continue;
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (int j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        const cplx inv = 1.0 / a(k, k);
        for (int j = 0; j < m; ++j) {
            cplx s = b(k, j);
            for (int i = k + 1; i < n; ++i) s -= a(k, i) * b(i, j);
            b(k, j) = s * inv;
        }
    }
    return b;
}

ComplexMatrix expm(const ComplexMatrix& a) {
    static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                   1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                   670442572800.0,      33522128640.0,       1323241920.0,
                                   40840800.0,          960960.0,            16380.0,
                                   182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;
    const int n = a.rows();
    const double nrm = a.norm1();
    int s = 0;
    if (nrm > theta13) s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    ComplexMatrix A = std::ldexp(1.0, -s) * a;
    const ComplexMatrix Id = ComplexMatrix::identity(n);
    const ComplexMatrix A2 = A * A, A4 = A2 * A2, A6 = A4 * A2;
    ComplexMatrix U = A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * Id;
    U = A * U;
    ComplexMatrix V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * Id;
    ComplexMatrix X = lu_solve(V - U, V + U);
    for (int k = 0; k < s; ++k) X = X * X;
    return X;
}

}  // namespace aes
