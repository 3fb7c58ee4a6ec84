#pragma once

#include <vector>

#include "aes/complex.hpp"

namespace aes {

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    cplx operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    double norm1() const;
    double max_abs() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

namespace kernels {

// OpenMP-parallel; results are bitwise identical to the serial versions
void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);
void matvec(const ComplexMatrix& a, const std::vector<cplx>& x, std::vector<cplx>& y);

void matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);
void matvec_serial(const ComplexMatrix& a, const std::vector<cplx>& x, std::vector<cplx>& y);

int max_threads();

}  // namespace kernels

// A X = B by LU with partial pivoting
ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b);

// scaling and squaring with the degree-13 Pade approximant
ComplexMatrix expm(const ComplexMatrix& a);

}  // namespace aes
