#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace qcheque {

using cdouble = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<cdouble, 4> a{};

    cdouble& operator()(int r, int c) { return a[2 * r + c]; }
    const cdouble& operator()(int r, int c) const { return a[2 * r + c]; }

    static Mat2 identity();
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 adjoint(const Mat2& m);
double max_abs_diff(const Mat2& x, const Mat2& y);
bool is_unitary(const Mat2& m, double tol = 1e-10);

// Dense square complex matrix; used to realize whole-circuit unitaries in
// identity checks.  Row-major.
struct CMatrix {
    std::size_t n = 0;
    std::vector<cdouble> a;

    explicit CMatrix(std::size_t dim) : n(dim), a(dim * dim) {}

    cdouble& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const cdouble& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static CMatrix identity(std::size_t dim);
};

CMatrix operator*(const CMatrix& x, const CMatrix& y);
double max_abs_diff(const CMatrix& x, const CMatrix& y);

} // namespace qcheque
