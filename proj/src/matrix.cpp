#include "qcheque/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcheque {

Mat2 Mat2::identity() {
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
}

Mat2 adjoint(const Mat2& m) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = std::conj(m(j, i));
    return r;
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
    return d;
}

bool is_unitary(const Mat2& m, double tol) {
    return max_abs_diff(adjoint(m) * m, Mat2::identity()) <= tol;
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("CMatrix multiply: size mismatch");
    CMatrix r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const cdouble xv = x(i, k);
            if (xv == cdouble{}) continue;
            for (std::size_t j = 0; j < x.n; ++j) r(i, j) += xv * y(k, j);
        }
    return r;
}

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("CMatrix diff: size mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
    return d;
}

} // namespace qcheque
