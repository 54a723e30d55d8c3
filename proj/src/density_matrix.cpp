#include "qcheque/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcheque {

DensityMatrix2::DensityMatrix2() {
    m_(0, 0) = 1.0;
}

DensityMatrix2::DensityMatrix2(const Mat2& m) : m_(m) {}

DensityMatrix2 DensityMatrix2::pure(cdouble a0, cdouble a1) {
    const double n2 = std::norm(a0) + std::norm(a1);
    if (std::abs(n2 - 1.0) > 1e-9)
        throw std::invalid_argument("DensityMatrix2::pure: amplitudes not normalized");
    Mat2 m;
    m(0, 0) = a0 * std::conj(a0);
    m(0, 1) = a0 * std::conj(a1);
    m(1, 0) = a1 * std::conj(a0);
    m(1, 1) = a1 * std::conj(a1);
    return DensityMatrix2(m);
}

DensityMatrix2 DensityMatrix2::from_bloch(double x, double y, double z) {
    Mat2 m;
    m(0, 0) = (1.0 + z) / 2.0;
    m(1, 1) = (1.0 - z) / 2.0;
    m(0, 1) = cdouble{x / 2.0, -y / 2.0};
    m(1, 0) = cdouble{x / 2.0, y / 2.0};
    return DensityMatrix2(m);
}

double DensityMatrix2::trace_real() const {
    return (m_(0, 0) + m_(1, 1)).real();
}

bool DensityMatrix2::is_hermitian(double tol) const {
    return std::abs(m_(0, 0).imag()) <= tol && std::abs(m_(1, 1).imag()) <= tol &&
           std::abs(m_(0, 1) - std::conj(m_(1, 0))) <= tol;
}

std::pair<double, double> DensityMatrix2::eigenvalues() const {
    const double tr = trace_real();
    const double det = (m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0)).real();
    const double disc = std::max(0.0, tr * tr / 4.0 - det);
    const double root = std::sqrt(disc);
    return {tr / 2.0 + root, tr / 2.0 - root};
}

bool DensityMatrix2::is_physical(double tol) const {
    if (!is_hermitian(tol)) return false;
    if (std::abs(trace_real() - 1.0) > tol) return false;
    return eigenvalues().second >= -tol;
}

double DensityMatrix2::purity() const {
    cdouble tr2{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) tr2 += m_(i, j) * m_(j, i);
    return tr2.real();
}

double DensityMatrix2::max_entry_diff(const DensityMatrix2& other) const {
    return max_abs_diff(m_, other.m_);
}

nlohmann::json DensityMatrix2::to_json() const {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (int r = 0; r < 2; ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (int c = 0; c < 2; ++c) {
            re_row.push_back(m_(r, c).real());
            im_row.push_back(m_(r, c).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return {{"re", re}, {"im", im}};
}

DensityMatrix2 DensityMatrix2::from_json(const nlohmann::json& j) {
    if (!j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("DensityMatrix2::from_json: need 2x2 re and im");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != 2 || im.size() != 2 || re[0].size() != 2 || re[1].size() != 2 ||
        im[0].size() != 2 || im[1].size() != 2)
        throw std::invalid_argument("DensityMatrix2::from_json: need 2x2 re and im");
    Mat2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m(r, c) = cdouble{re[r][c].get<double>(), im[r][c].get<double>()};
    return DensityMatrix2(m);
}

double fidelity(const DensityMatrix2& r, const DensityMatrix2& s) {
    const Mat2& a = r.mat();
    const Mat2& b = s.mat();
    cdouble tr{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) tr += a(i, j) * b(j, i);
    const double det_a = std::max(0.0, (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real());
    const double det_b = std::max(0.0, (b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)).real());
    return tr.real() + 2.0 * std::sqrt(det_a * det_b);
}

double trace_distance(const DensityMatrix2& r, const DensityMatrix2& s) {
    Mat2 d;
    for (int i = 0; i < 4; ++i) d.a[i] = r.mat().a[i] - s.mat().a[i];
    const DensityMatrix2 diff(d);
    auto [l1, l2] = diff.eigenvalues();
    return (std::abs(l1) + std::abs(l2)) / 2.0;
}

} // namespace qcheque
