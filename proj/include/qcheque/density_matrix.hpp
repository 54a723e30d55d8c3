#pragma once

#include <utility>

#include <json.hpp>

#include "qcheque/matrix.hpp"

namespace qcheque {

// Single-qubit density matrix with the small amount of linear algebra the
// tomography pipeline needs.
class DensityMatrix2 {
public:
    DensityMatrix2();                        // |0><0|
    explicit DensityMatrix2(const Mat2& m);  // stored as-is; see is_physical()

    static DensityMatrix2 pure(cdouble a0, cdouble a1);
    static DensityMatrix2 from_bloch(double x, double y, double z);

    const Mat2& mat() const { return m_; }
    cdouble entry(int r, int c) const { return m_(r, c); }

    double trace_real() const;
    bool is_hermitian(double tol = 1e-9) const;
    // Eigenvalues assuming hermiticity, largest first.
    std::pair<double, double> eigenvalues() const;
    // Hermitian, unit trace, positive semidefinite (within tol).
    bool is_physical(double tol = 1e-9) const;
    double purity() const;  // Tr(rho^2)

    double max_entry_diff(const DensityMatrix2& other) const;

    nlohmann::json to_json() const;  // {"re": 2x2, "im": 2x2}
    static DensityMatrix2 from_json(const nlohmann::json& j);

private:
    Mat2 m_;
};

// Uhlmann fidelity, in the closed form valid for qubits:
//   F = Tr(rho sigma) + 2 sqrt(det rho * det sigma).
// Determinants pushed slightly negative by sampling noise are clamped to 0.
double fidelity(const DensityMatrix2& r, const DensityMatrix2& s);

// Half the trace norm of the difference.
double trace_distance(const DensityMatrix2& r, const DensityMatrix2& s);

} // namespace qcheque
