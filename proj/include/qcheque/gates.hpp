#pragma once

#include <string>

#include "qcheque/matrix.hpp"

namespace qcheque {

enum class Gate { I, X, Y, Z, H, S, Sdg, T, Tdg };

Mat2 gate_matrix(Gate g);

// General single-qubit rotation:
//   u3(theta, phi, lambda) = [[cos(theta/2),            -e^{i lambda} sin(theta/2)],
//                             [e^{i phi} sin(theta/2),   e^{i(phi+lambda)} cos(theta/2)]]
Mat2 u3_matrix(double theta, double phi, double lambda);

std::string gate_name(Gate g);
Gate gate_from_name(const std::string& name);

enum class Basis { X, Y, Z };

// Rotation mapping the +1/-1 eigenstates of the chosen Pauli onto |0>/|1>:
// Z -> I, X -> H, Y -> H * Sdg.
Mat2 basis_rotation(Basis b);

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

} // namespace qcheque
