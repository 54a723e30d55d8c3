#include "qcheque/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcheque {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Mat2 gate_matrix(Gate g) {
    const cdouble i{0.0, 1.0};
    Mat2 m;
    switch (g) {
        case Gate::I:
            m(0, 0) = 1.0; m(1, 1) = 1.0;
            return m;
        case Gate::X:
            m(0, 1) = 1.0; m(1, 0) = 1.0;
            return m;
        case Gate::Y:
            m(0, 1) = -i; m(1, 0) = i;
            return m;
        case Gate::Z:
            m(0, 0) = 1.0; m(1, 1) = -1.0;
            return m;
        case Gate::H:
            m(0, 0) = kInvSqrt2; m(0, 1) = kInvSqrt2;
            m(1, 0) = kInvSqrt2; m(1, 1) = -kInvSqrt2;
            return m;
        case Gate::S:
            m(0, 0) = 1.0; m(1, 1) = i;
            return m;
        case Gate::Sdg:
            m(0, 0) = 1.0; m(1, 1) = -i;
            return m;
        case Gate::T:
            m(0, 0) = 1.0; m(1, 1) = std::polar(1.0, std::numbers::pi / 4);
            return m;
        case Gate::Tdg:
            m(0, 0) = 1.0; m(1, 1) = std::polar(1.0, -std::numbers::pi / 4);
            return m;
    }
    throw std::invalid_argument("gate_matrix: unknown gate");
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Mat2 m;
    m(0, 0) = c;
    m(0, 1) = -std::polar(s, lambda);
    m(1, 0) = std::polar(s, phi);
    m(1, 1) = std::polar(c, phi + lambda);
    return m;
}

std::string gate_name(Gate g) {
    switch (g) {
        case Gate::I: return "I";
        case Gate::X: return "X";
        case Gate::Y: return "Y";
        case Gate::Z: return "Z";
        case Gate::H: return "H";
        case Gate::S: return "S";
        case Gate::Sdg: return "Sdg";
        case Gate::T: return "T";
        case Gate::Tdg: return "Tdg";
    }
    throw std::invalid_argument("gate_name: unknown gate");
}

Gate gate_from_name(const std::string& name) {
    if (name == "I") return Gate::I;
    if (name == "X") return Gate::X;
    if (name == "Y") return Gate::Y;
    if (name == "Z") return Gate::Z;
    if (name == "H") return Gate::H;
    if (name == "S") return Gate::S;
    if (name == "Sdg") return Gate::Sdg;
    if (name == "T") return Gate::T;
    if (name == "Tdg") return Gate::Tdg;
    throw std::invalid_argument("gate_from_name: unknown gate '" + name + "'");
}

Mat2 basis_rotation(Basis b) {
    switch (b) {
        case Basis::Z: return Mat2::identity();
        case Basis::X: return gate_matrix(Gate::H);
        case Basis::Y: return gate_matrix(Gate::H) * gate_matrix(Gate::Sdg);
    }
    throw std::invalid_argument("basis_rotation: unknown basis");
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::X: return "X";
        case Basis::Y: return "Y";
        case Basis::Z: return "Z";
    }
    throw std::invalid_argument("basis_name: unknown basis");
}

Basis basis_from_name(const std::string& name) {
    if (name == "X") return Basis::X;
    if (name == "Y") return Basis::Y;
    if (name == "Z") return Basis::Z;
    throw std::invalid_argument("basis_from_name: unknown basis '" + name + "'");
}

} // namespace qcheque
