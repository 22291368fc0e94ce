// operators.hpp — dense complex operators and quantum states on the
// composite space, plus the elementary mode and transition operators.
//
// All types are immutable after construction and safe to share across
// threads.

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "herald/hilbert.hpp"

namespace herald {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

class PureState {
public:
    PureState() = default;
    explicit PureState(Vector amplitudes);

    static PureState basis_vector(const HilbertSpace& space, const BasisState& ket);

    int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }
    const Vector& amplitudes() const noexcept { return amplitudes_; }
    Complex amplitude(int index) const { return amplitudes_(index); }

    double norm() const { return amplitudes_.norm(); }
    PureState normalized() const;

private:
    Vector amplitudes_;
};

class Operator {
public:
    Operator() = default;

    // hermitian_hint asserts max|A - A^dagger| < 1e-12 and is verified here.
    explicit Operator(Matrix elements, bool hermitian_hint = false);

    static Operator identity(int dim);
    static Operator zero(int dim);

    int dim() const noexcept { return static_cast<int>(elements_.rows()); }
    const Matrix& matrix() const noexcept { return elements_; }
    bool hermitian_hint() const noexcept { return hermitian_hint_; }

    double hermiticity_error() const;  // max elementwise |A - A^dagger|
    Operator adjoint() const;

    Operator operator+(const Operator& rhs) const;
    Operator operator-(const Operator& rhs) const;
    Operator operator*(const Operator& rhs) const;
    friend Operator operator*(Complex scalar, const Operator& op);

private:
    Matrix elements_;
    bool hermitian_hint_{false};
};

class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(Matrix elements);

    static DensityMatrix pure(const PureState& psi);

    int dim() const noexcept { return static_cast<int>(elements_.rows()); }
    const Matrix& matrix() const noexcept { return elements_; }

    Complex trace() const { return elements_.trace(); }
    double hermiticity_error() const;
    // Smallest eigenvalue of the Hermitian part; >= -1e-8 for physical states.
    double min_eigenvalue() const;

private:
    Matrix elements_;
};

// ---------------------------------------------------------------------------
// Dense algebra. Dimension mismatches are rejected with invalid_argument.

PureState apply(const Operator& op, const PureState& psi);
Operator commutator(const Operator& a, const Operator& b);
Complex expectation(const PureState& psi, const Operator& op);
Complex expectation(const DensityMatrix& rho, const Operator& op);
Complex inner(const PureState& a, const PureState& b);  // <a|b>
double fidelity(const PureState& a, const PureState& b); // |<a|b>|^2
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// ---------------------------------------------------------------------------
// Elementary operators on the composite space.

// Bosonic lowering operator of the named mode; <n-1|c|n> = sqrt(n) within the
// cutoff, identity on all other tensor factors.
Operator annihilation_op(const HilbertSpace& space, Polarization pol);
Operator creation_op(const HilbertSpace& space, Polarization pol);
Operator number_op(const HilbertSpace& space, Polarization pol);

// |to><from| on the named atom, identity elsewhere.
Operator atomic_transition_op(const HilbertSpace& space, Atom which,
                              AtomLevel from, AtomLevel to);

}  // namespace herald
