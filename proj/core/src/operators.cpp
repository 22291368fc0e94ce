#include "herald/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace herald {

namespace {

void require_same_dim(int a, int b, const char* where) {
    if (a != b) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {}

PureState PureState::basis_vector(const HilbertSpace& space, const BasisState& ket) {
    Vector v = Vector::Zero(space.dim());
    v(space.index_of(ket)) = Complex(1.0, 0.0);
    return PureState(std::move(v));
}

PureState PureState::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::domain_error("PureState::normalized: zero vector");
    }
    return PureState(amplitudes_ / n);
}

Operator::Operator(Matrix elements, bool hermitian_hint)
    : elements_(std::move(elements)), hermitian_hint_(hermitian_hint) {
    if (elements_.rows() != elements_.cols()) {
        throw std::invalid_argument("Operator: matrix must be square");
    }
    if (hermitian_hint_ && hermiticity_error() >= 1e-12) {
        throw std::invalid_argument("Operator: hermitian_hint set but max|A - A^dagger| >= 1e-12");
    }
}

Operator Operator::identity(int dim) {
    return Operator(Matrix::Identity(dim, dim), true);
}

Operator Operator::zero(int dim) {
    return Operator(Matrix::Zero(dim, dim), true);
}

double Operator::hermiticity_error() const {
    return (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
}

Operator Operator::adjoint() const {
    return Operator(elements_.adjoint(), hermitian_hint_);
}

Operator Operator::operator+(const Operator& rhs) const {
    require_same_dim(dim(), rhs.dim(), "Operator::operator+");
    return Operator(elements_ + rhs.elements_);
}

Operator Operator::operator-(const Operator& rhs) const {
    require_same_dim(dim(), rhs.dim(), "Operator::operator-");
    return Operator(elements_ - rhs.elements_);
}

Operator Operator::operator*(const Operator& rhs) const {
    require_same_dim(dim(), rhs.dim(), "Operator::operator*");
    return Operator(elements_ * rhs.elements_);
}

Operator operator*(Complex scalar, const Operator& op) {
    return Operator(scalar * op.elements_);
}

DensityMatrix::DensityMatrix(Matrix elements) : elements_(std::move(elements)) {
    if (elements_.rows() != elements_.cols()) {
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    }
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

double DensityMatrix::hermiticity_error() const {
    return (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    const Matrix herm = 0.5 * (elements_ + elements_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

PureState apply(const Operator& op, const PureState& psi) {
    require_same_dim(op.dim(), psi.dim(), "apply");
    return PureState(op.matrix() * psi.amplitudes());
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return Operator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Complex expectation(const PureState& psi, const Operator& op) {
    require_same_dim(op.dim(), psi.dim(), "expectation");
    return psi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

Complex expectation(const DensityMatrix& rho, const Operator& op) {
    require_same_dim(op.dim(), rho.dim(), "expectation");
    return (rho.matrix() * op.matrix()).trace();
}

Complex inner(const PureState& a, const PureState& b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const PureState& a, const PureState& b) {
    const Complex overlap = inner(a, b);
    return std::norm(overlap);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "trace_distance");
    const Matrix diff = 0.5 * ((a.matrix() - b.matrix()) +
                               (a.matrix() - b.matrix()).adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

Operator annihilation_op(const HilbertSpace& space, Polarization pol) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        BasisState from = space.label_of(i);
        int& n = pol == Polarization::Left ? from.photons.n_left : from.photons.n_right;
        if (n == 0) continue;
        const double amp = std::sqrt(static_cast<double>(n));
        BasisState to = from;
        (pol == Polarization::Left ? to.photons.n_left : to.photons.n_right) = n - 1;
        m(space.index_of(to), i) = amp;
    }
    return Operator(std::move(m));
}

Operator creation_op(const HilbertSpace& space, Polarization pol) {
    return annihilation_op(space, pol).adjoint();
}

Operator number_op(const HilbertSpace& space, Polarization pol) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        const BasisState s = space.label_of(i);
        m(i, i) = pol == Polarization::Left ? s.photons.n_left : s.photons.n_right;
    }
    return Operator(std::move(m), true);
}

Operator atomic_transition_op(const HilbertSpace& space, Atom which,
                              AtomLevel from, AtomLevel to) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        BasisState s = space.label_of(i);
        AtomLevel& level = which == Atom::A ? s.atom_a : s.atom_b;
        if (level != from) continue;
        level = to;
        m(space.index_of(s), i) = 1.0;
    }
    return Operator(std::move(m));
}

}  // namespace herald
