#include "herald/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace herald {

double SystemParams::beta() const {
    if (g_left <= 0.0) {
        throw std::domain_error("SystemParams::beta: undefined for g_left == 0");
    }
    return g_right / g_left;
}

double SystemParams::max_rate() const {
    return std::max({g_left, g_right, kappa});
}

void SystemParams::validate() const {
    if (g_left < 0.0 || g_right < 0.0) {
        throw std::invalid_argument("SystemParams: couplings must be >= 0");
    }
    if (kappa < 0.0) {
        throw std::invalid_argument("SystemParams: kappa must be >= 0");
    }
    if (fock_cutoff < 1) {
        throw std::invalid_argument("SystemParams: fock_cutoff must be >= 1");
    }
    if (!(g_left > 0.0 || g_right > 0.0 || kappa > 0.0)) {
        throw std::invalid_argument("SystemParams: all rates zero, nothing to simulate");
    }
}

Operator build_hamiltonian(const HilbertSpace& space, const SystemParams& params) {
    params.validate();
    Matrix h = Matrix::Zero(space.dim(), space.dim());
    const Complex i_unit(0.0, 1.0);
    for (Atom atom : {Atom::A, Atom::B}) {
        for (Polarization pol : {Polarization::Left, Polarization::Right}) {
            const double g = pol == Polarization::Left ? params.g_left : params.g_right;
            const AtomLevel ground =
                pol == Polarization::Left ? AtomLevel::GroundL : AtomLevel::GroundR;
            const Matrix raise =
                atomic_transition_op(space, atom, ground, AtomLevel::Excited).matrix();
            const Matrix absorb = annihilation_op(space, pol).matrix();
            const Matrix term = raise * absorb;  // c |e><ground|
            h += i_unit * g * (term - term.adjoint());
        }
    }
    return Operator(std::move(h), true);
}

std::vector<Operator> build_collapse_ops(const HilbertSpace& space,
                                         const SystemParams& params) {
    params.validate();
    const double root_kappa = std::sqrt(params.kappa);
    std::vector<Operator> ops;
    ops.reserve(2);
    for (Polarization pol : {Polarization::Left, Polarization::Right}) {
        ops.push_back(Operator(root_kappa * annihilation_op(space, pol).matrix()));
    }
    return ops;
}

Operator target_projector(const HilbertSpace& space, const PhotonConfig& sector) {
    BasisState rl{AtomLevel::GroundR, AtomLevel::GroundL, sector};
    BasisState lr{AtomLevel::GroundL, AtomLevel::GroundR, sector};
    Vector phi = Vector::Zero(space.dim());
    phi(space.index_of(rl)) = 1.0 / std::sqrt(2.0);
    phi(space.index_of(lr)) = 1.0 / std::sqrt(2.0);
    return Operator(phi * phi.adjoint(), true);
}

Operator swap_operator(const HilbertSpace& space) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        BasisState s = space.label_of(i);
        std::swap(s.atom_a, s.atom_b);
        m(space.index_of(s), i) = 1.0;
    }
    return Operator(std::move(m), true);
}

ModelOperators build_model(const SystemParams& params) {
    params.validate();
    HilbertSpace space(params.fock_cutoff);

    Operator h = build_hamiltonian(space, params);
    std::vector<Operator> collapse = build_collapse_ops(space, params);

    Matrix decay = Matrix::Zero(space.dim(), space.dim());
    for (Polarization pol : {Polarization::Left, Polarization::Right}) {
        decay += number_op(space, pol).matrix();
    }
    Matrix h_eff = h.matrix() - Complex(0.0, 0.5 * params.kappa) * decay;

    Matrix excitation = Matrix::Identity(space.dim(), space.dim());
    for (AtomLevel a : {AtomLevel::GroundL, AtomLevel::GroundR}) {
        for (AtomLevel b : {AtomLevel::GroundL, AtomLevel::GroundR}) {
            const int i = space.index_of(BasisState{a, b, PhotonConfig{0, 0}});
            excitation(i, i) = 0.0;
        }
    }

    return ModelOperators{
        space,
        params,
        std::move(h),
        std::move(collapse),
        Operator(std::move(h_eff)),
        swap_operator(space),
        Operator(std::move(excitation), true),
        target_projector(space, PhotonConfig{0, 0}),
    };
}

}  // namespace herald
