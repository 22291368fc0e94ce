// model.hpp — system parameters, the interaction Hamiltonian, the cavity
// collapse operators, and the target entangled-state projector.
//
// Conventions (fixed across the project):
//   * hbar = 1. Rates g_left, g_right and kappa share one unit; times are in
//     units of 1/kappa when kappa > 0, else 1/g_left.
//   * The simulation works in the interaction picture: the free atomic and
//     field Hamiltonians vanish at resonance, so the interaction term alone
//     generates the dynamics and all quoted times are interaction-picture
//     times.
//   * H = i * sum_{atoms} sum_{modes} g_mode (c_mode |e><mode| - c_mode^dag |mode><e|),
//     which is Hermitian and symmetric under atom exchange.

#pragma once

#include <vector>

#include "herald/hilbert.hpp"
#include "herald/operators.hpp"

namespace herald {

struct SystemParams {
    double g_left{1.0};    // coupling of the left-circular mode, >= 0
    double g_right{1.0};   // coupling of the right-circular mode, >= 0
    double kappa{1.0};     // cavity decay rate, >= 0
    int fock_cutoff{1};
    BasisState initial_state{initial_ket()};

    // g_right / g_left; defined only when g_left > 0.
    double beta() const;

    double max_rate() const;  // max(g_left, g_right, kappa)
    void validate() const;
};

// Operators derived from SystemParams, built once and shared.
struct ModelOperators {
    HilbertSpace space;
    SystemParams params;
    Operator hamiltonian;               // Hermitian
    std::vector<Operator> collapse_ops; // { sqrt(kappa) c_L, sqrt(kappa) c_R }
    Operator effective_hamiltonian;     // H - i(kappa/2) sum c^dag c, non-Hermitian
    Operator swap_ab;                   // atom exchange unitary
    // 1 - sum_{a,b in {L,R}} |a,b;0,0><a,b;0,0|: probability that a photon is
    // still to come (photon present or an atom excited). Diagonal.
    Operator excitation_observable;
    Operator target_projector_vacuum;   // projector onto (|R,L;0>+|L,R;0>)/sqrt(2)
};

Operator build_hamiltonian(const HilbertSpace& space, const SystemParams& params);
std::vector<Operator> build_collapse_ops(const HilbertSpace& space,
                                         const SystemParams& params);

// Rank-1 projector onto (|R,L;sector> + |L,R;sector>)/sqrt(2).
Operator target_projector(const HilbertSpace& space, const PhotonConfig& sector);

// Unitary exchanging the two atomic factors.
Operator swap_operator(const HilbertSpace& space);

ModelOperators build_model(const SystemParams& params);

}  // namespace herald
