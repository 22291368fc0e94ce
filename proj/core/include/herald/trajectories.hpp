// trajectories.hpp — quantum-jump Monte Carlo unraveling of the master
// equation with polarization-resolved detection and the automatic photon
// re-injection feedback protocol.
//
// One trajectory: the state evolves from |L,L;1,0> under the non-Hermitian
// effective Hamiltonian; when its squared norm crosses a pre-drawn uniform
// threshold the jump time is located by bisection, the leaking mode is chosen
// with probability proportional to <c^dag c>, and the collapse is applied.
//   left leak:  with probability eta_f the photon is re-injected (round
//               counter increments) while rounds remain; otherwise the
//               trajectory terminates.
//   right leak: with probability eta_d the herald fires (Success), else the
//               photon is lost and the atoms are left entangled unheralded.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "herald/master_equation.hpp"
#include "herald/model.hpp"

namespace herald {

struct ProtocolConfig {
    double detector_efficiency{1.0};  // eta_d in [0,1]
    double feedback_efficiency{1.0};  // eta_f in [0,1]
    int max_rounds{1};                // photon injections, including the first
    std::uint64_t rng_seed{0x6a09e667f3bcc908ULL};
    double jump_time_tolerance{1e-8};  // relative bisection tolerance
    double feedback_dead_time{0.0};    // shifts timestamps of later rounds only

    void validate() const;
};

enum class EventKind {
    JumpLeftReinjected,   // left leak fed back to the cavity
    JumpLeftDetectorD1,   // left leak with no rounds remaining
    JumpLeftLost,         // left leak lost in the feedback path
    JumpRightDetectorD2,  // right leak heralded: entangled state certified
    JumpRightLost,        // right leak missed by the detector
};

bool is_left_jump(EventKind kind);

struct TrajectoryEvent {
    double time;
    EventKind kind;
};

enum class Outcome { Success, FailureAbsorbedLoss, MaxRoundsExceeded };

enum class AtomicOutcome { BothGroundLeft, EntangledSymmetric };

struct TrajectoryRecord {
    std::uint64_t seed{0};
    std::vector<TrajectoryEvent> events;  // times strictly increasing
    Outcome outcome{Outcome::MaxRoundsExceeded};
    int rounds_used{1};
    AtomicOutcome final_atomic_state{AtomicOutcome::BothGroundLeft};
    // Fidelity of the recorded post-jump two-atom state against
    // (|R,L> + |L,R>)/sqrt(2); meaningful when the trajectory ended in a
    // right-circular leak.
    double herald_fidelity{0.0};
};

struct EnsembleStats {
    std::int64_t n_trajectories{0};
    std::int64_t success_count{0};
    double success_fraction{0.0};
    double estimated_p{0.0};     // success fraction
    double standard_error{0.0};  // sqrt(p(1-p)/n)
    // rounds_histogram[r] = trajectories that used exactly r rounds (r >= 1).
    std::vector<std::int64_t> rounds_histogram;
    // failure_after_n[k-1] = fraction with no herald within their first k rounds.
    std::vector<double> failure_after_n;
    double max_success_infidelity{0.0};
    std::int64_t total_left_jumps{0};
    std::int64_t total_right_jumps{0};
};

// Two-atom state conditioned on "no D2 click", as a mixture of |L,L> and the
// symmetric entangled state. Lives on the 9-dimensional two-atom factor
// (index = 3*atom_a + atom_b).
struct ConditionalMixture {
    DensityMatrix two_atom_state;
    double weight_both_left{0.0};
    double weight_entangled{0.0};
    double p_single_round{0.0};
};

// Precomputes the flight dynamics once; run() is const and thread-safe.
class TrajectoryEngine {
public:
    TrajectoryEngine(const SystemParams& params, const ProtocolConfig& protocol);
    ~TrajectoryEngine();
    TrajectoryEngine(const TrajectoryEngine&) = delete;
    TrajectoryEngine& operator=(const TrajectoryEngine&) = delete;

    TrajectoryRecord run(std::uint64_t seed) const;

    // As run(), and also records the normalized full-space state at the given
    // global time (the trajectory's contribution to the ensemble average).
    TrajectoryRecord run(std::uint64_t seed, double snapshot_time, PureState& snapshot) const;

    // Probability that the photon of a single round leaks right-circular,
    // computed from the no-jump flight alone.
    double right_leak_probability() const;

    // Squared norm of the unnormalized flight state on the time grid
    // (strictly decreasing); exposed for property tests.
    const std::vector<double>& survival_grid() const;
    double grid_spacing() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

TrajectoryRecord run_trajectory(const SystemParams& params, const ProtocolConfig& protocol,
                                std::uint64_t seed);

// Independent trajectories with per-trajectory seeds derived from
// (protocol.rng_seed, index). Deterministic given the master seed, regardless
// of the worker count.
EnsembleStats run_ensemble(const SystemParams& params, const ProtocolConfig& protocol,
                           std::int64_t n, int threads = 0);

// Ensemble average of the trajectory projectors at fixed time t; converges to
// the master-equation density matrix for the plain (no-feedback) protocol.
DensityMatrix ensemble_mean_density(const SystemParams& params, const ProtocolConfig& protocol,
                                    std::int64_t n, double t, int threads = 0);

// Analytic no-click mixture from the loss/feedback branching probabilities.
ConditionalMixture conditional_mixture(const SystemParams& params,
                                       const ProtocolConfig& protocol);

}  // namespace herald
