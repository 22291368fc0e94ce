// master_equation.hpp — time integration of the cavity master equation
//   drho/dt = -i [H, rho] + (kappa/2) sum_modes (2 c rho c^dag - c^dag c rho - rho c^dag c)
// and extraction of the asymptotic mixture and the success probability p.

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "herald/model.hpp"
#include "herald/operators.hpp"

namespace herald {

enum class StepMethod { RK4Fixed, RK45Adaptive };

struct IntegratorConfig {
    StepMethod method{StepMethod::RK4Fixed};
    // Fixed step; 0 selects 0.01 / max rate. Must satisfy h <= 0.02 / max rate.
    double step{0.0};
    // Adaptive relative tolerance; must be <= 1e-8.
    double rel_tol{1e-10};
    // Integration horizon; 0 selects 50/kappa (or 50/g_left when kappa == 0).
    double t_max{0.0};
    // Steady state is declared when the intracavity excitation (photon present
    // or an atom excited) drops below this.
    double convergence_threshold{1e-10};
    // Integrate on the invariant subspace actually reachable from the initial
    // state. Exact: the complement is never populated; kept switchable so the
    // equivalence with the full-space run can be tested directly.
    bool restrict_to_reachable{true};

    double resolve_step(const SystemParams& params) const;
    double resolve_t_max(const SystemParams& params) const;
    void validate(const SystemParams& params) const;
};

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double time);
    double time() const noexcept { return time_; }

private:
    double time_;
};

struct MasterEvolution {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
};

struct SteadyStateResult {
    DensityMatrix rho_infinity;
    double p{0.0};                  // weight of the entangled component
    double t_converged{0.0};
    double residual{0.0};           // final intracavity excitation
    bool converged{false};
    // Fidelity of the two-atom state conditioned on a right-circular photon
    // having leaked, against (|R,L> + |L,R>)/sqrt(2). Zero when p vanishes.
    double entangled_fidelity{0.0};
};

// Right-hand side of the master equation, literal dense form.
DensityMatrix lindblad_rhs(const DensityMatrix& rho, const ModelOperators& model);

// Evolve from the params' initial ket and record the state at the requested
// times (ascending, first >= 0). Trace preservation is monitored; drift
// beyond 1e-8 raises IntegrationError with the time of failure.
MasterEvolution evolve_master(const SystemParams& params, const IntegratorConfig& config,
                              std::span<const double> sample_times);

// Integrate until the intracavity excitation falls below the convergence
// threshold or t_max is reached (converged == false in the latter case).
// Requires kappa > 0; with kappa == 0 no steady state exists and the closed
// solution applies instead.
SteadyStateResult steady_state_p(const SystemParams& params, const IntegratorConfig& config);

// Sorted flat indices of the smallest invariant subspace containing the
// initial ket, closed under the action of the Hamiltonian and the collapse
// operators. Exposed for tests.
std::vector<int> reachable_subspace(const ModelOperators& model);

}  // namespace herald
