#include "herald/master_equation.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <queue>

namespace herald {

namespace {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

constexpr double kMaxStepFactor = 0.02;   // h <= 0.02 / max rate
constexpr double kDefaultStepFactor = 0.01;
constexpr double kDefaultHorizon = 50.0;  // in units of 1/kappa
constexpr double kTraceGuard = 1e-8;

SparseMatrix to_sparse(const Matrix& dense) {
    std::vector<Eigen::Triplet<Complex>> triplets;
    for (int j = 0; j < dense.cols(); ++j) {
        for (int i = 0; i < dense.rows(); ++i) {
            if (dense(i, j) != Complex(0.0, 0.0)) {
                triplets.emplace_back(i, j, dense(i, j));
            }
        }
    }
    SparseMatrix sp(dense.rows(), dense.cols());
    sp.setFromTriplets(triplets.begin(), triplets.end());
    sp.makeCompressed();
    return sp;
}

Matrix restrict_to(const Matrix& full, const std::vector<int>& indices) {
    const int n = static_cast<int>(indices.size());
    Matrix sub(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            sub(i, j) = full(indices[i], indices[j]);
        }
    }
    return sub;
}

// Integrator working on the (possibly restricted) density matrix.
class MasterIntegrator {
public:
    MasterIntegrator(const SystemParams& params, const IntegratorConfig& config)
        : model_(build_model(params)), config_(config) {
        config.validate(params);

        if (config.restrict_to_reachable) {
            indices_ = reachable_subspace(model_);
        } else {
            indices_.resize(model_.space.dim());
            for (int i = 0; i < model_.space.dim(); ++i) indices_[i] = i;
        }
        const int n = dim();

        h_eff_ = to_sparse(restrict_to(model_.effective_hamiltonian.matrix(), indices_));
        for (const Operator& c : model_.collapse_ops) {
            const Matrix sub = restrict_to(c.matrix(), indices_);
            collapse_.push_back(to_sparse(sub));
            collapse_adj_.push_back(to_sparse(sub.adjoint()));
        }

        excited_diag_.resize(n);
        for (int i = 0; i < n; ++i) {
            excited_diag_[i] =
                model_.excitation_observable.matrix()(indices_[i], indices_[i]).real();
        }

        rho_ = Matrix::Zero(n, n);
        const int init = model_.space.index_of(params.initial_state);
        const auto pos = std::find(indices_.begin(), indices_.end(), init);
        rho_(pos - indices_.begin(), pos - indices_.begin()) = 1.0;

        k1_.resize(n, n); k2_.resize(n, n); k3_.resize(n, n); k4_.resize(n, n);
        scratch_.resize(n, n); stage_.resize(n, n);
    }

    int dim() const { return static_cast<int>(indices_.size()); }
    double time() const { return t_; }
    const ModelOperators& model() const { return model_; }

    // d rho = -i (M - M^dag) + sum C rho C^dag with M = H_eff rho; identical to
    // the commutator-plus-dissipator form of the master equation.
    void rhs(const Matrix& rho, Matrix& out) {
        scratch_.noalias() = h_eff_ * rho;
        out = Complex(0.0, -1.0) * scratch_;
        out += out.adjoint().eval();
        for (std::size_t k = 0; k < collapse_.size(); ++k) {
            scratch_.noalias() = collapse_[k] * rho;
            out.noalias() += scratch_ * collapse_adj_[k];
        }
    }

    void rk4_step(double h) {
        rhs(rho_, k1_);
        stage_ = rho_ + (0.5 * h) * k1_;
        rhs(stage_, k2_);
        stage_ = rho_ + (0.5 * h) * k2_;
        rhs(stage_, k3_);
        stage_ = rho_ + h * k3_;
        rhs(stage_, k4_);
        rho_ += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
        hermitize();
        t_ += h;
    }

    // Advance to exactly t_target.
    void integrate_to(double t_target) {
        if (config_.method == StepMethod::RK4Fixed) {
            integrate_fixed(t_target);
        } else {
            integrate_adaptive(t_target);
        }
    }

    double residual() const {
        double r = 0.0;
        for (int i = 0; i < dim(); ++i) {
            r += excited_diag_[i] * rho_(i, i).real();
        }
        return r;
    }

    double trace_error() const { return std::abs(rho_.trace().real() - 1.0); }

    void check_trace() const {
        if (trace_error() > kTraceGuard) {
            throw IntegrationError("master equation integration lost trace", t_);
        }
    }

    DensityMatrix embedded() const {
        Matrix full = Matrix::Zero(model_.space.dim(), model_.space.dim());
        for (int i = 0; i < dim(); ++i) {
            for (int j = 0; j < dim(); ++j) {
                full(indices_[i], indices_[j]) = rho_(i, j);
            }
        }
        return DensityMatrix(std::move(full));
    }

private:
    void hermitize() {
        stage_ = rho_.adjoint();
        rho_ = 0.5 * (rho_ + stage_);
    }

    void integrate_fixed(double t_target) {
        const double h = config_.resolve_step(model_.params);
        while (t_ < t_target - 1e-15 * std::max(1.0, t_target)) {
            const double step = std::min(h, t_target - t_);
            rk4_step(step);
            if (++steps_ % 128 == 0) check_trace();
        }
        check_trace();
        t_ = t_target;
    }

    // Dormand-Prince 5(4) embedded pair.
    void integrate_adaptive(double t_target) {
        static constexpr double a21 = 1.0 / 5.0;
        static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
        static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
        static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                                a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
        static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                                a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                                a65 = -5103.0 / 18656.0;
        static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                                b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
        static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                                e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                                e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

        const double rtol = config_.rel_tol;
        const double atol = 1e-14;
        double h = std::min(0.01 / model_.params.max_rate(), t_target - t_);
        const double h_min = 1e-12 / model_.params.max_rate();

        Matrix k2(dim(), dim()), k3(dim(), dim()), k4(dim(), dim());
        Matrix k5(dim(), dim()), k6(dim(), dim()), k7(dim(), dim());
        Matrix y5(dim(), dim());

        while (t_ < t_target - 1e-15 * std::max(1.0, t_target)) {
            h = std::min(h, t_target - t_);
            rhs(rho_, k1_);
            stage_ = rho_ + h * (a21 * k1_);
            rhs(stage_, k2);
            stage_ = rho_ + h * (a31 * k1_ + a32 * k2);
            rhs(stage_, k3);
            stage_ = rho_ + h * (a41 * k1_ + a42 * k2 + a43 * k3);
            rhs(stage_, k4);
            stage_ = rho_ + h * (a51 * k1_ + a52 * k2 + a53 * k3 + a54 * k4);
            rhs(stage_, k5);
            stage_ = rho_ + h * (a61 * k1_ + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
            rhs(stage_, k6);
            y5 = rho_ + h * (b1 * k1_ + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            rhs(y5, k7);

            const double err_abs =
                (h * (e1 * k1_ + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7))
                    .cwiseAbs()
                    .maxCoeff();
            const double scale = atol + rtol * std::max(1.0, y5.cwiseAbs().maxCoeff());
            const double err = err_abs / scale;

            if (err <= 1.0) {
                t_ += h;
                rho_ = y5;
                hermitize();
                if (++steps_ % 128 == 0) check_trace();
            }
            const double factor =
                std::clamp(0.9 * std::pow(err > 0 ? 1.0 / err : 1e8, 0.2), 0.2, 5.0);
            h *= factor;
            if (h < h_min) {
                throw IntegrationError("adaptive step size underflow (tolerance unreachable)", t_);
            }
        }
        check_trace();
        t_ = t_target;
    }

    ModelOperators model_;
    IntegratorConfig config_;
    std::vector<int> indices_;
    SparseMatrix h_eff_;
    std::vector<SparseMatrix> collapse_;
    std::vector<SparseMatrix> collapse_adj_;
    std::vector<double> excited_diag_;
    Matrix rho_;
    Matrix k1_, k2_, k3_, k4_, scratch_, stage_;
    double t_{0.0};
    long steps_{0};
};

}  // namespace

double IntegratorConfig::resolve_step(const SystemParams& params) const {
    const double rate = params.max_rate();
    return step > 0.0 ? step : kDefaultStepFactor / rate;
}

double IntegratorConfig::resolve_t_max(const SystemParams& params) const {
    if (t_max > 0.0) return t_max;
    const double rate = params.kappa > 0.0 ? params.kappa : params.max_rate();
    return kDefaultHorizon / rate;
}

void IntegratorConfig::validate(const SystemParams& params) const {
    params.validate();
    if (method == StepMethod::RK4Fixed) {
        const double h = resolve_step(params);
        if (h > kMaxStepFactor / params.max_rate()) {
            throw std::invalid_argument(
                "IntegratorConfig: fixed step exceeds 0.02 / max(g_left, g_right, kappa)");
        }
    } else {
        if (rel_tol > 1e-8) {
            throw std::invalid_argument("IntegratorConfig: adaptive rel_tol must be <= 1e-8");
        }
    }
    if (convergence_threshold <= 0.0) {
        throw std::invalid_argument("IntegratorConfig: convergence_threshold must be > 0");
    }
}

IntegrationError::IntegrationError(const std::string& what, double time)
    : std::runtime_error(what + " at t = " + std::to_string(time)), time_(time) {}

DensityMatrix lindblad_rhs(const DensityMatrix& rho, const ModelOperators& model) {
    if (rho.dim() != model.space.dim()) {
        throw std::invalid_argument("lindblad_rhs: dimension mismatch");
    }
    const Matrix& h = model.hamiltonian.matrix();
    const Matrix& r = rho.matrix();
    Matrix out = Complex(0.0, -1.0) * (h * r - r * h);
    for (const Operator& c : model.collapse_ops) {
        const Matrix& cm = c.matrix();
        const Matrix cd = cm.adjoint();
        out += cm * r * cd - 0.5 * (cd * cm * r + r * cd * cm);
    }
    return DensityMatrix(std::move(out));
}

MasterEvolution evolve_master(const SystemParams& params, const IntegratorConfig& config,
                              std::span<const double> sample_times) {
    MasterIntegrator integrator(params, config);
    MasterEvolution out;
    out.times.reserve(sample_times.size());
    out.states.reserve(sample_times.size());
    double previous = 0.0;
    for (double t : sample_times) {
        if (t < previous) {
            throw std::invalid_argument("evolve_master: sample times must be ascending");
        }
        integrator.integrate_to(t);
        out.times.push_back(t);
        out.states.push_back(integrator.embedded());
        previous = t;
    }
    return out;
}

SteadyStateResult steady_state_p(const SystemParams& params, const IntegratorConfig& config) {
    if (params.kappa <= 0.0) {
        throw std::invalid_argument(
            "steady_state_p: requires kappa > 0 (no steady state without cavity decay; "
            "use the closed solution instead)");
    }
    MasterIntegrator integrator(params, config);
    const double t_max = config.resolve_t_max(params);
    const double h = config.method == StepMethod::RK4Fixed
                         ? config.resolve_step(params)
                         : 0.05 / params.max_rate();

    SteadyStateResult result;
    // March in blocks of the step size, polling the excitation after each.
    long steps = 0;
    while (integrator.time() < t_max) {
        const double target = std::min(integrator.time() + h, t_max);
        integrator.integrate_to(target);
        if (++steps % 16 == 0 || integrator.time() >= t_max) {
            if (integrator.residual() < config.convergence_threshold) break;
        }
    }

    result.residual = integrator.residual();
    result.converged = result.residual < config.convergence_threshold;
    result.t_converged = integrator.time();
    result.rho_infinity = integrator.embedded();

    const ModelOperators& model = integrator.model();
    result.p = expectation(result.rho_infinity, model.target_projector_vacuum).real();

    const int rl = model.space.index_of(entangled_component_ket(Atom::A));
    const int lr = model.space.index_of(entangled_component_ket(Atom::B));
    const Matrix& rho = result.rho_infinity.matrix();
    const double weight = rho(rl, rl).real() + rho(lr, lr).real();
    if (weight > 1e-300) {
        result.entangled_fidelity =
            0.5 * (rho(rl, rl) + rho(rl, lr) + rho(lr, rl) + rho(lr, lr)).real() / weight;
    }
    return result;
}

std::vector<int> reachable_subspace(const ModelOperators& model) {
    const int dim = model.space.dim();
    std::vector<const Matrix*> generators;
    generators.push_back(&model.effective_hamiltonian.matrix());
    for (const Operator& c : model.collapse_ops) {
        generators.push_back(&c.matrix());
    }

    std::vector<bool> seen(dim, false);
    std::queue<int> frontier;
    const int init = model.space.index_of(model.params.initial_state);
    seen[init] = true;
    frontier.push(init);
    while (!frontier.empty()) {
        const int j = frontier.front();
        frontier.pop();
        for (const Matrix* g : generators) {
            for (int i = 0; i < dim; ++i) {
                if (!seen[i] && (*g)(i, j) != Complex(0.0, 0.0)) {
                    seen[i] = true;
                    frontier.push(i);
                }
            }
        }
    }

    std::vector<int> indices;
    for (int i = 0; i < dim; ++i) {
        if (seen[i]) indices.push_back(i);
    }
    return indices;
}

}  // namespace herald
