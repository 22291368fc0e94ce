#include "herald/closed_solution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace herald {

ClosedSolution::ClosedSolution(const SystemParams& params)
    : g_left_(params.g_left), g_right_(params.g_right) {
    if (params.g_left <= 0.0) {
        throw std::invalid_argument(
            "ClosedSolution: g_left must be > 0 (photon is never absorbed otherwise)");
    }
    if (params.g_right < 0.0) {
        throw std::invalid_argument("ClosedSolution: g_right must be >= 0");
    }
    alpha_ = std::sqrt(2.0 * g_left_ * g_left_ + g_right_ * g_right_);
    beta_ = g_right_ / g_left_;
}

double ClosedSolution::ground_amplitude(double t) const {
    const double a2 = alpha_ * alpha_;
    return (g_right_ * g_right_ + 2.0 * g_left_ * g_left_ * std::cos(alpha_ * t)) / a2;
}

double ClosedSolution::excited_amplitude(double t) const {
    return (g_left_ / alpha_) * std::sin(alpha_ * t);
}

double ClosedSolution::entangled_amplitude(double t) const {
    const double s = std::sin(0.5 * alpha_ * t);
    return -(2.0 * g_left_ * g_right_ / (alpha_ * alpha_)) * s * s;
}

PureState ClosedSolution::state(const HilbertSpace& space, double t) const {
    Vector v = Vector::Zero(space.dim());
    const PhotonConfig one_left{1, 0};
    const PhotonConfig one_right{0, 1};
    const PhotonConfig vacuum{0, 0};
    using enum AtomLevel;
    v(space.index_of({GroundL, GroundL, one_left})) = ground_amplitude(t);
    v(space.index_of({Excited, GroundL, vacuum})) = excited_amplitude(t);
    v(space.index_of({GroundL, Excited, vacuum})) = excited_amplitude(t);
    v(space.index_of({GroundR, GroundL, one_right})) = entangled_amplitude(t);
    v(space.index_of({GroundL, GroundR, one_right})) = entangled_amplitude(t);
    return PureState(std::move(v));
}

double ClosedSolution::entangle_probability(double t) const {
    const double b2 = beta_ * beta_;
    const double s = std::sin(0.5 * alpha_ * t);
    return 8.0 * b2 / ((b2 + 2.0) * (b2 + 2.0)) * s * s * s * s;
}

double ClosedSolution::p_max() const {
    const double b2 = beta_ * beta_;
    return 8.0 * b2 / ((b2 + 2.0) * (b2 + 2.0));
}

double ClosedSolution::first_max_time() const {
    return std::numbers::pi / alpha_;
}

PureState closed_state(const SystemParams& params, const HilbertSpace& space, double t) {
    return ClosedSolution(params).state(space, t);
}

double entangle_probability(const SystemParams& params, double t) {
    return ClosedSolution(params).entangle_probability(t);
}

double p_max(const SystemParams& params) {
    return ClosedSolution(params).p_max();
}

}  // namespace herald
