// closed_solution.hpp — exact solution of the lossless-cavity dynamics.
//
// With kappa = 0 the evolution from |L,L;1,0> stays in the span of the five
// kets {|L,L;1,0>, |e,L;0,0>, |L,e;0,0>, |R,L;0,1>, |L,R;0,1>} and is
// periodic with rate alpha = sqrt(2 g_L^2 + g_R^2). The value of alpha is
// forced by unit norm of the amplitudes below at every t; it is additionally
// validated against direct matrix-exponential evolution in the test suite.
//
// Amplitudes at time t:
//   ground     (g_R^2 + 2 g_L^2 cos(alpha t)) / alpha^2        on |L,L;1,0>
//   excited    (g_L/alpha) sin(alpha t)                        on each |e,.;0,0>
//   entangled  -(2 g_L g_R / alpha^2) sin^2(alpha t / 2)       on each |.,.;0,1>
//
// This module is the analytic oracle for the numerical integrators.

#pragma once

#include "herald/model.hpp"
#include "herald/operators.hpp"

namespace herald {

class ClosedSolution {
public:
    // Requires g_left > 0 (otherwise the photon is never absorbed and the
    // alpha-parametrized form degenerates). kappa is ignored.
    explicit ClosedSolution(const SystemParams& params);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    double ground_amplitude(double t) const;
    double excited_amplitude(double t) const;    // each of the two excited kets
    double entangled_amplitude(double t) const;  // each of the two entangled kets

    PureState state(const HilbertSpace& space, double t) const;

    // P(t) = 8 beta^2 / (beta^2 + 2)^2 * sin^4(alpha t / 2)
    double entangle_probability(double t) const;

    // Maximum of P(t), attained at t = (2n+1) pi / alpha.
    double p_max() const;
    double first_max_time() const;

private:
    double g_left_;
    double g_right_;
    double alpha_;
    double beta_;
};

// Free-function forms of the same operations.
PureState closed_state(const SystemParams& params, const HilbertSpace& space, double t);
double entangle_probability(const SystemParams& params, double t);
double p_max(const SystemParams& params);

}  // namespace herald
