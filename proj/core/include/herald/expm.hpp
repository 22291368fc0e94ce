// expm.hpp — dense matrix exponential by scaling-and-squaring with a
// 13/13 Pade approximant. Accuracy on the dimensions used here is better
// than 1e-10 in the max norm.

#pragma once

#include "herald/operators.hpp"

namespace herald {

Matrix expm(const Matrix& a);

// exp(-i H t), the propagator of a (possibly non-Hermitian) generator H.
Matrix propagator(const Matrix& h, double t);

}  // namespace herald
