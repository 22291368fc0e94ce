#include "herald/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace herald {

namespace {

// Pade 13 coefficients (Higham, "The scaling and squaring method for the
// matrix exponential revisited").
constexpr double kB[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

constexpr double kTheta13 = 5.371920351148152;

}  // namespace

Matrix expm(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("expm: matrix must be square");
    }
    const int n = static_cast<int>(a.rows());
    if (n == 0) return a;

    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int squarings = 0;
    if (norm > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    }
    const Matrix as = a / std::pow(2.0, squarings);

    const Matrix a2 = as * as;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix ident = Matrix::Identity(n, n);

    const Matrix u = as * (a6 * (kB[13] * a6 + kB[11] * a4 + kB[9] * a2) +
                           kB[7] * a6 + kB[5] * a4 + kB[3] * a2 + kB[1] * ident);
    const Matrix v = a6 * (kB[12] * a6 + kB[10] * a4 + kB[8] * a2) +
                     kB[6] * a6 + kB[4] * a4 + kB[2] * a2 + kB[0] * ident;

    Matrix r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) {
        r = r * r;
    }
    return r;
}

Matrix propagator(const Matrix& h, double t) {
    return expm(Complex(0.0, -t) * h);
}

}  // namespace herald
