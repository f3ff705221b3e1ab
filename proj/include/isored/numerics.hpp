#pragma once

#include "isored/wmatrix.hpp"

#include <limits>
#include <vector>

namespace isored {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// All roots of a square-free polynomial by Aberth-Ehrlich simultaneous
// iteration. Throws numeric_error on non-convergence.
std::vector<Complex> roots_numeric(const Poly& p);
std::vector<Complex> roots_numeric(const std::vector<Complex>& coeffs);

struct SvdResult {
    // A = U * diag(sigma) * V^H with sigma descending.
    std::vector<double> sigma;
    ComplexMatrix u; // n x n, columns are left singular vectors
    ComplexMatrix v; // n x n, columns are right singular vectors
};

// One-sided Jacobi SVD of a square complex matrix.
SvdResult svd_jacobi(const ComplexMatrix& a);
std::vector<double> singular_values(const ComplexMatrix& a);

// p in {1, 2, inf}: max column sum / largest singular value / max row sum.
enum class Norm { one, two, inf };
Norm norm_from_value(double p);
double opnorm(const ComplexMatrix& a, Norm p = Norm::two);

ComplexMatrix complex_inverse(const ComplexMatrix& a);

// ||(M(lambda0) - lambda0 I)^{-1}||_p; +inf at eigenvalues. At points outside
// dom(M) the symbolic resolvent is evaluated entrywise after cancellation;
// a pole that survives cancellation throws pole_error.
double resolvent_norm(const WMatrix& m, Complex lambda0, Norm p = Norm::two);

struct PseudoWitness {
    Complex lambda;
    double sigma_min;
    ComplexVector right_vector;
    ComplexVector left_vector;
    ComplexMatrix perturbation; // rank one, 2-norm sigma_min
};

// Smallest singular pair of M(lambda0) - lambda0 I, plus the rank-one
// perturbation that makes lambda0 an exact eigenvalue.
PseudoWitness pseudo_witness(const WMatrix& m, Complex lambda0);

} // namespace isored
