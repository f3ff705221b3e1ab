#pragma once

#include "isored/wmatrix.hpp"

#include <vector>

namespace isored {

// Line mass-spring network: n nodes, springs (i, j, k) with 1 <= i < j <= n
// and exact rational stiffness k > 0. Masses must all be 1 (anything else is
// rejected; the reduction identity assumes lambda*I).
struct Spring {
    int i, j;
    Rational stiffness;
};

struct SpringNetwork {
    int n = 0;
    std::vector<Spring> springs;
    std::vector<Rational> masses; // empty means all ones

    void validate() const;
    // Path graph on n nodes with unit springs.
    static SpringNetwork path(int n);
};

// K[i][i] = sum of incident stiffnesses, K[i][j] = -k for spring (i,j,k).
WMatrix stiffness_matrix(const SpringNetwork& net);

// R_{omega^2}(K;B): the boundary frequency response in lambda = omega^2.
// B equal to all nodes returns K itself.
WMatrix frequency_response(const SpringNetwork& net, const IndexSet& boundary);

// f_B = (R_{omega^2}(K;B) - omega^2 I) u_B via the shifted product convention.
ComplexVector boundary_force(const SpringNetwork& net, const IndexSet& boundary, double omega,
                             const ComplexVector& u_boundary);

} // namespace isored
