#pragma once

#include "isored/wmatrix.hpp"

#include <utility>
#include <vector>

namespace isored {

// R_lambda(M;B) = M_BB - M_BI (M_II - lambda I)^{-1} M_IB.
// B must be a nonempty proper subset of {1,...,n}.
WMatrix isospectral_reduce(const WMatrix& m, const IndexSet& boundary);

// Reduce over a strictly nested chain B_1 > B_2 > ... > B_m.
WMatrix sequential_reduce(const WMatrix& m, const std::vector<IndexSet>& chain);

// Right-hand sides of the spectrum / inverse-spectrum bookkeeping identity:
// sigma(R) = (sigma(M) u sigma^{-1}(M_II)) - (sigma(M_II) u sigma^{-1}(M))
// and the mirrored expression for sigma^{-1}(R).
std::pair<RootMultiset, RootMultiset>
predicted_reduced_spectra(const WMatrix& m, const IndexSet& boundary, double tol = 1e-9);

// R(S(M);B), computed both by direct reduction of the spectral inverse and by
// the Schur formula on (M - lambda I)^{-1}; the two routes must agree exactly.
WMatrix reduce_spectral_inverse(const WMatrix& m, const IndexSet& boundary);

} // namespace isored
