#include "isored/reduction.hpp"

#include "isored/errors.hpp"

namespace isored {

namespace {

void check_boundary(const WMatrix& m, const IndexSet& boundary) {
    if (boundary.empty()) throw domain_error("boundary index set is empty");
    if (boundary.indices().back() > m.dim()) throw domain_error("boundary index out of range");
    if (boundary.size() == static_cast<std::size_t>(m.dim()))
        throw domain_error("boundary index set must be a proper subset");
}

void rect_submatrix(const WMatrix& m, const IndexSet& rows, const IndexSet& cols,
                    std::vector<std::vector<RatFunc>>& out) {
    out.assign(rows.size(), std::vector<RatFunc>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = m.at(rows[i] - 1, cols[j] - 1);
}

} // namespace

WMatrix isospectral_reduce(const WMatrix& m, const IndexSet& boundary) {
    check_boundary(m, boundary);
    IndexSet interior = boundary.complement(m.dim());

    std::vector<std::vector<RatFunc>> bb, bi, ib;
    rect_submatrix(m, boundary, boundary, bb);
    rect_submatrix(m, boundary, interior, bi);
    rect_submatrix(m, interior, boundary, ib);

    WMatrix ii = submatrix(m, interior, interior);
    WMatrix ii_inv;
    try {
        ii_inv = winverse(shift_by_lambda(ii));
    } catch (const singularity_error&) {
        throw singularity_error("M_II - lambda I is singular: reduction does not exist");
    }

    int nb = static_cast<int>(boundary.size());
    int ni = static_cast<int>(interior.size());
    WMatrix out(nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            RatFunc s = bb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < ni; ++k)
                for (int l = 0; l < ni; ++l)
                    s -= bi[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                         ii_inv.at(k, l) * ib[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            out.at(i, j) = s;
        }
    return out;
}

WMatrix sequential_reduce(const WMatrix& m, const std::vector<IndexSet>& chain) {
    if (chain.empty()) throw domain_error("empty reduction chain");
    IndexSet previous = IndexSet::full(m.dim());
    WMatrix current = m;
    for (const IndexSet& b : chain) {
        if (b.empty() || !b.subset_of(previous) || b.size() == previous.size())
            throw domain_error("reduction chain must be strictly nested");
        // Relabel b relative to the current matrix.
        std::vector<int> local;
        int pos = 1;
        for (int idx : previous.indices()) {
            if (b.contains(idx)) local.push_back(pos);
            ++pos;
        }
        current = isospectral_reduce(current, IndexSet(std::move(local)));
        previous = b;
    }
    return current;
}

std::pair<RootMultiset, RootMultiset>
predicted_reduced_spectra(const WMatrix& m, const IndexSet& boundary, double tol) {
    check_boundary(m, boundary);
    IndexSet interior = boundary.complement(m.dim());
    WMatrix ii = submatrix(m, interior, interior);

    RootMultiset sm = spectrum(m);
    RootMultiset sim = inverse_spectrum(m);
    RootMultiset sii = spectrum(ii);
    RootMultiset siii = inverse_spectrum(ii);

    RootMultiset gains = multiset_union(sm, siii, tol);
    RootMultiset losses = multiset_union(sii, sim, tol);
    return {multiset_difference(gains, losses, tol), multiset_difference(losses, gains, tol)};
}

WMatrix reduce_spectral_inverse(const WMatrix& m, const IndexSet& boundary) {
    check_boundary(m, boundary);
    if (!m.all_w_pi())
        throw domain_error("reduce_spectral_inverse requires a W_pi matrix");

    WMatrix direct = isospectral_reduce(spectral_inverse(m), boundary);

    // Schur route: G / G_II + lambda I with G = (M - lambda I)^{-1}.
    WMatrix g = winverse(shift_by_lambda(m));
    IndexSet interior = boundary.complement(m.dim());
    std::vector<std::vector<RatFunc>> gbb, gbi, gib;
    rect_submatrix(g, boundary, boundary, gbb);
    rect_submatrix(g, boundary, interior, gbi);
    rect_submatrix(g, interior, boundary, gib);
    WMatrix gii_inv = winverse(submatrix(g, interior, interior));

    int nb = static_cast<int>(boundary.size());
    int ni = static_cast<int>(interior.size());
    WMatrix schur(nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            RatFunc s = gbb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < ni; ++k)
                for (int l = 0; l < ni; ++l)
                    s -= gbi[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                         gii_inv.at(k, l) * gib[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            if (i == j) s += RatFunc::lambda();
            schur.at(i, j) = s;
        }

    if (direct != schur)
        throw consistency_error("direct and Schur routes for R(S(M);B) disagree");
    return direct;
}

} // namespace isored
