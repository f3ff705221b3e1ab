#pragma once

#include "isored/ratfunc.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace isored {

using Complex = std::complex<double>;
using ComplexMatrix = std::vector<std::vector<Complex>>;
using ComplexVector = std::vector<Complex>;

// Sorted, duplicate-free subset of {1,...,n}. 1-based to match the usual
// index-set convention; conversion to 0-based happens inside the operations.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> indices);

    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    int operator[](std::size_t i) const { return indices_[i]; }
    const std::vector<int>& indices() const { return indices_; }

    bool contains(int i) const;
    bool subset_of(const IndexSet& other) const;
    // {1,...,n} minus this set.
    IndexSet complement(int n) const;
    static IndexSet full(int n);

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.indices_ == b.indices_;
    }

private:
    std::vector<int> indices_;
};

// Multiset of numeric roots with exact integer multiplicities.
struct RootMultiset {
    struct Entry {
        Complex root;
        int multiplicity;
    };
    std::vector<Entry> entries;

    int total_multiplicity() const;
    bool empty() const { return entries.empty(); }
    // Merge roots closer than tol into one entry; result sorted by (re, im).
    RootMultiset normalized(double tol = 1e-9) const;
};

RootMultiset multiset_union(const RootMultiset& a, const RootMultiset& b, double tol = 1e-9);
RootMultiset multiset_difference(const RootMultiset& a, const RootMultiset& b, double tol = 1e-9);
bool multiset_equal(const RootMultiset& a, const RootMultiset& b, double tol = 1e-9);

// Square matrix over the rational function field.
class WMatrix {
public:
    WMatrix() = default;
    explicit WMatrix(int n);
    WMatrix(int n, std::vector<RatFunc> entries);

    static WMatrix identity(int n);

    int dim() const { return n_; }
    const RatFunc& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    RatFunc& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    bool all_w_pi() const;

    friend bool operator==(const WMatrix& a, const WMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const WMatrix& a, const WMatrix& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<RatFunc> entries_;
};

WMatrix submatrix(const WMatrix& m, const IndexSet& rows, const IndexSet& cols);
WMatrix operator+(const WMatrix& a, const WMatrix& b);
WMatrix operator-(const WMatrix& a, const WMatrix& b);
WMatrix operator*(const WMatrix& a, const WMatrix& b);
// M - lambda*I.
WMatrix shift_by_lambda(const WMatrix& m);

// det of a matrix over the fraction field; elimination with lowest-degree
// pivoting for n > 4, cofactor expansion otherwise.
RatFunc wdet(const WMatrix& m);
// Cofactor-expansion determinant, any n. Kept as an independent route.
RatFunc wdet_cofactor(const WMatrix& m);

// Inverse over the field; throws singularity_error when det == 0.
WMatrix winverse(const WMatrix& m);

// det(M - lambda*I), reduced.
RatFunc char_ratfunc(const WMatrix& m);

// Roots (with exact multiplicities) of the numerator / denominator of the
// characteristic rational function.
RootMultiset spectrum(const WMatrix& m);
RootMultiset inverse_spectrum(const WMatrix& m);
// Exact multiplicity roots of an arbitrary polynomial.
RootMultiset poly_roots(const Poly& p);

// S(M) = (M - lambda*I)^{-1} + lambda*I.
WMatrix spectral_inverse(const WMatrix& m);

// Denominator-cleared polynomial matrix used for Gershgorin-type regions.
std::vector<std::vector<Poly>> polynomial_extension(const WMatrix& m);

// Entrywise numeric evaluation; throws pole_error naming the offending entry.
ComplexMatrix eval_at(const WMatrix& m, Complex lambda0);
bool in_domain(const WMatrix& m, Complex lambda0, double tol = 1e-12);

// (M(lambda) - lambda*I) v, evaluated symbolically first so entry poles may
// cancel against the vector; throws pole_error if a pole survives.
ComplexVector shifted_matvec(const WMatrix& m, const ComplexVector& v, Complex lambda0);

} // namespace isored
