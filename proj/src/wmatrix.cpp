#include "isored/wmatrix.hpp"

#include "isored/errors.hpp"
#include "isored/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isored {

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    auto last = std::unique(indices_.begin(), indices_.end());
    indices_.erase(last, indices_.end());
    if (!indices_.empty() && indices_.front() < 1)
        throw domain_error("index sets are 1-based; got index " + std::to_string(indices_.front()));
}

bool IndexSet::contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSet::subset_of(const IndexSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                         indices_.end());
}

IndexSet IndexSet::complement(int n) const {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
        if (!contains(i)) rest.push_back(i);
    return IndexSet(std::move(rest));
}

IndexSet IndexSet::full(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return IndexSet(std::move(all));
}

int RootMultiset::total_multiplicity() const {
    int t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

RootMultiset RootMultiset::normalized(double tol) const {
    std::vector<Entry> sorted = entries;
    std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
        if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
        return a.root.imag() < b.root.imag();
    });
    RootMultiset out;
    for (const auto& e : sorted) {
        if (e.multiplicity <= 0) continue;
        if (!out.entries.empty() && std::abs(out.entries.back().root - e.root) <= tol) {
            out.entries.back().multiplicity += e.multiplicity;
        } else {
            out.entries.push_back(e);
        }
    }
    return out;
}

RootMultiset multiset_union(const RootMultiset& a, const RootMultiset& b, double tol) {
    RootMultiset merged = a;
    merged.entries.insert(merged.entries.end(), b.entries.begin(), b.entries.end());
    return merged.normalized(tol);
}

RootMultiset multiset_difference(const RootMultiset& a, const RootMultiset& b, double tol) {
    RootMultiset out = a.normalized(tol);
    for (const auto& e : b.entries) {
        auto best = out.entries.end();
        double best_dist = tol;
        for (auto it = out.entries.begin(); it != out.entries.end(); ++it) {
            double d = std::abs(it->root - e.root);
            if (d <= best_dist) {
                best_dist = d;
                best = it;
            }
        }
        if (best != out.entries.end()) {
            best->multiplicity -= e.multiplicity;
            if (best->multiplicity <= 0) out.entries.erase(best);
        }
    }
    return out.normalized(tol);
}

bool multiset_equal(const RootMultiset& a, const RootMultiset& b, double tol) {
    if (a.total_multiplicity() != b.total_multiplicity()) return false;
    // Greedy nearest-neighbor matching; sorting alone can swap near-tied
    // roots (conjugate pairs, fp noise at ties) between the two lists.
    std::vector<Complex> left, right;
    for (const auto& e : a.entries)
        for (int k = 0; k < e.multiplicity; ++k) left.push_back(e.root);
    for (const auto& e : b.entries)
        for (int k = 0; k < e.multiplicity; ++k) right.push_back(e.root);
    std::vector<bool> used(right.size(), false);
    for (const Complex& r : left) {
        double best = tol;
        std::size_t pick = right.size();
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(right[j] - r);
            if (d <= best) {
                best = d;
                pick = j;
            }
        }
        if (pick == right.size()) return false;
        used[pick] = true;
    }
    return true;
}

WMatrix::WMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw domain_error("matrix dimension must be positive");
}

WMatrix::WMatrix(int n, std::vector<RatFunc> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 1) throw domain_error("matrix dimension must be positive");
    if (entries_.size() != static_cast<std::size_t>(n) * n)
        throw domain_error("entry count does not match dimension");
}

WMatrix WMatrix::identity(int n) {
    WMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::one();
    return m;
}

bool WMatrix::all_w_pi() const {
    for (const auto& e : entries_)
        if (!e.is_w_pi()) return false;
    return true;
}

WMatrix submatrix(const WMatrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.empty() || cols.empty()) throw domain_error("empty index set in submatrix");
    if (rows.indices().back() > m.dim() || cols.indices().back() > m.dim())
        throw domain_error("submatrix index out of range");
    if (rows.size() != cols.size())
        throw domain_error("submatrix requires equally sized index sets for a square result");
    WMatrix out(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i] - 1, cols[j] - 1);
    return out;
}

WMatrix operator+(const WMatrix& a, const WMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("dimension mismatch in matrix sum");
    WMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

WMatrix operator-(const WMatrix& a, const WMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("dimension mismatch in matrix difference");
    WMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

WMatrix operator*(const WMatrix& a, const WMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("dimension mismatch in matrix product");
    WMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            RatFunc s;
            for (int k = 0; k < a.dim(); ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

WMatrix shift_by_lambda(const WMatrix& m) {
    WMatrix s = m;
    for (int i = 0; i < m.dim(); ++i) s.at(i, i) -= RatFunc::lambda();
    return s;
}

RatFunc wdet_cofactor(const WMatrix& m) {
    int n = m.dim();
    if (n == 1) return m.at(0, 0);
    RatFunc det;
    std::vector<int> rest;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        WMatrix minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        RatFunc term = m.at(0, j) * wdet_cofactor(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

namespace {

// Degree used for pivot selection: total degree of num and den, favoring
// structurally simple pivots.
int pivot_weight(const RatFunc& w) { return w.num().degree() + w.den().degree(); }

} // namespace

RatFunc wdet(const WMatrix& m) {
    int n = m.dim();
    if (n <= 4) return wdet_cofactor(m);
    WMatrix a = m;
    RatFunc det = RatFunc::one();
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            if (pivot < 0 || pivot_weight(a.at(r, col)) < pivot_weight(a.at(pivot, col)))
                pivot = r;
        }
        if (pivot < 0) return RatFunc::zero();
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            negate = !negate;
        }
        det *= a.at(col, col);
        RatFunc inv = a.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            RatFunc factor = a.at(r, col) * inv;
            for (int c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
        }
    }
    return negate ? -det : det;
}

WMatrix winverse(const WMatrix& m) {
    int n = m.dim();
    if (n <= 3) {
        // Adjugate route for small matrices.
        RatFunc det = wdet_cofactor(m);
        if (det.is_zero()) throw singularity_error("matrix over W is singular");
        RatFunc det_inv = det.inverse();
        WMatrix inv(n);
        if (n == 1) {
            inv.at(0, 0) = det_inv;
            return inv;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                WMatrix minor(n - 1);
                int rr = 0;
                for (int r = 0; r < n; ++r) {
                    if (r == j) continue;
                    int cc = 0;
                    for (int c = 0; c < n; ++c) {
                        if (c == i) continue;
                        minor.at(rr, cc++) = m.at(r, c);
                    }
                    ++rr;
                }
                RatFunc cof = wdet_cofactor(minor);
                if ((i + j) % 2 != 0) cof = -cof;
                inv.at(i, j) = cof * det_inv;
            }
        return inv;
    }

    // Gauss-Jordan on [A | I] with lowest-degree pivoting.
    WMatrix a = m;
    WMatrix inv = WMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            if (pivot < 0 || pivot_weight(a.at(r, col)) < pivot_weight(a.at(pivot, col)))
                pivot = r;
        }
        if (pivot < 0) throw singularity_error("matrix over W is singular");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        RatFunc piv_inv = a.at(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            a.at(col, c) *= piv_inv;
            inv.at(col, c) *= piv_inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            RatFunc factor = a.at(r, col);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= factor * a.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

RatFunc char_ratfunc(const WMatrix& m) { return wdet(shift_by_lambda(m)); }

RootMultiset poly_roots(const Poly& p) {
    RootMultiset out;
    if (p.is_zero()) throw domain_error("roots of the zero polynomial");
    for (const auto& [factor, mult] : poly_squarefree_factor(p)) {
        for (Complex root : roots_numeric(factor)) out.entries.push_back({root, mult});
    }
    return out.normalized();
}

RootMultiset spectrum(const WMatrix& m) {
    RatFunc chi = char_ratfunc(m);
    if (chi.is_zero()) throw singularity_error("det(M - lambda I) is identically zero");
    return poly_roots(chi.num());
}

RootMultiset inverse_spectrum(const WMatrix& m) {
    RatFunc chi = char_ratfunc(m);
    if (chi.is_zero()) throw singularity_error("det(M - lambda I) is identically zero");
    if (chi.den().degree() == 0) return {};
    return poly_roots(chi.den());
}

WMatrix spectral_inverse(const WMatrix& m) {
    WMatrix shifted = shift_by_lambda(m);
    WMatrix inv;
    try {
        inv = winverse(shifted);
    } catch (const singularity_error&) {
        throw singularity_error("M - lambda I is singular: no spectral inverse");
    }
    for (int i = 0; i < m.dim(); ++i) inv.at(i, i) += RatFunc::lambda();
    return inv;
}

std::vector<std::vector<Poly>> polynomial_extension(const WMatrix& m) {
    int n = m.dim();
    std::vector<std::vector<Poly>> out(static_cast<std::size_t>(n),
                                       std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        Poly row_den = Poly::one();
        for (int j = 0; j < n; ++j) row_den *= m.at(i, j).den();
        for (int j = 0; j < n; ++j) {
            const RatFunc& w = m.at(i, j);
            Poly scaled = w.num() * poly_div_exact(row_den, w.den());
            if (i == j) {
                // L_i (M_ii - lambda) + lambda
                scaled = scaled - row_den * Poly::lambda() + Poly::lambda();
            }
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = scaled;
        }
    }
    return out;
}

bool in_domain(const WMatrix& m, Complex lambda0, double tol) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).defined_at(lambda0, tol)) return false;
    return true;
}

ComplexMatrix eval_at(const WMatrix& m, Complex lambda0) {
    int n = m.dim();
    ComplexMatrix out(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatFunc& w = m.at(i, j);
            if (!w.defined_at(lambda0)) {
                std::ostringstream msg;
                msg << "entry (" << (i + 1) << "," << (j + 1) << ") has a pole at lambda = ("
                    << lambda0.real() << "," << lambda0.imag() << ")";
                throw pole_error(msg.str());
            }
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w.eval(lambda0);
        }
    return out;
}

namespace {

// Deflate p by (x - x0) in place; returns false if the residual remainder is
// too large relative to the coefficient scale.
bool synthetic_deflate(std::vector<Complex>& coeffs, Complex x0, double scale) {
    if (coeffs.empty()) return true; // zero polynomial: (x - x0) divides it
    std::vector<Complex> q(coeffs.size() - 1);
    Complex carry = 0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
        carry = coeffs[k] + carry * x0;
        q[k - 1] = carry;
    }
    Complex rem = coeffs[0] + carry * x0;
    if (std::abs(rem) > 1e-9 * std::max(1.0, scale)) return false;
    coeffs = std::move(q);
    return true;
}

double coeff_scale(const std::vector<Complex>& coeffs) {
    double s = 0;
    for (Complex c : coeffs) s = std::max(s, std::abs(c));
    return s;
}

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
    Complex acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

} // namespace

ComplexVector shifted_matvec(const WMatrix& m, const ComplexVector& v, Complex lambda0) {
    int n = m.dim();
    if (v.size() != static_cast<std::size_t>(n))
        throw domain_error("vector length does not match matrix dimension");
    ComplexVector out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Common denominator over the terms that actually contribute.
        Poly den = Poly::one();
        for (int j = 0; j < n; ++j) {
            if (v[static_cast<std::size_t>(j)] == 0.0) continue;
            Poly g = poly_gcd(den, m.at(i, j).den());
            den *= poly_div_exact(m.at(i, j).den(), g);
        }
        auto den_coeffs = den.to_complex_coeffs();
        std::vector<Complex> num_coeffs(den_coeffs.size() + 1, 0.0);
        for (int j = 0; j < n; ++j) {
            Complex vj = v[static_cast<std::size_t>(j)];
            RatFunc entry = m.at(i, j);
            if (i == j) entry -= RatFunc::lambda();
            if (vj == 0.0) continue;
            Poly cleared = entry.num() * poly_div_exact(den, entry.den());
            auto cc = cleared.to_complex_coeffs();
            if (cc.size() > num_coeffs.size()) num_coeffs.resize(cc.size(), 0.0);
            for (std::size_t k = 0; k < cc.size(); ++k) num_coeffs[k] += cc[k] * vj;
        }
        while (!num_coeffs.empty() && std::abs(num_coeffs.back()) == 0.0) num_coeffs.pop_back();

        // Cancel (x - lambda0) factors shared by numerator and denominator.
        std::vector<Complex> dc = den_coeffs;
        double dscale = coeff_scale(dc);
        double nscale = coeff_scale(num_coeffs);
        while (dc.size() > 1 && std::abs(horner(dc, lambda0)) <= 1e-12 * std::max(1.0, dscale)) {
            std::vector<Complex> dtry = dc;
            if (!synthetic_deflate(dtry, lambda0, dscale)) break;
            if (!synthetic_deflate(num_coeffs, lambda0, nscale)) {
                std::ostringstream msg;
                msg << "pole survives cancellation in component " << (i + 1) << " at lambda = ("
                    << lambda0.real() << "," << lambda0.imag() << ")";
                throw pole_error(msg.str());
            }
            dc = std::move(dtry);
        }
        Complex dval = horner(dc, lambda0);
        if (std::abs(dval) <= 1e-12 * std::max(1.0, dscale)) {
            std::ostringstream msg;
            msg << "pole survives cancellation in component " << (i + 1);
            throw pole_error(msg.str());
        }
        out[static_cast<std::size_t>(i)] = horner(num_coeffs, lambda0) / dval;
    }
    return out;
}

} // namespace isored
