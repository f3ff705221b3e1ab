#include "isored/numerics.hpp"

#include "isored/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace isored {

namespace {

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
    Complex acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

} // namespace

std::vector<Complex> roots_numeric(const std::vector<Complex>& coeffs_in) {
    std::vector<Complex> coeffs = coeffs_in;
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.empty()) throw domain_error("roots of the zero polynomial");
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg == 0) return {};

    std::vector<Complex> deriv(static_cast<std::size_t>(deg));
    for (int k = 1; k <= deg; ++k)
        deriv[static_cast<std::size_t>(k - 1)] = coeffs[static_cast<std::size_t>(k)] * double(k);

    // Initial guesses on a perturbed circle of Cauchy-bound radius.
    double lead = std::abs(coeffs.back());
    double cauchy = 0;
    for (int k = 0; k < deg; ++k)
        cauchy = std::max(cauchy, std::abs(coeffs[static_cast<std::size_t>(k)]) / lead);
    double radius = 1.0 + cauchy;
    std::vector<Complex> z(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) {
        double angle = 2.0 * std::numbers::pi * k / deg + 0.3779;
        z[static_cast<std::size_t>(k)] = std::polar(radius * (0.5 + 0.5 * (k + 1.0) / deg), angle);
    }

    const int max_sweeps = 200;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (int k = 0; k < deg; ++k) {
            Complex zk = z[static_cast<std::size_t>(k)];
            Complex p = horner(coeffs, zk);
            Complex dp = horner(deriv, zk);
            if (p == 0.0) continue;
            Complex w = (dp != 0.0) ? p / dp : Complex(1e-3, 1e-3);
            Complex repulse = 0;
            for (int j = 0; j < deg; ++j) {
                if (j == k) continue;
                Complex diff = zk - z[static_cast<std::size_t>(j)];
                if (diff == 0.0) diff = Complex(1e-14, 1e-14);
                repulse += 1.0 / diff;
            }
            Complex correction = w / (1.0 - w * repulse);
            z[static_cast<std::size_t>(k)] = zk - correction;
            if (std::abs(correction) > 1e-14 * (1.0 + std::abs(zk))) converged = false;
        }
    }

    // Residual check against the coefficient scale.
    double scale = 0;
    for (Complex c : coeffs) scale = std::max(scale, std::abs(c));
    for (Complex root : z) {
        double local = scale * std::pow(std::max(1.0, std::abs(root)), deg);
        if (std::abs(horner(coeffs, root)) > 1e-9 * local) {
            std::ostringstream msg;
            msg << "root finder residual too large at (" << root.real() << "," << root.imag()
                << "): |p| = " << std::abs(horner(coeffs, root));
            throw numeric_error(msg.str());
        }
    }
    // Snap tiny imaginary / real parts produced by conjugate symmetry noise.
    std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

std::vector<Complex> roots_numeric(const Poly& p) {
    if (p.is_zero()) throw domain_error("roots of the zero polynomial");
    return roots_numeric(p.to_complex_coeffs());
}

SvdResult svd_jacobi(const ComplexMatrix& a_in) {
    int n = static_cast<int>(a_in.size());
    for (const auto& row : a_in)
        if (static_cast<int>(row.size()) != n) throw domain_error("svd_jacobi expects a square matrix");

    // Work on columns of A; accumulate rotations in V.
    ComplexMatrix a = a_in;
    ComplexMatrix v(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;

    auto col_dot = [&](int p, int q) { // a_p^H a_q
        Complex s = 0;
        for (int r = 0; r < n; ++r)
            s += std::conj(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)]) *
                 a[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)];
        return s;
    };

    const int max_sweeps = 60;
    const double tol = 1e-15;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double alpha = std::real(col_dot(p, p));
                double beta = std::real(col_dot(q, q));
                Complex gamma = col_dot(p, q);
                double g = std::abs(gamma);
                if (g <= tol * std::sqrt(std::max(alpha * beta, 1e-300))) continue;
                rotated = true;
                Complex phase = gamma / g;
                double zeta = (beta - alpha) / (2.0 * g);
                double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double cs = 1.0 / std::sqrt(1.0 + t * t);
                double sn = cs * t;
                for (int r = 0; r < n; ++r) {
                    Complex ap = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)];
                    Complex aq = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)];
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] =
                        cs * ap - sn * std::conj(phase) * aq;
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)] =
                        sn * phase * ap + cs * aq;
                }
                for (int r = 0; r < n; ++r) {
                    Complex vp = v[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)];
                    Complex vq = v[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)];
                    v[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] =
                        cs * vp - sn * std::conj(phase) * vq;
                    v[static_cast<std::size_t>(r)][static_cast<std::size_t>(q)] =
                        sn * phase * vp + cs * vq;
                }
            }
        if (!rotated) break;
    }

    SvdResult out;
    out.sigma.resize(static_cast<std::size_t>(n));
    out.u.assign(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n), 0.0));
    out.v.assign(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n), 0.0));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::vector<double> norms(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int r = 0; r < n; ++r)
            s += std::norm(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
        norms[static_cast<std::size_t>(j)] = std::sqrt(s);
        order[static_cast<std::size_t>(j)] = j;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return norms[static_cast<std::size_t>(x)] > norms[static_cast<std::size_t>(y)]; });

    for (int jj = 0; jj < n; ++jj) {
        int j = order[static_cast<std::size_t>(jj)];
        double s = norms[static_cast<std::size_t>(j)];
        out.sigma[static_cast<std::size_t>(jj)] = s;
        for (int r = 0; r < n; ++r)
            out.v[static_cast<std::size_t>(r)][static_cast<std::size_t>(jj)] =
                v[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        if (s > 0) {
            for (int r = 0; r < n; ++r)
                out.u[static_cast<std::size_t>(r)][static_cast<std::size_t>(jj)] =
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] / s;
        }
    }
    // Complete U for (near-)zero singular values by Gram-Schmidt against the
    // columns already present.
    for (int j = 0; j < n; ++j) {
        double colnorm = 0;
        for (int r = 0; r < n; ++r)
            colnorm += std::norm(out.u[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
        if (colnorm > 0.5) continue;
        for (int basis = 0; basis < n; ++basis) {
            ComplexVector cand(static_cast<std::size_t>(n), 0.0);
            cand[static_cast<std::size_t>(basis)] = 1.0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                Complex proj = 0;
                for (int r = 0; r < n; ++r)
                    proj += std::conj(out.u[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]) *
                            cand[static_cast<std::size_t>(r)];
                for (int r = 0; r < n; ++r)
                    cand[static_cast<std::size_t>(r)] -=
                        proj * out.u[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            }
            double nn = 0;
            for (Complex c : cand) nn += std::norm(c);
            if (nn > 1e-6) {
                nn = std::sqrt(nn);
                for (int r = 0; r < n; ++r)
                    out.u[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                        cand[static_cast<std::size_t>(r)] / nn;
                break;
            }
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& a) { return svd_jacobi(a).sigma; }

Norm norm_from_value(double p) {
    if (p == 1.0) return Norm::one;
    if (p == 2.0) return Norm::two;
    if (std::isinf(p)) return Norm::inf;
    throw domain_error("unsupported operator norm; use 1, 2, or inf");
}

double opnorm(const ComplexMatrix& a, Norm p) {
    std::size_t n = a.size();
    switch (p) {
    case Norm::one: {
        double best = 0;
        for (std::size_t j = 0; j < (n ? a[0].size() : 0); ++j) {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += std::abs(a[i][j]);
            best = std::max(best, s);
        }
        return best;
    }
    case Norm::inf: {
        double best = 0;
        for (const auto& row : a) {
            double s = 0;
            for (Complex c : row) s += std::abs(c);
            best = std::max(best, s);
        }
        return best;
    }
    case Norm::two:
    default: {
        auto sv = singular_values(a);
        return sv.empty() ? 0.0 : sv.front();
    }
    }
}

ComplexMatrix complex_inverse(const ComplexMatrix& a_in) {
    int n = static_cast<int>(a_in.size());
    ComplexMatrix a = a_in;
    ComplexMatrix inv(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]))
                pivot = r;
        if (std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]) == 0.0)
            throw numeric_error("singular matrix in complex_inverse");
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        }
        Complex piv = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int c = 0; c < n; ++c) {
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= piv;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Complex f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            }
        }
    }
    return inv;
}

namespace {

double frobenius(const ComplexMatrix& a) {
    double s = 0;
    for (const auto& row : a)
        for (Complex c : row) s += std::norm(c);
    return std::sqrt(s);
}

ComplexMatrix shifted_eval(const WMatrix& m, Complex lambda0) {
    ComplexMatrix a = eval_at(m, lambda0);
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= lambda0;
    return a;
}

} // namespace

double resolvent_norm(const WMatrix& m, Complex lambda0, Norm p) {
    if (in_domain(m, lambda0)) {
        ComplexMatrix a = shifted_eval(m, lambda0);
        auto sv = singular_values(a);
        double sigma_min = sv.back();
        double scale = frobenius(a);
        if (sigma_min <= 1e-14 * std::max(scale, 1e-300)) return kInf;
        if (p == Norm::two) return 1.0 / sigma_min;
        return opnorm(complex_inverse(a), p);
    }
    // Off the domain: evaluate the symbolic resolvent entrywise; cancellation
    // inside winverse may remove the pole.
    WMatrix resolvent = winverse(shift_by_lambda(m));
    ComplexMatrix a = eval_at(resolvent, lambda0); // throws pole_error if a pole survives
    return opnorm(a, p);
}

PseudoWitness pseudo_witness(const WMatrix& m, Complex lambda0) {
    ComplexMatrix a = shifted_eval(m, lambda0); // pole_error if lambda0 outside dom(M)
    int n = m.dim();
    SvdResult svd = svd_jacobi(a);
    PseudoWitness w;
    w.lambda = lambda0;
    w.sigma_min = svd.sigma.back();
    w.right_vector.resize(static_cast<std::size_t>(n));
    w.left_vector.resize(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        w.right_vector[static_cast<std::size_t>(r)] =
            svd.v[static_cast<std::size_t>(r)][static_cast<std::size_t>(n - 1)];
        w.left_vector[static_cast<std::size_t>(r)] =
            svd.u[static_cast<std::size_t>(r)][static_cast<std::size_t>(n - 1)];
    }
    // E = -sigma_min u v^H; then (A + E) v = 0.
    w.perturbation.assign(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            w.perturbation[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                -w.sigma_min * w.left_vector[static_cast<std::size_t>(r)] *
                std::conj(w.right_vector[static_cast<std::size_t>(c)]);
    return w;
}

} // namespace isored
