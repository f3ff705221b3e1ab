#pragma once

#include "isored/errors.hpp"
#include "isored/io.hpp"
#include "isored/massspring.hpp"
#include "isored/numerics.hpp"
#include "isored/reduction.hpp"
#include "isored/regions.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

namespace testutil {

using namespace isored;

inline RatFunc rf(const std::string& text) { return parse_ratfunc(text); }

inline WMatrix wm(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in, "<test>");
}

// 6x6 (0,1) adjacency-style matrix whose reduction over {1,2} has the known
// closed form.
inline WMatrix six_by_six() {
    return wm("wmatrix 6\n"
              "0;0;1;1;0;0\n"
              "0;1;0;0;1;1\n"
              "1;0;1;0;0;0\n"
              "0;1;0;1;0;0\n"
              "1;0;0;0;0;0\n"
              "0;1;0;0;0;0\n");
}

// 4x4 matrix used for the sequential-reduction uniqueness check.
inline WMatrix uniqueness4() {
    return wm("wmatrix 4\n"
              "1;0;1;0\n"
              "0;1;0;1\n"
              "0;1;1;1\n"
              "1;0;1;1\n");
}

// Upper-triangular 4x4 with 1/l diagonal; spectral inverse is known in closed
// form.
inline WMatrix quad() {
    return wm("wmatrix 4\n"
              "1/l;1/l;0;0\n"
              "0;1/l;1;0\n"
              "0;0;1/l;1\n"
              "0;0;0;1/l\n");
}

inline WMatrix spring_k() {
    return wm("wmatrix 4\n"
              "1;-1;0;0\n"
              "-1;2;-1;0\n"
              "0;-1;2;-1\n"
              "0;0;-1;1\n");
}

// 2x2 with one pole entry; spectrum {0,(1±sqrt5)/2}, inverse spectrum {1}.
inline WMatrix pole2() { return wm("wmatrix 2\n1/(l-1);0\n0;0\n"); }

// Block matrix whose pseudospectrum is unchanged by reduction over {2,3,4}.
inline WMatrix blocks4() {
    return wm("wmatrix 4\n"
              "1;1;0;0\n"
              "1;1;0;0\n"
              "0;0;1;1\n"
              "0;0;1;1\n");
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    Complex point(double lo = -3.0, double hi = 3.0) { return {real(lo, hi), real(lo, hi)}; }

    GaussianRational scalar(bool allow_imag = true) {
        Rational re(int_in(-4, 4), int_in(1, 3));
        Rational im = allow_imag && int_in(0, 3) == 0 ? Rational(int_in(-2, 2)) : Rational(0);
        return {re, im};
    }

    Poly poly(int max_deg, bool allow_imag = true) {
        int deg = int_in(0, max_deg);
        std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = scalar(allow_imag);
        return Poly(std::move(c));
    }

    Poly nonzero_poly(int max_deg, bool allow_imag = true) {
        for (;;) {
            Poly p = poly(max_deg, allow_imag);
            if (!p.is_zero()) return p;
        }
    }

    RatFunc ratfunc(int max_deg = 3) { return rf_reduce(poly(max_deg), nonzero_poly(max_deg)); }

    RatFunc nonzero_ratfunc(int max_deg = 3) {
        for (;;) {
            RatFunc w = ratfunc(max_deg);
            if (!w.is_zero()) return w;
        }
    }

    // Element of W_pi: numerator degree bounded by denominator degree.
    RatFunc wpi(int max_den_deg = 2) {
        for (;;) {
            Poly den = nonzero_poly(max_den_deg);
            int cap = den.degree();
            Poly num = int_in(0, 2) == 0 ? Poly::zero() : poly(cap < 0 ? 0 : cap);
            RatFunc w = rf_reduce(num, den);
            if (w.is_w_pi()) return w;
        }
    }

    // Sparse W_pi matrix; density keeps symbolic determinants cheap at n = 5, 6.
    WMatrix wpi_matrix(int n, int max_den_deg = 2) {
        WMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int pick = int_in(0, 3);
                if (pick == 0)
                    m.at(i, j) = RatFunc(GaussianRational(int_in(-2, 2)));
                else if (pick == 1)
                    m.at(i, j) = wpi(max_den_deg);
            }
        return m;
    }

    WMatrix complex_matrix_symbolic(int n) {
        WMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = RatFunc(scalar());
        return m;
    }

    ComplexMatrix complex_matrix(int n) {
        ComplexMatrix a(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n)));
        for (auto& row : a)
            for (auto& x : row) x = point();
        return a;
    }

    IndexSet subset(int n, int k) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(all.begin(), all.end(), gen);
        all.resize(static_cast<std::size_t>(k));
        return IndexSet(std::move(all));
    }
};

inline double dist(Complex a, Complex b) { return std::abs(a - b); }

} // namespace testutil
