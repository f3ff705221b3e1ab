#pragma once

#include "isored/rational.hpp"

#include <complex>
#include <ostream>
#include <utility>
#include <vector>

namespace isored {

// Dense polynomial in lambda over GaussianRational. The zero polynomial is the
// empty coefficient vector; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs);
    Poly(std::initializer_list<GaussianRational> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(GaussianRational(1)); }
    static Poly constant(GaussianRational c);
    // The monomial lambda.
    static Poly lambda();

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention here.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    const GaussianRational& operator[](std::size_t i) const { return coeffs_[i]; }
    GaussianRational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : GaussianRational(0);
    }
    const GaussianRational& leading() const;

    Poly monic() const;
    Poly derivative() const;

    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    std::vector<std::complex<double>> to_complex_coeffs() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const GaussianRational& c);

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

// Quotient and remainder of a by b, b nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Exact division; throws consistency_error if the remainder is nonzero.
Poly poly_div_exact(const Poly& a, const Poly& b);

// Monic gcd via the Euclidean remainder sequence. Throws domain_error if both
// inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Yun's square-free factorization: p ~ prod factor^multiplicity with monic,
// square-free, pairwise coprime factors. Throws domain_error on the zero input.
std::vector<std::pair<Poly, int>> poly_squarefree_factor(const Poly& p);

} // namespace isored
