#pragma once

#include "isored/poly.hpp"

#include <complex>
#include <ostream>

namespace isored {

// Reduced rational function num/den: gcd(num, den) constant, den monic,
// zero stored canonically as 0/1.
class RatFunc {
public:
    RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);
    RatFunc(GaussianRational c) : num_(Poly::constant(std::move(c))), den_(Poly::one()) { normalize_zero(); }
    RatFunc(int c) : RatFunc(GaussianRational(c)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc lambda() { return RatFunc(Poly::lambda(), Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // deg(num) - deg(den), with pi(0) = 0.
    int pi_degree() const;
    bool is_w_pi() const { return pi_degree() <= 0; }

    std::complex<double> eval(std::complex<double> x) const;
    // |den(x)| <= tol means x is outside the domain of this entry.
    bool defined_at(std::complex<double> x, double tol = 1e-12) const;

    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& w);

private:
    void normalize_zero();
    friend RatFunc rf_reduce(Poly num, Poly den);
    Poly num_;
    Poly den_;
};

// Cancel common factors and normalize the denominator to monic form.
RatFunc rf_reduce(Poly num, Poly den);

} // namespace isored
