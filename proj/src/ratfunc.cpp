#include "isored/ratfunc.hpp"

#include "isored/errors.hpp"

#include <sstream>

namespace isored {

RatFunc::RatFunc(Poly num, Poly den) {
    *this = rf_reduce(std::move(num), std::move(den));
}

void RatFunc::normalize_zero() {
    if (num_.is_zero()) den_ = Poly::one();
}

RatFunc rf_reduce(Poly num, Poly den) {
    if (den.is_zero()) throw domain_error("rational function with zero denominator");
    RatFunc w;
    if (num.is_zero()) return w;
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_div_exact(num, g);
        den = poly_div_exact(den, g);
    }
    GaussianRational lead_inv = den.leading().inverse();
    w.num_ = num * lead_inv;
    w.den_ = den * lead_inv;
    return w;
}

int RatFunc::pi_degree() const {
    if (num_.is_zero()) return 0;
    return num_.degree() - den_.degree();
}

std::complex<double> RatFunc::eval(std::complex<double> x) const {
    return num_.eval(x) / den_.eval(x);
}

bool RatFunc::defined_at(std::complex<double> x, double tol) const {
    return std::abs(den_.eval(x)) > tol;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero rational function");
    return rf_reduce(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return rf_reduce(a.num_ * b.den_ + a.den_ * b.num_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero();
    return rf_reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw domain_error("division by zero rational function");
    if (a.is_zero()) return RatFunc::zero();
    return rf_reduce(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& w) {
    os << "(" << w.num_ << ")";
    if (w.den_.degree() > 0) os << " / (" << w.den_ << ")";
    return os;
}

} // namespace isored
