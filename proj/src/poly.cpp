#include "isored/poly.hpp"

#include "isored/errors.hpp"

#include <atomic>
#include <sstream>

namespace isored {

namespace {
std::atomic<int> g_max_degree{512};
}

int max_symbolic_degree() { return g_max_degree.load(); }
void set_max_symbolic_degree(int cap) { g_max_degree.store(cap); }

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw domain_error("division by zero GaussianRational");
    Rational n = b.norm();
    GaussianRational c = a * b.conj();
    return {c.re() / n, c.im() / n};
}

GaussianRational GaussianRational::inverse() const {
    return GaussianRational(1) / *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

std::string to_string(const GaussianRational& z) {
    std::ostringstream os;
    auto rat = [&](const Rational& r) {
        std::ostringstream s;
        s << numerator(r);
        if (denominator(r) != 1) s << "/" << denominator(r);
        return s.str();
    };
    if (z.im() == 0) {
        os << rat(z.re());
    } else if (z.re() == 0) {
        os << rat(z.im()) << "i";
    } else {
        os << "(" << rat(z.re()) << (z.im() > 0 ? "+" : "") << rat(z.im()) << "i)";
    }
    return os.str();
}

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(GaussianRational c) {
    Poly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::lambda() {
    Poly p;
    p.coeffs_ = {GaussianRational(0), GaussianRational(1)};
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GaussianRational& Poly::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly::zero();
    std::vector<GaussianRational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * GaussianRational(static_cast<std::int64_t>(i));
    return Poly(std::move(d));
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::vector<std::complex<double>> Poly::to_complex_coeffs() const {
    std::vector<std::complex<double>> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i].to_complex();
    return c;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    std::vector<GaussianRational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    int deg = a.degree() + b.degree();
    if (deg > max_symbolic_degree())
        throw resource_error("symbolic degree cap exceeded: " + std::to_string(deg) + " > " +
                             std::to_string(max_symbolic_degree()));
    std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const GaussianRational& c) {
    if (c.is_zero()) return Poly::zero();
    std::vector<GaussianRational> r(a.coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeffs_[i] * c;
    return Poly(std::move(r));
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        if (e >>= 1u) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const auto& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        if (i >= 1) os << "*l";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    std::vector<GaussianRational> rem(a.coeffs());
    std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    GaussianRational lead_inv = b.leading().inverse();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        GaussianRational q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw consistency_error("inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw domain_error("gcd of two zero polynomials");
    Poly x = a.is_zero() ? Poly::zero() : a.monic();
    Poly y = b.is_zero() ? Poly::zero() : b.monic();
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? Poly::zero() : r.monic();
    }
    return x;
}

std::vector<std::pair<Poly, int>> poly_squarefree_factor(const Poly& p) {
    if (p.is_zero()) throw domain_error("square-free factorization of zero polynomial");
    std::vector<std::pair<Poly, int>> factors;
    Poly f = p.monic();
    if (f.degree() == 0) return factors;

    // Yun's algorithm (characteristic zero).
    Poly fp = f.derivative();
    Poly g = poly_gcd(f, fp);
    Poly w = poly_div_exact(f, g);
    Poly y = poly_div_exact(fp, g);
    int i = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly fac = poly_gcd(w, z);
        if (fac.degree() > 0) factors.emplace_back(fac, i);
        w = poly_div_exact(w, fac);
        y = poly_div_exact(z, fac);
        ++i;
    }
    return factors;
}

} // namespace isored
