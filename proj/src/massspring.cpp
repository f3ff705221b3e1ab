#include "isored/massspring.hpp"

#include "isored/errors.hpp"
#include "isored/reduction.hpp"

namespace isored {

void SpringNetwork::validate() const {
    if (n < 1) throw domain_error("spring network needs at least one node");
    for (const Spring& s : springs) {
        if (s.i < 1 || s.j > n || s.i >= s.j)
            throw domain_error("spring endpoints must satisfy 1 <= i < j <= n");
        if (s.stiffness <= 0) throw domain_error("spring stiffness must be positive");
    }
    if (!masses.empty()) {
        if (static_cast<int>(masses.size()) != n)
            throw domain_error("mass count does not match node count");
        for (const Rational& m : masses)
            if (m != 1)
                throw domain_error(
                    "non-unit masses are not supported: the reduction identity assumes lambda*I");
    }
}

SpringNetwork SpringNetwork::path(int n) {
    SpringNetwork net;
    net.n = n;
    for (int i = 1; i < n; ++i) net.springs.push_back({i, i + 1, 1});
    net.validate();
    return net;
}

WMatrix stiffness_matrix(const SpringNetwork& net) {
    net.validate();
    WMatrix k(net.n);
    for (const Spring& s : net.springs) {
        GaussianRational c{s.stiffness};
        k.at(s.i - 1, s.i - 1) += RatFunc(c);
        k.at(s.j - 1, s.j - 1) += RatFunc(c);
        k.at(s.i - 1, s.j - 1) -= RatFunc(c);
        k.at(s.j - 1, s.i - 1) -= RatFunc(c);
    }
    return k;
}

WMatrix frequency_response(const SpringNetwork& net, const IndexSet& boundary) {
    WMatrix k = stiffness_matrix(net);
    if (boundary.empty()) throw domain_error("boundary index set is empty");
    if (boundary.size() == static_cast<std::size_t>(net.n)) return k;
    return isospectral_reduce(k, boundary);
}

ComplexVector boundary_force(const SpringNetwork& net, const IndexSet& boundary, double omega,
                             const ComplexVector& u_boundary) {
    WMatrix response = frequency_response(net, boundary);
    Complex lambda0 = omega * omega;
    try {
        return shifted_matvec(response, u_boundary, lambda0);
    } catch (const pole_error& e) {
        throw pole_error(std::string("resonance: forces are unbounded at omega^2 = ") +
                         std::to_string(omega * omega) + " (" + e.what() + ")");
    }
}

} // namespace isored
