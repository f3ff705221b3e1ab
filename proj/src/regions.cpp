#include "isored/regions.hpp"

#include "isored/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

namespace isored {

void GridSpec::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max)) throw domain_error("empty grid window");
    if (nx < 2 || ny < 2) throw domain_error("grid needs at least 2 points per axis");
}

std::string raster_kind_name(RasterKind k) {
    switch (k) {
    case RasterKind::pseudospectrum: return "pseudospectrum";
    case RasterKind::pseudoresonance: return "pseudoresonance";
    case RasterKind::gershgorin: return "gershgorin";
    }
    return "?";
}

RasterKind raster_kind_from_name(const std::string& name) {
    if (name == "pseudospectrum") return RasterKind::pseudospectrum;
    if (name == "pseudoresonance") return RasterKind::pseudoresonance;
    if (name == "gershgorin") return RasterKind::gershgorin;
    throw domain_error("unknown raster kind: " + name);
}

bool RegionRaster::member(int i, int j, double eps) const {
    double v = value(i, j);
    if (kind == RasterKind::gershgorin) return v != 0.0;
    return v > 1.0 / eps;
}

int raster_thread_count() {
    if (const char* env = std::getenv("ISORED_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Evaluate fn at every grid point; deterministic regardless of thread count
// since every point is independent and written to its own slot.
template <typename Fn>
void for_each_point(const GridSpec& spec, Fn&& fn) {
    int threads = raster_thread_count();
    if (threads <= 1 || spec.ny < 2 * threads) {
        for (int j = 0; j < spec.ny; ++j)
            for (int i = 0; i < spec.nx; ++i) fn(i, j);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int j = t; j < spec.ny; j += threads)
                for (int i = 0; i < spec.nx; ++i) fn(i, j);
        });
    for (auto& th : pool) th.join();
}

struct EntryEval {
    std::vector<Complex> num, den;
};

std::vector<EntryEval> precompute(const WMatrix& m) {
    std::vector<EntryEval> out;
    out.reserve(static_cast<std::size_t>(m.dim()) * m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            out.push_back({m.at(i, j).num().to_complex_coeffs(), m.at(i, j).den().to_complex_coeffs()});
    return out;
}

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
    Complex acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

// Evaluate M(x) - x I; returns false if some entry denominator vanishes.
bool eval_shifted(const std::vector<EntryEval>& entries, int n, Complex x, ComplexMatrix& out) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const EntryEval& e = entries[static_cast<std::size_t>(i) * n + j];
            Complex d = horner(e.den, x);
            if (std::abs(d) <= 1e-12) return false;
            Complex v = horner(e.num, x) / d;
            if (i == j) v -= x;
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    return true;
}

double frob(const ComplexMatrix& a) {
    double s = 0;
    for (const auto& row : a)
        for (Complex c : row) s += std::norm(c);
    return std::sqrt(s);
}

double shifted_norm(const ComplexMatrix& a, Norm p) {
    if (p == Norm::two) return opnorm(a, Norm::two);
    return opnorm(a, p);
}

} // namespace

std::uint32_t gershgorin_member(const std::vector<std::vector<Poly>>& mbar, Complex lambda0) {
    std::size_t n = mbar.size();
    if (n > 32) throw domain_error("gershgorin bitmask supports up to 32 rows");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) radius += std::abs(mbar[i][j].eval(lambda0));
        if (std::abs(lambda0 - mbar[i][i].eval(lambda0)) <= radius) mask |= (1u << i);
    }
    return mask;
}

RegionRaster gershgorin_raster(const WMatrix& m, const GridSpec& spec, bool use_spectral_inverse) {
    spec.validate();
    WMatrix target = use_spectral_inverse ? spectral_inverse(m) : m;
    auto mbar = polynomial_extension(target);

    // Numeric coefficient cache for fast grid evaluation.
    std::size_t n = mbar.size();
    std::vector<std::vector<std::vector<Complex>>> coeffs(n, std::vector<std::vector<Complex>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) coeffs[i][j] = mbar[i][j].to_complex_coeffs();

    RegionRaster raster{spec, RasterKind::gershgorin,
                        std::vector<double>(static_cast<std::size_t>(spec.nx) * spec.ny, 0.0),
                        std::vector<std::uint8_t>(static_cast<std::size_t>(spec.nx) * spec.ny, 0)};
    for_each_point(spec, [&](int i, int j) {
        Complex x = spec.point(i, j);
        std::uint32_t mask = 0;
        for (std::size_t r = 0; r < n; ++r) {
            double radius = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != r) radius += std::abs(horner(coeffs[r][c], x));
            if (std::abs(x - horner(coeffs[r][r], x)) <= radius) mask |= (1u << r);
        }
        raster.value(i, j) = static_cast<double>(mask);
    });
    return raster;
}

RegionRaster pseudospectrum_raster(const WMatrix& m, const GridSpec& spec, Norm p) {
    spec.validate();
    int n = m.dim();
    auto entries = precompute(m);

    // Symbolic resolvent, used only at grid points outside dom(M). Computed
    // once up front when M is W_pi (it always exists there); otherwise lazily
    // skipped and such points flagged.
    std::vector<EntryEval> resolvent_entries;
    bool have_resolvent = false;
    try {
        WMatrix resolvent = winverse(shift_by_lambda(m));
        resolvent_entries = precompute(resolvent);
        have_resolvent = true;
    } catch (const singularity_error&) {
    }

    RegionRaster raster{spec, RasterKind::pseudospectrum,
                        std::vector<double>(static_cast<std::size_t>(spec.nx) * spec.ny, 0.0),
                        std::vector<std::uint8_t>(static_cast<std::size_t>(spec.nx) * spec.ny, 0)};
    for_each_point(spec, [&, n](int i, int j) {
        Complex x = spec.point(i, j);
        ComplexMatrix a(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n)));
        if (eval_shifted(entries, n, x, a)) {
            if (p == Norm::two) {
                double sigma_min = singular_values(a).back();
                raster.value(i, j) =
                    (sigma_min <= 1e-14 * std::max(frob(a), 1e-300)) ? kInf : 1.0 / sigma_min;
            } else {
                double sigma_min = singular_values(a).back();
                if (sigma_min <= 1e-14 * std::max(frob(a), 1e-300)) {
                    raster.value(i, j) = kInf;
                } else {
                    raster.value(i, j) = opnorm(complex_inverse(a), p);
                }
            }
            return;
        }
        // Outside dom(M): use the symbolic resolvent after cancellation.
        if (have_resolvent) {
            ComplexMatrix r(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n)));
            bool ok = true;
            for (int rr = 0; rr < n && ok; ++rr)
                for (int cc = 0; cc < n && ok; ++cc) {
                    const EntryEval& e = resolvent_entries[static_cast<std::size_t>(rr) * n + cc];
                    Complex d = horner(e.den, x);
                    if (std::abs(d) <= 1e-12) {
                        ok = false;
                        break;
                    }
                    r[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] =
                        horner(e.num, x) / d;
                }
            if (ok) {
                raster.value(i, j) = shifted_norm(r, p);
                return;
            }
        }
        raster.flags[static_cast<std::size_t>(j) * spec.nx + i] = 1;
        raster.value(i, j) = kInf;
    });
    return raster;
}

RegionRaster pseudoresonance_raster(const WMatrix& m, const GridSpec& spec, Norm p) {
    spec.validate();
    int n = m.dim();
    auto entries = precompute(m);
    RegionRaster raster{spec, RasterKind::pseudoresonance,
                        std::vector<double>(static_cast<std::size_t>(spec.nx) * spec.ny, 0.0),
                        std::vector<std::uint8_t>(static_cast<std::size_t>(spec.nx) * spec.ny, 0)};
    for_each_point(spec, [&, n](int i, int j) {
        Complex x = spec.point(i, j);
        ComplexMatrix a(static_cast<std::size_t>(n), ComplexVector(static_cast<std::size_t>(n)));
        if (eval_shifted(entries, n, x, a)) {
            raster.value(i, j) = shifted_norm(a, p);
        } else {
            // Entry pole: the norm blows up approaching this point.
            raster.value(i, j) = kInf;
        }
    });
    return raster;
}

InclusionReport check_inclusion(const RegionRaster& inner, const RegionRaster& outer, double eps) {
    if (!(inner.spec == outer.spec)) throw domain_error("rasters use different grids");
    if (inner.kind != outer.kind) throw domain_error("rasters have different kinds");
    InclusionReport report;
    for (int j = 0; j < inner.spec.ny; ++j)
        for (int i = 0; i < inner.spec.nx; ++i) {
            if (inner.flag(i, j) || outer.flag(i, j)) {
                ++report.flagged_skipped;
                continue;
            }
            if (inner.member(i, j, eps) && !outer.member(i, j, eps))
                report.violations.push_back({i, j, inner.value(i, j), outer.value(i, j)});
        }
    return report;
}

} // namespace isored
