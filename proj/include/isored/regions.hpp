#pragma once

#include "isored/numerics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isored {

// Rectangular grid over C with inclusive endpoints.
struct GridSpec {
    double re_min, re_max, im_min, im_max;
    int nx, ny;

    double re_at(int i) const { return re_min + i * (re_max - re_min) / (nx - 1); }
    double im_at(int j) const { return im_min + j * (im_max - im_min) / (ny - 1); }
    Complex point(int i, int j) const { return {re_at(i), im_at(j)}; }

    void validate() const;
    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.re_min == b.re_min && a.re_max == b.re_max && a.im_min == b.im_min &&
               a.im_max == b.im_max && a.nx == b.nx && a.ny == b.ny;
    }
};

enum class RasterKind { pseudospectrum, pseudoresonance, gershgorin };

std::string raster_kind_name(RasterKind k);
RasterKind raster_kind_from_name(const std::string& name);

// Per-point scalar field over a grid. For gershgorin rasters the value holds
// the per-row membership bitmask (bit i set <=> point in region of row i+1).
struct RegionRaster {
    GridSpec spec;
    RasterKind kind;
    std::vector<double> values; // nx*ny, row-major with im outer, re inner
    std::vector<std::uint8_t> flags; // 1 where a pole survives cancellation

    double& value(int i, int j) { return values[static_cast<std::size_t>(j) * spec.nx + i]; }
    double value(int i, int j) const { return values[static_cast<std::size_t>(j) * spec.nx + i]; }
    std::uint8_t flag(int i, int j) const { return flags[static_cast<std::size_t>(j) * spec.nx + i]; }

    // Membership at tolerance eps: value > 1/eps for norm rasters, nonzero
    // bitmask for gershgorin rasters.
    bool member(int i, int j, double eps) const;
};

// Row-wise Gershgorin test |lambda - Mbar_ii| <= sum_{j != i} |Mbar_ij| on the
// polynomial extension, evaluated numerically.
std::uint32_t gershgorin_member(const std::vector<std::vector<Poly>>& mbar, Complex lambda0);

RegionRaster gershgorin_raster(const WMatrix& m, const GridSpec& spec, bool use_spectral_inverse);

RegionRaster pseudospectrum_raster(const WMatrix& m, const GridSpec& spec, Norm p = Norm::two);
RegionRaster pseudoresonance_raster(const WMatrix& m, const GridSpec& spec, Norm p = Norm::two);

struct InclusionViolation {
    int i, j;
    double inner_value, outer_value;
};

struct InclusionReport {
    std::vector<InclusionViolation> violations;
    int flagged_skipped = 0;
    bool ok() const { return violations.empty(); }
};

// Grid points where inner is a member at eps but outer is not. Flagged points
// are skipped and counted.
InclusionReport check_inclusion(const RegionRaster& inner, const RegionRaster& outer, double eps);

// Raster worker threads; reads ISORED_THREADS, defaults to hardware parallelism.
int raster_thread_count();

} // namespace isored
