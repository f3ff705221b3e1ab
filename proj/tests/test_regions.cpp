#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include <cstdlib>

using namespace testutil;

namespace {

const double kBig = 1e10;

// Pointwise comparison that treats the overflow sentinel as a match.
bool values_match(double a, double b, double rel) {
    if (a == kInf || b == kInf) return a == b || std::min(a, b) >= kBig;
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

TEST_CASE("grid spec") {
    GridSpec g{-1, 1, -2, 2, 5, 9};
    g.validate();
    CHECK(g.re_at(0) == -1.0);
    CHECK(g.re_at(4) == 1.0);
    CHECK(g.im_at(8) == 2.0);
    CHECK(g.point(2, 4) == Complex(0, 0));

    CHECK_THROWS_AS((GridSpec{1, -1, 0, 1, 5, 5}.validate()), domain_error);
    CHECK_THROWS_AS((GridSpec{0, 1, 0, 1, 1, 5}.validate()), domain_error);

    CHECK(raster_kind_from_name("pseudospectrum") == RasterKind::pseudospectrum);
    CHECK(raster_kind_name(RasterKind::gershgorin) == "gershgorin");
    CHECK_THROWS_AS(raster_kind_from_name("nope"), domain_error);
}

TEST_CASE("gershgorin membership for constant matrices") {
    // rows give discs centered at 1 (radius 1/2) and 5 (radius 1/4)
    WMatrix m = wm("wmatrix 2\n1;1/2\n1/4;5\n");
    auto mbar = polynomial_extension(m);
    CHECK(gershgorin_member(mbar, {1.2, 0}) == 1u);
    CHECK(gershgorin_member(mbar, {5.1, 0.1}) == 2u);
    CHECK(gershgorin_member(mbar, {3, 0}) == 0u);
    CHECK(gershgorin_member(mbar, {1, 0.5}) == 1u); // boundary counts as inside
}

TEST_CASE("gershgorin row region of the quartic spectral inverse") {
    auto sbar = polynomial_extension(spectral_inverse(quad()));
    // the last row collapses to the single point 0
    CHECK(((gershgorin_member(sbar, {0, 0}) >> 3) & 1u) == 1u);
    CHECK(((gershgorin_member(sbar, {0.1, 0}) >> 3) & 1u) == 0u);
    CHECK(((gershgorin_member(sbar, {0, 0.1}) >> 3) & 1u) == 0u);
}

TEST_CASE("gershgorin regions contain the spectrum") {
    Rng rng(501);
    for (int it = 0; it < 200; ++it) {
        WMatrix m = rng.wpi_matrix(3, 1);
        auto mbar = polynomial_extension(m);
        std::size_t n = mbar.size();
        for (const auto& e : spectrum(m).entries) {
            Complex x = e.root;
            // membership with slack absorbs root-finding error at boundaries
            bool inside = false;
            for (std::size_t i = 0; i < n && !inside; ++i) {
                double radius = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) radius += std::abs(mbar[i][j].eval(x));
                double lhs = std::abs(x - mbar[i][i].eval(x));
                inside = lhs <= radius + 1e-6 * (1 + radius);
            }
            CHECK(inside);
        }
    }
}

TEST_CASE("gershgorin member agrees with direct evaluation") {
    Rng rng(502);
    for (int it = 0; it < 200; ++it) {
        WMatrix m = rng.wpi_matrix(3, 1);
        auto mbar = polynomial_extension(m);
        Complex x = rng.point();
        std::uint32_t got = gershgorin_member(mbar, x);
        for (std::size_t i = 0; i < mbar.size(); ++i) {
            double radius = 0;
            for (std::size_t j = 0; j < mbar.size(); ++j)
                if (j != i) radius += std::abs(mbar[i][j].eval(x));
            double lhs = std::abs(x - mbar[i][i].eval(x));
            if (std::abs(lhs - radius) <= 1e-9 * (1 + radius)) continue; // boundary
            CHECK(((got >> i) & 1u) == (lhs <= radius ? 1u : 0u));
        }
    }
}

TEST_CASE("gershgorin raster shrinks under reduction of the spectral inverse") {
    GridSpec spec{-2.03, 1.97, -1.51, 1.49, 36, 30};
    WMatrix s = spectral_inverse(quad());
    RegionRaster outer = gershgorin_raster(quad(), spec, true);
    RegionRaster inner = gershgorin_raster(isospectral_reduce(s, IndexSet({1, 2, 3})), spec, false);
    InclusionReport rep = check_inclusion(inner, outer, 1.0);
    CHECK(rep.ok());
    CHECK(rep.flagged_skipped == 0);

    // kind and grid mismatches are rejected
    RegionRaster ps = pseudospectrum_raster(quad(), spec);
    CHECK_THROWS_AS(check_inclusion(ps, outer, 1.0), domain_error);
    GridSpec other{-2.03, 1.97, -1.51, 1.49, 36, 29};
    CHECK_THROWS_AS(check_inclusion(gershgorin_raster(quad(), other, true), outer, 1.0),
                    domain_error);
}

TEST_CASE("scalar pseudospectrum raster has closed form") {
    WMatrix m = wm("wmatrix 1\n3/2\n");
    GridSpec spec{-1.01, 2.03, -1.02, 1.04, 16, 12};
    RegionRaster r = pseudospectrum_raster(m, spec);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            double want = 1.0 / std::abs(spec.point(i, j) - Complex(1.5, 0));
            CHECK(values_match(r.value(i, j), want, 1e-10));
            CHECK(r.flag(i, j) == 0);
        }

    CHECK(r.member(0, 0, 1.0) == (r.value(0, 0) > 1.0));
    CHECK_FALSE(r.member(0, 0, 1e-9));
}

TEST_CASE("block matrix pseudospectrum is unchanged by reduction") {
    GridSpec spec{-1.97, 3.93, -2.01, 1.99, 24, 20};
    RegionRaster full = pseudospectrum_raster(blocks4(), spec);
    RegionRaster red = pseudospectrum_raster(isospectral_reduce(blocks4(), IndexSet({2, 3, 4})), spec);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            if (full.flag(i, j) || red.flag(i, j)) continue;
            CHECK(values_match(full.value(i, j), red.value(i, j), 1e-10));
            // closed form max(1/|l|, 1/|l-2|)
            Complex x = spec.point(i, j);
            double want = std::max(1.0 / std::abs(x), 1.0 / std::abs(x - Complex(2, 0)));
            CHECK(values_match(full.value(i, j), want, 1e-9));
        }
}

TEST_CASE("pseudoresonance equals pseudospectrum of the spectral inverse") {
    GridSpec spec{-1.63, 1.57, -1.11, 1.19, 22, 18};
    RegionRaster pr = pseudoresonance_raster(quad(), spec);
    RegionRaster ps = pseudospectrum_raster(spectral_inverse(quad()), spec);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            if (pr.flag(i, j) || ps.flag(i, j)) continue;
            CHECK(values_match(pr.value(i, j), ps.value(i, j), 1e-9));
        }

    Rng rng(503);
    WMatrix m = rng.wpi_matrix(3, 1);
    RegionRaster pr2 = pseudoresonance_raster(m, spec);
    RegionRaster ps2 = pseudospectrum_raster(spectral_inverse(m), spec);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            if (pr2.flag(i, j) || ps2.flag(i, j)) continue;
            CHECK(values_match(pr2.value(i, j), ps2.value(i, j), 1e-9));
        }
}

TEST_CASE("resolvent norm dominates the reciprocal of the shifted norm") {
    GridSpec spec{-1.63, 1.57, -1.11, 1.19, 22, 18};
    Rng rng(504);
    for (int rep = 0; rep < 3; ++rep) {
        WMatrix m = rng.wpi_matrix(3, 1);
        RegionRaster ps = pseudospectrum_raster(m, spec);
        RegionRaster pr = pseudoresonance_raster(m, spec);
        for (int j = 0; j < spec.ny; ++j)
            for (int i = 0; i < spec.nx; ++i) {
                if (ps.flag(i, j)) continue;
                double inv_norm = pr.value(i, j) == kInf ? 0.0 : 1.0 / pr.value(i, j);
                double res = ps.value(i, j) == kInf ? kInf : ps.value(i, j);
                CHECK(res >= inv_norm * (1 - 1e-9));
            }
    }
}

TEST_CASE("pseudospectra are nested along a reduction chain") {
    GridSpec spec{-0.53, 3.91, -1.01, 1.03, 30, 24};
    WMatrix k = spring_k();
    std::vector<WMatrix> chain{k, isospectral_reduce(k, IndexSet({1, 2, 4})),
                               isospectral_reduce(k, IndexSet({1, 4})),
                               isospectral_reduce(k, IndexSet({1}))};
    std::vector<RegionRaster> rasters;
    for (const WMatrix& m : chain) rasters.push_back(pseudospectrum_raster(m, spec));

    for (std::size_t s = 1; s < rasters.size(); ++s) {
        for (int j = 0; j < spec.ny; ++j)
            for (int i = 0; i < spec.nx; ++i) {
                if (rasters[s].flag(i, j) || rasters[s - 1].flag(i, j)) continue;
                double vr = rasters[s].value(i, j);
                double vm = rasters[s - 1].value(i, j);
                if (vr == kInf) {
                    CHECK(vm == kInf);
                } else {
                    CHECK(vr <= vm * (1 + 1e-9) + 1e-12);
                }
            }
        InclusionReport rep = check_inclusion(rasters[s], rasters[s - 1], 0.5);
        CHECK(rep.ok());
    }

    // self inclusion is trivially satisfied
    CHECK(check_inclusion(rasters[0], rasters[0], 0.25).ok());
}

TEST_CASE("membership characterizations agree at random points") {
    Rng rng(505);
    int tested = 0;
    for (int it = 0; it < 400 && tested < 200; ++it) {
        WMatrix m = rng.wpi_matrix(3, 1);
        Complex x = rng.point();
        if (!in_domain(m, x)) continue;
        ++tested;

        ComplexMatrix a = eval_at(m, x);
        for (int d = 0; d < 3; ++d)
            a[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] -= x;
        double smin = singular_values(a).back();
        double rn = resolvent_norm(m, x);

        // smallest singular value and resolvent norm are reciprocal
        if (rn == kInf) {
            CHECK(smin <= 1e-10);
        } else {
            CHECK(std::abs(rn * smin - 1.0) <= 1e-9);
        }

        // the witness perturbation has the minimal norm and is singular there
        PseudoWitness w = pseudo_witness(m, x);
        CHECK(std::abs(w.sigma_min - smin) <= 1e-9 * (1 + smin));
        CHECK(std::abs(opnorm(w.perturbation, Norm::two) - smin) <= 1e-9 * (1 + smin));
        ComplexMatrix pert = a;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) pert[r][c] += w.perturbation[r][c];
        CHECK(singular_values(pert).back() <= 1e-8 * (1 + smin));
    }
    CHECK(tested == 200);
}

TEST_CASE("flagged points mark surviving poles") {
    // identically singular shift with an entry pole on the grid
    WMatrix m = wm("wmatrix 2\nl;1/(l-1)\n0;0\n");
    GridSpec spec{0, 2, -1, 1, 3, 3};
    RegionRaster r = pseudospectrum_raster(m, spec);
    CHECK(r.flag(1, 1) == 1); // the point 1 + 0i
    CHECK(r.value(1, 1) == kInf);
    CHECK(r.flag(0, 1) == 0);

    RegionRaster pr = pseudoresonance_raster(m, spec);
    CHECK(pr.value(1, 1) == kInf);
    CHECK(pr.flag(1, 1) == 0);

    // flagged points are skipped, not judged
    InclusionReport rep = check_inclusion(r, r, 1.0);
    CHECK(rep.ok());
    CHECK(rep.flagged_skipped == 1);
}

TEST_CASE("raster values are independent of the thread count") {
    GridSpec spec{-1.63, 1.57, -1.11, 1.19, 15, 12};
    WMatrix m = isospectral_reduce(six_by_six(), IndexSet({1, 2}));

    setenv("ISORED_THREADS", "1", 1);
    CHECK(raster_thread_count() == 1);
    RegionRaster one = pseudospectrum_raster(m, spec);
    RegionRaster one_g = gershgorin_raster(m, spec, false);

    setenv("ISORED_THREADS", "3", 1);
    CHECK(raster_thread_count() == 3);
    RegionRaster three = pseudospectrum_raster(m, spec);
    RegionRaster three_g = gershgorin_raster(m, spec, false);
    unsetenv("ISORED_THREADS");

    CHECK(one.values == three.values);
    CHECK(one.flags == three.flags);
    CHECK(one_g.values == three_g.values);
}
