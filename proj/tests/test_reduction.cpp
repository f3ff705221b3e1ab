#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace testutil;

TEST_CASE("reduction of the 6x6 matrix") {
    WMatrix r = isospectral_reduce(six_by_six(), IndexSet({1, 2}));
    WMatrix expected = wm("wmatrix 2\n"
                          "1/(l-1); 1/(l-1)\n"
                          "1/l; (l+1)/l\n");
    CHECK(r == expected);
}

TEST_CASE("trivial and error cases") {
    WMatrix d = wm("wmatrix 2\n1;0\n0;2\n");
    WMatrix r = isospectral_reduce(d, IndexSet({1}));
    CHECK(r == wm("wmatrix 1\n1\n"));

    // uncoupled 3x3 with a single surviving 1/l entry
    WMatrix m3 = wm("wmatrix 3\n0;1;0\n1;0;0\n0;1;0\n");
    CHECK(isospectral_reduce(m3, IndexSet({1})) == wm("wmatrix 1\n1/l\n"));

    CHECK_THROWS_AS(isospectral_reduce(d, IndexSet({1, 2})), domain_error);

    // M_II - lambda I identically singular
    WMatrix bad = wm("wmatrix 2\n1;1\n1;l\n");
    CHECK_THROWS_AS(isospectral_reduce(bad, IndexSet({1})), singularity_error);
}

TEST_CASE("sequential reduction uniqueness") {
    WMatrix m = uniqueness4();
    WMatrix expected = wm("wmatrix 2\n"
                          "(l^2-2*l+1)/(l^2-2*l); (l-1)/(l^2-2*l)\n"
                          "(l-1)/(l^2-2*l); (l^2-2*l+1)/(l^2-2*l)\n");

    WMatrix via3 = sequential_reduce(m, {IndexSet({1, 2, 3}), IndexSet({1, 2})});
    WMatrix via4 = sequential_reduce(m, {IndexSet({1, 2, 4}), IndexSet({1, 2})});
    WMatrix direct = isospectral_reduce(m, IndexSet({1, 2}));
    CHECK(via3 == expected);
    CHECK(via4 == expected);
    CHECK(direct == expected);

    CHECK(sequential_reduce(m, {IndexSet({1, 2})}) == direct);
    CHECK_THROWS_AS(sequential_reduce(m, {IndexSet({1, 2}), IndexSet({1, 3})}), domain_error);
    CHECK_THROWS_AS(sequential_reduce(m, {IndexSet({1, 2}), IndexSet({1, 2})}), domain_error);
}

TEST_CASE("sequential reduction on random chains") {
    Rng rng(301);
    for (int it = 0; it < 200; ++it) {
        int n = 4 + (it % 2);
        WMatrix m = rng.wpi_matrix(n, 1);
        IndexSet mid = rng.subset(n, n - 1);
        // final set drawn inside the middle one
        std::vector<int> finals;
        for (int idx : mid.indices())
            if (finals.size() < 2 && rng.int_in(0, 1)) finals.push_back(idx);
        if (finals.empty()) finals.push_back(mid.indices().front());
        IndexSet last(std::move(finals));
        if (last.size() == mid.size()) continue;

        WMatrix chained = sequential_reduce(m, {mid, last});
        WMatrix direct = isospectral_reduce(m, last);
        CHECK(chained == direct);
    }
}

TEST_CASE("spectrum bookkeeping for the 6x6 matrix") {
    WMatrix m = six_by_six();
    IndexSet b({1, 2});
    auto [sig, inv] = predicted_reduced_spectra(m, b);
    RootMultiset expect_sig{{{Complex(2, 0), 1}, {Complex(-1, 0), 1}}};
    CHECK(multiset_equal(sig, expect_sig));
    CHECK(inv.empty());

    WMatrix r = isospectral_reduce(m, b);
    CHECK(multiset_equal(spectrum(r), sig));
    CHECK(multiset_equal(inverse_spectrum(r), inv));
}

TEST_CASE("spectrum bookkeeping on random matrices") {
    Rng rng(302);
    for (int it = 0; it < 200; ++it) {
        int n = (it % 25 == 0) ? 5 + (it % 2) : 2 + (it % 3);
        WMatrix m = rng.wpi_matrix(n, 1);
        IndexSet b = rng.subset(n, 1 + rng.int_in(0, n - 2));

        WMatrix r = isospectral_reduce(m, b);
        auto [sig, inv] = predicted_reduced_spectra(m, b);
        CHECK(multiset_equal(spectrum(r), sig, 1e-6));
        CHECK(multiset_equal(inverse_spectrum(r), inv, 1e-6));

        // W_pi closure
        CHECK(r.all_w_pi());
    }
}

TEST_CASE("characteristic function factorization under reduction") {
    Rng rng(303);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + (it % 2);
        WMatrix m = rng.wpi_matrix(n, 1);
        IndexSet b = rng.subset(n, 1 + rng.int_in(0, n - 2));
        IndexSet interior = b.complement(n);
        WMatrix r = isospectral_reduce(m, b);
        WMatrix ii = submatrix(m, interior, interior);
        CHECK(char_ratfunc(r) * char_ratfunc(ii) == char_ratfunc(m));
    }
}

TEST_CASE("corollary for complex matrices") {
    Rng rng(304);
    WMatrix d(3);
    d.at(0, 0) = rf("1");
    d.at(1, 1) = rf("2");
    d.at(2, 2) = rf("3");
    auto [sig, inv] = predicted_reduced_spectra(d, IndexSet({1}));
    CHECK(multiset_equal(sig, RootMultiset{{{Complex(1, 0), 1}}}));
    CHECK(inv.empty());
}

TEST_CASE("reduction of the spectral inverse") {
    WMatrix got = reduce_spectral_inverse(quad(), IndexSet({1, 2, 3}));
    WMatrix expected = wm(
        "wmatrix 3\n"
        "(-l)/(l^2-1)+l; (-l)/(l^2-1)^2; (-l^2)/(l^2-1)^3\n"
        "0; (-l)/(l^2-1)+l; (-l^2)/(l^2-1)^2\n"
        "0; 0; (-l)/(l^2-1)+l\n");
    CHECK(got == expected);

    // decoupled complex diagonal
    WMatrix d = wm("wmatrix 2\n2;0\n0;5\n");
    WMatrix r1 = reduce_spectral_inverse(d, IndexSet({1}));
    CHECK(r1 == wm("wmatrix 1\n1/(2-l)+l\n"));

    Rng rng(305);
    for (int it = 0; it < 40; ++it) {
        WMatrix m = rng.wpi_matrix(4, 1);
        IndexSet b = rng.subset(4, 1 + rng.int_in(0, 2));
        // both internal routes must agree or this throws
        WMatrix r = reduce_spectral_inverse(m, b);
        CHECK(r.dim() == static_cast<int>(b.size()));
    }
}

TEST_CASE("sequential reduction of the spectral inverse") {
    Rng rng(306);
    for (int it = 0; it < 30; ++it) {
        WMatrix m = rng.wpi_matrix(4, 1);
        WMatrix s = spectral_inverse(m);
        IndexSet mid = rng.subset(4, 3);
        IndexSet last({mid.indices()[static_cast<std::size_t>(rng.int_in(0, 2))]});
        CHECK(sequential_reduce(s, {mid, last}) == isospectral_reduce(s, last));
    }
}
