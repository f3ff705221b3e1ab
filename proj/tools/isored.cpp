#include "isored/errors.hpp"
#include "isored/io.hpp"
#include "isored/massspring.hpp"
#include "isored/numerics.hpp"
#include "isored/reduction.hpp"
#include "isored/regions.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace isored;
using MathError = isored::error;

namespace {

IndexSet parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            out.push_back(std::stoi(cell));
        } catch (const std::exception&) {
            throw CLI::ValidationError("index list", "bad index '" + cell + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("index list", "empty index list");
    return IndexSet(std::move(out));
}

std::vector<IndexSet> parse_chain(const std::string& text) {
    std::vector<IndexSet> chain;
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '|')) chain.push_back(parse_index_list(part));
    if (chain.empty()) throw CLI::ValidationError("chain", "empty chain");
    return chain;
}

GridSpec parse_grid(const std::string& window, const std::string& grid) {
    GridSpec spec{};
    if (std::sscanf(window.c_str(), "%lf,%lf,%lf,%lf", &spec.re_min, &spec.re_max, &spec.im_min,
                    &spec.im_max) != 4)
        throw CLI::ValidationError("--window", "expected a,b,c,d");
    if (std::sscanf(grid.c_str(), "%dx%d", &spec.nx, &spec.ny) != 2)
        throw CLI::ValidationError("--grid", "expected NXxNY, e.g. 200x200");
    spec.validate();
    return spec;
}

Norm parse_norm(const std::string& text) {
    if (text == "inf") return Norm::inf;
    if (text == "1") return Norm::one;
    if (text == "2") return Norm::two;
    throw CLI::ValidationError("--norm", "expected 1, 2, or inf");
}

void emit_matrix(const WMatrix& m, const std::string& out_path) {
    if (out_path.empty())
        write_matrix(std::cout, m);
    else
        write_matrix_file(out_path, m);
}

// PGM brightness window from contour levels: eps maps to log10(1/eps).
void pgm_window_from_levels(const std::string& levels, double& lo, double& hi) {
    std::istringstream ss(levels);
    std::string cell;
    double mn = kInf, mx = -kInf;
    while (std::getline(ss, cell, ',')) {
        double eps = std::stod(cell);
        if (!(eps > 0)) throw CLI::ValidationError("--levels", "levels must be positive");
        double v = std::log10(1.0 / eps);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    if (!(mn < mx)) {
        mn -= 1;
        mx += 1;
    }
    lo = mn;
    hi = mx;
}

struct RasterArgs {
    std::string window, grid = "200x200", norm = "2", out, pgm, levels;
};

void add_raster_flags(CLI::App* cmd, RasterArgs& args, bool with_norm) {
    cmd->add_option("--window", args.window, "re_min,re_max,im_min,im_max")->required();
    cmd->add_option("--grid", args.grid, "grid size NXxNY (default 200x200)");
    if (with_norm) cmd->add_option("--norm", args.norm, "operator norm: 1, 2, or inf");
    cmd->add_option("-o,--output", args.out, "output CSV path")->required();
    cmd->add_option("--pgm", args.pgm, "also write an 8-bit PGM image");
    cmd->add_option("--levels", args.levels, "epsilon levels, sets the PGM brightness window");
}

void emit_raster(const RegionRaster& raster, const RasterArgs& args) {
    write_raster(raster, args.out, RasterFormat::csv);
    if (!args.pgm.empty()) {
        double lo = -2.0, hi = 2.0;
        if (!args.levels.empty()) pgm_window_from_levels(args.levels, lo, hi);
        write_raster(raster, args.pgm, RasterFormat::pgm, lo, hi);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isospectral reduction toolkit for matrices over the rational function field"};
    app.require_subcommand(1);

    std::string matrix_path, keep, chain_text, out_path;
    bool inverse = false;

    auto* reduce = app.add_subcommand("reduce", "isospectral or sequential reduction");
    reduce->add_option("matrix", matrix_path, "matrix file")->required();
    reduce->add_option("--keep", keep, "boundary indices, e.g. 1,2");
    reduce->add_option("--chain", chain_text, "nested chain, e.g. \"1,2,3|1,2\"");
    reduce->add_option("-o,--output", out_path, "output matrix file (default stdout)");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum or inverse spectrum");
    spectrum_cmd->add_option("matrix", matrix_path, "matrix file")->required();
    spectrum_cmd->add_flag("--inverse", inverse, "print the inverse spectrum");

    auto* specinv = app.add_subcommand("specinv", "spectral inverse");
    specinv->add_option("matrix", matrix_path, "matrix file")->required();
    specinv->add_option("-o,--output", out_path, "output matrix file (default stdout)");

    RasterArgs gersh_args;
    auto* gersh = app.add_subcommand("gersh", "Gershgorin-type region raster");
    gersh->add_option("matrix", matrix_path, "matrix file")->required();
    gersh->add_flag("--inverse", inverse, "use the spectral inverse");
    add_raster_flags(gersh, gersh_args, false);

    RasterArgs pspec_args;
    auto* pspec = app.add_subcommand("pseudospec", "pseudospectrum raster (resolvent norm)");
    pspec->add_option("matrix", matrix_path, "matrix file")->required();
    add_raster_flags(pspec, pspec_args, true);

    RasterArgs pres_args;
    auto* pres = app.add_subcommand("pseudores", "pseudoresonance raster (shifted norm)");
    pres->add_option("matrix", matrix_path, "matrix file")->required();
    add_raster_flags(pres, pres_args, true);

    int path_nodes = 0;
    std::string boundary_text, spring_op = "reduce";
    double omega = 0.0;
    RasterArgs spring_args;
    auto* spring = app.add_subcommand("spring", "mass-spring network front end");
    spring->add_option("--path", path_nodes, "path network on N nodes with unit springs")
        ->required();
    spring->add_option("--boundary", boundary_text, "boundary node indices, e.g. 1,4")->required();
    spring->add_option("--op", spring_op,
                       "one of reduce, spectrum, specinv, gersh, pseudospec, pseudores, force");
    spring->add_flag("--inverse", inverse, "inverse spectrum / spectral-inverse region");
    spring->add_option("--omega", omega, "driving frequency for --op force");
    spring->add_option("--window", spring_args.window, "re_min,re_max,im_min,im_max");
    spring->add_option("--grid", spring_args.grid, "grid size NXxNY (default 200x200)");
    spring->add_option("--norm", spring_args.norm, "operator norm: 1, 2, or inf");
    spring->add_option("-o,--output", out_path, "output path");
    spring->add_option("--pgm", spring_args.pgm, "also write an 8-bit PGM image");
    spring->add_option("--levels", spring_args.levels, "epsilon levels for the PGM window");

    std::string inner_path, outer_path;
    double eps = 0.316;
    auto* chk = app.add_subcommand("check-inclusion", "verify raster inclusion at a tolerance");
    chk->add_option("inner", inner_path, "inner raster CSV")->required();
    chk->add_option("outer", outer_path, "outer raster CSV")->required();
    chk->add_option("--eps", eps, "membership tolerance")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (reduce->parsed()) {
            WMatrix m = parse_matrix_file(matrix_path);
            WMatrix r;
            if (!chain_text.empty())
                r = sequential_reduce(m, parse_chain(chain_text));
            else if (!keep.empty())
                r = isospectral_reduce(m, parse_index_list(keep));
            else
                throw CLI::RequiredError("--keep or --chain");
            emit_matrix(r, out_path);
        } else if (spectrum_cmd->parsed()) {
            WMatrix m = parse_matrix_file(matrix_path);
            std::cout << format_root_multiset(inverse ? inverse_spectrum(m) : spectrum(m));
        } else if (specinv->parsed()) {
            emit_matrix(spectral_inverse(parse_matrix_file(matrix_path)), out_path);
        } else if (gersh->parsed()) {
            WMatrix m = parse_matrix_file(matrix_path);
            GridSpec spec = parse_grid(gersh_args.window, gersh_args.grid);
            emit_raster(gershgorin_raster(m, spec, inverse), gersh_args);
        } else if (pspec->parsed()) {
            WMatrix m = parse_matrix_file(matrix_path);
            GridSpec spec = parse_grid(pspec_args.window, pspec_args.grid);
            emit_raster(pseudospectrum_raster(m, spec, parse_norm(pspec_args.norm)), pspec_args);
        } else if (pres->parsed()) {
            WMatrix m = parse_matrix_file(matrix_path);
            GridSpec spec = parse_grid(pres_args.window, pres_args.grid);
            emit_raster(pseudoresonance_raster(m, spec, parse_norm(pres_args.norm)), pres_args);
        } else if (spring->parsed()) {
            SpringNetwork net = SpringNetwork::path(path_nodes);
            IndexSet boundary = parse_index_list(boundary_text);
            WMatrix response = frequency_response(net, boundary);
            if (spring_op == "reduce") {
                emit_matrix(response, out_path);
            } else if (spring_op == "spectrum") {
                std::cout << format_root_multiset(inverse ? inverse_spectrum(response)
                                                          : spectrum(response));
            } else if (spring_op == "specinv") {
                emit_matrix(spectral_inverse(response), out_path);
            } else if (spring_op == "force") {
                ComplexVector u(boundary.size(), Complex(1.0, 0.0));
                ComplexVector f = boundary_force(net, boundary, omega, u);
                for (std::size_t k = 0; k < f.size(); ++k) {
                    char buf[80];
                    std::snprintf(buf, sizeof buf, "%.12g%+.12gi\n", f[k].real(), f[k].imag());
                    std::cout << buf;
                }
            } else if (spring_op == "gersh" || spring_op == "pseudospec" ||
                       spring_op == "pseudores") {
                if (spring_args.window.empty()) throw CLI::RequiredError("--window");
                if (out_path.empty()) throw CLI::RequiredError("--output");
                spring_args.out = out_path;
                GridSpec spec = parse_grid(spring_args.window, spring_args.grid);
                RegionRaster raster;
                if (spring_op == "gersh")
                    raster = gershgorin_raster(response, spec, inverse);
                else if (spring_op == "pseudospec")
                    raster = pseudospectrum_raster(response, spec, parse_norm(spring_args.norm));
                else
                    raster = pseudoresonance_raster(response, spec, parse_norm(spring_args.norm));
                emit_raster(raster, spring_args);
            } else {
                throw CLI::ValidationError("--op", "unknown operation '" + spring_op + "'");
            }
        } else if (chk->parsed()) {
            RegionRaster inner = read_raster_csv(inner_path);
            RegionRaster outer = read_raster_csv(outer_path);
            InclusionReport report = check_inclusion(inner, outer, eps);
            std::cout << "violations: " << report.violations.size()
                      << ", flagged points skipped: " << report.flagged_skipped << "\n";
            for (std::size_t k = 0; k < report.violations.size() && k < 10; ++k) {
                const auto& v = report.violations[k];
                std::cout << "  grid (" << v.i << "," << v.j << ") inner=" << v.inner_value
                          << " outer=" << v.outer_value << "\n";
            }
            if (!report.ok()) return 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
