#pragma once

#include "isored/regions.hpp"
#include "isored/wmatrix.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace isored {

// Grammar (whitespace insignificant, 'l' is the variable):
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' uint)?
//   base     := 'l' | number | '(' expr ')'
//   number   := int ('/' uint)? 'i'?
// Syntax errors carry the offending position; division by an identically zero
// subexpression is a domain error.
RatFunc parse_ratfunc(const std::string& text);

// Canonical text form; parse_ratfunc(print_ratfunc(w)) == w exactly.
std::string print_ratfunc(const RatFunc& w);

// Matrix file: optional '#' comment lines, a "wmatrix n" header, then n lines
// of n ';'-separated entries.
WMatrix parse_matrix(std::istream& in, const std::string& origin = "<stream>");
WMatrix parse_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const WMatrix& m, const std::string& name = "");
void write_matrix_file(const std::string& path, const WMatrix& m, const std::string& name = "");

enum class RasterFormat { csv, pgm };

// CSV: "# kind=..." comment, "re,im,value,flag" header, one row per grid point
// (im outer, re inner), shortest round-trip decimals, +inf as "inf".
// PGM: binary P5, 8-bit, affine map of log10(value) over [lo, hi].
void write_raster(const RegionRaster& raster, const std::string& path, RasterFormat format,
                  double pgm_lo = -2.0, double pgm_hi = 2.0);
RegionRaster read_raster_csv(const std::string& path);

std::string format_root_multiset(const RootMultiset& roots);

} // namespace isored
