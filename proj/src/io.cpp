#include "isored/io.hpp"

#include "isored/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace isored {

namespace {

// --- rational function expression parser ------------------------------------

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    RatFunc parse() {
        RatFunc result = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw domain_error("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFunc expr() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        RatFunc acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by an identically zero expression");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        RatFunc b = base();
        if (eat('^')) {
            unsigned e = parse_uint();
            RatFunc acc = RatFunc::one();
            for (unsigned k = 0; k < e; ++k) acc *= b;
            return acc;
        }
        return b;
    }

    RatFunc base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'l') {
            ++pos_;
            return RatFunc::lambda();
        }
        if (c == 'i') {
            ++pos_;
            return RatFunc(GaussianRational(Rational(0), Rational(1)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        fail("expected 'l', a number, or '('");
    }

    unsigned parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an unsigned integer");
        return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
    }

    BigInt parse_bigint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return BigInt(text_.substr(start, pos_ - start));
    }

    RatFunc number() {
        BigInt num = parse_bigint();
        BigInt den = 1;
        std::size_t save = pos_;
        if (eat('/')) {
            // Only a fraction if a digit follows; otherwise this '/' belongs
            // to the enclosing term.
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                den = parse_bigint();
                if (den == 0) fail("zero denominator in rational literal");
            } else {
                pos_ = save;
            }
        }
        Rational r(num, den);
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return RatFunc(GaussianRational(Rational(0), r));
        }
        return RatFunc(GaussianRational(r));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

bool needs_sign_split(const GaussianRational& c) {
    // Bare rationals / bare imaginaries can have their sign pulled out; mixed
    // values are printed in parentheses where a leading '-' parses fine.
    if (c.im() == 0) return c.re() < 0;
    if (c.re() == 0) return c.im() < 0;
    return false;
}

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        GaussianRational c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        bool negative = needs_sign_split(c);
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = (c == GaussianRational(1)) && i >= 1;
        if (!unit) os << to_string(c);
        if (i >= 1) {
            if (!unit) os << "*";
            os << "l";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace

RatFunc parse_ratfunc(const std::string& text) { return ExprParser(text).parse(); }

std::string print_ratfunc(const RatFunc& w) {
    if (w.den().degree() == 0) return print_poly(w.num());
    std::ostringstream os;
    os << "(" << print_poly(w.num()) << ")/(" << print_poly(w.den()) << ")";
    return os.str();
}

WMatrix parse_matrix(std::istream& in, const std::string& origin) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            bool blank = std::all_of(line.begin(), line.end(),
                                     [](unsigned char c) { return std::isspace(c); });
            if (blank) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw domain_error(origin + ": missing 'wmatrix n' header");
    std::istringstream hs(header);
    std::string tag;
    int n = 0;
    hs >> tag >> n;
    if (tag != "wmatrix" || n < 1)
        throw domain_error(origin + ": expected 'wmatrix n' header, got '" + header + "'");

    WMatrix m(n);
    for (int i = 0; i < n; ++i) {
        std::string row;
        if (!next_line(row)) throw domain_error(origin + ": missing row " + std::to_string(i + 1));
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            std::size_t semi = row.find(';', start);
            cells.push_back(row.substr(start, semi == std::string::npos ? semi : semi - start));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (static_cast<int>(cells.size()) != n)
            throw domain_error(origin + ": row " + std::to_string(i + 1) + " has " +
                               std::to_string(cells.size()) + " entries, expected " +
                               std::to_string(n));
        for (int j = 0; j < n; ++j) {
            try {
                m.at(i, j) = parse_ratfunc(cells[static_cast<std::size_t>(j)]);
            } catch (const domain_error& e) {
                throw domain_error(origin + ": row " + std::to_string(i + 1) + ", entry " +
                                   std::to_string(j + 1) + ": " + e.what());
            }
        }
    }
    return m;
}

WMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open matrix file: " + path);
    return parse_matrix(in, path);
}

void write_matrix(std::ostream& out, const WMatrix& m, const std::string& name) {
    if (!name.empty()) out << "# name: " << name << "\n";
    out << "wmatrix " << m.dim() << "\n";
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << "; ";
            out << print_ratfunc(m.at(i, j));
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const WMatrix& m, const std::string& name) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open output file: " + path);
    write_matrix(out, m, name);
}

namespace {

std::string shortest_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    return std::stod(s);
}

} // namespace

void write_raster(const RegionRaster& raster, const std::string& path, RasterFormat format,
                  double pgm_lo, double pgm_hi) {
    if (format == RasterFormat::csv) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw domain_error("cannot open output file: " + path);
        out << "# kind=" << raster_kind_name(raster.kind) << "\n";
        out << "re,im,value,flag\n";
        for (int j = 0; j < raster.spec.ny; ++j)
            for (int i = 0; i < raster.spec.nx; ++i)
                out << shortest_double(raster.spec.re_at(i)) << ","
                    << shortest_double(raster.spec.im_at(j)) << ","
                    << shortest_double(raster.value(i, j)) << ","
                    << static_cast<int>(raster.flag(i, j)) << "\n";
        return;
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot open output file: " + path);
    out << "P5\n# log10 window [" << shortest_double(pgm_lo) << "," << shortest_double(pgm_hi)
        << "]\n"
        << raster.spec.nx << " " << raster.spec.ny << "\n255\n";
    for (int j = 0; j < raster.spec.ny; ++j)
        for (int i = 0; i < raster.spec.nx; ++i) {
            double v = raster.value(i, j);
            unsigned char byte;
            if (raster.kind == RasterKind::gershgorin) {
                byte = v != 0.0 ? 255 : 0;
            } else if (std::isinf(v)) {
                byte = 255;
            } else if (v <= 0.0) {
                byte = 0;
            } else {
                double t = (std::log10(v) - pgm_lo) / (pgm_hi - pgm_lo);
                t = std::clamp(t, 0.0, 1.0);
                byte = static_cast<unsigned char>(std::lround(t * 255.0));
            }
            out.put(static_cast<char>(byte));
        }
}

RegionRaster read_raster_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open raster file: " + path);
    std::string line;
    RasterKind kind = RasterKind::pseudospectrum;
    bool have_header = false;
    struct Row {
        double re, im, value;
        int flag;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t eq = line.find("kind=");
            if (eq != std::string::npos) kind = raster_kind_from_name(line.substr(eq + 5));
            continue;
        }
        if (!have_header) {
            if (line.rfind("re,im,value,flag", 0) != 0)
                throw domain_error(path + ": missing 're,im,value,flag' header");
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        Row r{};
        std::getline(ls, cell, ',');
        r.re = parse_double(cell);
        std::getline(ls, cell, ',');
        r.im = parse_double(cell);
        std::getline(ls, cell, ',');
        r.value = parse_double(cell);
        std::getline(ls, cell, ',');
        r.flag = std::stoi(cell);
        rows.push_back(r);
    }
    if (rows.size() < 4) throw domain_error(path + ": too few raster rows");

    int nx = 1;
    while (static_cast<std::size_t>(nx) < rows.size() &&
           rows[static_cast<std::size_t>(nx)].im == rows[0].im)
        ++nx;
    if (rows.size() % static_cast<std::size_t>(nx) != 0)
        throw domain_error(path + ": ragged raster grid");
    int ny = static_cast<int>(rows.size()) / nx;

    RegionRaster raster;
    raster.kind = kind;
    raster.spec = {rows[0].re, rows[static_cast<std::size_t>(nx - 1)].re, rows[0].im,
                   rows.back().im, nx, ny};
    raster.spec.validate();
    raster.values.resize(rows.size());
    raster.flags.resize(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        raster.values[k] = rows[k].value;
        raster.flags[k] = static_cast<std::uint8_t>(rows[k].flag);
    }
    return raster;
}

std::string format_root_multiset(const RootMultiset& roots) {
    std::ostringstream os;
    for (const auto& e : roots.normalized().entries) {
        char buf[80];
        double re = e.root.real(), im = e.root.imag();
        if (std::abs(im) < 1e-12) {
            std::snprintf(buf, sizeof buf, "%.12g", re);
            os << buf;
        } else {
            std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
            os << buf;
        }
        os << " (×" << e.multiplicity << ")\n";
    }
    return os.str();
}

} // namespace isored
