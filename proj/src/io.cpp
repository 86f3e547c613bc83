#include "ahv/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace ahv {
namespace {

void put_i64(std::ostream& os, std::int64_t v) {
    unsigned char b[8];
    for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * k)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}
std::int64_t get_i64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(b[k]) << (8 * k);
    return static_cast<std::int64_t>(v);
}
void put_f64(std::ostream& os, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    put_i64(os, static_cast<std::int64_t>(u));
}
double get_f64(std::istream& is) {
    std::uint64_t u = static_cast<std::uint64_t>(get_i64(is));
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

}  // namespace

void write_vxl1(const std::string& path, const FieldState& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_vxl1: cannot open " + path);
    os.write("VXL1", 4);
    put_i64(os, s.grid.n1);
    put_i64(os, s.grid.n2);
    put_f64(os, s.grid.h);
    put_f64(os, s.t);
    for (const Grid2D* g : s.all_fields())
        for (int i = 0; i < g->n1(); ++i)
            for (int j = 0; j < g->n2(); ++j) put_f64(os, g->at(i, j));
    if (!os) throw std::runtime_error("write_vxl1: write failed for " + path);
}

FieldState read_vxl1(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_vxl1: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::strncmp(magic, "VXL1", 4) != 0)
        throw std::runtime_error("read_vxl1: bad magic in " + path);
    GridSpec g;
    g.n1 = static_cast<int>(get_i64(is));
    g.n2 = static_cast<int>(get_i64(is));
    g.h = get_f64(is);
    g.validate();
    FieldState s(g);
    s.t = get_f64(is);
    for (Grid2D* gr : s.all_fields())
        for (int i = 0; i < gr->n1(); ++i)
            for (int j = 0; j < gr->n2(); ++j) gr->at(i, j) = get_f64(is);
    if (!is) throw std::runtime_error("read_vxl1: truncated file " + path);
    return s;
}

void write_plane_csv(const std::string& path, const Grid2D& g) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_plane_csv: cannot open " + path);
    os.precision(17);
    for (int i = 0; i < g.n1(); ++i) {
        for (int j = 0; j < g.n2(); ++j) {
            if (j) os << ',';
            os << g.at(i, j);
        }
        os << '\n';
    }
}

void write_plane_pgm(const std::string& path, const Grid2D& g) {
    double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            lo = std::min(lo, g.at(i, j));
            hi = std::max(hi, g.at(i, j));
        }
    const double span = hi > lo ? hi - lo : 1.0;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_plane_pgm: cannot open " + path);
    os << "P5\n" << g.n2() << ' ' << g.n1() << "\n65535\n";
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            const auto v = static_cast<unsigned>(65535.0 * (g.at(i, j) - lo) / span + 0.5);
            const unsigned char b[2] = {static_cast<unsigned char>(v >> 8),
                                        static_cast<unsigned char>(v & 0xff)};
            os.write(reinterpret_cast<const char*>(b), 2);
        }
}

}  // namespace ahv
