#ifndef AHV_IO_HPP
#define AHV_IO_HPP

#include <string>

#include "ahv/grid.hpp"

namespace ahv {

// VXL1 grid record: magic "VXL1", n1, n2 as int64 LE, h, t as float64 LE,
// then ten row-major float64 interior planes in the order
// (phi1, phi2, a0, a1, a2, dphi1, dphi2, da0, da1, da2).
void write_vxl1(const std::string& path, const FieldState& s);
FieldState read_vxl1(const std::string& path);

// single plane as CSV (debug export); row-major, one grid row per line
void write_plane_csv(const std::string& path, const Grid2D& g);

// grayscale PGM of a plane, linearly mapped to 0..65535
void write_plane_pgm(const std::string& path, const Grid2D& g);

}  // namespace ahv

#endif
