#ifndef AHV_STENCIL_HPP
#define AHV_STENCIL_HPP

#include "ahv/grid.hpp"

namespace ahv {

// Central 4th-order finite differences. Callers must have the ghost layers
// populated; the interior formulas read two cells beyond the requested node.

inline double d1_x(const Grid2D& f, int i, int j, double h) {
    return (-f.at(i + 2, j) + 8.0 * f.at(i + 1, j) - 8.0 * f.at(i - 1, j) + f.at(i - 2, j)) /
           (12.0 * h);
}
inline double d1_y(const Grid2D& f, int i, int j, double h) {
    return (-f.at(i, j + 2) + 8.0 * f.at(i, j + 1) - 8.0 * f.at(i, j - 1) + f.at(i, j - 2)) /
           (12.0 * h);
}
inline double d2_x(const Grid2D& f, int i, int j, double h) {
    return (-f.at(i + 2, j) + 16.0 * f.at(i + 1, j) - 30.0 * f.at(i, j) + 16.0 * f.at(i - 1, j) -
            f.at(i - 2, j)) / (12.0 * h * h);
}
inline double d2_y(const Grid2D& f, int i, int j, double h) {
    return (-f.at(i, j + 2) + 16.0 * f.at(i, j + 1) - 30.0 * f.at(i, j) + 16.0 * f.at(i, j - 1) -
            f.at(i, j - 2)) / (12.0 * h * h);
}

// 2nd-order variants used on the outer two rings, where the boundary closure
// provides a single reliable ghost layer.
inline double d1_x2(const Grid2D& f, int i, int j, double h) {
    return (f.at(i + 1, j) - f.at(i - 1, j)) / (2.0 * h);
}
inline double d1_y2(const Grid2D& f, int i, int j, double h) {
    return (f.at(i, j + 1) - f.at(i, j - 1)) / (2.0 * h);
}
inline double lap2(const Grid2D& f, int i, int j, double h) {
    return (f.at(i + 1, j) + f.at(i - 1, j) + f.at(i, j + 1) + f.at(i, j - 1) -
            4.0 * f.at(i, j)) / (h * h);
}

// distance to the nearest edge, in cells
inline int edge_depth(int i, int j, int n1, int n2) {
    int d = i;
    if (n1 - 1 - i < d) d = n1 - 1 - i;
    if (j < d) d = j;
    if (n2 - 1 - j < d) d = n2 - 1 - j;
    return d;
}

// Mixed-order operators: 4th order in the deep interior, 2nd order on the
// outer two rings (inside the absorbing layer, where formal order is moot).
inline double d1_x_mixed(const Grid2D& f, int i, int j, double h, int depth) {
    return depth >= 2 ? d1_x(f, i, j, h) : d1_x2(f, i, j, h);
}
inline double d1_y_mixed(const Grid2D& f, int i, int j, double h, int depth) {
    return depth >= 2 ? d1_y(f, i, j, h) : d1_y2(f, i, j, h);
}
inline double lap_mixed(const Grid2D& f, int i, int j, double h, int depth) {
    return depth >= 2 ? d2_x(f, i, j, h) + d2_y(f, i, j, h) : lap2(f, i, j, h);
}

// Whole-plane first and second derivatives (diagnostics and tests; not the
// evolution hot path). axis 0 = x1, axis 1 = x2.
Grid2D fd_d1(const Grid2D& f, int axis, double h);
Grid2D fd_d2(const Grid2D& f, int axis, double h);

// 4th-order derivative of a 1d sequence with one-sided stencils at the ends.
// Used for tangential derivatives along boundary lines.
void deriv1d(const double* f, double* out, int n, double h);

}  // namespace ahv

#endif
