#include "ahv/stencil.hpp"

#include <stdexcept>

namespace ahv {

Grid2D fd_d1(const Grid2D& f, int axis, double h) {
    if (f.n1() < 9 || f.n2() < 9) throw std::invalid_argument("fd_d1: grid too small for stencil");
    GridSpec g{f.n1(), f.n2(), h};
    Grid2D out(g);
    for (int i = 0; i < f.n1(); ++i)
        for (int j = 0; j < f.n2(); ++j)
            out.at(i, j) = axis == 0 ? d1_x(f, i, j, h) : d1_y(f, i, j, h);
    return out;
}

Grid2D fd_d2(const Grid2D& f, int axis, double h) {
    if (f.n1() < 9 || f.n2() < 9) throw std::invalid_argument("fd_d2: grid too small for stencil");
    GridSpec g{f.n1(), f.n2(), h};
    Grid2D out(g);
    for (int i = 0; i < f.n1(); ++i)
        for (int j = 0; j < f.n2(); ++j)
            out.at(i, j) = axis == 0 ? d2_x(f, i, j, h) : d2_y(f, i, j, h);
    return out;
}

void deriv1d(const double* f, double* out, int n, double h) {
    if (n < 5) throw std::invalid_argument("deriv1d: need at least 5 points");
    const double c = 1.0 / (12.0 * h);
    for (int k = 2; k < n - 2; ++k)
        out[k] = (-f[k + 2] + 8.0 * f[k + 1] - 8.0 * f[k - 1] + f[k - 2]) * c;
    // one-sided 4th order at the ends
    out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * c;
    out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * c;
    out[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                  3.0 * f[n - 5]) * c;
    out[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] -
                  f[n - 5]) * c;
}

}  // namespace ahv
