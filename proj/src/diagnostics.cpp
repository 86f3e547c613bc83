#include "ahv/diagnostics.hpp"

#include <cmath>
#include <complex>

#include "ahv/stencil.hpp"

namespace ahv {
namespace {

using cd = std::complex<double>;

// Interior-only plain derivative along one axis. The stencil variant depends
// only on the coordinate along that axis, so x- and y-operators commute as
// tensor products; gauge defects in B and f_{0i} then cancel identically.
struct LineDeriv {
    int off[5];
    double c[5];
    int n;  // number of taps
};

inline LineDeriv line_deriv(int k, int nk, double h) {
    LineDeriv d;
    if (k >= 2 && k <= nk - 3) {
        d = {{-2, -1, 1, 2, 0}, {1.0, -8.0, 8.0, -1.0, 0.0}, 4};
        for (auto& v : d.c) v /= 12.0 * h;
    } else if (k == 1 || k == nk - 2) {
        d = {{-1, 1, 0, 0, 0}, {-0.5, 0.5, 0.0, 0.0, 0.0}, 2};
        for (auto& v : d.c) v /= h;
    } else if (k == 0) {
        d = {{0, 1, 2, 0, 0}, {-1.5, 2.0, -0.5, 0.0, 0.0}, 3};
        for (auto& v : d.c) v /= h;
    } else {  // k == nk-1
        d = {{0, -1, -2, 0, 0}, {1.5, -2.0, 0.5, 0.0, 0.0}, 3};
        for (auto& v : d.c) v /= h;
    }
    return d;
}

inline double apply_x(const LineDeriv& d, const Grid2D& g, int i, int j) {
    double s = 0.0;
    for (int t = 0; t < d.n; ++t) s += d.c[t] * g.at(i + d.off[t], j);
    return s;
}
inline double apply_y(const LineDeriv& d, const Grid2D& g, int i, int j) {
    double s = 0.0;
    for (int t = 0; t < d.n; ++t) s += d.c[t] * g.at(i, j + d.off[t]);
    return s;
}

// line integral of a sampled field from node k to node k+off (off in -2..2),
// trapezoid for single hops, Simpson for double hops; exact for integrands
// linear (resp. quadratic) along the path
inline double path_int_x(const Grid2D& a, int i, int j, int off, double h) {
    switch (off) {
        case 1: return 0.5 * h * (a.at(i, j) + a.at(i + 1, j));
        case -1: return -0.5 * h * (a.at(i, j) + a.at(i - 1, j));
        case 2: return h / 3.0 * (a.at(i, j) + 4.0 * a.at(i + 1, j) + a.at(i + 2, j));
        case -2: return -h / 3.0 * (a.at(i, j) + 4.0 * a.at(i - 1, j) + a.at(i - 2, j));
        default: return 0.0;
    }
}
inline double path_int_y(const Grid2D& a, int i, int j, int off, double h) {
    switch (off) {
        case 1: return 0.5 * h * (a.at(i, j) + a.at(i, j + 1));
        case -1: return -0.5 * h * (a.at(i, j) + a.at(i, j - 1));
        case 2: return h / 3.0 * (a.at(i, j) + 4.0 * a.at(i, j + 1) + a.at(i, j + 2));
        case -2: return -h / 3.0 * (a.at(i, j) + 4.0 * a.at(i, j - 1) + a.at(i, j - 2));
        default: return 0.0;
    }
}

// link-compensated covariant derivative of Phi along x or y
inline cd cov_dx(const FieldState& s, int i, int j, const LineDeriv& d, double h) {
    cd sum = 0.0;
    for (int t = 0; t < d.n; ++t) {
        const int o = d.off[t];
        cd ph(s.phi1.at(i + o, j), s.phi2.at(i + o, j));
        if (o != 0) {
            const double th = path_int_x(s.a1, i, j, o, h);
            ph *= cd(std::cos(th), -std::sin(th));
        }
        sum += d.c[t] * ph;
    }
    return sum;
}

inline cd cov_dy(const FieldState& s, int i, int j, const LineDeriv& d, double h) {
    cd sum = 0.0;
    for (int t = 0; t < d.n; ++t) {
        const int o = d.off[t];
        cd ph(s.phi1.at(i, j + o), s.phi2.at(i, j + o));
        if (o != 0) {
            const double th = path_int_y(s.a2, i, j, o, h);
            ph *= cd(std::cos(th), -std::sin(th));
        }
        sum += d.c[t] * ph;
    }
    return sum;
}

// cov_dx/cov_dy reduce to d_i Phi - i A_i Phi to stencil order; taps of every
// consistent first-derivative stencil sum to zero, so no center correction.

struct EnergyParts {
    double kinetic = 0.0;
    double potential = 0.0;
};

template <typename PerNode>
void energy_sweep(const FieldState& s, const ModelParams& p, EnergyParts& out, PerNode&& per_node) {
    const int n1 = s.grid.n1, n2 = s.grid.n2;
    const double h = s.grid.h;
    std::vector<LineDeriv> dx(n1), dy(n2);
    for (int i = 0; i < n1; ++i) dx[i] = line_deriv(i, n1, h);
    for (int j = 0; j < n2; ++j) dy[j] = line_deriv(j, n2, h);

    std::vector<double> kin_row(n1, 0.0), pot_row(n1, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n1; ++i) {
        const double wi = (i == 0 || i == n1 - 1) ? 0.5 : 1.0;
        double krow = 0.0, vrow = 0.0;
        for (int j = 0; j < n2; ++j) {
            const double wj = (j == 0 || j == n2 - 1) ? 0.5 : 1.0;
            const cd phi(s.phi1.at(i, j), s.phi2.at(i, j));
            const cd d0 = cd(s.dphi1.at(i, j), s.dphi2.at(i, j)) - cd(0.0, 1.0) * s.a0.at(i, j) * phi;
            const double f01 = s.da1.at(i, j) - apply_x(dx[i], s.a0, i, j);
            const double f02 = s.da2.at(i, j) - apply_y(dy[j], s.a0, i, j);
            const cd d1p = cov_dx(s, i, j, dx[i], h);
            const cd d2p = cov_dy(s, i, j, dy[j], h);
            const double B = apply_x(dx[i], s.a2, i, j) - apply_y(dy[j], s.a1, i, j);
            const double m2 = std::norm(phi);
            const double quart = 0.25 * p.lambda * (1.0 - m2) * (1.0 - m2);
            const double kin = 0.5 * (std::norm(d0) + f01 * f01 + f02 * f02);
            const double pot = 0.5 * (std::norm(d1p) + std::norm(d2p) + B * B + quart);
            krow += wi * wj * kin;
            vrow += wi * wj * pot;
            per_node(i, j, kin + pot, B);
        }
        kin_row[i] = krow;
        pot_row[i] = vrow;
    }
    // deterministic reduction: fixed row order
    for (int i = 0; i < n1; ++i) {
        out.kinetic += kin_row[i] * h * h;
        out.potential += pot_row[i] * h * h;
    }
}

}  // namespace

double total_energy(const FieldState& s, const ModelParams& p) {
    EnergyParts e;
    energy_sweep(s, p, e, [](int, int, double, double) {});
    return e.kinetic + e.potential;
}

double potential_energy(const FieldState& s, const ModelParams& p) {
    EnergyParts e;
    energy_sweep(s, p, e, [](int, int, double, double) {});
    return e.potential;
}

Grid2D energy_density(const FieldState& s, const ModelParams& p) {
    Grid2D out(s.grid);
    EnergyParts e;
    energy_sweep(s, p, e, [&out](int i, int j, double eden, double) { out.at(i, j) = eden; });
    return out;
}

double magnetic_flux(const FieldState& s) {
    const int n1 = s.grid.n1, n2 = s.grid.n2;
    const double h = s.grid.h;
    std::vector<LineDeriv> dx(n1), dy(n2);
    for (int i = 0; i < n1; ++i) dx[i] = line_deriv(i, n1, h);
    for (int j = 0; j < n2; ++j) dy[j] = line_deriv(j, n2, h);
    std::vector<double> rows(n1, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n1; ++i) {
        const double wi = (i == 0 || i == n1 - 1) ? 0.5 : 1.0;
        double r = 0.0;
        for (int j = 0; j < n2; ++j) {
            const double wj = (j == 0 || j == n2 - 1) ? 0.5 : 1.0;
            const double B = apply_x(dx[i], s.a2, i, j) - apply_y(dy[j], s.a1, i, j);
            r += wi * wj * B;
        }
        rows[i] = r;
    }
    double flux = 0.0;
    for (int i = 0; i < n1; ++i) flux += rows[i] * h * h;
    return flux;
}

Grid2D lorenz_residual(const FieldState& s) {
    const int n1 = s.grid.n1, n2 = s.grid.n2;
    const double h = s.grid.h;
    Grid2D out(s.grid);
    std::vector<LineDeriv> dx(n1), dy(n2);
    for (int i = 0; i < n1; ++i) dx[i] = line_deriv(i, n1, h);
    for (int j = 0; j < n2; ++j) dy[j] = line_deriv(j, n2, h);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            out.at(i, j) = s.da0.at(i, j) - apply_x(dx[i], s.a1, i, j) - apply_y(dy[j], s.a2, i, j);
    return out;
}

double lorenz_residual_max(const FieldState& s) {
    Grid2D r = lorenz_residual(s);
    double m = 0.0;
    for (int i = 0; i < s.grid.n1; ++i)
        for (int j = 0; j < s.grid.n2; ++j) m = std::max(m, std::fabs(r.at(i, j)));
    return m;
}

FieldState gauge_transform(const FieldState& s, const Grid2D& alpha, const Grid2D& dalpha) {
    const int n1 = s.grid.n1, n2 = s.grid.n2;
    const double h = s.grid.h;
    FieldState out = s;
    std::vector<LineDeriv> dx(n1), dy(n2);
    for (int i = 0; i < n1; ++i) dx[i] = line_deriv(i, n1, h);
    for (int j = 0; j < n2; ++j) dy[j] = line_deriv(j, n2, h);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const double al = alpha.at(i, j), dal = dalpha.at(i, j);
            const double ca = std::cos(al), sa = std::sin(al);
            const double p1 = s.phi1.at(i, j), p2 = s.phi2.at(i, j);
            out.phi1.at(i, j) = ca * p1 - sa * p2;
            out.phi2.at(i, j) = sa * p1 + ca * p2;
            // dPhi' = e^{ia} (dPhi + i dal Phi)
            const double q1 = s.dphi1.at(i, j) - dal * p2;
            const double q2 = s.dphi2.at(i, j) + dal * p1;
            out.dphi1.at(i, j) = ca * q1 - sa * q2;
            out.dphi2.at(i, j) = sa * q1 + ca * q2;
            out.a0.at(i, j) = s.a0.at(i, j) + dal;
            out.a1.at(i, j) = s.a1.at(i, j) + apply_x(dx[i], alpha, i, j);
            out.a2.at(i, j) = s.a2.at(i, j) + apply_y(dy[j], alpha, i, j);
            // alpha assumed linear in t: da0 unchanged
            out.da1.at(i, j) = s.da1.at(i, j) + apply_x(dx[i], dalpha, i, j);
            out.da2.at(i, j) = s.da2.at(i, j) + apply_y(dy[j], dalpha, i, j);
        }
    }
    return out;
}

}  // namespace ahv
