#include "ahv/radial.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace ahv {
namespace {

// Fornberg weights for the d-th derivative at x0 from the given sample offsets.
std::vector<double> fd_weights(const std::vector<double>& x, double x0, int d) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<double>> c(n, std::vector<double>(d + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, d);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][d];
    return w;
}

// per-node stencil row over absolute node indices (clipped weights on real
// nodes; origin fold handled by the caller through parity)
struct Row {
    int first = 0;                // first node index touched
    std::vector<double> w;        // weights on first, first+1, ...
};

// Build d1 and d2 rows for interior nodes 1..m-2 of a radial grid with
// parity fold at the origin (f(-rho) = parity * f(rho)) and no sample beyond
// node m-1 (biased stencils near the outer edge).
struct RadialStencils {
    std::vector<Row> d1, d2;
};

RadialStencils build_stencils(int m, double h, int parity) {
    RadialStencils st;
    st.d1.resize(m);
    st.d2.resize(m);
    auto offsets_for = [&](int k) {
        std::vector<double> off;
        if (k >= 2 && k <= m - 3) off = {-2, -1, 0, 1, 2};
        else if (k == 1) off = {-2, -1, 0, 1, 2};          // folds at origin
        else if (k == m - 2) off = {-3, -2, -1, 0, 1};     // biased inward
        return off;
    };
    for (int k = 1; k <= m - 2; ++k) {
        auto off = offsets_for(k);
        std::vector<double> xs(off.size());
        for (size_t t = 0; t < off.size(); ++t) xs[t] = off[t] * h;
        for (int d = 1; d <= 2; ++d) {
            auto w = fd_weights(xs, 0.0, d);
            // fold negative nodes through the origin
            int lo = k + static_cast<int>(off.front());
            Row row;
            row.first = std::max(lo, 0);
            row.w.assign(static_cast<size_t>(k + static_cast<int>(off.back()) - row.first + 1), 0.0);
            for (size_t t = 0; t < off.size(); ++t) {
                int node = k + static_cast<int>(off[t]);
                double wt = w[t];
                if (node < 0) {
                    node = -node;
                    wt *= parity;
                }
                row.w[static_cast<size_t>(node - row.first)] += wt;
            }
            (d == 1 ? st.d1[k] : st.d2[k]) = row;
        }
    }
    return st;
}

double apply_row(const Row& r, const std::vector<double>& v) {
    double s = 0.0;
    for (size_t t = 0; t < r.w.size(); ++t) s += r.w[t] * v[static_cast<size_t>(r.first) + t];
    return s;
}

// banded LU solve (LAPACK dgbsv), column-major band storage
class Banded {
  public:
    Banded(int n, int kl, int ku) : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1),
                                    ab_(static_cast<size_t>(ldab_) * n, 0.0), ipiv_(n) {}
    void add(int i, int j, double v) {
        ab_[static_cast<size_t>(j) * ldab_ + (kl_ + ku_ + i - j)] += v;
    }
    void solve(std::vector<double>& rhs) {
        const lapack_int info = LAPACKE_dgbsv(LAPACK_COL_MAJOR, n_, kl_, ku_, 1, ab_.data(), ldab_,
                                              ipiv_.data(), rhs.data(), n_);
        if (info != 0) throw std::runtime_error("dgbsv failed, info=" + std::to_string(info));
    }

  private:
    int n_, kl_, ku_, ldab_;
    std::vector<double> ab_;
    std::vector<lapack_int> ipiv_;
};

struct OdeResidual {
    double max_f = 0.0, max_a = 0.0;
};

OdeResidual residual(const VortexProfile& p, const RadialStencils& sf, const RadialStencils& sa) {
    OdeResidual r;
    const int m = p.grid.m;
    for (int k = 1; k <= m - 2; ++k) {
        const double rho = p.grid.rho(k);
        const double f = p.f[k], a = p.a_theta[k];
        const double rf = apply_row(sf.d2[k], p.f) + apply_row(sf.d1[k], p.f) / rho -
                          (p.N - a) * (p.N - a) * f / (rho * rho) +
                          0.5 * p.lambda * (1.0 - f * f) * f;
        const double ra = apply_row(sa.d2[k], p.a_theta) - apply_row(sa.d1[k], p.a_theta) / rho +
                          (p.N - a) * f * f;
        r.max_f = std::max(r.max_f, std::fabs(rf));
        r.max_a = std::max(r.max_a, std::fabs(ra));
    }
    return r;
}

double radial_energy(const VortexProfile& p, const RadialStencils& sf, const RadialStencils& sa) {
    const int m = p.grid.m;
    const double h = p.grid.h_rho;
    double e = 0.0;
    for (int k = 1; k < m; ++k) {
        const double rho = p.grid.rho(k);
        double fp, ap;
        if (k <= m - 2) {
            fp = apply_row(sf.d1[k], p.f);
            ap = apply_row(sa.d1[k], p.a_theta);
        } else {  // one-sided 2nd order at the outer node
            fp = (3.0 * p.f[k] - 4.0 * p.f[k - 1] + p.f[k - 2]) / (2.0 * h);
            ap = (3.0 * p.a_theta[k] - 4.0 * p.a_theta[k - 1] + p.a_theta[k - 2]) / (2.0 * h);
        }
        const double f = p.f[k], a = p.a_theta[k];
        const double integ = fp * fp + (p.N - a) * (p.N - a) * f * f / (rho * rho) +
                             ap * ap / (rho * rho) + 0.25 * p.lambda * (1.0 - f * f) * (1.0 - f * f);
        const double w = (k == m - 1) ? 0.5 : 1.0;  // node 0 integrand vanishes with rho
        e += w * integ * rho * h;
    }
    return M_PI * e;
}

}  // namespace

void RadialGrid::validate() const {
    if (m < 9) throw std::invalid_argument("RadialGrid: need at least 9 points");
    if (!(h_rho > 0.0)) throw std::invalid_argument("RadialGrid: h_rho must be positive");
    if (std::fabs(rho_max - (m - 1) * h_rho) > 1e-9 * rho_max)
        throw std::invalid_argument("RadialGrid: rho_max must equal (m-1)*h_rho");
}

VortexProfile solve_profile(int N, double lambda, const RadialGrid& grid, double tol,
                            int max_iter) {
    if (N < 1) throw std::invalid_argument("solve_profile: N must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("solve_profile: lambda must be positive");
    grid.validate();

    const int m = grid.m;
    const double h = grid.h_rho;
    VortexProfile p;
    p.N = N;
    p.lambda = lambda;
    p.grid = grid;
    p.f.resize(m);
    p.a_theta.resize(m);
    for (int k = 0; k < m; ++k) {
        const double rho = grid.rho(k);
        p.f[k] = std::pow(std::tanh(0.8 * rho), N);
        p.a_theta[k] = N * (1.0 - std::exp(-0.35 * rho * rho));
    }
    p.f[0] = 0.0;
    p.a_theta[0] = 0.0;
    p.f[m - 1] = 1.0;
    p.a_theta[m - 1] = N;

    const int parity_f = (N % 2 == 0) ? 1 : -1;  // f ~ rho^N near the origin
    const RadialStencils sf = build_stencils(m, h, parity_f);
    const RadialStencils sa = build_stencils(m, h, 1);  // a ~ rho^2, even

    const int n = m - 2;  // unknowns at nodes 1..m-2
    double dtau = 0.05;
    double e_prev = radial_energy(p, sf, sa);
    std::vector<double> rhs_f(n), rhs_a(n);

    for (int it = 0; it < max_iter; ++it) {
        // implicit: d2 + (s/rho) d1 - stiff diagonal; explicit: soft nonlinear terms
        Banded Mf(n, 3, 3), Ma(n, 3, 3);
        for (int k = 1; k <= m - 2; ++k) {
            const int row = k - 1;
            const double rho = grid.rho(k);
            const double diag_f = (N - p.a_theta[k]) * (N - p.a_theta[k]) / (rho * rho);
            auto scatter = [&](Banded& M, const Row& r, double scale) {
                for (size_t t = 0; t < r.w.size(); ++t) {
                    const int col = r.first + static_cast<int>(t) - 1;
                    if (col < 0 || col >= n) continue;  // Dirichlet nodes handled in rhs
                    M.add(row, col, scale * r.w[t]);
                }
            };
            Mf.add(row, row, 1.0 + dtau * diag_f);
            scatter(Mf, sf.d2[k], -dtau);
            scatter(Mf, sf.d1[k], -dtau / rho);
            Ma.add(row, row, 1.0);
            scatter(Ma, sa.d2[k], -dtau);
            scatter(Ma, sa.d1[k], dtau / rho);

            // rhs: current value + dtau * (explicit terms + Dirichlet contributions)
            double bc_f = 0.0, bc_a = 0.0;
            auto edge = [&](const Row& r, const std::vector<double>& v) {
                double s = 0.0;
                for (size_t t = 0; t < r.w.size(); ++t) {
                    const int node = r.first + static_cast<int>(t);
                    if (node == 0 || node == m - 1) s += r.w[t] * v[node];
                }
                return s;
            };
            bc_f = edge(sf.d2[k], p.f) + edge(sf.d1[k], p.f) / rho;
            bc_a = edge(sa.d2[k], p.a_theta) - edge(sa.d1[k], p.a_theta) / rho;
            const double f = p.f[k], a = p.a_theta[k];
            rhs_f[row] = f + dtau * (0.5 * lambda * (1.0 - f * f) * f + bc_f);
            rhs_a[row] = a + dtau * ((N - a) * f * f + bc_a);
        }
        Mf.solve(rhs_f);
        Ma.solve(rhs_a);
        for (int k = 1; k <= m - 2; ++k) {
            p.f[k] = rhs_f[k - 1];
            p.a_theta[k] = rhs_a[k - 1];
        }
        p.iterations = it + 1;

        if ((it + 1) % 20 == 0) {
            const OdeResidual r = residual(p, sf, sa);
            p.residual = std::max(r.max_f, r.max_a);
            if (p.residual < tol) break;
            const double e = radial_energy(p, sf, sa);
            if (e > e_prev * (1.0 + 1e-12)) dtau *= 0.5;
            else dtau = std::min(dtau * 1.1, 0.25);
            e_prev = e;
        }
    }
    const OdeResidual r = residual(p, sf, sa);
    p.residual = std::max(r.max_f, r.max_a);
    if (p.residual >= tol)
        throw std::runtime_error("solve_profile: no convergence, residual " +
                                 std::to_string(p.residual) + " after " +
                                 std::to_string(p.iterations) + " iterations");
    return p;
}

double profile_energy(const VortexProfile& p) {
    const int parity_f = (p.N % 2 == 0) ? 1 : -1;
    return radial_energy(p, build_stencils(p.grid.m, p.grid.h_rho, parity_f),
                         build_stencils(p.grid.m, p.grid.h_rho, 1));
}

double profile_residual(const VortexProfile& p) {
    const int parity_f = (p.N % 2 == 0) ? 1 : -1;
    const OdeResidual r = residual(p, build_stencils(p.grid.m, p.grid.h_rho, parity_f),
                                   build_stencils(p.grid.m, p.grid.h_rho, 1));
    return std::max(r.max_f, r.max_a);
}

FGForm profile_to_fg(const VortexProfile& p) {
    if (p.N < 1) throw std::invalid_argument("profile_to_fg: N must be >= 1");
    const int m = p.grid.m;
    FGForm out;
    out.F.resize(m);
    out.G.resize(m);
    for (int k = 1; k < m; ++k) {
        const double rho = p.grid.rho(k);
        out.F[k] = p.f[k] / std::pow(rho, p.N);
        out.G[k] = p.a_theta[k] / (rho * rho);
    }
    // even functions of rho: extrapolate linearly in u = rho^2 to u = 0
    out.F[0] = (4.0 * out.F[1] - out.F[2]) / 3.0;
    out.G[0] = (4.0 * out.G[1] - out.G[2]) / 3.0;

    const double u1 = p.grid.h_rho * p.grid.h_rho;
    const double dF = (out.F[2] - out.F[1]) / (3.0 * u1);
    const double dG = (out.G[2] - out.G[1]) / (3.0 * u1);
    out.origin_check_f = 16.0 * dF + out.F[0] * (p.lambda + 4.0 * out.G[0]);
    out.origin_check_g = 8.0 * dG + out.F[0] * out.F[0];
    return out;
}

TailCharges fit_tails(const VortexProfile& p) {
    const int m = p.grid.m;
    TailCharges c;
    c.window_lo = 0.6 * p.grid.rho_max;
    c.window_hi = 0.9 * p.grid.rho_max;
    double sfb = 0.0, sbb = 0.0, sab = 0.0, sbb2 = 0.0;
    int used_f = 0, used_a = 0;
    double res_f = 0.0, nrm_f = 0.0, res_a = 0.0, nrm_a = 0.0;
    for (int k = 0; k < m; ++k) {
        const double rho = p.grid.rho(k);
        if (rho < c.window_lo || rho > c.window_hi) continue;
        const double df = 1.0 - p.f[k];
        const double da = p.N - p.a_theta[k];
        const double bf = std::cyl_bessel_k(0, std::sqrt(p.lambda) * rho) / (2.0 * M_PI);
        const double ba = rho * std::cyl_bessel_k(1, rho) / (2.0 * M_PI);
        if (std::fabs(df) > 1e-12) {
            sfb += df * bf;
            sbb += bf * bf;
            ++used_f;
        }
        if (std::fabs(da) > 1e-12) {
            sab += da * ba;
            sbb2 += ba * ba;
            ++used_a;
        }
    }
    if (used_f < 4 || used_a < 4)
        throw std::runtime_error("fit_tails: window too small or at noise floor");
    c.q = sfb / sbb;
    c.m_dip = sab / sbb2;
    for (int k = 0; k < m; ++k) {
        const double rho = p.grid.rho(k);
        if (rho < c.window_lo || rho > c.window_hi) continue;
        const double df = 1.0 - p.f[k];
        const double da = p.N - p.a_theta[k];
        if (std::fabs(df) > 1e-12) {
            const double fit = c.q * std::cyl_bessel_k(0, std::sqrt(p.lambda) * rho) / (2.0 * M_PI);
            res_f += (df - fit) * (df - fit);
            nrm_f += df * df;
        }
        if (std::fabs(da) > 1e-12) {
            const double fit = c.m_dip * rho * std::cyl_bessel_k(1, rho) / (2.0 * M_PI);
            res_a += (da - fit) * (da - fit);
            nrm_a += da * da;
        }
    }
    c.residual_f = std::sqrt(res_f / nrm_f);
    c.residual_a = std::sqrt(res_a / nrm_a);
    return c;
}

double interaction_energy_point(double R, const TailCharges& c, double lambda) {
    if (!(R > 0.0)) throw std::invalid_argument("interaction_energy_point: R must be positive");
    return (-c.q * c.q * std::cyl_bessel_k(0, std::sqrt(lambda) * R) +
            c.m_dip * c.m_dip * std::cyl_bessel_k(0, R)) / (2.0 * M_PI);
}

double interaction_energy_scaled(double R, const TailCharges& c, double mu) {
    if (!(R > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("interaction_energy_scaled: R and mu must be positive");
    return (mu * mu - 1.0) * c.m_dip * c.m_dip * std::cyl_bessel_k(0, mu * R) / (2.0 * M_PI);
}

void write_profile_csv(const std::string& path, const VortexProfile& p) {
    const FGForm fg = profile_to_fg(p);
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_profile_csv: cannot open " + path);
    os.precision(15);
    os << "rho,f,a_theta,F,G\n";
    for (int k = 0; k < p.grid.m; ++k)
        os << p.grid.rho(k) << ',' << p.f[k] << ',' << p.a_theta[k] << ',' << fg.F[k] << ','
           << fg.G[k] << '\n';
}

void write_tails_json(const std::string& path, const VortexProfile& p, const TailCharges& c) {
    nlohmann::json j;
    j["N"] = p.N;
    j["lambda"] = p.lambda;
    j["q"] = c.q;
    j["m"] = c.m_dip;
    j["window"] = {c.window_lo, c.window_hi};
    j["residual"] = {{"f", c.residual_f}, {"a_theta", c.residual_a}};
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_tails_json: cannot open " + path);
    os << j.dump(2) << '\n';
}

}  // namespace ahv
