#ifndef AHV_RADIAL_HPP
#define AHV_RADIAL_HPP

#include <string>
#include <vector>

namespace ahv {

struct RadialGrid {
    int m = 0;           // point count, node k at rho = k * h_rho
    double h_rho = 0.0;
    double rho_max = 0.0;

    static RadialGrid make(int m, double rho_max) {
        RadialGrid g{m, rho_max / (m - 1), rho_max};
        g.validate();
        return g;
    }
    void validate() const;
    double rho(int k) const { return k * h_rho; }
};

// axially symmetric static vortex: Phi = f(rho) e^{-iN theta}, A = -a_theta d(theta)
// (orientation chosen so the flux is -2*pi*N)
struct VortexProfile {
    int N = 1;
    double lambda = 1.0;
    RadialGrid grid;
    std::vector<double> f;
    std::vector<double> a_theta;
    double residual = 0.0;  // final max-norm ODE residual
    int iterations = 0;
};

struct TailCharges {
    double q = 0.0;      // scalar charge
    double m_dip = 0.0;  // magnetic dipole moment
    double window_lo = 0.0, window_hi = 0.0;
    double residual_f = 0.0, residual_a = 0.0;  // relative rms over the window
};

// Relax the radial ODEs
//   f'' + f'/rho - (N-a)^2 f/rho^2 + (lambda/2)(1-f^2) f = 0
//   a'' - a'/rho + (N-a) f^2 = 0
// to max-norm residual < tol on the 4th-order radial stencils. Gradient flow
// in fictitious time; the Laplacian part is advanced implicitly (banded
// solve) so the step is not throttled by the h^2 stability limit, with step
// halving on energy increase.
VortexProfile solve_profile(int N, double lambda, const RadialGrid& grid, double tol = 1e-8,
                            int max_iter = 200000);

// energy 2*pi * int (radial energy density) rho d(rho)
double profile_energy(const VortexProfile& p);

// residual of the two ODEs on the 4th-order stencils (max over interior)
double profile_residual(const VortexProfile& p);

// F, G with f = rho^N F(rho^2), a_theta = rho^2 G(rho^2); the rho=0 values by
// even extrapolation. origin_check_* are the near-origin series relations
// 16 F'(0) + F(0)(lambda + 4 G(0)) = 0 and 8 G'(0) + F(0)^2 = 0, evaluated by
// one-sided differences (should vanish at the 1e-3 level).
struct FGForm {
    std::vector<double> F, G;
    double origin_check_f = 0.0;
    double origin_check_g = 0.0;
};
FGForm profile_to_fg(const VortexProfile& p);

// least-squares fit of 1-f ~ (q/2pi) K0(sqrt(lambda) rho) and
// N-a ~ (m/2pi) rho K1(rho) over rho in [0.6, 0.9]*rho_max; nodes at the
// floating-point noise floor are dropped from the window.
TailCharges fit_tails(const VortexProfile& p);

// point-source interaction energy -(q^2/2pi) K0(sqrt(lambda) R) + (m^2/2pi) K0(R)
double interaction_energy_point(double R, const TailCharges& c, double lambda);

// Derrick-rescaled form at critical coupling: (mu^2 - 1)(m^2/2pi) K0(mu R)
double interaction_energy_scaled(double R, const TailCharges& c, double mu);

// CSV export with columns rho, f, a_theta, F, G
void write_profile_csv(const std::string& path, const VortexProfile& p);

// JSON tail record {N, lambda, q, m, window, residual}
void write_tails_json(const std::string& path, const VortexProfile& p, const TailCharges& c);

}  // namespace ahv

#endif
