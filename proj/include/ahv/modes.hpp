#ifndef AHV_MODES_HPP
#define AHV_MODES_HPP

#include <string>
#include <vector>

#include "ahv/grid.hpp"
#include "ahv/radial.hpp"

namespace ahv {

// Radial eigenvalue problem for the N=1, k=0 channel:
//   [ -(d_rr + d_r/rho) + f^2 + 1/rho^2          (2f/rho)(a-1)            ] [alpha0]       [alpha0]
//   [ (2f/rho)(a-1)   -(d_rr + d_r/rho) + (l/2)(3f^2-1) + (a-1)^2/rho^2   ] [s0]     = w^2 [s0]
// discretized with central 2nd-order differences. The radial measure rho*drho
// makes the raw matrix nonsymmetric; the similarity u -> sqrt(rho) u restores
// symmetry (potential shift -1/(4 rho^2)) and the operator is stored banded.
struct ModeOperator {
    double lambda = 1.0;
    RadialGrid grid;
    int n = 0;                   // interior nodes per component
    int kd = 0;                  // superdiagonals in banded storage
    std::vector<double> band;    // LAPACK 'U' banded column-major, (kd+1) x 2n
    const VortexProfile* profile = nullptr;
    double max_asymmetry = 0.0;  // diagnostic, exact zero by construction
};

struct ModeProfile {
    double omega2 = 0.0;
    RadialGrid grid;
    std::vector<double> alpha0;  // gauge eigenfunction
    std::vector<double> s0;      // Higgs eigenfunction
    double eigen_residual = 0.0;
    int n_below_continuum = 0;   // eigenvalue count found in (0, min(lambda,1))

    double omega() const;
};

ModeOperator assemble_operator(const VortexProfile& profile, double lambda);

// Unique discrete eigenpair in (0, min(lambda,1)); L2-normalized per
// 2*pi int (alpha0^2 + s0^2) rho d(rho) = 1, sign fixed by s0 > 0 at its peak.
ModeProfile solve_shape_mode(const ModeOperator& op);

// Apply the banded operator (testing hook).
std::vector<double> apply_operator(const ModeOperator& op, const std::vector<double>& x);

// Perturbation lifted to the plane (paper orientation):
//   psi1 = cos(t) s0, psi2 = sin(t) s0, chi1 = -sin(t) alpha0, chi2 = cos(t) alpha0
// with cubic-spline radial interpolation, and an exponential-decay extension
// where the grid reaches beyond rho_max.
struct PlaneMode {
    Grid2D psi1, psi2, chi1, chi2;
};
PlaneMode lift_to_plane(const ModeProfile& mode, const GridSpec& grid);

void write_mode_csv(const std::string& path, const ModeProfile& m);
void write_mode_json(const std::string& path, const ModeProfile& m, double lambda);

}  // namespace ahv

#endif
