#ifndef AHV_DIAGNOSTICS_HPP
#define AHV_DIAGNOSTICS_HPP

#include "ahv/grid.hpp"

namespace ahv {

// Gauge-invariant diagnostics. The Higgs gradient terms use link-compensated
// covariant stencils: each hop carries the phase exp(-i ∫ A·dl) with the line
// integral taken by trapezoid/Simpson quadrature of the sampled gauge field.
// Under a lattice gauge transformation (with the A-shift computed by the same
// fd stencils) the energy is then invariant to roundoff whenever the hop
// quadrature integrates the shift exactly, i.e. for polynomial alpha up to
// degree 2 per axis. Plain stencils would leave an O(h^4) defect.

// E = E_kin + V. Trapezoid rule over the interior; requires ghosts filled.
double total_energy(const FieldState& s, const ModelParams& p);

// V alone (no time-derivative terms).
double potential_energy(const FieldState& s, const ModelParams& p);

// energy density plane (for snapshot exports); trapezoid weights not applied
Grid2D energy_density(const FieldState& s, const ModelParams& p);

// ∫ f12 d²x. Degree estimate is -flux / 2π.
double magnetic_flux(const FieldState& s);

// Lorenz-gauge residual ∂·A = ∂t A0 - ∂1 A1 - ∂2 A2, pointwise (monitor only).
Grid2D lorenz_residual(const FieldState& s);
double lorenz_residual_max(const FieldState& s);

// Φ -> e^{iα}Φ, A -> A + dα. `alpha` and `dalpha` must carry filled ghosts;
// spatial shifts of A are taken with the same fd stencils as the diagnostics.
// ∂tt α is assumed zero (α linear in time), which covers the test family.
FieldState gauge_transform(const FieldState& s, const Grid2D& alpha, const Grid2D& dalpha);

}  // namespace ahv

#endif
