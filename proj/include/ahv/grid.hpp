#ifndef AHV_GRID_HPP
#define AHV_GRID_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahv {

// Origin-centered uniform lattice. Site i runs along x1, site j along x2,
// with x1(i) = (i - (n1-1)/2) h.
struct GridSpec {
    int n1 = 0;
    int n2 = 0;
    double h = 0.0;

    void validate() const {
        if (n1 < 9 || n2 < 9)
            throw std::invalid_argument("GridSpec: n1,n2 must be >= 9 (4th-order stencils)");
        if (!(h > 0.0))
            throw std::invalid_argument("GridSpec: h must be positive");
    }
    double x1(int i) const { return (i - 0.5 * (n1 - 1)) * h; }
    double x2(int j) const { return (j - 0.5 * (n2 - 1)) * h; }
    double half_width1() const { return 0.5 * (n1 - 1) * h; }
    double half_width2() const { return 0.5 * (n2 - 1) * h; }
    bool operator==(const GridSpec&) const = default;
};

// Scalar field on a GridSpec with two ghost layers on each side.
// Interior indices are 0..n1-1 x 0..n2-1; ghosts live at -2..-1 and n..n+1.
class Grid2D {
  public:
    Grid2D() = default;
    explicit Grid2D(const GridSpec& g)
        : n1_(g.n1), n2_(g.n2), stride_(g.n2 + 4), data_((g.n1 + 4) * (g.n2 + 4), 0.0) {}

    double& at(int i, int j) { return data_[(i + 2) * stride_ + (j + 2)]; }
    double at(int i, int j) const { return data_[(i + 2) * stride_ + (j + 2)]; }

    // pointer to interior row i (ghosts reachable with negative offsets)
    double* row(int i) { return data_.data() + (i + 2) * stride_ + 2; }
    const double* row(int i) const { return data_.data() + (i + 2) * stride_ + 2; }

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int stride() const { return stride_; }

    void fill(double v) { data_.assign(data_.size(), v); }
    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

  private:
    int n1_ = 0, n2_ = 0, stride_ = 0;
    std::vector<double> data_;
};

struct ModelParams {
    double lambda = 1.0;  // Higgs self-coupling; 1 = critical

    void validate() const {
        if (!(lambda > 0.0)) throw std::invalid_argument("ModelParams: lambda must be positive");
    }
};

// Full dynamical state: Higgs components, gauge potential, and their first
// time derivatives, all on one grid.
struct FieldState {
    GridSpec grid;
    double t = 0.0;
    Grid2D phi1, phi2, a0, a1, a2;
    Grid2D dphi1, dphi2, da0, da1, da2;

    FieldState() = default;
    explicit FieldState(const GridSpec& g)
        : grid(g), phi1(g), phi2(g), a0(g), a1(g), a2(g),
          dphi1(g), dphi2(g), da0(g), da1(g), da2(g) {}

    std::vector<Grid2D*> all_fields() {
        return {&phi1, &phi2, &a0, &a1, &a2, &dphi1, &dphi2, &da0, &da1, &da2};
    }
    std::vector<const Grid2D*> all_fields() const {
        return {&phi1, &phi2, &a0, &a1, &a2, &dphi1, &dphi2, &da0, &da1, &da2};
    }
};

// true if any interior entry of any field is non-finite
bool has_nonfinite(const FieldState& s);

// set interior of all ten planes to the vacuum (phi = 1, everything else 0)
void set_vacuum(FieldState& s);

}  // namespace ahv

#endif
