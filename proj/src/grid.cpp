#include "ahv/grid.hpp"

#include <cmath>

namespace ahv {

bool has_nonfinite(const FieldState& s) {
    for (const Grid2D* g : s.all_fields()) {
        for (int i = 0; i < g->n1(); ++i) {
            const double* r = g->row(i);
            for (int j = 0; j < g->n2(); ++j)
                if (!std::isfinite(r[j])) return true;
        }
    }
    return false;
}

void set_vacuum(FieldState& s) {
    for (Grid2D* g : s.all_fields()) g->fill(0.0);
    s.phi1.fill(1.0);
}

}  // namespace ahv
