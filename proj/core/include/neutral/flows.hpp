#pragma once

#include "neutral/support_surface.hpp"

#include <vector>

namespace neutral {

// State of a curve in the tangent hypersurface chart.
struct HState {
    cplx nu;
    double A = 0.0;
};

// Reeb vector of the alpha contact form at (jet, A), as (d nu, d A).
std::pair<cplx, double> reeb_field_flat(const SurfaceJet& jet, double A);

// Geodesic-flow vector on the tangent hypersurface.
std::pair<cplx, double> geodesic_field_flat(const SurfaceJet& jet, double A);

struct Trajectory {
    std::vector<double> t;
    std::vector<HState> states;
};

// Fixed-step RK4 integration of the Reeb / geodesic flows. Each step is
// validated against a half-step pair; disagreement beyond step_tol aborts
// with a diagnostic.
Trajectory reeb_flow(const SupportSurface& S, HState init, double dt, int n,
                     double step_tol = 1e-8);
Trajectory geodesic_flow(const SupportSurface& S, HState init, double dt,
                         int n, double step_tol = 1e-8);

}  // namespace neutral
