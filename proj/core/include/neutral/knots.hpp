#pragma once

#include "neutral/support_surface.hpp"

#include <vector>

namespace neutral {

// Closed (or open) curve in a tangent hypersurface, sampled as (u, nu, A).
struct LineKnot {
    struct Sample {
        double u = 0.0;
        cplx nu;
        double A = 0.0;
    };
    std::vector<Sample> samples;
    bool closed = true;
};

struct LegendrianReport {
    bool alpha = false;
    bool beta = false;
    bool tangent_to_c = false;
    bool normal_to_c = false;
    bool curvature_line_or_umbilic = false;
};

// Pointwise classification of a knot of lines tangent to S along the curve
// of support points c. Enforces the two-imply-the-third consistency among
// {beta, normal_to_c, curvature_line_or_umbilic}: a violation throws.
LegendrianReport legendrian_classify(const LineKnot& knot,
                                     const SupportSurface& S, double tol);

// Angle A whose tangent-hypersurface line at nu has the given unit
// direction (must be orthogonal to the normal at nu).
double angle_for_direction(cplx nu, const Vec3& dir);

// Knot of lines tangent to S along the curve nu(u), with line directions
// rotated by `offset` from the curve tangent within the tangent plane
// (offset 0: tangent lines; offset pi/2: normal lines).
LineKnot knot_along_curve(const SupportSurface& S,
                          const std::function<cplx(double)>& nu_of_u,
                          int n_samples, double offset);

}  // namespace neutral
