#pragma once

#include "neutral/chart.hpp"

namespace neutral {

inline constexpr double kXiMax = 1e6;

// Oriented line of R^3 in the standard chart of the space of oriented lines:
// xi is the direction (stereographic from the south pole), eta the moment.
struct OrientedLineCoords {
    cplx xi, eta;
};

// Unit direction vector of the line with direction coordinate xi.
Vec3 line_direction(cplx xi);

// Inverse of line_direction for unit u with u3 > -1.
cplx direction_to_xi(const Vec3& u);

// Point of the line at parameter r along its direction.
Vec3 line_to_points(const OrientedLineCoords& line, double r);

// Moment coordinate of the line with direction xi through the point P.
cplx incidence_eta(cplx xi, const Vec3& P);

// Perpendicular distance of the line from the origin: 2|eta|/(1+xi xibar).
double line_distance_to_origin(const OrientedLineCoords& line);

// Neutral metric of the line space in the real chart
// (Re xi, Im xi, Re eta, Im eta).
Mat4 neutral_metric_L(const OrientedLineCoords& line);

// Same metric wrapped as a 4-coordinate chart field.
ChartMetricField line_space_metric_field();

// Symplectic form in the same real chart (antisymmetric matrix).
Mat4 symplectic_form_L(const OrientedLineCoords& line);

// Pullback coefficient of the symplectic form onto the section
// nu -> (nu, eta(nu)); zero iff the section is Lagrangian at nu.
double lagrangian_defect(const std::function<cplx(cplx)>& eta_of_nu, cplx nu,
                         double h = 1e-6);

}  // namespace neutral
