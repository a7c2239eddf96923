#pragma once

#include "neutral/chart.hpp"
#include "neutral/tensor.hpp"

#include <utility>

namespace neutral {

struct DoublePolarPoint {
    double R1 = 0.0, R2 = 0.0;
    double theta1 = 0.0, theta2 = 0.0;
};

// Chart point of the compactified 4-ball: 0 <= p <= pi/2, |q| <= p.
struct CompactChartPoint {
    double p = 0.0, q = 0.0;
    double theta1 = 0.0, theta2 = 0.0;
};

// Point of the radius-pi/2 ball in C^2, with the polar angle psi of the
// generating chart point (q = p cos psi).
struct BallPoint {
    cplx z1, z2;
    double psi = 0.0;
};

DoublePolarPoint to_double_polar(const Vec4& x);

// tan p = R1 + R2, tan q = R1 - R2. Interior points only (p < pi/2).
CompactChartPoint to_compact(const Vec4& x);

// Analytic Jacobian of to_compact as a map R^4 -> (p,q,theta1,theta2).
Mat4 to_compact_jacobian(const Vec4& x);

BallPoint to_ball(const CompactChartPoint& c);

// Omega = 2 cos p cos q, the nonnegative conformal factor on the closed ball.
double conformal_factor(const CompactChartPoint& c);

// ds^2 = dp dq + 1/4 sin^2(p+q) dtheta1^2 - 1/4 sin^2(p-q) dtheta2^2 in the
// (p, q, theta1, theta2) chart.
ChartMetricField einstein_static_metric();

// Closed-form Ricci of einstein_static_metric, for cross-checks.
Mat4 einstein_static_ricci(const Vec4& pq);

// |dOmega| at a boundary point p = pi/2, in the unit-dp normalization.
// Vanishes exactly on the Hopf link q = +-pi/2.
double grad_omega_boundary_locus(const CompactChartPoint& c);

// The alpha/beta plane pair of the degenerate boundary metric at p = pi/2,
// with the 1-forms annihilating them on the (q, theta1, theta2) chart.
struct BoundaryNullPlanes {
    TangentPlane alpha_plane;  // span{d_q, d_theta1 + d_theta2}
    TangentPlane beta_plane;   // span{d_q, d_theta1 - d_theta2}
    OneFormField alpha_form;   // dtheta1 - dtheta2
    OneFormField beta_form;    // dtheta1 + dtheta2
};
BoundaryNullPlanes boundary_null_planes(double q, double theta1,
                                        double theta2);

// Hirzebruch-Hopf parity: a compact 4-manifold with Euler number chi and
// signature tau admits a neutral metric only if chi +- tau = 0 mod 4.
enum class NeutralExistence { admits, obstructed };
NeutralExistence neutral_existence_parity(long chi, long tau);

// The two boundary circles psi = 0 and psi = pi (the dOmega = 0 locus), as
// curves in R^4 on the boundary 3-sphere of radius pi/2.
Vec4 hopf_circle_psi0(double t);
Vec4 hopf_circle_psipi(double t);

// Gauss linking integral of the two Hopf circles after stereographic
// projection of the boundary sphere to R^3. |result| -> 1.
double hopf_link_linking_number(int quadrature_points = 512);

}  // namespace neutral
