#pragma once

#include "neutral/chart.hpp"

#include <vector>

namespace neutral {

// Bivector of R^4 in the basis e12, e13, e14, e23, e24, e34.
using Biv = Eigen::Matrix<double, 6, 1>;

Biv wedge(const Vec4& x, const Vec4& y);

// <x,y>_eps for the flat metric diag(eps,eps,eps,1).
double inner_vec_eps(const Vec4& a, const Vec4& b, int eps);

// <<.,.>>_eps on bivectors.
double inner_eps(const Biv& a, const Biv& b, int eps);

// Oriented geodesic of the 3-space-form of sign eps: flag x ^ y with
// <x,x> = 1, <y,y> = eps, <x,y> = 0.
struct SpaceFormFlag {
    Vec4 x, y;
    int eps = 1;
};
void validate_flag(const SpaceFormFlag& flag, double tol = 1e-10);

// Split a tangent bivector B = x^X + y^Y into (X, Y) with X, Y in the
// eps-orthogonal complement of span{x,y}.
std::pair<Vec4, Vec4> decompose_tangent(const SpaceFormFlag& flag,
                                        const Biv& B, double tol = 1e-8);

// Images of a tangent bivector under the two structures: J(x^X + y^Y) =
// y^X - eps x^Y, and J'(x^X + y^Y) = x^J'X + y^J'Y with J' the rotation of
// the oriented complement plane.
Biv J_image(const SpaceFormFlag& flag, const Biv& B);
Biv Jprime_image(const SpaceFormFlag& flag, const Biv& B);

// Neutral metric G_eps(U,V) = -<<U, J J' V>>_eps on tangent bivectors.
double G_eps(const SpaceFormFlag& flag, const Biv& U, const Biv& V);

// Second-order frame data of a convex surface point in the space form:
// phi on S^3_eps, principal directions e1, e2, normal N, curvatures k1, k2,
// and v1, v2, the v-perp components of the ambient-tangential derivatives
// of v along e1, e2 (frame connection coefficients).
struct SurfaceFramePoint {
    Vec4 phi, e1, e2, N;
    double k1 = 0.0, k2 = 0.0;
    double v1 = 0.0, v2 = 0.0;
    int eps = 1;
};
void validate_frame(const SurfaceFramePoint& fr, double tol = 1e-9);

// Tangent bivectors d phi-bar(e1), d phi-bar(e2), d phi-bar(d/d theta) of
// the tangent hypersurface at angle theta.
struct HypFrame {
    Biv d1, d2, d0;
    Vec4 v, vperp;
};
HypFrame tangent_hyp_frame(const SurfaceFramePoint& fr, double theta);

// Pi_plus = span{phi^vperp, phi^N} (alpha), Pi_minus = span{phi^vperp,
// v^vperp} (beta).
struct SpaceFormNullPlanes {
    Biv plus_a, plus_b;
    Biv minus_a, minus_b;
};
SpaceFormNullPlanes null_planes_spaceform(const SurfaceFramePoint& fr,
                                          double theta);

// Closed-form contact defects of the dual coframe: eta3 ^ d eta3 =
// defect3 e1^e2^dtheta with defect3 = 1, and defect2 = -k1 k2.
std::pair<double, double> contact_defects_spaceform(
    const SurfaceFramePoint& fr, double theta);

// G(N_a, N_a) = (k2 - k1) cos^2 a sin 2theta for 0 < a < pi/2.
double constant_angle_nullity_spaceform(const SurfaceFramePoint& fr,
                                        double theta, double a);

// Reeb vector of eta3: X = (k1-k2) cos theta sin theta phi^N + v^vperp.
Biv reeb_field_spaceform(const SurfaceFramePoint& fr, double theta);

// Built-in latitude sphere {x4 = cos rho} of S^3 (eps=+1) or the distance
// sphere {x4 = cosh rho} of the eps=-1 space form, with analytic frames in
// the polar chart (alpha, beta).
struct LatitudeSphere {
    double rho = 1.0;
    int eps = 1;

    Vec4 position(double alpha, double beta) const;
    SurfaceFramePoint frame(double alpha, double beta) const;
    // radius of the phi-sphere factor: sin rho or sinh rho
    double warp() const;
};

// Reeb-flow trajectory on a latitude sphere: chart state (alpha, beta,
// theta), RK4 with fixed step.
struct SpaceFormTrajectory {
    std::vector<double> t;
    std::vector<Eigen::Vector3d> states;  // (alpha, beta, theta)
};
SpaceFormTrajectory reeb_flow_spaceform(const LatitudeSphere& sphere,
                                        const Eigen::Vector3d& init,
                                        double dt, int n);

// Legendrian classification of a sampled curve u -> (flag, frame, theta).
struct SpaceFormCurveSample {
    SurfaceFramePoint fr;
    double theta = 0.0;
    double u = 0.0;
};
struct SpaceFormLegendrianReport {
    bool alpha = false;
    bool beta = false;
    bool normal_to_c = false;
    bool curvature_line_or_umbilic = false;
};
SpaceFormLegendrianReport legendrian_classify_spaceform(
    const std::vector<SpaceFormCurveSample>& curve, double tol);

// Validation helper: the rho2 combination whose sum/difference with
// d phi-bar(e1) must be null (used in tests).
Biv rho2_vector(const SurfaceFramePoint& fr, double theta);

}  // namespace neutral
