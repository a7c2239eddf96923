#pragma once

#include "neutral/chart.hpp"
#include "neutral/line_space.hpp"

#include <optional>

namespace neutral {

// Convex surface in R^3 given by its support function r0 over the normal
// direction chart nu. Analytic Wirtinger derivatives may be supplied;
// otherwise central differences (h = 1e-5) are used.
struct SupportSurface {
    std::function<double(cplx)> r0;
    std::function<cplx(cplx)> d_nu;      // optional: del_nu r0
    std::function<cplx(cplx)> d_nunu;    // optional: del^2_{nu nu} r0
    std::function<double(cplx)> d_nunubar;  // optional: del^2_{nu nubar} r0
    double domain_radius = kXiMax;
};

// Second-order data of the surface at normal direction nu. psi0 and |sigma0|
// are the sum and (absolute) difference of the curvature radii in the
// support-function normalization (round sphere of radius rho: psi0 = rho).
struct SurfaceJet {
    cplx nu;
    double r0 = 0.0;
    cplx eta0;
    double psi0 = 0.0;
    cplx sigma0;
};

SurfaceJet surface_jet(const SupportSurface& S, cplx nu);

// Built-in surfaces.
SupportSurface sphere_support(double rho, const Vec3& center = Vec3::Zero());
// Spheroid x^2+y^2 <= a^2 axis, c^2 polar: (x/a)^2+(y/a)^2+(z/c)^2 = 1.
SupportSurface spheroid_support(double a, double c);
SupportSurface translate(const SupportSurface& S, const Vec3& center);

// Point of R^3 where the normal line at nu touches the surface.
Vec3 support_point(const SurfaceJet& jet);

// Outward unit normal of the surface at nu.
Vec3 support_normal(cplx nu);

// Oriented line meeting the surface at angle a with the normal, where
// eps = tan(a/2); eps absent means the tangent case a = pi/2.
OrientedLineCoords tangent_hypersurface_point(
    const SurfaceJet& jet, double A, std::optional<double> eps = std::nullopt);

// Induced metric of the tangent hypersurface in the (Re nu, Im nu, A) chart.
Mat3 induced_metric_H(const SurfaceJet& jet, double A);

// Angles B of the two null directions dA + Re(e^{iB} d nu) at (jet, A):
// first the alpha angle A - arg(psi0 + sigma0 e^{2iA}), then beta = A + pi/2.
std::pair<double, double> null_direction_angles(const SurfaceJet& jet,
                                                double A);

struct ContactFormsH {
    Eigen::Vector3d omega_plus;   // components on (Re nu, Im nu, A)
    Eigen::Vector3d omega_minus;
    double defect_plus = 0.0;     // closed form -2(psi0^2-|sigma0|^2)/(1+s)^2
    double defect_minus = -2.0;
};
ContactFormsH contact_forms_H(const SurfaceJet& jet, double A);

// Contact forms as fields over the (Re nu, Im nu, A) chart, for independent
// Frobenius-defect checks.
OneFormField omega_plus_field(const SupportSurface& S);
OneFormField omega_minus_field();

// Determinant of the induced metric of the constant-angle hypersurface
// (0 < eps < 1) in the (Re nu, Im nu, A) chart; zero iff sigma0 = 0 or
// sigma0 e^{2iA} is real.
double constant_angle_nullity(const SurfaceJet& jet, double A, double eps);

// Chart-parameterization of the constant-angle hypersurface as a map
// (Re nu, Im nu, A) -> (Re xi, Im xi, Re eta, Im eta), for pullback oracles.
std::function<Vec4(const Eigen::VectorXd&)> hypersurface_map(
    const SupportSurface& S, std::optional<double> eps = std::nullopt);

}  // namespace neutral
