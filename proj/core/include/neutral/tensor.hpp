#pragma once

#include "neutral/chart.hpp"

#include <array>

namespace neutral {

// Default finite-difference steps: curvature quantities use h=1e-3 with one
// Richardson extrapolation step, plain first derivatives h=1e-6.
inline constexpr double kCurvatureStep = 1e-3;
inline constexpr double kDerivativeStep = 1e-6;
inline constexpr double kDefaultTol = 1e-8;

using Christoffel = std::array<Mat4, 4>;  // [i](j,k) = Gamma^i_{jk}

double metric_value(const ChartMetricField& field, const Vec4& p,
                    const Vec4& u, const Vec4& v);

// Gamma^i_{jk} from central differences of the metric components.
Christoffel christoffel(const ChartMetricField& field, const Vec4& p,
                        double h = kCurvatureStep);

Mat4 ricci(const ChartMetricField& field, const Vec4& p,
           double h = kCurvatureStep);

double scalar_curvature(const ChartMetricField& field, const Vec4& p,
                        double h = kCurvatureStep);

// Pullback J^T M(f(p)) J of an ambient metric along a chart map. The map may
// go from an m-dimensional chart (m = 2, 3 or 4) into the ambient 4-chart;
// the Jacobian is central-differenced unless supplied.
Eigen::MatrixXd pullback_metric(
    const std::function<Vec4(const Eigen::VectorXd&)>& map,
    const ChartMetricField& ambient, const Eigen::VectorXd& p,
    double h = kDerivativeStep,
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& jacobian =
        nullptr);

// Single independent component of omega ^ d(omega) on a 3-chart, against the
// coordinate volume form dx1^dx2^dx3 divided by vol_scale. Complex-pair
// charts (Re w, Im w, s) conventionally pass vol_scale = 2, matching the
// i ds^dw^dwbar normalization.
double frobenius_defect(const OneFormField& omega, const Vec3& p,
                        double h = kDerivativeStep, double vol_scale = 1.0);

enum class PlaneClass { alpha, beta, not_totally_null };

PlaneClass classify_null_plane(const TangentPlane& plane,
                               const ChartMetricField& metric,
                               const Mat4& Jplus, const Mat4& Jminus,
                               double tol = kDefaultTol);

// Eigenvalue signature (n_neg, n_zero, n_pos) with a zero band.
struct Signature {
    int neg = 0, zero = 0, pos = 0;
};
Signature metric_signature(const Eigen::MatrixXd& m, double zero_band = 1e-10);

// Flat neutral R^{2,2} in Cartesian coordinates, diag(1,1,-1,-1).
ChartMetricField flat_neutral_metric();

// Constant complex structures of R^{2,2} in the Cartesian chart.
Mat4 J_plus_flat();
Mat4 J_minus_flat();

}  // namespace neutral
