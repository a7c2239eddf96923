#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace neutral {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using cplx = std::complex<double>;

// Metric components over a 4-coordinate chart. eval must return a symmetric
// matrix at every domain point; signature (2,2) unless degenerate_allowed
// (boundary restrictions, pullbacks onto null hypersurfaces).
struct ChartMetricField {
    std::function<Mat4(const Vec4&)> eval;
    std::function<bool(const Vec4&)> domain;  // nullptr = everywhere
    std::string name;
    bool degenerate_allowed = false;

    bool in_domain(const Vec4& p) const { return !domain || domain(p); }
};

// Covector field on a 3- or 4-dimensional chart.
struct OneFormField {
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> eval;
    int dim = 3;
};

// 2-plane in a tangent space, given by a base point and two spanning vectors.
struct TangentPlane {
    Vec4 base;
    Vec4 u, v;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct convexity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct chart_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace neutral
