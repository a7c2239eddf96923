#include "neutral/compactification.hpp"

#include <cmath>
#include <numbers>

namespace neutral {

namespace {
constexpr double kPi = std::numbers::pi;
}

DoublePolarPoint to_double_polar(const Vec4& x) {
    DoublePolarPoint d;
    d.R1 = std::hypot(x[0], x[1]);
    d.R2 = std::hypot(x[2], x[3]);
    d.theta1 = std::atan2(x[1], x[0]);
    d.theta2 = std::atan2(x[3], x[2]);
    return d;
}

CompactChartPoint to_compact(const Vec4& x) {
    DoublePolarPoint d = to_double_polar(x);
    CompactChartPoint c;
    c.p = std::atan(d.R1 + d.R2);
    c.q = std::atan(d.R1 - d.R2);
    c.theta1 = d.theta1;
    c.theta2 = d.theta2;
    return c;
}

Mat4 to_compact_jacobian(const Vec4& x) {
    DoublePolarPoint d = to_double_polar(x);
    if (d.R1 < 1e-14 || d.R2 < 1e-14)
        throw chart_error("to_compact_jacobian: double polar chart is "
                          "singular on the coordinate planes R1=0, R2=0");
    // Rows of d(R1,theta1,R2,theta2)/dx.
    Eigen::Vector4d dR1(x[0] / d.R1, x[1] / d.R1, 0.0, 0.0);
    Eigen::Vector4d dT1(-x[1] / (d.R1 * d.R1), x[0] / (d.R1 * d.R1), 0.0,
                        0.0);
    Eigen::Vector4d dR2(0.0, 0.0, x[2] / d.R2, x[3] / d.R2);
    Eigen::Vector4d dT2(0.0, 0.0, -x[3] / (d.R2 * d.R2),
                        x[2] / (d.R2 * d.R2));
    double sp = d.R1 + d.R2;
    double sq = d.R1 - d.R2;
    Mat4 J;
    J.row(0) = ((dR1 + dR2) / (1.0 + sp * sp)).transpose();
    J.row(1) = ((dR1 - dR2) / (1.0 + sq * sq)).transpose();
    J.row(2) = dT1.transpose();
    J.row(3) = dT2.transpose();
    return J;
}

BallPoint to_ball(const CompactChartPoint& c) {
    BallPoint b;
    if (c.p < 1e-15) {
        b.psi = kPi / 2.0;  // convention at the centre
        b.z1 = b.z2 = cplx(0.0, 0.0);
        return b;
    }
    double cpsi = std::clamp(c.q / c.p, -1.0, 1.0);
    b.psi = std::acos(cpsi);
    b.z1 = c.p * std::sin(b.psi / 2.0) *
           std::exp(cplx(0.0, c.theta1));
    b.z2 = c.p * std::cos(b.psi / 2.0) *
           std::exp(cplx(0.0, c.theta2));
    return b;
}

double conformal_factor(const CompactChartPoint& c) {
    return 2.0 * std::cos(c.p) * std::cos(c.q);
}

ChartMetricField einstein_static_metric() {
    ChartMetricField f;
    f.name = "einstein-static";
    f.degenerate_allowed = false;
    f.domain = [](const Vec4& y) {
        double u = y[0] + y[1];
        double v = y[0] - y[1];
        return std::abs(std::sin(u)) > 1e-9 &&
               std::abs(std::sin(v)) > 1e-9;
    };
    f.eval = [](const Vec4& y) {
        double su = std::sin(y[0] + y[1]);
        double sv = std::sin(y[0] - y[1]);
        Mat4 g = Mat4::Zero();
        g(0, 1) = g(1, 0) = 0.5;
        g(2, 2) = su * su / 4.0;
        g(3, 3) = -sv * sv / 4.0;
        return g;
    };
    return f;
}

Mat4 einstein_static_ricci(const Vec4& pq) {
    double su = std::sin(pq[0] + pq[1]);
    double sv = std::sin(pq[0] - pq[1]);
    Mat4 r = Mat4::Zero();
    r(0, 0) = 2.0;
    r(1, 1) = 2.0;
    r(2, 2) = su * su;
    r(3, 3) = sv * sv;
    return r;
}

double grad_omega_boundary_locus(const CompactChartPoint& c) {
    if (std::abs(c.p - kPi / 2.0) > 1e-12)
        throw domain_error("grad_omega_boundary_locus: point is not on the "
                           "boundary p = pi/2");
    // dOmega = -2 sin p cos q dp - 2 cos p sin q dq = -2 cos q dp at p=pi/2.
    return 2.0 * std::abs(std::cos(c.q));
}

BoundaryNullPlanes boundary_null_planes(double q, double theta1,
                                        double theta2) {
    BoundaryNullPlanes b;
    Vec4 base(kPi / 2.0, q, theta1, theta2);
    b.alpha_plane.base = base;
    b.alpha_plane.u = Vec4(0.0, 1.0, 0.0, 0.0);
    b.alpha_plane.v = Vec4(0.0, 0.0, 1.0, 1.0);
    b.beta_plane.base = base;
    b.beta_plane.u = Vec4(0.0, 1.0, 0.0, 0.0);
    b.beta_plane.v = Vec4(0.0, 0.0, 1.0, -1.0);
    b.alpha_form.dim = 3;
    b.alpha_form.eval = [](const Eigen::VectorXd&) {
        Eigen::VectorXd w(3);
        w << 0.0, 1.0, -1.0;
        return w;
    };
    b.beta_form.dim = 3;
    b.beta_form.eval = [](const Eigen::VectorXd&) {
        Eigen::VectorXd w(3);
        w << 0.0, 1.0, 1.0;
        return w;
    };
    return b;
}

NeutralExistence neutral_existence_parity(long chi, long tau) {
    auto mod4 = [](long n) { return ((n % 4) + 4) % 4; };
    bool ok = mod4(chi + tau) == 0 && mod4(chi - tau) == 0;
    return ok ? NeutralExistence::admits : NeutralExistence::obstructed;
}

Vec4 hopf_circle_psi0(double t) {
    return (kPi / 2.0) * Vec4(std::cos(t), std::sin(t), 0.0, 0.0);
}

Vec4 hopf_circle_psipi(double t) {
    return (kPi / 2.0) * Vec4(0.0, 0.0, std::cos(t), std::sin(t));
}

namespace {

// Stereographic projection of the radius-pi/2 boundary sphere to R^3 from a
// pole off both circles. Any such diffeomorphism preserves linking numbers.
Eigen::Vector3d project_boundary(const Vec4& x) {
    const double r = kPi / 2.0;
    static const Vec4 pole(0.5, 0.5, 0.5, 0.5);  // unit vector
    static const Vec4 e1 = Vec4(1, -1, 0, 0) / std::sqrt(2.0);
    static const Vec4 e2 = Vec4(0, 0, 1, -1) / std::sqrt(2.0);
    static const Vec4 e3 = Vec4(0.5, 0.5, -0.5, -0.5);
    double denom = r - x.dot(pole);
    return Eigen::Vector3d(x.dot(e1), x.dot(e2), x.dot(e3)) * (r / denom);
}

}  // namespace

double hopf_link_linking_number(int quadrature_points) {
    const int n = quadrature_points;
    std::vector<Eigen::Vector3d> a(n), b(n);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * kPi * i / n;
        a[i] = project_boundary(hopf_circle_psi0(t));
        b[i] = project_boundary(hopf_circle_psipi(t));
    }
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d da = a[(i + 1) % n] - a[i];
        Eigen::Vector3d ma = 0.5 * (a[(i + 1) % n] + a[i]);
        for (int j = 0; j < n; ++j) {
            Eigen::Vector3d db = b[(j + 1) % n] - b[j];
            Eigen::Vector3d mb = 0.5 * (b[(j + 1) % n] + b[j]);
            Eigen::Vector3d d = ma - mb;
            double dist = d.norm();
            acc += da.cross(db).dot(d) / (dist * dist * dist);
        }
    }
    return acc / (4.0 * kPi);
}

}  // namespace neutral
