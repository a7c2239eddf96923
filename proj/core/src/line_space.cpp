#include "neutral/line_space.hpp"

#include <cmath>

namespace neutral {

Vec3 line_direction(cplx xi) {
    double s = std::norm(xi);
    return Vec3(2.0 * xi.real(), 2.0 * xi.imag(), 1.0 - s) / (1.0 + s);
}

cplx direction_to_xi(const Vec3& u) {
    if (u[2] < -1.0 + 1e-14)
        throw chart_error("direction_to_xi: direction at the south pole");
    return cplx(u[0], u[1]) / (1.0 + u[2]);
}

Vec3 line_to_points(const OrientedLineCoords& line, double r) {
    cplx xi = line.xi, eta = line.eta;
    double s = std::norm(xi);
    cplx z = 2.0 * (eta - xi * xi * std::conj(eta)) / ((1.0 + s) * (1.0 + s)) +
             2.0 * xi * r / (1.0 + s);
    double x3 = -2.0 * (xi * std::conj(eta) + std::conj(xi) * eta).real() /
                    ((1.0 + s) * (1.0 + s)) +
                (1.0 - s) * r / (1.0 + s);
    return Vec3(z.real(), z.imag(), x3);
}

cplx incidence_eta(cplx xi, const Vec3& P) {
    cplx z(P[0], P[1]);
    return 0.5 * (z - 2.0 * P[2] * xi - std::conj(z) * xi * xi);
}

double line_distance_to_origin(const OrientedLineCoords& line) {
    return 2.0 * std::abs(line.eta) / (1.0 + std::norm(line.xi));
}

// The metric 2(1+xi xibar)^{-2} Im(d etabar d xi + c d xi d xibar) with
// c = 2 xibar eta/(1+xi xibar), products taken as full symmetric tensor
// sums (a b meaning a(x)b + b(x)a).
Mat4 neutral_metric_L(const OrientedLineCoords& line) {
    double s = std::norm(line.xi);
    cplx c = 2.0 * std::conj(line.xi) * line.eta / (1.0 + s);
    double f = 4.0 / ((1.0 + s) * (1.0 + s));
    Mat4 g = Mat4::Zero();
    g(0, 0) = g(1, 1) = f * c.imag();
    g(1, 2) = g(2, 1) = f * 0.5;
    g(0, 3) = g(3, 0) = -f * 0.5;
    return g;
}

ChartMetricField line_space_metric_field() {
    ChartMetricField f;
    f.name = "line-space-flat";
    f.degenerate_allowed = false;
    f.domain = [](const Vec4& y) {
        return std::hypot(y[0], y[1]) < kXiMax;
    };
    f.eval = [](const Vec4& y) {
        return neutral_metric_L({cplx(y[0], y[1]), cplx(y[2], y[3])});
    };
    return f;
}

Mat4 symplectic_form_L(const OrientedLineCoords& line) {
    double s = std::norm(line.xi);
    cplx c = 2.0 * std::conj(line.xi) * line.eta / (1.0 + s);
    double f = 2.0 / ((1.0 + s) * (1.0 + s));
    // Re(d etabar ^ d xi) = d eta1 ^ d xi1 + d eta2 ^ d xi2;
    // Re(c d xi ^ d xibar) = 2 Im(c) d xi1 ^ d xi2.
    Mat4 w = Mat4::Zero();
    w(2, 0) = f;
    w(0, 2) = -f;
    w(3, 1) = f;
    w(1, 3) = -f;
    w(0, 1) = -f * 2.0 * c.imag();
    w(1, 0) = -w(0, 1);
    return w;
}

double lagrangian_defect(const std::function<cplx(cplx)>& eta_of_nu, cplx nu,
                         double h) {
    auto point = [&](cplx v) {
        cplx e = eta_of_nu(v);
        Vec4 y;
        y << v.real(), v.imag(), e.real(), e.imag();
        return y;
    };
    Vec4 tx = (point(nu + h) - point(nu - h)) / (2.0 * h);
    Vec4 ty = (point(nu + cplx(0.0, h)) - point(nu - cplx(0.0, h))) / (2.0 * h);
    Mat4 w = symplectic_form_L({nu, eta_of_nu(nu)});
    return tx.dot(w * ty);
}

}  // namespace neutral
