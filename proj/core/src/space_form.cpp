#include "neutral/space_form.hpp"

#include <cmath>

namespace neutral {

namespace {

const int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

Vec4 metric_diag(int eps) {
    return Vec4(eps, eps, eps, 1.0);
}

// Oriented eps-orthonormal basis (w1, w2) of the complement of span{x,y}.
std::pair<Vec4, Vec4> complement_basis(const SpaceFormFlag& flag) {
    Vec4 g = metric_diag(flag.eps);
    Eigen::Matrix<double, 2, 4> M;
    M.row(0) = (g.asDiagonal() * flag.x).transpose();
    M.row(1) = (g.asDiagonal() * flag.y).transpose();
    Eigen::FullPivLU<Eigen::Matrix<double, 2, 4>> lu(M);
    Eigen::Matrix<double, 4, 2> ker = lu.kernel();
    Vec4 w1 = ker.col(0);
    double n1 = inner_vec_eps(w1, w1, flag.eps);
    if (std::abs(n1) < 1e-12)
        throw degeneracy_error("complement_basis: null complement direction");
    w1 /= std::sqrt(std::abs(n1));
    Vec4 w2 = ker.col(1);
    double s1 = inner_vec_eps(w1, w1, flag.eps);  // +-1
    w2 -= w1 * (inner_vec_eps(w2, w1, flag.eps) / s1);
    double n2 = inner_vec_eps(w2, w2, flag.eps);
    if (std::abs(n2) < 1e-12)
        throw degeneracy_error("complement_basis: null complement direction");
    w2 /= std::sqrt(std::abs(n2));
    Mat4 D;
    D.col(0) = flag.x;
    D.col(1) = flag.y;
    D.col(2) = w1;
    D.col(3) = w2;
    if (D.determinant() < 0.0) w2 = -w2;
    return {w1, w2};
}

}  // namespace

Biv wedge(const Vec4& x, const Vec4& y) {
    Biv b;
    for (int k = 0; k < 6; ++k) {
        int i = kPairs[k][0], j = kPairs[k][1];
        b[k] = x[i] * y[j] - x[j] * y[i];
    }
    return b;
}

double inner_vec_eps(const Vec4& a, const Vec4& b, int eps) {
    Vec4 g = metric_diag(eps);
    return (a.array() * g.array() * b.array()).sum();
}

double inner_eps(const Biv& a, const Biv& b, int eps) {
    Vec4 g = metric_diag(eps);
    double acc = 0.0;
    for (int k = 0; k < 6; ++k)
        acc += g[kPairs[k][0]] * g[kPairs[k][1]] * a[k] * b[k];
    return acc;
}

void validate_flag(const SpaceFormFlag& flag, double tol) {
    if (flag.eps != 1 && flag.eps != -1)
        throw domain_error("validate_flag: eps must be +-1");
    if (std::abs(inner_vec_eps(flag.x, flag.x, flag.eps) - 1.0) > tol ||
        std::abs(inner_vec_eps(flag.y, flag.y, flag.eps) - flag.eps) > tol ||
        std::abs(inner_vec_eps(flag.x, flag.y, flag.eps)) > tol)
        throw domain_error("validate_flag: flag normalization violated");
}

std::pair<Vec4, Vec4> decompose_tangent(const SpaceFormFlag& flag,
                                        const Biv& B, double tol) {
    auto [w1, w2] = complement_basis(flag);
    double s1 = inner_vec_eps(w1, w1, flag.eps);
    double s2 = inner_vec_eps(w2, w2, flag.eps);
    // <X, w> = <<B, x^w>>, eps <Y, w> = <<B, y^w>>.
    double xw1 = inner_eps(B, wedge(flag.x, w1), flag.eps);
    double xw2 = inner_eps(B, wedge(flag.x, w2), flag.eps);
    double yw1 = flag.eps * inner_eps(B, wedge(flag.y, w1), flag.eps);
    double yw2 = flag.eps * inner_eps(B, wedge(flag.y, w2), flag.eps);
    Vec4 X = w1 * (xw1 / s1) + w2 * (xw2 / s2);
    Vec4 Y = w1 * (yw1 / s1) + w2 * (yw2 / s2);
    Biv rec = wedge(flag.x, X) + wedge(flag.y, Y);
    if ((rec - B).norm() > tol * std::max(1.0, B.norm()))
        throw domain_error("decompose_tangent: bivector is not tangent");
    return {X, Y};
}

Biv J_image(const SpaceFormFlag& flag, const Biv& B) {
    auto [X, Y] = decompose_tangent(flag, B);
    return wedge(flag.y, X) - double(flag.eps) * wedge(flag.x, Y);
}

Biv Jprime_image(const SpaceFormFlag& flag, const Biv& B) {
    auto [X, Y] = decompose_tangent(flag, B);
    auto [w1, w2] = complement_basis(flag);
    double s1 = inner_vec_eps(w1, w1, flag.eps);
    double s2 = inner_vec_eps(w2, w2, flag.eps);
    auto rot = [&](const Vec4& Z) {
        double a = inner_vec_eps(Z, w1, flag.eps) / s1;
        double b = inner_vec_eps(Z, w2, flag.eps) / s2;
        return Vec4(-b * w1 + a * w2);
    };
    return wedge(flag.x, rot(X)) + wedge(flag.y, rot(Y));
}

double G_eps(const SpaceFormFlag& flag, const Biv& U, const Biv& V) {
    return -inner_eps(U, J_image(flag, Jprime_image(flag, V)), flag.eps);
}

void validate_frame(const SurfaceFramePoint& fr, double tol) {
    double e = fr.eps;
    const Vec4* vs[4] = {&fr.phi, &fr.e1, &fr.e2, &fr.N};
    double norms[4] = {1.0, e, e, e};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(inner_vec_eps(*vs[i], *vs[i], fr.eps) - norms[i]) > tol)
            throw domain_error("validate_frame: normalization violated");
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(inner_vec_eps(*vs[i], *vs[j], fr.eps)) > tol)
                throw domain_error("validate_frame: orthogonality violated");
    }
}

HypFrame tangent_hyp_frame(const SurfaceFramePoint& fr, double theta) {
    HypFrame h;
    double ct = std::cos(theta), st = std::sin(theta);
    h.v = ct * fr.e1 + st * fr.e2;
    h.vperp = -st * fr.e1 + ct * fr.e2;
    Biv pvp = wedge(fr.phi, h.vperp);
    Biv pN = wedge(fr.phi, fr.N);
    Biv vvp = wedge(h.v, h.vperp);
    h.d1 = fr.v1 * pvp + fr.k1 * ct * pN + st * vvp;
    h.d2 = fr.v2 * pvp + fr.k2 * st * pN - ct * vvp;
    h.d0 = pvp;
    return h;
}

SpaceFormNullPlanes null_planes_spaceform(const SurfaceFramePoint& fr,
                                          double theta) {
    HypFrame h = tangent_hyp_frame(fr, theta);
    SpaceFormNullPlanes p;
    p.plus_a = h.d0;
    p.plus_b = wedge(fr.phi, fr.N);
    p.minus_a = h.d0;
    p.minus_b = wedge(h.v, h.vperp);
    return p;
}

std::pair<double, double> contact_defects_spaceform(
    const SurfaceFramePoint& fr, double theta) {
    double ct = std::cos(theta), st = std::sin(theta);
    if (fr.k1 * ct * ct + fr.k2 * st * st == 0.0 || fr.k1 * fr.k2 <= 0.0)
        throw convexity_error("contact_defects_spaceform: k1 k2 <= 0");
    return {1.0, -fr.k1 * fr.k2};
}

double constant_angle_nullity_spaceform(const SurfaceFramePoint& fr,
                                        double theta, double a) {
    if (a <= 0.0 || a >= M_PI / 2.0)
        throw domain_error("constant_angle_nullity_spaceform: bad angle");
    double ca = std::cos(a);
    return (fr.k2 - fr.k1) * ca * ca * std::sin(2.0 * theta);
}

Biv reeb_field_spaceform(const SurfaceFramePoint& fr, double theta) {
    double ct = std::cos(theta), st = std::sin(theta);
    if (fr.k1 * fr.k2 <= 0.0)
        throw convexity_error("reeb_field_spaceform: k1 k2 <= 0");
    HypFrame h = tangent_hyp_frame(fr, theta);
    return (fr.k1 - fr.k2) * ct * st * wedge(fr.phi, fr.N) +
           wedge(h.v, h.vperp);
}

Vec4 LatitudeSphere::position(double alpha, double beta) const {
    Vec3 n(std::sin(alpha) * std::cos(beta), std::sin(alpha) * std::sin(beta),
           std::cos(alpha));
    double c = (eps == 1) ? std::cos(rho) : std::cosh(rho);
    return Vec4(warp() * n[0], warp() * n[1], warp() * n[2], c);
}

double LatitudeSphere::warp() const {
    return (eps == 1) ? std::sin(rho) : std::sinh(rho);
}

SurfaceFramePoint LatitudeSphere::frame(double alpha, double beta) const {
    double sa = std::sin(alpha), ca = std::cos(alpha);
    double sb = std::sin(beta), cb = std::cos(beta);
    if (std::abs(sa) < 1e-12)
        throw chart_error("LatitudeSphere::frame: polar chart singularity");
    Vec3 n(sa * cb, sa * sb, ca);
    Vec3 na(ca * cb, ca * sb, -sa);
    Vec3 nbh(-sb, cb, 0.0);  // n_beta / sin(alpha)
    SurfaceFramePoint fr;
    fr.eps = eps;
    fr.phi = position(alpha, beta);
    fr.e1 = Vec4(na[0], na[1], na[2], 0.0);
    fr.e2 = Vec4(nbh[0], nbh[1], nbh[2], 0.0);
    if (eps == 1) {
        fr.N = Vec4(-std::cos(rho) * n[0], -std::cos(rho) * n[1],
                    -std::cos(rho) * n[2], std::sin(rho));
        fr.k1 = fr.k2 = 1.0 / std::tan(rho);
    } else {
        fr.N = Vec4(-std::cosh(rho) * n[0], -std::cosh(rho) * n[1],
                    -std::cosh(rho) * n[2], -std::sinh(rho));
        fr.k1 = fr.k2 = 1.0 / std::tanh(rho);
    }
    fr.v1 = 0.0;
    fr.v2 = (ca / sa) / warp();
    return fr;
}

SpaceFormTrajectory reeb_flow_spaceform(const LatitudeSphere& sphere,
                                        const Eigen::Vector3d& init,
                                        double dt, int n) {
    // Chart form of the Reeb flow: d phi/dt = -vperp,
    // d theta/dt = cos(theta) v2 - sin(theta) v1.
    auto field = [&](const Eigen::Vector3d& y) {
        double w = sphere.warp();
        double cot = std::cos(y[0]) / std::sin(y[0]);
        return Eigen::Vector3d(std::sin(y[2]) / w,
                               -std::cos(y[2]) / (w * std::sin(y[0])),
                               std::cos(y[2]) * cot / w);
    };
    SpaceFormTrajectory traj;
    Eigen::Vector3d y = init;
    traj.t.push_back(0.0);
    traj.states.push_back(y);
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d k1 = field(y);
        Eigen::Vector3d k2 = field(y + 0.5 * dt * k1);
        Eigen::Vector3d k3 = field(y + 0.5 * dt * k2);
        Eigen::Vector3d k4 = field(y + dt * k3);
        y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.t.push_back(dt * (i + 1));
        traj.states.push_back(y);
    }
    return traj;
}

SpaceFormLegendrianReport legendrian_classify_spaceform(
    const std::vector<SpaceFormCurveSample>& curve, double tol) {
    int n = static_cast<int>(curve.size());
    if (n < 3)
        throw domain_error("legendrian_classify_spaceform: too few samples");
    SpaceFormLegendrianReport rep;
    rep.alpha = rep.beta = rep.normal_to_c = true;
    rep.curvature_line_or_umbilic = true;

    auto project_residual = [](const Biv& b, const Biv& s1, const Biv& s2) {
        Eigen::Matrix<double, 6, 2> A;
        A.col(0) = s1;
        A.col(1) = s2;
        Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
        return (A * c - b).norm() / std::max(1.0, b.norm());
    };

    for (int i = 0; i < n; ++i) {
        int ip = (i + 1) % n, im = (i - 1 + n) % n;
        double du = curve[ip].u - curve[im].u;
        if (du <= 0.0) du += (curve.back().u - curve.front().u) * n / (n - 1.0);
        const SurfaceFramePoint& fr = curve[i].fr;
        double ct = std::cos(curve[i].theta), st = std::sin(curve[i].theta);
        Vec4 v = ct * fr.e1 + st * fr.e2;
        Vec4 phidot = (curve[ip].fr.phi - curve[im].fr.phi) / du;
        if (std::abs(inner_vec_eps(phidot, phidot, fr.eps) - fr.eps) >
            100 * tol)
            throw domain_error(
                "legendrian_classify_spaceform: curve not arclength");
        auto Cof = [&](int k) {
            double c = std::cos(curve[k].theta), s = std::sin(curve[k].theta);
            return wedge(curve[k].fr.phi,
                         c * curve[k].fr.e1 + s * curve[k].fr.e2);
        };
        Biv Cdot = (Cof(ip) - Cof(im)) / du;
        SpaceFormNullPlanes pl = null_planes_spaceform(fr, curve[i].theta);
        if (project_residual(Cdot, pl.plus_a, pl.plus_b) > tol)
            rep.alpha = false;
        if (project_residual(Cdot, pl.minus_a, pl.minus_b) > tol)
            rep.beta = false;
        if (std::abs(inner_vec_eps(phidot, v, fr.eps)) > tol)
            rep.normal_to_c = false;
        double c1 = inner_vec_eps(phidot, fr.e1, fr.eps);
        double c2 = inner_vec_eps(phidot, fr.e2, fr.eps);
        bool umb = std::abs(fr.k1 - fr.k2) <= tol;
        bool curv = std::abs(c1 * c2) <= tol * (c1 * c1 + c2 * c2);
        if (!umb && !curv) rep.curvature_line_or_umbilic = false;
    }

    int count = (rep.beta ? 1 : 0) + (rep.normal_to_c ? 1 : 0) +
                (rep.curvature_line_or_umbilic ? 1 : 0);
    if (count == 2)
        throw std::logic_error(
            "legendrian_classify_spaceform: condition-triangle violation");
    return rep;
}

Biv rho2_vector(const SurfaceFramePoint& fr, double theta) {
    double ct = std::cos(theta), st = std::sin(theta);
    double den = fr.k1 * ct * ct + fr.k2 * st * st;
    if (std::abs(den) < 1e-14)
        throw convexity_error("rho2_vector: degenerate direction");
    HypFrame h = tangent_hyp_frame(fr, theta);
    double coeff =
        (2.0 * fr.k1 * fr.v2 * ct * st + (fr.k1 * ct * ct - fr.k2 * st * st) *
                                             fr.v1) /
        den;
    return coeff * h.d0 + fr.k1 * ct * wedge(fr.phi, fr.N) -
           st * wedge(h.v, h.vperp);
}

}  // namespace neutral
