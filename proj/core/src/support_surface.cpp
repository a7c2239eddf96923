#include "neutral/support_surface.hpp"

#include <cmath>

namespace neutral {

namespace {

constexpr double kSupportStep = 1e-5;

struct Wirtinger {
    cplx d1;      // del_nu
    cplx dnn;     // del^2_{nu nu}
    double dnb;   // del^2_{nu nubar} (real for real functions)
};

Wirtinger derivatives(const SupportSurface& S, cplx nu) {
    Wirtinger w;
    if (S.d_nu && S.d_nunu && S.d_nunubar) {
        w.d1 = S.d_nu(nu);
        w.dnn = S.d_nunu(nu);
        w.dnb = S.d_nunubar(nu);
        return w;
    }
    const double h = kSupportStep;
    double x = nu.real(), y = nu.imag();
    auto f = [&](double a, double b) { return S.r0(cplx(a, b)); };
    double f0 = f(x, y);
    double fx = (f(x + h, y) - f(x - h, y)) / (2 * h);
    double fy = (f(x, y + h) - f(x, y - h)) / (2 * h);
    double fxx = (f(x + h, y) - 2 * f0 + f(x - h, y)) / (h * h);
    double fyy = (f(x, y + h) - 2 * f0 + f(x, y - h)) / (h * h);
    double fxy = (f(x + h, y + h) + f(x - h, y - h) - f(x + h, y - h) -
                  f(x - h, y + h)) /
                 (4 * h * h);
    w.d1 = 0.5 * cplx(fx, -fy);
    w.dnn = 0.25 * cplx(fxx - fyy, -2 * fxy);
    w.dnb = 0.25 * (fxx + fyy);
    return w;
}

// Support summand of a translation: <center, normal direction(nu)>.
double center_term(const Vec3& C, cplx nu) {
    double s = std::norm(nu);
    cplx wc(C[0], C[1]);
    return (2.0 * (std::conj(wc) * nu).real() + C[2] * (1.0 - s)) / (1.0 + s);
}

cplx center_term_dnu(const Vec3& C, cplx nu) {
    double s = std::norm(nu);
    cplx wc(C[0], C[1]);
    cplx nb = std::conj(nu);
    return (std::conj(wc) - 2.0 * C[2] * nb - wc * nb * nb) /
           ((1.0 + s) * (1.0 + s));
}

}  // namespace

SurfaceJet surface_jet(const SupportSurface& S, cplx nu) {
    if (std::abs(nu) > S.domain_radius)
        throw domain_error("surface_jet: nu outside the support chart");
    Wirtinger d = derivatives(S, nu);
    double s = std::norm(nu);
    double u = 1.0 + s;
    cplx nb = std::conj(nu);
    SurfaceJet jet;
    jet.nu = nu;
    jet.r0 = S.r0(nu);
    jet.eta0 = 0.5 * u * u * std::conj(d.d1);
    jet.sigma0 = -(u * nb * d.d1 + 0.5 * u * u * d.dnn);
    cplx deta0 = u * nb * std::conj(d.d1) + 0.5 * u * u * d.dnb;
    jet.psi0 = jet.r0 + deta0.real() - 2.0 * (nb * jet.eta0).real() / u;
    if (jet.psi0 * jet.psi0 - std::norm(jet.sigma0) <= 0.0)
        throw convexity_error("surface_jet: psi0^2 - |sigma0|^2 <= 0 at nu");
    return jet;
}

SupportSurface sphere_support(double rho, const Vec3& center) {
    SupportSurface S;
    Vec3 C = center;
    S.r0 = [rho, C](cplx nu) { return rho + center_term(C, nu); };
    S.d_nu = [C](cplx nu) { return center_term_dnu(C, nu); };
    S.d_nunu = [C](cplx nu) {
        double s = std::norm(nu);
        return -2.0 * std::conj(nu) * center_term_dnu(C, nu) / (1.0 + s);
    };
    S.d_nunubar = [C](cplx nu) {
        double s = std::norm(nu);
        return -2.0 * center_term(C, nu) / ((1.0 + s) * (1.0 + s));
    };
    return S;
}

SupportSurface spheroid_support(double a, double c) {
    // r0 depends only on s = nu nubar: r0 = sqrt(a^2 + b g(s)), b = c^2-a^2,
    // g = ((1-s)/(1+s))^2.
    double b = c * c - a * a;
    auto r_of_s = [a, b](double s) {
        double t = (1.0 - s) / (1.0 + s);
        return std::sqrt(a * a + b * t * t);
    };
    auto r1 = [a, b, r_of_s](double s) {  // d r0 / ds
        double u = 1.0 + s;
        double gp = -4.0 * b * (1.0 - s) / (u * u * u);
        return gp / (2.0 * r_of_s(s));
    };
    auto r2 = [a, b, r_of_s, r1](double s) {  // d^2 r0 / ds^2
        double u = 1.0 + s;
        double gp = -4.0 * b * (1.0 - s) / (u * u * u);
        double gpp = 8.0 * b * (2.0 - s) / (u * u * u * u);
        double r = r_of_s(s);
        return gpp / (2.0 * r) - gp * gp / (4.0 * r * r * r);
    };
    SupportSurface S;
    S.r0 = [r_of_s](cplx nu) { return r_of_s(std::norm(nu)); };
    S.d_nu = [r1](cplx nu) { return r1(std::norm(nu)) * std::conj(nu); };
    S.d_nunu = [r2](cplx nu) {
        cplx nb = std::conj(nu);
        return r2(std::norm(nu)) * nb * nb;
    };
    S.d_nunubar = [r1, r2](cplx nu) {
        double s = std::norm(nu);
        return r2(s) * s + r1(s);
    };
    return S;
}

SupportSurface translate(const SupportSurface& S, const Vec3& center) {
    SupportSurface T;
    Vec3 C = center;
    SupportSurface base = S;
    T.domain_radius = S.domain_radius;
    T.r0 = [base, C](cplx nu) { return base.r0(nu) + center_term(C, nu); };
    if (base.d_nu && base.d_nunu && base.d_nunubar) {
        T.d_nu = [base, C](cplx nu) {
            return base.d_nu(nu) + center_term_dnu(C, nu);
        };
        T.d_nunu = [base, C](cplx nu) {
            double s = std::norm(nu);
            return base.d_nunu(nu) -
                   2.0 * std::conj(nu) * center_term_dnu(C, nu) / (1.0 + s);
        };
        T.d_nunubar = [base, C](cplx nu) {
            double s = std::norm(nu);
            return base.d_nunubar(nu) -
                   2.0 * center_term(C, nu) / ((1.0 + s) * (1.0 + s));
        };
    }
    return T;
}

Vec3 support_point(const SurfaceJet& jet) {
    return line_to_points({jet.nu, jet.eta0}, jet.r0);
}

Vec3 support_normal(cplx nu) { return line_direction(nu); }

OrientedLineCoords tangent_hypersurface_point(const SurfaceJet& jet, double A,
                                              std::optional<double> eps) {
    double e = eps.value_or(1.0);
    cplx phase = e * std::exp(cplx(0.0, A));
    cplx den = 1.0 - std::conj(jet.nu) * phase;
    if (std::abs(den) < 1e-9)
        throw chart_error("tangent_hypersurface_point: chart blow-up");
    double s = std::norm(jet.nu);
    OrientedLineCoords line;
    line.xi = (jet.nu + phase) / den;
    line.eta = (jet.eta0 - phase * phase * std::conj(jet.eta0) -
                (1.0 + s) * phase * jet.r0) /
               (den * den);
    return line;
}

Mat3 induced_metric_H(const SurfaceJet& jet, double A) {
    double s = std::norm(jet.nu);
    double f = 1.0 / ((1.0 + s) * (1.0 + s));
    cplx e2 = std::exp(cplx(0.0, 2.0 * A));
    cplx P = jet.sigma0 + jet.psi0 / e2;
    cplx Q = jet.sigma0 * e2;
    Mat3 g = Mat3::Zero();
    g(0, 0) = -2.0 * f * (P + Q).imag();
    g(1, 1) = -2.0 * f * (Q - P).imag();
    g(0, 1) = g(1, 0) = -2.0 * f * P.real();
    return g;
}

std::pair<double, double> null_direction_angles(const SurfaceJet& jet,
                                                double A) {
    cplx w = jet.psi0 + jet.sigma0 * std::exp(cplx(0.0, 2.0 * A));
    return {A - std::arg(w), A + M_PI / 2.0};
}

ContactFormsH contact_forms_H(const SurfaceJet& jet, double A) {
    double s = std::norm(jet.nu);
    cplx c = (jet.psi0 * std::exp(cplx(0.0, -A)) +
              jet.sigma0 * std::exp(cplx(0.0, A))) /
             (1.0 + s);
    ContactFormsH out;
    out.omega_plus = Eigen::Vector3d(2.0 * c.imag(), 2.0 * c.real(), 0.0);
    out.omega_minus = Eigen::Vector3d(2.0 * std::cos(A), 2.0 * std::sin(A), 0.0);
    out.defect_plus = -2.0 * (jet.psi0 * jet.psi0 - std::norm(jet.sigma0)) /
                      ((1.0 + s) * (1.0 + s));
    out.defect_minus = -2.0;
    return out;
}

OneFormField omega_plus_field(const SupportSurface& S) {
    OneFormField f;
    f.dim = 3;
    SupportSurface surf = S;
    f.eval = [surf](const Eigen::VectorXd& p) -> Eigen::VectorXd {
        SurfaceJet jet = surface_jet(surf, cplx(p[0], p[1]));
        return contact_forms_H(jet, p[2]).omega_plus;
    };
    return f;
}

OneFormField omega_minus_field() {
    OneFormField f;
    f.dim = 3;
    f.eval = [](const Eigen::VectorXd& p) -> Eigen::VectorXd {
        return Eigen::Vector3d(2.0 * std::cos(p[2]), 2.0 * std::sin(p[2]),
                               0.0);
    };
    return f;
}

double constant_angle_nullity(const SurfaceJet& jet, double A, double eps) {
    if (eps <= 0.0 || eps >= 1.0)
        throw domain_error("constant_angle_nullity: need 0 < eps < 1");
    double s = std::norm(jet.nu);
    double u1 = 1.0 + eps * eps;
    double u2 = 1.0 + s;
    double im = (jet.sigma0 * std::exp(cplx(0.0, 2.0 * A))).imag();
    double conv = jet.psi0 * jet.psi0 - std::norm(jet.sigma0);
    // Chart determinant in (Re nu, Im nu, A); the constant matches the
    // numeric pullback of the line-space metric (see tests).
    return -16.0 * eps * eps * (1.0 - eps * eps) * (1.0 - eps * eps) * im *
           conv / (u1 * u1 * u1 * u1 * u2 * u2 * u2 * u2);
}

std::function<Vec4(const Eigen::VectorXd&)> hypersurface_map(
    const SupportSurface& S, std::optional<double> eps) {
    SupportSurface surf = S;
    return [surf, eps](const Eigen::VectorXd& p) -> Vec4 {
        SurfaceJet jet = surface_jet(surf, cplx(p[0], p[1]));
        OrientedLineCoords line = tangent_hypersurface_point(jet, p[2], eps);
        Vec4 y;
        y << line.xi.real(), line.xi.imag(), line.eta.real(), line.eta.imag();
        return y;
    };
}

}  // namespace neutral
