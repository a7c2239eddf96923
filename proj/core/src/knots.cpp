#include "neutral/knots.hpp"

#include <cmath>

namespace neutral {

namespace {

// Centered difference over the sample list, cyclic for closed knots.
template <typename T>
T knot_derivative(const std::vector<LineKnot::Sample>& s, int i,
                  const std::function<T(const LineKnot::Sample&)>& get,
                  bool closed) {
    int n = static_cast<int>(s.size());
    int ip = (i + 1) % n, im = (i - 1 + n) % n;
    double du;
    if (!closed && (i == 0 || i == n - 1)) {
        ip = (i == 0) ? 1 : i;
        im = (i == 0) ? 0 : i - 1;
        du = s[ip].u - s[im].u;
    } else {
        du = s[ip].u - s[im].u;
        if (closed && du <= 0.0) du += s.back().u - s.front().u +
                                       (s[1].u - s[0].u);  // wrap estimate
    }
    return (get(s[ip]) - get(s[im])) / du;
}

}  // namespace

double angle_for_direction(cplx nu, const Vec3& dir) {
    cplx xi = direction_to_xi(dir);
    cplx phase = (xi - nu) / (1.0 + std::conj(nu) * xi);
    if (std::abs(std::abs(phase) - 1.0) > 1e-8)
        throw domain_error(
            "angle_for_direction: direction is not orthogonal to the normal");
    return std::arg(phase);
}

LineKnot knot_along_curve(const SupportSurface& S,
                          const std::function<cplx(double)>& nu_of_u,
                          int n_samples, double offset) {
    LineKnot knot;
    knot.closed = true;
    const double du = 1e-6;
    for (int k = 0; k < n_samples; ++k) {
        double u = 2.0 * M_PI * k / n_samples;
        cplx nu = nu_of_u(u);
        SurfaceJet jet = surface_jet(S, nu);
        Vec3 cp = support_point(surface_jet(S, nu_of_u(u + du)));
        Vec3 cm = support_point(surface_jet(S, nu_of_u(u - du)));
        Vec3 tangent = (cp - cm).normalized();
        Vec3 normal = support_normal(nu);
        Vec3 side = normal.cross(tangent);
        Vec3 dir = std::cos(offset) * tangent + std::sin(offset) * side;
        knot.samples.push_back({u, nu, angle_for_direction(nu, dir)});
    }
    return knot;
}

LegendrianReport legendrian_classify(const LineKnot& knot,
                                     const SupportSurface& S, double tol) {
    const auto& s = knot.samples;
    int n = static_cast<int>(s.size());
    if (n < 3) throw domain_error("legendrian_classify: too few samples");
    for (int i = 0; i + 1 < n; ++i)
        if (std::abs(s[i + 1].nu - s[i].nu) + std::abs(s[i + 1].A - s[i].A) <
            1e-15)
            throw domain_error("legendrian_classify: repeated samples");

    LegendrianReport rep;
    rep.alpha = rep.beta = rep.tangent_to_c = rep.normal_to_c = true;
    rep.curvature_line_or_umbilic = true;

    std::function<cplx(const LineKnot::Sample&)> get_nu =
        [](const LineKnot::Sample& q) { return q.nu; };
    std::function<Vec3(const LineKnot::Sample&)> get_c = [&](
        const LineKnot::Sample& q) {
        return support_point(surface_jet(S, q.nu));
    };

    for (int i = 0; i < n; ++i) {
        SurfaceJet jet = surface_jet(S, s[i].nu);
        auto [Ba, Bb] = null_direction_angles(jet, s[i].A);
        cplx dnu = knot_derivative<cplx>(s, i, get_nu, knot.closed);
        double scale = std::abs(dnu);
        if (scale > tol) {
            if (std::abs((dnu * std::exp(cplx(0.0, -Ba))).imag()) >
                tol * scale)
                rep.alpha = false;
            if (std::abs((dnu * std::exp(cplx(0.0, -Bb))).imag()) >
                tol * scale)
                rep.beta = false;
        }
        Vec3 cdot = knot_derivative<Vec3>(s, i, get_c, knot.closed);
        Vec3 that = cdot.normalized();
        Vec3 dir = line_direction(
            tangent_hypersurface_point(jet, s[i].A).xi);
        if (dir.cross(that).norm() > tol) rep.tangent_to_c = false;
        if (std::abs(dir.dot(that)) > tol) rep.normal_to_c = false;
        bool umb = std::abs(jet.sigma0) <= tol * jet.psi0;
        bool curv = std::abs((jet.sigma0 *
                              std::exp(cplx(0.0, 2.0 * s[i].A))).imag()) <=
                    tol * std::max(std::abs(jet.sigma0), tol);
        if (!umb && !curv) rep.curvature_line_or_umbilic = false;
    }

    int count = (rep.beta ? 1 : 0) + (rep.normal_to_c ? 1 : 0) +
                (rep.curvature_line_or_umbilic ? 1 : 0);
    if (count == 2)
        throw std::logic_error(
            "legendrian_classify: two of {beta, normal, curvature-line} hold "
            "without the third");
    return rep;
}

}  // namespace neutral
