#include "neutral/flows.hpp"

#include <cmath>

namespace neutral {

namespace {

using Field = std::pair<cplx, double> (*)(const SurfaceJet&, double);

Eigen::Vector3d eval_field(const SupportSurface& S, const Eigen::Vector3d& y,
                           Field field) {
    SurfaceJet jet = surface_jet(S, cplx(y[0], y[1]));
    auto [dnu, dA] = field(jet, y[2]);
    return Eigen::Vector3d(dnu.real(), dnu.imag(), dA);
}

Eigen::Vector3d rk4_step(const SupportSurface& S, const Eigen::Vector3d& y,
                         double h, Field field) {
    Eigen::Vector3d k1 = eval_field(S, y, field);
    Eigen::Vector3d k2 = eval_field(S, y + 0.5 * h * k1, field);
    Eigen::Vector3d k3 = eval_field(S, y + 0.5 * h * k2, field);
    Eigen::Vector3d k4 = eval_field(S, y + h * k3, field);
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate(const SupportSurface& S, HState init, double dt, int n,
                     double step_tol, Field field) {
    Trajectory traj;
    Eigen::Vector3d y(init.nu.real(), init.nu.imag(), init.A);
    traj.t.reserve(n + 1);
    traj.states.reserve(n + 1);
    traj.t.push_back(0.0);
    traj.states.push_back(init);
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d full = rk4_step(S, y, dt, field);
        Eigen::Vector3d half =
            rk4_step(S, rk4_step(S, y, dt / 2.0, field), dt / 2.0, field);
        if ((full - half).norm() > step_tol)
            throw degeneracy_error(
                "flow: step validation failed; reduce dt or check convexity "
                "along the trajectory");
        y = half;  // keep the better estimate
        traj.t.push_back(dt * (i + 1));
        traj.states.push_back({cplx(y[0], y[1]), y[2]});
    }
    return traj;
}

}  // namespace

std::pair<cplx, double> reeb_field_flat(const SurfaceJet& jet, double A) {
    double s = std::norm(jet.nu);
    double D = 2.0 * (jet.psi0 * jet.psi0 - std::norm(jet.sigma0));
    cplx eA = std::exp(cplx(0.0, A));
    cplx nb = std::conj(jet.nu);
    cplx dnu = cplx(0.0, 1.0) * (1.0 + s) *
               (jet.psi0 * eA - std::conj(jet.sigma0) / eA) / D;
    cplx dAterm = (jet.psi0 * nb - jet.sigma0 * jet.nu) * eA +
                  (jet.psi0 * jet.nu - std::conj(jet.sigma0) * nb) / eA;
    return {dnu, dAterm.real() / D};
}

std::pair<cplx, double> geodesic_field_flat(const SurfaceJet& jet, double A) {
    double s = std::norm(jet.nu);
    double D = 2.0 * (jet.psi0 * jet.psi0 - std::norm(jet.sigma0));
    cplx eA = std::exp(cplx(0.0, A));
    cplx nb = std::conj(jet.nu);
    cplx dnu = (1.0 + s) * (jet.psi0 * eA + std::conj(jet.sigma0) / eA) / D;
    cplx dAterm = cplx(0.0, -1.0) *
                  ((jet.psi0 * nb - jet.sigma0 * jet.nu) * eA -
                   (jet.psi0 * jet.nu - std::conj(jet.sigma0) * nb) / eA);
    return {dnu, dAterm.real() / D};
}

Trajectory reeb_flow(const SupportSurface& S, HState init, double dt, int n,
                     double step_tol) {
    return integrate(S, init, dt, n, step_tol, &reeb_field_flat);
}

Trajectory geodesic_flow(const SupportSurface& S, HState init, double dt,
                         int n, double step_tol) {
    return integrate(S, init, dt, n, step_tol, &geodesic_field_flat);
}

}  // namespace neutral
