// Acceptance gate: one line per criterion, exit 0 iff all pass.

#include "neutral/compactification.hpp"
#include "neutral/flows.hpp"
#include "neutral/intersection.hpp"
#include "neutral/knots.hpp"
#include "neutral/space_form.hpp"
#include "neutral/support_surface.hpp"
#include "neutral/tensor.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace neutral;

namespace {

int failures = 0;

double now_s() {
    using clk = std::chrono::steady_clock;
    static const auto t0 = clk::now();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void report(int idx, const char* what, bool pass, const std::string& detail,
            double secs) {
    if (!pass) ++failures;
    std::printf("%s  %2d. %s (%s, %.2fs)\n", pass ? "PASS" : "FAIL", idx,
                what, detail.c_str(), secs);
    std::fflush(stdout);
}

std::mt19937_64 rng(2026);
double uni(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

void criterion_1() {
    double t0 = now_s();
    auto es = einstein_static_metric();
    Mat4 flat = Mat4::Zero();
    flat.diagonal() << 1, 1, -1, -1;
    auto map = [](const Eigen::VectorXd& x) {
        CompactChartPoint c = to_compact(Vec4(x[0], x[1], x[2], x[3]));
        return Vec4(c.p, c.q, c.theta1, c.theta2);
    };
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec4 x(uni(-10, 10), uni(-10, 10), uni(-10, 10), uni(-10, 10));
        auto c = to_compact(x);
        double om = conformal_factor(c);
        Eigen::VectorXd p = x;
        Eigen::MatrixXd pb = pullback_metric(
            map, es, p, 1e-6, [](const Eigen::VectorXd& y) -> Eigen::MatrixXd {
                return to_compact_jacobian(Vec4(y[0], y[1], y[2], y[3]));
            });
        Mat4 want = 0.25 * om * om * flat;
        worst = std::max(worst, (pb - want).norm() / want.norm());
    }
    double dt = now_s() - t0;
    report(1, "conformal compactification", worst <= 1e-7 && dt <= 5.0,
           "worst rel err " + std::to_string(worst), dt);
}

void criterion_2() {
    double t0 = now_s();
    auto es = einstein_static_metric();
    double worst = 0.0, worst_scal = 0.0;
    for (int i = 0; i < 100; ++i) {
        double p = uni(0.15, 1.35);
        double q = uni(-1.0, 1.0) * (p - 0.1);
        Vec4 pt(p, q, uni(0, 2 * M_PI), uni(0, 2 * M_PI));
        Mat4 ric = ricci(es, pt);
        double spq = std::sin(p + q), smq = std::sin(p - q);
        worst = std::max({worst, std::abs(ric(0, 0) - 2.0),
                          std::abs(ric(1, 1) - 2.0),
                          std::abs(ric(2, 2) - spq * spq),
                          std::abs(ric(3, 3) - smq * smq)});
        worst_scal = std::max(worst_scal,
                              std::abs(scalar_curvature(es, pt)));
    }
    double dt = now_s() - t0;
    report(2, "Ricci of the Einstein-static chart",
           worst <= 1e-4 && worst_scal <= 1e-4 && dt <= 10.0,
           "worst component err " + std::to_string(worst) + ", scalar " +
               std::to_string(worst_scal),
           dt);
}

void criterion_3() {
    double t0 = now_s();
    auto es = einstein_static_metric();
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 50; ++i) {
        double q = uni(-1.5, 1.5);
        Mat4 g = es.eval(Vec4(M_PI / 2.0, q, uni(0, 6.28), uni(0, 6.28)));
        auto sig = metric_signature(g.bottomRightCorner<3, 3>());
        if (sig.neg != 1 || sig.zero != 1 || sig.pos != 1) ok = false;
    }
    auto bp = boundary_null_planes(0.3, 0.7, 1.1);
    double fa = std::abs(frobenius_defect(bp.alpha_form, Vec3(0.3, 0.7, 1.1)));
    double fb = std::abs(frobenius_defect(bp.beta_form, Vec3(0.3, 0.7, 1.1)));
    ok = ok && fa <= 1e-12 && fb <= 1e-12;
    CompactChartPoint c;
    c.p = M_PI / 2.0;
    double locus_err = 0.0;
    for (double q : {M_PI / 2.0, -M_PI / 2.0}) {
        c.q = q;
        locus_err = std::max(locus_err, grad_omega_boundary_locus(c));
    }
    for (double q : {0.0, 0.5, -1.1}) {
        c.q = q;
        locus_err = std::max(locus_err,
                             std::abs(grad_omega_boundary_locus(c) -
                                      2.0 * std::abs(std::cos(q))));
    }
    ok = ok && locus_err <= 1e-9;
    double link = hopf_link_linking_number(512);
    ok = ok && std::abs(std::abs(link) - 1.0) <= 1e-3;
    double dt = now_s() - t0;
    report(3, "boundary structure and Hopf link", ok && dt <= 5.0,
           "frobenius " + std::to_string(std::max(fa, fb)) + ", |link| " +
               std::to_string(std::abs(link)),
           dt);
}

void criterion_4() {
    double t0 = now_s();
    auto flat = flat_neutral_metric();
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double r = uni(0.1, 5.0), a = uni(0, 2 * M_PI), b = uni(0, 2 * M_PI);
        Vec4 f(r * std::cos(a), r * std::sin(a), r * std::cos(b),
               r * std::sin(b));
        worst = std::max(worst, std::abs(f.dot(flat.eval(f) * f)));
    }
    bool ok = worst <= 1e-12;
    Mat4 Jp = J_plus_flat(), Jm = J_minus_flat();
    TangentPlane alpha{Vec4::Zero(), Vec4(1, 0, 1, 0), Vec4(0, 1, 0, 1)};
    TangentPlane beta{Vec4::Zero(), Vec4(1, 0, 1, 0), Vec4(0, 1, 0, -1)};
    for (int i = 0; i < 100; ++i) {
        double a = uni(-2, 2), b = uni(-2, 2), cc = uni(-2, 2), d = uni(-2, 2);
        if (std::abs(a * d - b * cc) < 0.05) continue;
        TangentPlane ra{alpha.base, a * alpha.u + b * alpha.v,
                        cc * alpha.u + d * alpha.v};
        TangentPlane rb{beta.base, a * beta.u + b * beta.v,
                        cc * beta.u + d * beta.v};
        ok = ok && classify_null_plane(ra, flat, Jp, Jm) == PlaneClass::alpha;
        ok = ok && classify_null_plane(rb, flat, Jp, Jm) == PlaneClass::beta;
    }
    double dt = now_s() - t0;
    report(4, "null cone algebra", ok, "cone worst " + std::to_string(worst),
           dt);
}

void criterion_5() {
    double t0 = now_s();
    auto S = spheroid_support(2.0, 1.0);
    auto map = hypersurface_map(S);
    auto Lf = line_space_metric_field();
    double worst = 0.0, worstdet = 0.0;
    for (int i = 0; i < 1000; ++i) {
        cplx nu(uni(-1.5, 1.5), uni(-1.5, 1.5));
        double A = uni(0, 2 * M_PI);
        auto j = surface_jet(S, nu);
        Mat3 closed = induced_metric_H(j, A);
        Eigen::VectorXd p(3);
        p << nu.real(), nu.imag(), A;
        Eigen::MatrixXd pb = pullback_metric(map, Lf, p);
        worst = std::max(worst,
                         (pb - closed).norm() / std::max(1.0, closed.norm()));
        worstdet = std::max(worstdet, std::abs(closed.determinant()));
    }
    bool ok = worst <= 1e-7 && worstdet <= 1e-10;
    // exhaustive B-scan: sign changes of the null quadratic vs closed-form angles
    int grid = 1440;
    double scan_tol = 2 * M_PI / grid;
    for (int jet_i = 0; jet_i < 100 && ok; ++jet_i) {
        cplx nu(uni(-1.2, 1.2), uni(-1.2, 1.2));
        double A = uni(0, 2 * M_PI);
        auto j = surface_jet(S, nu);
        auto [Ba, Bb] = null_direction_angles(j, A);
        cplx Pv = j.sigma0 + j.psi0 * std::exp(cplx(0, -2 * A));
        cplx Qv = j.sigma0 * std::exp(cplx(0, 2 * A));
        auto f = [&](double B) {
            return std::imag(Pv * std::exp(cplx(0, 2 * B)) + Qv);
        };
        std::vector<double> crossings;
        for (int k = 0; k < grid; ++k) {
            double B0 = M_PI * k / grid, B1 = M_PI * (k + 1) / grid;
            if (f(B0) == 0.0 || f(B0) * f(B1) < 0.0) crossings.push_back(B0);
        }
        for (double want : {Ba, Bb}) {
            double wm = std::fmod(std::fmod(want, M_PI) + M_PI, M_PI);
            double best = M_PI;
            for (double cr : crossings) {
                double d = std::abs(cr - wm);
                best = std::min(best, std::min(d, M_PI - d));
            }
            if (best > scan_tol) ok = false;
        }
    }
    double dt = now_s() - t0;
    report(5, "flat tangent hypersurface metric", ok,
           "worst rel " + std::to_string(worst) + ", worst |det| " +
               std::to_string(worstdet),
           dt);
}

void criterion_6() {
    double t0 = now_s();
    auto S = spheroid_support(2.0, 1.0);
    auto wp = omega_plus_field(S);
    auto wm = omega_minus_field();
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        cplx nu(uni(-1.2, 1.2), uni(-1.2, 1.2));
        double A = uni(0, 2 * M_PI);
        auto j = surface_jet(S, nu);
        auto cf = contact_forms_H(j, A);
        double s = std::norm(nu);
        double closed = -2.0 * (j.psi0 * j.psi0 - std::norm(j.sigma0)) /
                        ((1 + s) * (1 + s));
        Vec3 p(nu.real(), nu.imag(), A);
        worst = std::max(worst, std::abs(cf.defect_plus - closed));
        worst = std::max(worst, std::abs(frobenius_defect(wp, p, 1e-5, 2.0) -
                                         closed));
        worst = std::max(worst, std::abs(frobenius_defect(wm, p, 1e-5, 2.0) +
                                         2.0));
        worst = std::max(worst, std::abs(cf.defect_minus + 2.0));
    }
    bool ok = worst <= 1e-6;
    // space-form defects on latitude spheres of 10 radii
    double sf_worst = 0.0;
    for (int eps : {1, -1}) {
        for (double rho : {0.3, 0.6, 0.9, 1.2, 1.5}) {
            LatitudeSphere sp{rho, eps};
            double al = uni(0.4, 1.2), be = uni(0, 2 * M_PI),
                   th = uni(0, 2 * M_PI);
            auto fr = sp.frame(al, be);
            auto [d3, d2] = contact_defects_spaceform(fr, th);
            sf_worst = std::max(sf_worst, std::abs(d3 - 1.0));
            sf_worst = std::max(sf_worst, std::abs(d2 + fr.k1 * fr.k2));
            OneFormField e3;
            e3.dim = 3;
            e3.eval = [&](const Eigen::VectorXd& q) {
                double w = sp.warp();
                Eigen::VectorXd v(3);
                v << std::sin(q[2]) * w,
                    -std::cos(q[2]) * w * std::sin(q[0]), 0.0;
                return v;
            };
            OneFormField e2f;
            e2f.dim = 3;
            e2f.eval = [&](const Eigen::VectorXd& q) {
                auto f = sp.frame(q[0], q[1]);
                double w = sp.warp();
                Eigen::VectorXd v(3);
                v << f.k1 * std::cos(q[2]) * w,
                    f.k2 * std::sin(q[2]) * w * std::sin(q[0]), 0.0;
                return v;
            };
            double vol = sp.warp() * sp.warp() * std::sin(al);
            sf_worst = std::max(
                sf_worst,
                std::abs(-frobenius_defect(e3, Vec3(al, be, th), 1e-5, vol) -
                         d3));
            sf_worst = std::max(
                sf_worst,
                std::abs(frobenius_defect(e2f, Vec3(al, be, th), 1e-5, vol) -
                         d2));
        }
    }
    ok = ok && sf_worst <= 1e-6;
    double dt = now_s() - t0;
    report(6, "contact form defects", ok,
           "flat worst " + std::to_string(worst) + ", space-form worst " +
               std::to_string(sf_worst),
           dt);
}

void criterion_7() {
    double t0 = now_s();
    auto S = spheroid_support(2.0, 1.0);
    auto Sph = sphere_support(1.5);
    auto par5 = [](double u) { return 0.5 * std::exp(cplx(0.0, u)); };
    auto par9 = [](double u) { return 0.9 * std::exp(cplx(0.0, u)); };
    auto gen = [](double u) {
        return cplx(0.5 * std::cos(u), 0.3 * std::sin(2.0 * u));
    };
    struct Case {
        const SupportSurface* surf;
        std::function<cplx(double)> curve;
        double offset;
    };
    std::vector<Case> cases = {
        {&S, par5, 0.0},          {&S, par5, M_PI / 2.0},
        {&S, par5, 0.7},          {&S, par9, 0.0},
        {&S, par9, M_PI / 2.0},   {&S, gen, 0.0},
        {&S, gen, M_PI / 2.0},    {&S, gen, 0.7},
        {&Sph, gen, 0.0},         {&Sph, gen, M_PI / 2.0},
        {&Sph, gen, 0.7},         {&Sph, par5, 0.0},
        {&Sph, par5, M_PI / 2.0},
    };
    bool ok = true;
    int violations = 0;
    std::set<int> rows;
    for (const auto& c : cases) {
        try {
            auto knot = knot_along_curve(*c.surf, c.curve, 1024, c.offset);
            auto r = legendrian_classify(knot, *c.surf, 1e-4);
            int truths = (int)r.beta + (int)r.normal_to_c +
                         (int)r.curvature_line_or_umbilic;
            if (truths == 2) ++violations;  // two without the third
            rows.insert(((int)r.beta << 2) | ((int)r.normal_to_c << 1) |
                        (int)r.curvature_line_or_umbilic);
        } catch (const std::exception&) {
            ++violations;
        }
    }
    ok = violations == 0 && cases.size() >= 12 && rows.size() >= 4;
    double dt = now_s() - t0;
    report(7, "Legendrian triangle on knots", ok,
           std::to_string(cases.size()) + " cases, " +
               std::to_string(rows.size()) + " truth rows, " +
               std::to_string(violations) + " violations",
           dt);
}

void criterion_8() {
    double t0 = now_s();
    auto S = spheroid_support(2.0, 1.0);
    auto wp = omega_plus_field(S);
    double worst_pair = 0.0, worst_contr = 0.0;
    for (int i = 0; i < 500; ++i) {
        cplx nu(uni(-1.2, 1.2), uni(-1.2, 1.2));
        double A = uni(0, 2 * M_PI);
        auto j = surface_jet(S, nu);
        auto [dnu, dA] = reeb_field_flat(j, A);
        auto cf = contact_forms_H(j, A);
        double pair = cf.omega_plus[0] * dnu.real() +
                      cf.omega_plus[1] * dnu.imag() + cf.omega_plus[2] * dA;
        worst_pair = std::max(worst_pair, std::abs(pair - 1.0));
        Vec3 p(nu.real(), nu.imag(), A);
        Vec3 X(dnu.real(), dnu.imag(), dA);
        double h = 1e-5;
        Mat3 dw;
        for (int k = 0; k < 3; ++k) {
            Vec3 pp = p, pm = p;
            pp[k] += h;
            pm[k] -= h;
            dw.row(k) = ((wp.eval(pp) - wp.eval(pm)) / (2 * h)).transpose();
        }
        Vec3 contr;
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += (dw(k, c) - dw(c, k)) * X[k];
            contr[c] = s;
        }
        worst_contr = std::max(worst_contr, contr.norm());
    }
    // space-form states: eta3(X) = 1 and d eta3(X, .) = 0 in the chart
    for (int i = 0; i < 500; ++i) {
        int eps = (i % 2 == 0) ? 1 : -1;
        LatitudeSphere sp{uni(0.4, 1.4), eps};
        double al = uni(0.4, 1.2), th = uni(0, 2 * M_PI);
        double w = sp.warp();
        Vec3 X(std::sin(th) / w, -std::cos(th) / (w * std::sin(al)),
               std::cos(th) * std::cos(al) / (std::sin(al) * w));
        OneFormField e3;
        e3.dim = 3;
        e3.eval = [&](const Eigen::VectorXd& q) {
            Eigen::VectorXd v(3);
            v << std::sin(q[2]) * w, -std::cos(q[2]) * w * std::sin(q[0]),
                0.0;
            return v;
        };
        Vec3 p(al, uni(0, 2 * M_PI), th);
        worst_pair =
            std::max(worst_pair, std::abs(e3.eval(p).dot(X) - 1.0));
        double h = 1e-5;
        Mat3 dw;
        for (int k = 0; k < 3; ++k) {
            Vec3 pp = p, pm = p;
            pp[k] += h;
            pm[k] -= h;
            dw.row(k) = ((e3.eval(pp) - e3.eval(pm)) / (2 * h)).transpose();
        }
        Vec3 contr;
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += (dw(k, c) - dw(c, k)) * X[k];
            contr[c] = s;
        }
        worst_contr = std::max(worst_contr, contr.norm());
    }
    bool ok = worst_pair <= 1e-8 && worst_contr <= 1e-8;
    // flat Reeb flow = geodesic flow a quarter turn away, 10 time units
    double flow_err = 0.0;
    for (HState init :
         {HState{cplx(1.0, 0.0), 0.3}, HState{cplx(0.4, 0.1), 0.0}}) {
        auto tr = reeb_flow(S, init, 0.005, 2000);
        auto tg =
            geodesic_flow(S, HState{init.nu, init.A + M_PI / 2}, 0.005, 2000);
        for (size_t k = 0; k < tr.states.size(); ++k)
            flow_err = std::max(
                flow_err, std::abs(tr.states[k].nu - tg.states[k].nu) +
                              std::abs(tr.states[k].A -
                                       (tg.states[k].A - M_PI / 2)));
    }
    ok = ok && flow_err <= 1e-6;
    // space-form Reeb contact curves are surface geodesics
    double wacc = 0.0;
    for (int eps : {1, -1}) {
        LatitudeSphere sp{0.8, eps};
        auto tr = reeb_flow_spaceform(sp, Eigen::Vector3d(0.9, 0.4, 0.7),
                                      0.005, 400);
        for (int k = 2; k + 2 < (int)tr.states.size(); k += 17) {
            auto P = [&](int m) {
                return sp.position(tr.states[m][0], tr.states[m][1]);
            };
            Vec4 acc = (P(k + 1) - 2 * P(k) + P(k - 1)) / (0.005 * 0.005);
            auto f2 = sp.frame(tr.states[k][0], tr.states[k][1]);
            wacc = std::max(wacc,
                            std::hypot(inner_vec_eps(acc, f2.e1, eps) * eps,
                                       inner_vec_eps(acc, f2.e2, eps) * eps));
        }
    }
    ok = ok && wacc <= 1e-6;
    double dt = now_s() - t0;
    report(8, "Reeb contract", ok,
           "pairing " + std::to_string(worst_pair) + ", contraction " +
               std::to_string(worst_contr) + ", flow " +
               std::to_string(flow_err) + ", accel " + std::to_string(wacc),
           dt);
}

void criterion_9() {
    double t0 = now_s();
    bool ok = true;
    int done = 0;
    std::set<int> seen;
    auto run_one = [&](const IntersectionConfig& cfg) {
        auto want = classify(cfg);
        auto r = brute_force_intersection(cfg, 64);
        if (r.classification != want) ok = false;
        seen.insert((int)want);
        if (want == IntersectionClass::circle)
            for (const auto& s : r.points)
                if (std::abs(s.phi - M_PI / 2.0) > 1e-9) ok = false;
        ++done;
    };
    for (int i = 0; i < 120; ++i) {
        double r1 = uni(0.5, 3.0);
        double r2 = r1 * uni(0.2, 1.0);
        run_one({r1, r2, uni(0.01, 4.0)});
    }
    for (int i = 0; i < 20; ++i) {  // exact boundaries hit both cases
        double r1 = uni(0.5, 3.0), r2 = r1 * uni(0.2, 0.9);
        run_one({r1, r2, r1 - r2});
        run_one({r1, r2, r1 + r2});
    }
    for (double s : {1e-9, -1e-9}) {  // 20 within 1e-9 of each boundary
        for (int i = 0; i < 10; ++i) {
            double r1 = uni(0.5, 3.0), r2 = r1 * uni(0.2, 0.9);
            run_one({r1, r2, r1 - r2 + s});
            run_one({r1, r2, r1 + r2 + s});
        }
    }
    double dt = now_s() - t0;
    ok = ok && done >= 200 && (int)seen.size() == 4 && dt <= 60.0;
    report(9, "intersection classification vs brute force", ok,
           std::to_string(done) + " configs, " +
               std::to_string(seen.size()) + " cases seen",
           dt);
}

void criterion_10() {
    double t0 = now_s();
    std::vector<IntersectionConfig> cfgs = {{2, 1, 4},
                                            {2, 1, 2},
                                            {3, 1.5, 5},
                                            {1.5, 1, 2},
                                            {2.5, 0.7, 3.5}};
    double worst_closed = 0.0, worst_num = 0.0;
    bool ok = true;
    for (const auto& cfg : cfgs) {
        double blo = (cfg.r1 - cfg.r2) / cfg.l;
        double bhi = std::min((cfg.r1 + cfg.r2) / cfg.l, 1.0);
        bool real_lorentz = cfg.l > cfg.r1 + cfg.r2;
        for (int i = 0; i < 20; ++i) {
            double s = blo + (bhi - blo) * (0.03 + 0.94 * (i + 0.5) / 20.0);
            double phi = std::asin(std::min(s, 1.0 - 1e-9));
            auto [s2, lam] = sigma_lambda(cfg, phi);
            double want =
                -0.25 * cfg.l * cfg.l * std::cos(phi) * std::cos(phi);
            worst_closed =
                std::max(worst_closed, std::abs(lam * lam - s2 - want));
            for (int jt = 0; jt < 20; jt += 7) {
                auto tm = torus_metric_check(cfg, phi, 2 * M_PI * jt / 20.0,
                                             Branch::plus);
                worst_num = std::max(
                    worst_num, std::abs(tm.det_numeric - tm.det_closed));
            }
            if (real_lorentz && (s2 <= 0.0 || lam * lam - s2 >= 0.0))
                ok = false;
        }
    }
    // |sigma|^2 vanishes exactly on the central parallel
    ok = ok && sigma_lambda({2, 1, 2}, M_PI / 2.0).first == 0.0;
    ok = ok && worst_closed <= 1e-10 && worst_num <= 1e-6;
    double dt = now_s() - t0;
    report(10, "intersection torus metric", ok,
           "closed " + std::to_string(worst_closed) + ", numeric " +
               std::to_string(worst_num),
           dt);
}

void criterion_11() {
    double t0 = now_s();
    bool ok = neutral_existence_parity(24, -16) == NeutralExistence::admits &&
              neutral_existence_parity(2, 0) == NeutralExistence::obstructed &&
              neutral_existence_parity(3, 1) == NeutralExistence::obstructed;
    report(11, "existence parity", ok, "K3 admits, S4 and CP2 obstructed",
           now_s() - t0);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    double total = now_s();
    std::printf("%s  total %.1fs, %d failure(s)\n",
                failures == 0 ? "PASS" : "FAIL", total, failures);
    return failures == 0 ? 0 : 1;
}
