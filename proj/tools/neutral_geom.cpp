// neutral-geom: command-line front end for the neutral geometry library.
// Every subcommand prints a JSON run report to stdout and exits 0 when all
// checks pass, 1 on a failed check, 2 on a usage error.

#include "CLI11.hpp"
#include "json.hpp"

#include "neutral/compactification.hpp"
#include "neutral/flows.hpp"
#include "neutral/intersection.hpp"
#include "neutral/io.hpp"
#include "neutral/knots.hpp"
#include "neutral/space_form.hpp"
#include "neutral/support_surface.hpp"
#include "neutral/tensor.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace neutral;

namespace {

struct Check {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
};

struct RunReport {
    std::string command;
    json inputs = json::object();
    json extra = json::object();
    std::vector<Check> checks;
    std::vector<std::string> artifacts;
    bool timestamp = true;

    // pass is recomputed here, at serialization time
    int emit() const {
        json j;
        j["schema"] = "neutral-geom/1";
        j["command"] = command;
        j["inputs"] = inputs;
        for (auto& [k, v] : extra.items()) j[k] = v;
        j["checks"] = json::array();
        bool all = true;
        for (const auto& c : checks) {
            bool pass = std::abs(c.expected - c.actual) <= c.tolerance;
            all = all && pass;
            j["checks"].push_back({{"name", c.name},
                                   {"expected", c.expected},
                                   {"actual", c.actual},
                                   {"tolerance", c.tolerance},
                                   {"pass", pass}});
        }
        j["artifacts"] = artifacts;
        j["pass"] = all;
        if (timestamp) {
            auto now = std::chrono::system_clock::now();
            j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                                 now.time_since_epoch())
                                 .count();
        }
        std::cout << j.dump(2) << "\n";
        return all ? 0 : 1;
    }
};

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

int cmd_compactify(int n, unsigned seed, double tol, bool ts) {
    RunReport rep;
    rep.command = "compactify";
    rep.inputs = {{"grid", n}, {"seed", seed}, {"tol", tol}};
    rep.timestamp = ts;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    auto es = einstein_static_metric();
    Mat4 flat = Mat4::Zero();
    flat.diagonal() << 1, 1, -1, -1;
    auto map = [](const Eigen::VectorXd& x) {
        CompactChartPoint c = to_compact(Vec4(x[0], x[1], x[2], x[3]));
        return Vec4(c.p, c.q, c.theta1, c.theta2);
    };
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec4 x(U(rng), U(rng), U(rng), U(rng));
        CompactChartPoint c = to_compact(x);
        double om = conformal_factor(c);
        Eigen::VectorXd p = x;
        Eigen::MatrixXd pb = pullback_metric(map, es, p, 1e-6,
            [&](const Eigen::VectorXd& y) -> Eigen::MatrixXd {
                return to_compact_jacobian(Vec4(y[0], y[1], y[2], y[3]));
            });
        Mat4 want = 0.25 * om * om * flat;
        worst = std::max(worst, (pb - want).norm() / want.norm());
    }
    rep.checks.push_back({"conformality_rel_error", 0.0, worst, tol});
    return rep.emit();
}

int cmd_curvature(const std::string& at, double tol, bool ts) {
    auto v = parse_csv_doubles(at);
    if (v.size() != 4) return 2;
    RunReport rep;
    rep.command = "curvature";
    rep.inputs = {{"at", v}, {"tol", tol}};
    rep.timestamp = ts;
    Vec4 p(v[0], v[1], v[2], v[3]);
    auto es = einstein_static_metric();
    Mat4 ric = ricci(es, p);
    rep.checks.push_back({"R_pp", 2.0, ric(0, 0), tol});
    rep.checks.push_back({"R_qq", 2.0, ric(1, 1), tol});
    double spq = std::sin(p[0] + p[1]), smq = std::sin(p[0] - p[1]);
    rep.checks.push_back({"R_theta1theta1", spq * spq, ric(2, 2), tol});
    rep.checks.push_back({"R_theta2theta2", smq * smq, ric(3, 3), tol});
    rep.checks.push_back({"scalar", 0.0, scalar_curvature(es, p), tol});
    return rep.emit();
}

int cmd_linespace(int n, unsigned seed, double tol, bool ts) {
    RunReport rep;
    rep.command = "linespace";
    rep.inputs = {{"grid", n}, {"seed", seed}, {"tol", tol}};
    rep.timestamp = ts;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    auto flat = flat_neutral_metric();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = 0.1 + 5.0 * U(rng);
        double a = 2 * M_PI * U(rng), b = 2 * M_PI * U(rng);
        Vec4 f(r * std::cos(a), r * std::sin(a), r * std::cos(b),
               r * std::sin(b));
        worst = std::max(worst, std::abs(f.dot(flat.eval(f) * f)));
    }
    rep.checks.push_back({"null_cone_max", 0.0, worst, tol});
    TangentPlane alpha{Vec4::Zero(), Vec4(1, 0, 1, 0), Vec4(0, 1, 0, 1)};
    TangentPlane beta{Vec4::Zero(), Vec4(1, 0, 1, 0), Vec4(0, 1, 0, -1)};
    auto ca = classify_null_plane(alpha, flat, J_plus_flat(), J_minus_flat());
    auto cb = classify_null_plane(beta, flat, J_plus_flat(), J_minus_flat());
    rep.checks.push_back({"alpha_plane_class",
                          (double)PlaneClass::alpha, (double)ca, 0.0});
    rep.checks.push_back({"beta_plane_class",
                          (double)PlaneClass::beta, (double)cb, 0.0});
    // incidence round trip on a random line
    std::uniform_real_distribution<double> V(-2.0, 2.0);
    cplx xi(V(rng), V(rng));
    Vec3 P(V(rng), V(rng), V(rng));
    OrientedLineCoords line{xi, incidence_eta(xi, P)};
    Vec3 Q = line_to_points(line, 0.0);
    double inc = (Q - P).cross(line_direction(xi)).norm();
    rep.checks.push_back({"incidence_residual", 0.0, inc, 1e-10});
    return rep.emit();
}

int cmd_contact(double a, double c, const std::string& nu_s, double A,
                double tol, bool ts) {
    auto v = parse_csv_doubles(nu_s);
    if (v.size() != 2) return 2;
    RunReport rep;
    rep.command = "contact";
    rep.inputs = {{"a", a}, {"c", c}, {"nu", v}, {"A", A}, {"tol", tol}};
    rep.timestamp = ts;
    auto S = spheroid_support(a, c);
    cplx nu(v[0], v[1]);
    auto jet = surface_jet(S, nu);
    auto cf = contact_forms_H(jet, A);
    Vec3 p(nu.real(), nu.imag(), A);
    double fd_p = frobenius_defect(omega_plus_field(S), p, 1e-5, 2.0);
    double fd_m = frobenius_defect(omega_minus_field(), p, 1e-5, 2.0);
    rep.checks.push_back({"defect_plus", cf.defect_plus, fd_p, tol});
    rep.checks.push_back({"defect_minus", -2.0, fd_m, tol});
    auto [dnu, dA] = reeb_field_flat(jet, A);
    double pair = cf.omega_plus[0] * dnu.real() +
                  cf.omega_plus[1] * dnu.imag() + cf.omega_plus[2] * dA;
    rep.checks.push_back({"omega_plus_of_reeb", 1.0, pair, tol});
    return rep.emit();
}

int cmd_legendrian(double a, double c, int n, double tol,
                   const std::string& out, bool ts) {
    RunReport rep;
    rep.command = "legendrian";
    rep.inputs = {{"a", a}, {"c", c}, {"grid", n}, {"tol", tol}};
    rep.timestamp = ts;
    auto S = spheroid_support(a, c);
    // lines tangent to the spheroid along a curvature-line parallel
    auto parallel = [](double u) { return 0.5 * std::exp(cplx(0.0, u)); };
    auto kt = knot_along_curve(S, parallel, n, 0.0);
    auto kn = knot_along_curve(S, parallel, n, M_PI / 2.0);
    auto rt = legendrian_classify(kt, S, tol);
    auto rn = legendrian_classify(kn, S, tol);
    rep.checks.push_back({"tangent_knot_alpha", 1.0, (double)rt.alpha, 0.0});
    rep.checks.push_back(
        {"tangent_knot_tangent_to_c", 1.0, (double)rt.tangent_to_c, 0.0});
    rep.checks.push_back({"normal_knot_beta", 1.0, (double)rn.beta, 0.0});
    rep.checks.push_back(
        {"normal_knot_curvature_line", 1.0,
         (double)rn.curvature_line_or_umbilic, 0.0});
    if (!out.empty()) {
        std::ostringstream os;
        write_knot_csv(os, kt);
        write_file(out, os.str());
        rep.artifacts.push_back(out);
    }
    return rep.emit();
}

int cmd_reeb(double a, double c, const std::string& nu_s, double A, double dt,
             int steps, double tol, const std::string& out, bool ts) {
    auto v = parse_csv_doubles(nu_s);
    if (v.size() != 2) return 2;
    RunReport rep;
    rep.command = "reeb";
    rep.inputs = {{"a", a}, {"c", c},     {"nu", v},
                  {"A", A}, {"dt", dt},   {"steps", steps},
                  {"tol", tol}};
    rep.timestamp = ts;
    auto S = spheroid_support(a, c);
    HState init{cplx(v[0], v[1]), A};
    auto tr = reeb_flow(S, init, dt, steps);
    auto tg = geodesic_flow(S, HState{init.nu, init.A + M_PI / 2}, dt, steps);
    double werr = 0.0;
    for (size_t i = 0; i < tr.states.size(); ++i)
        werr = std::max(werr, std::abs(tr.states[i].nu - tg.states[i].nu) +
                                  std::abs(tr.states[i].A -
                                           (tg.states[i].A - M_PI / 2)));
    rep.checks.push_back({"reeb_vs_geodesic_quarter_turn", 0.0, werr, tol});
    if (!out.empty()) {
        std::ostringstream os;
        write_trajectory_csv(os, tr);
        write_file(out, os.str());
        rep.artifacts.push_back(out);
    }
    return rep.emit();
}

int cmd_spaceform(double rho, int eps, double tol, bool ts) {
    if (eps != 1 && eps != -1) return 2;
    RunReport rep;
    rep.command = "spaceform";
    rep.inputs = {{"rho", rho}, {"eps", eps}, {"tol", tol}};
    rep.timestamp = ts;
    LatitudeSphere sp{rho, eps};
    double al = 0.9, be = 0.4, th = 0.7;
    auto fr = sp.frame(al, be);
    auto [d3, d2] = contact_defects_spaceform(fr, th);
    OneFormField e3;
    e3.dim = 3;
    e3.eval = [&](const Eigen::VectorXd& q) {
        double w = sp.warp();
        Eigen::VectorXd u(3);
        u << std::sin(q[2]) * w, -std::cos(q[2]) * w * std::sin(q[0]), 0.0;
        return u;
    };
    OneFormField e2f;
    e2f.dim = 3;
    e2f.eval = [&](const Eigen::VectorXd& q) {
        auto f = sp.frame(q[0], q[1]);
        double w = sp.warp();
        Eigen::VectorXd u(3);
        u << f.k1 * std::cos(q[2]) * w,
            f.k2 * std::sin(q[2]) * w * std::sin(q[0]), 0.0;
        return u;
    };
    double vol = sp.warp() * sp.warp() * std::sin(al);
    double n3 = frobenius_defect(e3, Vec3(al, be, th), 1e-5, vol);
    double n2 = frobenius_defect(e2f, Vec3(al, be, th), 1e-5, vol);
    rep.checks.push_back({"eta3_defect", d3, -n3, tol});
    rep.checks.push_back({"eta2_defect", d2, n2, tol});
    // Reeb contact curves are surface geodesics
    auto tr = reeb_flow_spaceform(sp, Eigen::Vector3d(al, be, th), 0.005, 400);
    double wacc = 0.0;
    for (int i = 2; i + 2 < (int)tr.states.size(); i += 17) {
        auto P = [&](int k) {
            return sp.position(tr.states[k][0], tr.states[k][1]);
        };
        Vec4 acc = (P(i + 1) - 2 * P(i) + P(i - 1)) / (0.005 * 0.005);
        auto f2 = sp.frame(tr.states[i][0], tr.states[i][1]);
        double a1 = inner_vec_eps(acc, f2.e1, eps) * eps;
        double a2 = inner_vec_eps(acc, f2.e2, eps) * eps;
        wacc = std::max(wacc, std::hypot(a1, a2));
    }
    rep.checks.push_back({"reeb_tangential_accel", 0.0, wacc, tol});
    return rep.emit();
}

int cmd_intersect(double r1, double r2, double l, int grid, double tol,
                  const std::string& out, bool ts) {
    RunReport rep;
    rep.command = "intersect";
    rep.inputs = {{"r1", r1}, {"r2", r2}, {"l", l},
                  {"grid", grid}, {"tol", tol}};
    rep.timestamp = ts;
    IntersectionConfig cfg{r1, r2, l};
    auto cls = classify(cfg);
    auto bf = brute_force_intersection(cfg, grid);
    rep.extra["case"] = to_string(cls);
    // K range over admissible sampled points, det formula on the same set
    double kmin = 2.0, kmax = -2.0, det_err = 0.0;
    for (const auto& s : bf.points) {
        double K = K_of_phi(cfg, s.phi);
        kmin = std::min(kmin, K);
        kmax = std::max(kmax, K);
    }
    bool det_checked = false;
    if (cls == IntersectionClass::torus ||
        cls == IntersectionClass::two_tori) {
        int count = 0;
        for (const auto& s : bf.points) {
            if (count++ % 7 != 0) continue;
            auto [s2, lam] = sigma_lambda(cfg, s.phi);
            double closed = -0.25 * l * l * std::cos(s.phi) * std::cos(s.phi);
            det_err = std::max(det_err,
                               std::abs(lam * lam - s2 - closed));
        }
        det_checked = true;
        rep.checks.push_back({"det_formula", 0.0, det_err, tol});
    }
    rep.extra["K_range"] = {bf.points.empty() ? 0.0 : kmin,
                            bf.points.empty() ? 0.0 : kmax};
    rep.extra["det_formula_checked"] = det_checked;
    rep.checks.push_back({"classify_vs_brute_force", (double)cls,
                          (double)bf.classification, 0.0});
    if (!out.empty()) {
        std::ostringstream os;
        write_point_cloud_csv(os, bf.points);
        write_file(out, os.str());
        rep.artifacts.push_back(out);
    }
    return rep.emit();
}

int cmd_parity(long chi, long tau, bool ts) {
    RunReport rep;
    rep.command = "parity";
    rep.inputs = {{"chi", chi}, {"tau", tau}};
    rep.timestamp = ts;
    auto r = neutral_existence_parity(chi, tau);
    rep.extra["case"] =
        r == NeutralExistence::admits ? "admits" : "obstructed";
    bool sum_ok = ((chi + tau) % 4 + 4) % 4 == 0;
    bool diff_ok = ((chi - tau) % 4 + 4) % 4 == 0;
    rep.checks.push_back({"parity_consistent",
                          (double)(sum_ok && diff_ok),
                          (double)(r == NeutralExistence::admits), 0.0});
    return rep.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"neutral geometry toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = 1e-8;
    unsigned seed = 7;
    std::string out;
    int grid = 0;
    bool no_ts = false;
    app.add_option("--tol", tol, "numeric tolerance");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--out", out, "CSV artifact path");
    app.add_option("--grid", grid, "grid / sample size");
    app.add_flag("--no-timestamp", no_ts, "omit timestamp from JSON");

    auto* c_comp = app.add_subcommand("compactify", "conformality checks");
    auto* c_curv = app.add_subcommand("curvature", "Ricci checks");
    std::string at = "0.4,0.1,1,2";
    c_curv->add_option("--at", at, "chart point p,q,theta1,theta2");
    auto* c_line = app.add_subcommand("linespace", "null cone / plane checks");
    auto* c_cont = app.add_subcommand("contact", "contact form checks");
    auto* c_lege = app.add_subcommand("legendrian", "Legendrian knot checks");
    auto* c_reeb = app.add_subcommand("reeb", "Reeb flow checks");
    auto* c_sf = app.add_subcommand("spaceform", "space-form checks");
    auto* c_int = app.add_subcommand("intersect", "sphere tangent tori");
    auto* c_par = app.add_subcommand("parity", "existence parity");

    double sa = 2.0, sc = 1.0, A = 1.1, dt = 0.005;
    std::string nu_s = "0.3,-0.7";
    int steps = 2000;
    for (auto* sub : {c_cont, c_lege, c_reeb}) {
        sub->add_option("--a", sa, "spheroid equatorial radius");
        sub->add_option("--c", sc, "spheroid polar radius");
    }
    c_cont->add_option("--nu", nu_s, "chart point Re,Im");
    c_cont->add_option("--A", A, "fibre angle");
    std::string reeb_nu = "1,0";
    double reeb_A = 0.3;
    c_reeb->add_option("--nu", reeb_nu, "initial Re,Im");
    c_reeb->add_option("--A", reeb_A, "initial fibre angle");
    c_reeb->add_option("--dt", dt, "time step");
    c_reeb->add_option("--steps", steps, "step count");

    double rho = 0.8;
    int eps = 1;
    c_sf->add_option("--rho", rho, "latitude sphere radius parameter");
    c_sf->add_option("--eps", eps, "space-form sign (+1 or -1)");

    double r1 = 2.0, r2 = 1.0, l = 4.0;
    c_int->add_option("--r1", r1, "first radius");
    c_int->add_option("--r2", r2, "second radius");
    c_int->add_option("--l", l, "center distance");

    long chi = 0, tau = 0;
    c_par->add_option("--chi", chi, "Euler number")->required();
    c_par->add_option("--tau", tau, "signature");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool ts = !no_ts;
    try {
        if (c_comp->parsed())
            return cmd_compactify(grid > 0 ? grid : 200, seed,
                                  tol == 1e-8 ? 1e-7 : tol, ts);
        if (c_curv->parsed())
            return cmd_curvature(at, tol == 1e-8 ? 1e-4 : tol, ts);
        if (c_line->parsed())
            return cmd_linespace(grid > 0 ? grid : 1000, seed,
                                 tol == 1e-8 ? 1e-12 : tol, ts);
        if (c_cont->parsed())
            return cmd_contact(sa, sc, nu_s, A, tol == 1e-8 ? 1e-6 : tol, ts);
        if (c_lege->parsed())
            return cmd_legendrian(sa, sc, grid > 0 ? grid : 256,
                                  tol == 1e-8 ? 1e-4 : tol, out, ts);
        if (c_reeb->parsed())
            return cmd_reeb(sa, sc, reeb_nu, reeb_A, dt, steps,
                            tol == 1e-8 ? 1e-6 : tol, out, ts);
        if (c_sf->parsed())
            return cmd_spaceform(rho, eps, tol == 1e-8 ? 1e-6 : tol, ts);
        if (c_int->parsed())
            return cmd_intersect(r1, r2, l, grid > 0 ? grid : 96,
                                 tol == 1e-8 ? 1e-6 : tol, out, ts);
        if (c_par->parsed()) return cmd_parity(chi, tau, ts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
