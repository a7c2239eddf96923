#include "doctest.h"

#include "neutral/flows.hpp"
#include "neutral/knots.hpp"

#include <random>

using namespace neutral;

TEST_CASE("reeb field is the Reeb vector of omega_plus") {
    auto S = spheroid_support(2.0, 1.0);
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> U(-1.2, 1.2);
    std::uniform_real_distribution<double> UA(0.0, 2 * M_PI);
    auto wp = omega_plus_field(S);
    for (int it = 0; it < 25; ++it) {
        cplx nu(U(rng), U(rng));
        double A = UA(rng);
        auto j = surface_jet(S, nu);
        auto [dnu, dA] = reeb_field_flat(j, A);
        auto cf = contact_forms_H(j, A);
        double pair = cf.omega_plus[0] * dnu.real() +
                      cf.omega_plus[1] * dnu.imag() + cf.omega_plus[2] * dA;
        CHECK(pair == doctest::Approx(1.0).epsilon(1e-10));
        // d omega_plus (X, .) by central differences
        Vec3 p(nu.real(), nu.imag(), A);
        Vec3 X(dnu.real(), dnu.imag(), dA);
        double h = 1e-5;
        Mat3 dw;
        for (int i = 0; i < 3; ++i) {
            Vec3 pp = p, pm = p;
            pp[i] += h;
            pm[i] -= h;
            dw.row(i) = ((wp.eval(pp) - wp.eval(pm)) / (2 * h)).transpose();
        }
        Vec3 contr;
        for (int k = 0; k < 3; ++k) {
            double s = 0.0;
            for (int i = 0; i < 3; ++i) s += (dw(i, k) - dw(k, i)) * X[i];
            contr[k] = s;
        }
        CHECK(contr.norm() <= 1e-8);
    }
}

TEST_CASE("reeb flow is the geodesic flow a quarter turn away") {
    auto S = spheroid_support(2.0, 1.0);
    for (HState init : {HState{cplx(1.0, 0.0), 0.3},
                        HState{cplx(0.4, 0.1), 0.0}}) {
        auto tr = reeb_flow(S, init, 0.005, 2000);
        auto tg =
            geodesic_flow(S, HState{init.nu, init.A + M_PI / 2}, 0.005, 2000);
        REQUIRE(tr.states.size() == tg.states.size());
        double worst = 0.0;
        for (size_t i = 0; i < tr.states.size(); ++i)
            worst = std::max(
                worst, std::abs(tr.states[i].nu - tg.states[i].nu) +
                           std::abs(tr.states[i].A -
                                    (tg.states[i].A - M_PI / 2)));
        CHECK(worst <= 1e-10);
        CHECK(tr.t.back() == doctest::Approx(10.0));
    }
}

TEST_CASE("legendrian truth table on canonical knots") {
    auto S = spheroid_support(2.0, 1.0);
    auto Sph = sphere_support(1.5);
    auto parallel = [](double u) { return 0.5 * std::exp(cplx(0.0, u)); };
    auto generic = [](double u) {
        return cplx(0.5 * std::cos(u), 0.3 * std::sin(2.0 * u));
    };

    // tangent lines along a curvature line: alpha-Legendrian
    auto rt = legendrian_classify(knot_along_curve(S, parallel, 256, 0.0), S,
                                  1e-4);
    CHECK(rt.alpha);
    CHECK(!rt.beta);
    CHECK(rt.tangent_to_c);
    CHECK(!rt.normal_to_c);
    CHECK(rt.curvature_line_or_umbilic);

    // normal lines along a curvature line: beta-Legendrian
    auto rn = legendrian_classify(
        knot_along_curve(S, parallel, 256, M_PI / 2.0), S, 1e-4);
    CHECK(!rn.alpha);
    CHECK(rn.beta);
    CHECK(rn.normal_to_c);
    CHECK(rn.curvature_line_or_umbilic);

    // tangent lines along a generic curve: alpha only
    auto rg = legendrian_classify(knot_along_curve(S, generic, 1024, 0.0), S,
                                  1e-4);
    CHECK(rg.alpha);
    CHECK(!rg.beta);
    CHECK(!rg.normal_to_c);
    CHECK(!rg.curvature_line_or_umbilic);

    // normal lines along a generic curve: normal but not curvature line,
    // hence not beta
    auto rgn = legendrian_classify(
        knot_along_curve(S, generic, 1024, M_PI / 2.0), S, 1e-4);
    CHECK(!rgn.beta);
    CHECK(rgn.normal_to_c);
    CHECK(!rgn.curvature_line_or_umbilic);

    // all sphere curves are umbilic, so normal knots are beta-Legendrian
    auto rs = legendrian_classify(
        knot_along_curve(Sph, generic, 1024, M_PI / 2.0), Sph, 1e-4);
    CHECK(rs.beta);
    CHECK(rs.normal_to_c);
    CHECK(rs.curvature_line_or_umbilic);

    CHECK_THROWS_AS(legendrian_classify(LineKnot{}, S, 1e-4), domain_error);
}

TEST_CASE("angle_for_direction inverts line directions in a tangent plane") {
    cplx nu(0.3, -0.2);
    auto S = spheroid_support(2.0, 1.0);
    auto j = surface_jet(S, nu);
    for (double A : {0.0, 0.8, 2.2}) {
        auto line = tangent_hypersurface_point(j, A);
        double A2 = angle_for_direction(nu, line_direction(line.xi));
        auto line2 = tangent_hypersurface_point(j, A2);
        CHECK(std::abs(line2.xi - line.xi) <= 1e-9);
    }
}
