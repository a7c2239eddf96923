#include "doctest.h"

#include "neutral/compactification.hpp"
#include "neutral/tensor.hpp"

#include <random>

using namespace neutral;

TEST_CASE("double polar and compact chart round trips") {
    Vec4 x(1.0, 0.0, 0.0, 0.0);
    auto dp = to_double_polar(x);
    CHECK(dp.R1 == doctest::Approx(1.0));
    CHECK(dp.R2 == doctest::Approx(0.0));
    auto c = to_compact(x);
    CHECK(c.p == doctest::Approx(std::atan(1.0)));
    CHECK(c.q == doctest::Approx(std::atan(1.0)));

    Vec4 y(0.3, -0.4, 1.2, 0.9);
    auto d2 = to_double_polar(y);
    CHECK(d2.R1 == doctest::Approx(0.5));
    CHECK(d2.R2 == doctest::Approx(1.5));
    auto c2 = to_compact(y);
    CHECK(std::tan(c2.p) == doctest::Approx(d2.R1 + d2.R2));
    CHECK(std::tan(c2.q) == doctest::Approx(d2.R1 - d2.R2));
    CHECK(c2.p < M_PI / 2.0);
    CHECK(std::abs(c2.q) <= c2.p);
}

TEST_CASE("analytic jacobian matches finite differences") {
    Vec4 x(0.7, -1.1, 0.4, 2.0);
    Mat4 J = to_compact_jacobian(x);
    double h = 1e-6;
    for (int j = 0; j < 4; ++j) {
        Vec4 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        auto cp = to_compact(xp), cm = to_compact(xm);
        Vec4 fd((cp.p - cm.p) / (2 * h), (cp.q - cm.q) / (2 * h),
                (cp.theta1 - cm.theta1) / (2 * h),
                (cp.theta2 - cm.theta2) / (2 * h));
        CHECK((J.col(j) - fd).norm() <= 1e-6);
    }
}

TEST_CASE("compactification is conformal with factor Omega^2/4") {
    auto es = einstein_static_metric();
    Mat4 flat = Mat4::Zero();
    flat.diagonal() << 1, 1, -1, -1;
    auto map = [](const Eigen::VectorXd& x) {
        CompactChartPoint c = to_compact(Vec4(x[0], x[1], x[2], x[3]));
        return Vec4(c.p, c.q, c.theta1, c.theta2);
    };
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        Vec4 x(U(rng), U(rng), U(rng), U(rng));
        auto c = to_compact(x);
        double om = conformal_factor(c);
        Eigen::VectorXd p = x;
        Eigen::MatrixXd pb = pullback_metric(
            map, es, p, 1e-6, [&](const Eigen::VectorXd& y) -> Eigen::MatrixXd {
                return to_compact_jacobian(Vec4(y[0], y[1], y[2], y[3]));
            });
        Mat4 want = 0.25 * om * om * flat;
        worst = std::max(worst, (pb - want).norm() / want.norm());
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("einstein static ricci closed form vs finite differences") {
    auto es = einstein_static_metric();
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        double p = 0.15 + 1.2 * U(rng);
        double q = (2.0 * U(rng) - 1.0) * (p - 0.1);
        Vec4 pt(p, q, 2 * M_PI * U(rng), 2 * M_PI * U(rng));
        Mat4 closed = einstein_static_ricci(pt);
        Mat4 numeric = ricci(es, pt);
        CHECK((closed - numeric).norm() <= 1e-5);
        CHECK(numeric(0, 0) == doctest::Approx(2.0).epsilon(1e-5));
        CHECK(numeric(1, 1) == doctest::Approx(2.0).epsilon(1e-5));
        double spq = std::sin(p + q), smq = std::sin(p - q);
        CHECK(std::abs(numeric(2, 2) - spq * spq) <= 1e-5);
        CHECK(std::abs(numeric(3, 3) - smq * smq) <= 1e-5);
        CHECK(std::abs(scalar_curvature(es, pt)) <= 1e-5);
        auto sig = metric_signature(es.eval(pt));
        CHECK(sig.neg == 2);
        CHECK(sig.pos == 2);
    }
}

TEST_CASE("boundary metric is rank 2 with signature (0,+,-)") {
    auto es = einstein_static_metric();
    for (double q : {-1.2, -0.3, 0.0, 0.8, 1.4}) {
        Mat4 g = es.eval(Vec4(M_PI / 2.0, q, 0.7, -0.4));
        Eigen::Matrix3d sub = g.bottomRightCorner<3, 3>();
        auto sig = metric_signature(sub);
        CHECK(sig.neg == 1);
        CHECK(sig.zero == 1);
        CHECK(sig.pos == 1);
    }
}

TEST_CASE("boundary plane field forms are integrable") {
    auto bp = boundary_null_planes(0.4, 1.0, 2.0);
    CHECK(std::abs(frobenius_defect(bp.alpha_form, Vec3(0.4, 1.0, 2.0))) <=
          1e-12);
    CHECK(std::abs(frobenius_defect(bp.beta_form, Vec3(0.4, 1.0, 2.0))) <=
          1e-12);
}

TEST_CASE("dOmega boundary zero locus is q = +-pi/2") {
    CompactChartPoint c;
    c.p = M_PI / 2.0;
    c.q = M_PI / 2.0;
    CHECK(std::abs(grad_omega_boundary_locus(c)) <= 1e-12);
    c.q = -M_PI / 2.0;
    CHECK(std::abs(grad_omega_boundary_locus(c)) <= 1e-12);
    c.q = 0.4;
    CHECK(grad_omega_boundary_locus(c) ==
          doctest::Approx(2.0 * std::cos(0.4)).epsilon(1e-9));
    c.q = 0.0;
    CHECK(grad_omega_boundary_locus(c) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("hopf circles sit on the boundary sphere and link once") {
    for (double t : {0.0, 0.7, 2.4, 5.0}) {
        CHECK(hopf_circle_psi0(t).norm() == doctest::Approx(M_PI / 2.0));
        CHECK(hopf_circle_psipi(t).norm() == doctest::Approx(M_PI / 2.0));
    }
    double link = hopf_link_linking_number(512);
    CHECK(std::abs(std::abs(link) - 1.0) <= 1e-3);
}

TEST_CASE("existence parity") {
    CHECK(neutral_existence_parity(24, -16) == NeutralExistence::admits);
    CHECK(neutral_existence_parity(2, 0) == NeutralExistence::obstructed);
    CHECK(neutral_existence_parity(3, 1) == NeutralExistence::obstructed);
    CHECK(neutral_existence_parity(0, 0) == NeutralExistence::admits);
    CHECK(neutral_existence_parity(-4, 0) == NeutralExistence::admits);
    CHECK(neutral_existence_parity(-2, -2) == NeutralExistence::admits);
}
