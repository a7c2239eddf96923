#include "doctest.h"

#include "neutral/line_space.hpp"
#include "neutral/tensor.hpp"

#include <random>

using namespace neutral;

TEST_CASE("direction chart round trip") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        cplx xi(U(rng), U(rng));
        Vec3 u = line_direction(xi);
        CHECK(u.norm() == doctest::Approx(1.0));
        CHECK(std::abs(direction_to_xi(u) - xi) <= 1e-12);
    }
    CHECK((line_direction(cplx(0, 0)) - Vec3(0, 0, 1)).norm() <= 1e-15);
}

TEST_CASE("incidence and the point map are mutually consistent") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        cplx xi(U(rng), U(rng));
        Vec3 P(U(rng), U(rng), U(rng));
        OrientedLineCoords line{xi, incidence_eta(xi, P)};
        Vec3 dir = line_direction(xi);
        // P lies on the line
        Vec3 Q = line_to_points(line, 0.0);
        CHECK((Q - P).cross(dir).norm() <= 1e-12);
        // r is an arclength parameter and Q is the foot of the perpendicular
        CHECK(std::abs((line_to_points(line, 1.3) - Q).norm() - 1.3) <= 1e-12);
        CHECK(std::abs(Q.dot(dir)) <= 1e-12);
    }
}

TEST_CASE("distance to the origin") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        cplx xi(U(rng), U(rng));
        Vec3 P(U(rng), U(rng), U(rng));
        OrientedLineCoords line{xi, incidence_eta(xi, P)};
        Vec3 Q = line_to_points(line, 0.0);
        CHECK(line_distance_to_origin(line) == doctest::Approx(Q.norm()));
    }
}

TEST_CASE("line space metric has signature (2,2)") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        OrientedLineCoords line{cplx(U(rng), U(rng)), cplx(U(rng), U(rng))};
        auto sig = metric_signature(neutral_metric_L(line));
        CHECK(sig.neg == 2);
        CHECK(sig.zero == 0);
        CHECK(sig.pos == 2);
        Mat4 w = symplectic_form_L(line);
        CHECK((w + w.transpose()).norm() <= 1e-14);
        CHECK(std::abs(w.determinant()) > 1e-12);
    }
}

TEST_CASE("lines through a point form a Lagrangian section") {
    Vec3 P(0.4, -0.9, 1.3);
    auto section = [&](cplx nu) { return incidence_eta(nu, P); };
    for (cplx nu : {cplx(0.2, 0.3), cplx(-1.0, 0.4), cplx(0.0, -0.8)})
        CHECK(std::abs(lagrangian_defect(section, nu)) <= 1e-6);
}
