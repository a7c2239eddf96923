#pragma once

#include "neutral/line_space.hpp"

#include <vector>

namespace neutral {

// Two round spheres in R^3: radii r1 >= r2 > 0 centered at the origin and
// at (l, 0, 0).
struct IntersectionConfig {
    double r1 = 2.0, r2 = 1.0, l = 1.0;
};
void validate_config(const IntersectionConfig& cfg);

enum class IntersectionClass { empty, circle, torus, two_tori };
const char* to_string(IntersectionClass c);

// Classification of the common-tangent-line set, with a 1e-12 relative band
// around the two measure-zero boundaries.
IntersectionClass classify(const IntersectionConfig& cfg);

// K = (r1^2 - r2^2 + l^2 sin^2 phi) / (2 l r1 sin phi); lines tangent to
// both spheres with direction polar angle phi exist iff |K| <= 1.
double K_of_phi(const IntersectionConfig& cfg, double phi);

enum class Branch { plus, minus };

struct TorusSample {
    double phi = 0.0, theta = 0.0;
    Branch branch = Branch::plus;
    OrientedLineCoords line;
    double eta_phase = 0.0;
};

// Explicit tangent line on the intersection torus: xi = R e^{i theta} with
// R = tan(phi/2), eta = (1/2)(1+R^2) r1 (-K +- i sqrt(1-K^2)) e^{i theta}.
TorusSample torus_point(const IntersectionConfig& cfg, double phi,
                        double theta, Branch branch);

// Closed forms on the intersection torus: |sigma|^2 and lambda as functions
// of phi alone; det G|_T2 = lambda^2 - |sigma|^2 = -(1/4) l^2 cos^2 phi.
std::pair<double, double> sigma_lambda(const IntersectionConfig& cfg,
                                       double phi);

struct TorusMetricCheck {
    double det_closed = 0.0;
    double det_numeric = 0.0;
    bool complex_point = false;
};

// Finite-difference pullback of the line-space metric onto the (phi, theta)
// parameterization, normalized to the determinant in the line coordinates.
TorusMetricCheck torus_metric_check(const IntersectionConfig& cfg, double phi,
                                    double theta, Branch branch);

// Line-orientation flip (xi, eta) -> (-1/conj(xi), -conj(eta)/conj(xi)^2).
OrientedLineCoords flip_orientation(const OrientedLineCoords& line);

struct BruteForceResult {
    IntersectionClass classification = IntersectionClass::empty;
    int components = 0;
    std::vector<TorusSample> points;
};

// Grid oracle: admissibility of each (phi, theta) cell by interval
// arithmetic on sin phi, connected components by union-find with theta
// wraparound and branch gluing at the |K| = 1 edges.
BruteForceResult brute_force_intersection(const IntersectionConfig& cfg,
                                          int grid_n);

}  // namespace neutral
