#include "neutral/intersection.hpp"

#include "neutral/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace neutral {

namespace {

constexpr double kBand = 1e-12;

double rel_scale(const IntersectionConfig& cfg) {
    return std::max({1.0, cfg.r1 + cfg.r2, cfg.l});
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void validate_config(const IntersectionConfig& cfg) {
    if (!(cfg.r1 >= cfg.r2) || !(cfg.r2 > 0.0) || !(cfg.l >= 0.0))
        throw domain_error("IntersectionConfig: need r1 >= r2 > 0, l >= 0");
    if (cfg.l == 0.0 && cfg.r1 == cfg.r2)
        throw domain_error("IntersectionConfig: identical spheres");
}

const char* to_string(IntersectionClass c) {
    switch (c) {
        case IntersectionClass::empty: return "empty";
        case IntersectionClass::circle: return "circle";
        case IntersectionClass::torus: return "torus";
        case IntersectionClass::two_tori: return "two_tori";
    }
    return "?";
}

IntersectionClass classify(const IntersectionConfig& cfg) {
    validate_config(cfg);
    double band = kBand * rel_scale(cfg);
    double lo = cfg.r1 - cfg.r2, hi = cfg.r1 + cfg.r2;
    if (std::abs(cfg.l - lo) <= band) return IntersectionClass::circle;
    if (cfg.l < lo) return IntersectionClass::empty;
    if (cfg.l <= hi + band) return IntersectionClass::torus;
    return IntersectionClass::two_tori;
}

double K_of_phi(const IntersectionConfig& cfg, double phi) {
    validate_config(cfg);
    double s = std::sin(phi);
    if (cfg.l == 0.0 || std::abs(s) < 1e-14)
        throw domain_error("K_of_phi: l = 0 or sin phi = 0");
    return (cfg.r1 * cfg.r1 - cfg.r2 * cfg.r2 + cfg.l * cfg.l * s * s) /
           (2.0 * cfg.l * cfg.r1 * s);
}

TorusSample torus_point(const IntersectionConfig& cfg, double phi,
                        double theta, Branch branch) {
    double K = K_of_phi(cfg, phi);
    if (std::abs(K) > 1.0 + 1e-12)
        throw degeneracy_error("torus_point: |K| > 1, no tangent line");
    K = std::clamp(K, -1.0, 1.0);
    double root = std::sqrt(std::max(0.0, 1.0 - K * K));
    cplx unit(-K, branch == Branch::plus ? root : -root);
    double R = std::tan(0.5 * phi);
    cplx phase = std::polar(1.0, theta);
    TorusSample s;
    s.phi = phi;
    s.theta = theta;
    s.branch = branch;
    s.line.xi = R * phase;
    s.line.eta = 0.5 * (1.0 + R * R) * cfg.r1 * unit * phase;
    s.eta_phase = std::arg(s.line.eta);
    return s;
}

std::pair<double, double> sigma_lambda(const IntersectionConfig& cfg,
                                       double phi) {
    validate_config(cfg);
    double s = std::sin(phi), c = std::cos(phi);
    if (std::abs(c) < 1e-15) c = 0.0;  // exact on the central parallel
    double ls2 = cfg.l * cfg.l * s * s;
    double d1 = ls2 - (cfg.r1 - cfg.r2) * (cfg.r1 - cfg.r2);
    double d2 = (cfg.r1 + cfg.r2) * (cfg.r1 + cfg.r2) - ls2;
    if (d1 <= 0.0 || d2 <= 0.0)
        throw degeneracy_error("sigma_lambda: pole at existence boundary");
    double abs_sigma_sq = cfg.r1 * cfg.r1 * cfg.r2 * cfg.r2 * cfg.l * cfg.l *
                          c * c / (d1 * d2);
    double lambda = -cfg.l * (ls2 - cfg.r1 * cfg.r1 - cfg.r2 * cfg.r2) * c /
                    (2.0 * std::sqrt(d1 * d2));
    return {abs_sigma_sq, lambda};
}

TorusMetricCheck torus_metric_check(const IntersectionConfig& cfg, double phi,
                                    double theta, Branch branch) {
    torus_point(cfg, phi, theta, branch);  // existence check
    auto map = [&](const Eigen::VectorXd& p) {
        TorusSample s = torus_point(cfg, p[0], p[1], branch);
        return Vec4(s.line.xi.real(), s.line.xi.imag(), s.line.eta.real(),
                    s.line.eta.imag());
    };
    Eigen::VectorXd p(2);
    p << phi, theta;
    Eigen::MatrixXd g = pullback_metric(map, line_space_metric_field(), p);
    double R = std::tan(0.5 * phi);
    double scale = (1.0 + R * R) * (1.0 + R * R) / (4.0 * R * R);
    TorusMetricCheck out;
    out.det_numeric = g.determinant() * scale;
    out.det_closed = -0.25 * cfg.l * cfg.l * std::cos(phi) * std::cos(phi);
    out.complex_point = std::sqrt(sigma_lambda(cfg, phi).first) <= 1e-8;
    return out;
}

OrientedLineCoords flip_orientation(const OrientedLineCoords& line) {
    cplx xb = std::conj(line.xi);
    if (std::abs(xb) < 1e-300)
        throw chart_error("flip_orientation: pole of the chart");
    return {-1.0 / xb, -std::conj(line.eta) / (xb * xb)};
}

BruteForceResult brute_force_intersection(const IntersectionConfig& cfg,
                                          int grid_n) {
    validate_config(cfg);
    if (grid_n < 64)
        throw domain_error("brute_force_intersection: grid_n < 64");
    BruteForceResult out;
    if (cfg.l == 0.0) return out;  // concentric distinct spheres

    // Admissibility band in sin phi; cells test by interval arithmetic so
    // the measure-zero circle case is caught exactly.
    double band_lo = (cfg.r1 - cfg.r2) / cfg.l;
    double band_hi = (cfg.r1 + cfg.r2) / cfg.l;
    if (band_lo > 1.0) {
        out.classification = IntersectionClass::empty;
        return out;
    }

    // Degenerate band: admissible set is the single parallel phi = pi/2.
    if (band_lo >= 1.0) {
        out.classification = IntersectionClass::circle;
        out.components = 1;
        for (int j = 0; j < grid_n; j += std::max(1, grid_n / 16))
            out.points.push_back(
                torus_point(cfg, M_PI / 2.0, 2.0 * M_PI * j / grid_n,
                            Branch::plus));
        return out;
    }

    // Row boundaries: uniform phi grid refined at the exact band edges, so
    // every row lies entirely inside or outside the admissible band and the
    // midpoint test below is exact even for perturbations ~1e-9.
    int n = grid_n;
    std::vector<double> bnd;
    for (int i = 0; i <= n; ++i) bnd.push_back(M_PI * i / n);
    auto add_edge = [&](double s) {
        if (s > 0.0 && s < 1.0) {
            double p = std::asin(s);
            bnd.push_back(p);
            bnd.push_back(M_PI - p);
        }
    };
    add_edge(band_lo);
    add_edge(band_hi);
    std::sort(bnd.begin(), bnd.end());
    bnd.erase(std::unique(bnd.begin(), bnd.end(),
                          [](double a, double b) { return b - a < 1e-15; }),
              bnd.end());
    int m = static_cast<int>(bnd.size()) - 1;

    std::vector<char> row_ok(m, 0);
    std::vector<double> row_mid(m, 0.0);
    std::vector<char> row_glue(m, 0);  // row touches a |K| = 1 edge
    for (int i = 0; i < m; ++i) {
        double mid = 0.5 * (bnd[i] + bnd[i + 1]);
        double s = std::sin(mid);
        if (s < band_lo || s > band_hi) continue;
        row_ok[i] = 1;
        row_mid[i] = mid;
        double lo_s = std::min(std::sin(bnd[i]), std::sin(bnd[i + 1]));
        double hi_s = (bnd[i] < M_PI / 2.0 && bnd[i + 1] > M_PI / 2.0)
                          ? 1.0
                          : std::max(std::sin(bnd[i]), std::sin(bnd[i + 1]));
        if (lo_s <= band_lo + 1e-15 ||
            (band_hi <= 1.0 && hi_s >= band_hi - 1e-15))
            row_glue[i] = 1;
    }

    // Nodes (row, theta column, branch); union across phi/theta adjacency
    // (theta wraps) and across branches at the existence-boundary rows.
    UnionFind uf(2 * m * n);
    auto id = [&](int i, int j, int br) { return (i * n + j) * 2 + br; };
    for (int i = 0; i < m; ++i) {
        if (!row_ok[i]) continue;
        for (int j = 0; j < n; ++j) {
            for (int br = 0; br < 2; ++br) {
                uf.unite(id(i, j, br), id(i, (j + 1) % n, br));
                if (i + 1 < m && row_ok[i + 1])
                    uf.unite(id(i, j, br), id(i + 1, j, br));
            }
            if (row_glue[i]) uf.unite(id(i, j, 0), id(i, j, 1));
        }
    }

    std::vector<int> roots;
    double rep_min = 2.0, rep_max = -2.0;
    for (int i = 0; i < m; ++i) {
        if (!row_ok[i]) continue;
        double s = std::sin(row_mid[i]);
        rep_min = std::min(rep_min, s);
        rep_max = std::max(rep_max, s);
        for (int j = 0; j < n; ++j)
            for (int br = 0; br < 2; ++br) {
                int r = uf.find(id(i, j, br));
                if (std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
        for (int j = 0; j < n; j += std::max(1, n / 16)) {
            double theta = 2.0 * M_PI * j / n;
            out.points.push_back(
                torus_point(cfg, row_mid[i], theta, Branch::plus));
            out.points.push_back(
                torus_point(cfg, row_mid[i], theta, Branch::minus));
        }
    }

    out.components = static_cast<int>(roots.size());
    if (out.components == 0)
        out.classification = IntersectionClass::empty;
    else if (out.components >= 2)
        out.classification = IntersectionClass::two_tori;
    else if (rep_max - rep_min <= kBand && rep_min >= 1.0 - kBand)
        out.classification = IntersectionClass::circle;
    else
        out.classification = IntersectionClass::torus;
    return out;
}

}  // namespace neutral
