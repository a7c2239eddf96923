#include "neutral/tensor.hpp"

#include <cmath>

namespace neutral {

namespace {

void check_domain(const ChartMetricField& field, const Vec4& p) {
    if (!field.in_domain(p)) {
        throw domain_error("chart point outside domain of metric field '" +
                           field.name + "'");
    }
}

// d/dx_l of all metric components, one Richardson extrapolation step.
std::array<Mat4, 4> metric_partials(const ChartMetricField& field,
                                    const Vec4& p, double h) {
    std::array<Mat4, 4> dg;
    for (int l = 0; l < 4; ++l) {
        auto central = [&](double step) -> Mat4 {
            Vec4 pp = p, pm = p;
            pp[l] += step;
            pm[l] -= step;
            return (field.eval(pp) - field.eval(pm)) / (2.0 * step);
        };
        Mat4 coarse = central(h);
        Mat4 fine = central(h / 2.0);
        dg[l] = (4.0 * fine - coarse) / 3.0;
    }
    return dg;
}

}  // namespace

double metric_value(const ChartMetricField& field, const Vec4& p,
                    const Vec4& u, const Vec4& v) {
    check_domain(field, p);
    return u.dot(field.eval(p) * v);
}

Christoffel christoffel(const ChartMetricField& field, const Vec4& p,
                        double h) {
    check_domain(field, p);
    Mat4 g = field.eval(p);
    Eigen::FullPivLU<Mat4> lu(g);
    if (!lu.isInvertible()) {
        throw degeneracy_error("singular metric in christoffel at '" +
                               field.name + "'");
    }
    Mat4 ginv = lu.inverse();
    auto dg = metric_partials(field, p, h);

    Christoffel gamma;
    for (int i = 0; i < 4; ++i) {
        gamma[i].setZero();
        for (int j = 0; j < 4; ++j) {
            for (int k = j; k < 4; ++k) {
                double s = 0.0;
                for (int l = 0; l < 4; ++l) {
                    s += ginv(i, l) *
                         (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
                }
                gamma[i](j, k) = 0.5 * s;
                gamma[i](k, j) = gamma[i](j, k);
            }
        }
    }
    return gamma;
}

Mat4 ricci(const ChartMetricField& field, const Vec4& p, double h) {
    check_domain(field, p);
    // dGamma[l][i](j,k) = d/dx_l Gamma^i_{jk}, Richardson-extrapolated.
    std::array<Christoffel, 4> dgamma;
    for (int l = 0; l < 4; ++l) {
        auto central = [&](double step) -> Christoffel {
            Vec4 pp = p, pm = p;
            pp[l] += step;
            pm[l] -= step;
            Christoffel a = christoffel(field, pp, h);
            Christoffel b = christoffel(field, pm, h);
            Christoffel out;
            for (int i = 0; i < 4; ++i) out[i] = (a[i] - b[i]) / (2.0 * step);
            return out;
        };
        Christoffel coarse = central(h);
        Christoffel fine = central(h / 2.0);
        for (int i = 0; i < 4; ++i) {
            dgamma[l][i] = (4.0 * fine[i] - coarse[i]) / 3.0;
        }
    }
    Christoffel gamma = christoffel(field, p, h);

    Mat4 ric;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            double r = 0.0;
            for (int i = 0; i < 4; ++i) {
                r += dgamma[i][i](j, k) - dgamma[j][i](i, k);
                for (int q = 0; q < 4; ++q) {
                    r += gamma[i](i, q) * gamma[q](j, k) -
                         gamma[i](j, q) * gamma[q](i, k);
                }
            }
            ric(j, k) = r;
        }
    }
    return 0.5 * (ric + ric.transpose());
}

double scalar_curvature(const ChartMetricField& field, const Vec4& p,
                        double h) {
    Mat4 ric = ricci(field, p, h);
    Mat4 ginv = field.eval(p).inverse();
    return (ginv * ric).trace();
}

Eigen::MatrixXd pullback_metric(
    const std::function<Vec4(const Eigen::VectorXd&)>& map,
    const ChartMetricField& ambient, const Eigen::VectorXd& p, double h,
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& jacobian) {
    const int m = static_cast<int>(p.size());
    Eigen::MatrixXd J(4, m);
    if (jacobian) {
        J = jacobian(p);
    } else {
        for (int a = 0; a < m; ++a) {
            // Richardson-extrapolated central difference (O(h^4)).
            Eigen::VectorXd pp = p, pm = p;
            pp[a] += h;
            pm[a] -= h;
            Vec4 d1 = (map(pp) - map(pm)) / (2.0 * h);
            pp[a] = p[a] + 0.5 * h;
            pm[a] = p[a] - 0.5 * h;
            Vec4 d2 = (map(pp) - map(pm)) / h;
            J.col(a) = (4.0 * d2 - d1) / 3.0;
        }
    }
    if (!J.allFinite()) {
        throw degeneracy_error("non-finite Jacobian in pullback_metric");
    }
    Mat4 g = ambient.eval(map(p));
    Eigen::MatrixXd out = J.transpose() * g * J;
    return 0.5 * (out + out.transpose());
}

double frobenius_defect(const OneFormField& omega, const Vec3& p, double h,
                        double vol_scale) {
    if (omega.dim != 3) {
        throw domain_error("frobenius_defect requires a 3-dimensional chart");
    }
    Eigen::VectorXd w = omega.eval(p);
    if (w.norm() < 1e-12) {
        throw degeneracy_error("one-form vanishes at the evaluation point");
    }
    // d_i omega_j, central differences.
    Mat3 dw;
    for (int i = 0; i < 3; ++i) {
        Eigen::VectorXd pp = p, pm = p;
        pp[i] += h;
        pm[i] -= h;
        dw.row(i) = ((omega.eval(pp) - omega.eval(pm)) / (2.0 * h)).transpose();
    }
    double c = w[0] * (dw(1, 2) - dw(2, 1)) + w[1] * (dw(2, 0) - dw(0, 2)) +
               w[2] * (dw(0, 1) - dw(1, 0));
    return c / vol_scale;
}

PlaneClass classify_null_plane(const TangentPlane& plane,
                               const ChartMetricField& metric,
                               const Mat4& Jplus, const Mat4& Jminus,
                               double tol) {
    Eigen::Matrix<double, 4, 2> span;
    span.col(0) = plane.u;
    span.col(1) = plane.v;
    Eigen::JacobiSVD<Eigen::Matrix<double, 4, 2>> svd(
        span, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues()(1) < 1e-10 * svd.singularValues()(0)) {
        throw degeneracy_error("null-plane span is degenerate");
    }
    double scale = plane.u.norm() * plane.v.norm();

    Mat4 g = metric.eval(plane.base);
    double g_uu = plane.u.dot(g * plane.u);
    double g_uv = plane.u.dot(g * plane.v);
    double g_vv = plane.v.dot(g * plane.v);
    if (std::abs(g_uu) > tol * scale || std::abs(g_uv) > tol * scale ||
        std::abs(g_vv) > tol * scale) {
        return PlaneClass::not_totally_null;
    }

    auto invariant = [&](const Mat4& J) {
        for (const Vec4& w : {Vec4(J * plane.u), Vec4(J * plane.v)}) {
            Eigen::Vector2d c = span.colPivHouseholderQr().solve(w);
            if ((span * c - w).norm() > tol * std::max(1.0, w.norm())) {
                return false;
            }
        }
        return true;
    };

    bool alpha = invariant(Jplus);
    bool beta = invariant(Jminus);
    if (alpha && beta) {
        throw std::logic_error(
            "totally null plane invariant under both structures");
    }
    if (alpha) return PlaneClass::alpha;
    if (beta) return PlaneClass::beta;
    return PlaneClass::not_totally_null;
}

Signature metric_signature(const Eigen::MatrixXd& m, double zero_band) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Signature s;
    for (double ev : es.eigenvalues()) {
        if (ev > zero_band) {
            ++s.pos;
        } else if (ev < -zero_band) {
            ++s.neg;
        } else {
            ++s.zero;
        }
    }
    return s;
}

ChartMetricField flat_neutral_metric() {
    return {.eval = [](const Vec4&) {
                Mat4 g = Mat4::Zero();
                g.diagonal() << 1.0, 1.0, -1.0, -1.0;
                return g;
            },
            .domain = nullptr,
            .name = "flat R^{2,2}"};
}

Mat4 J_plus_flat() {
    Mat4 j = Mat4::Zero();
    j(0, 1) = 1.0;
    j(1, 0) = -1.0;
    j(2, 3) = 1.0;
    j(3, 2) = -1.0;
    return j;
}

Mat4 J_minus_flat() {
    Mat4 j = Mat4::Zero();
    j(0, 1) = 1.0;
    j(1, 0) = -1.0;
    j(2, 3) = -1.0;
    j(3, 2) = 1.0;
    return j;
}

}  // namespace neutral
