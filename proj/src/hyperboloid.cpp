#include "orbitgeo/hyperboloid.hpp"

#include "orbitgeo/io_util.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orbitgeo {

namespace {

constexpr double pi = std::numbers::pi;

void require_on_surface(const HyperboloidPoint& q) {
    if (!on_hyperboloid(q)) throw std::invalid_argument("point is not on the hyperboloid x^2+y^2-z^2=1");
}

void require_positive_mu(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("metric weight must be positive");
}

}  // namespace

bool on_hyperboloid(const HyperboloidPoint& q, double tol) {
    return std::abs(q.x * q.x + q.y * q.y - q.z * q.z - 1.0) <= tol;
}

double wrap_angle(double u) {
    double w = std::remainder(u, 2.0 * pi);
    if (w <= -pi) w = pi;
    return w;
}

Vec2 f_map(const Mat2& q) {
    if ((q.transpose() * q - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-8 ||
        std::abs(q.determinant() - 1.0) > 1e-8)
        throw std::invalid_argument("input must be a rotation matrix");
    double a = q(0, 0), c = q(1, 0);
    return {a * a - c * c, 2.0 * a * c};
}

Mat2 g_inverse(const Vec2& p) {
    if (std::abs(p.squaredNorm() - 1.0) > 1e-10) throw std::invalid_argument("input must be a unit vector");
    Mat2 q;
    if (1.0 + p.x() < 1e-12) {
        q << 0.0, -1.0, 1.0, 0.0;
        return q;
    }
    double a = std::sqrt(0.5 * (1.0 + p.x()));
    double c = p.y() / (2.0 * a);
    q << a, -c, c, a;
    return q;
}

Vec2 p_projection(const HyperboloidPoint& q) {
    require_on_surface(q);
    double d = 1.0 + q.z * q.z;
    return {(q.x + q.y * q.z) / d, (q.y - q.x * q.z) / d};
}

Vec2 psi_map(const HyperboloidPoint& q) {
    require_on_surface(q);
    double d = 1.0 + q.z * q.z;
    return {q.z * (-q.y + q.x * q.z) / d, q.z * (q.x + q.y * q.z) / d};
}

HyperboloidPoint chart_embed(const ChartPoint& c) {
    double cu = std::cos(c.u), su = std::sin(c.u);
    return {cu - c.v * su, su + c.v * cu, c.v};
}

ChartPoint chart_invert(const HyperboloidPoint& q) {
    Vec2 p = p_projection(q);
    double u = std::atan2(p.y(), p.x());
    if (u <= -pi) u = pi;
    return {u, q.z};
}

std::pair<Vec3, Vec3> sasaki_generators(const HyperboloidPoint& q) {
    require_on_surface(q);
    double d = 1.0 + q.z * q.z;
    Vec3 dv{(-q.y + q.x * q.z) / d, (q.x + q.y * q.z) / d, 1.0};
    Vec3 du{-q.y, q.x, 0.0};
    return {dv, du};
}

double sasaki_form(const HyperboloidPoint& q, const Vec3& w1, const Vec3& w2, double mu) {
    require_positive_mu(mu);
    Vec3 grad{q.x, q.y, -q.z};
    double scale = 1.0 + grad.norm();
    if (std::abs(grad.dot(w1)) > 1e-8 * (1.0 + w1.norm()) * scale ||
        std::abs(grad.dot(w2)) > 1e-8 * (1.0 + w2.norm()) * scale)
        throw std::invalid_argument("vectors must be tangent to the hyperboloid");
    auto [dv, du] = sasaki_generators(q);
    Eigen::Matrix<double, 3, 2> frame;
    frame.col(0) = dv;
    frame.col(1) = du;
    Mat2 gram = frame.transpose() * frame;
    Vec2 c1 = gram.ldlt().solve(frame.transpose() * w1);
    Vec2 c2 = gram.ldlt().solve(frame.transpose() * w2);
    return 0.25 * mu * c1.dot(c2);
}

ChartPoint HyperboloidCurve::chart_at(double t) const { return {start.u + du * t, start.v + dv * t}; }

HyperboloidPoint HyperboloidCurve::at(double t) const { return chart_embed(chart_at(t)); }

HyperboloidCurve geodesic_from_line(const ChartLine& line, double mu, bool unit_speed) {
    require_positive_mu(mu);
    if (line.a == 0.0 && line.b == 0.0) throw std::invalid_argument("line coefficients (a, b) must not both vanish");
    HyperboloidCurve c;
    c.line = line;
    if (line.a == 0.0) {
        c.kind = GeodesicCase::Horizontal;
        c.start = {0.0, line.c / line.b};
        c.du = 1.0;
        c.dv = 0.0;
    } else if (line.b == 0.0) {
        c.kind = GeodesicCase::Vertical;
        c.start = {line.c / line.a, 0.0};
        c.du = 0.0;
        c.dv = 1.0;
    } else {
        c.kind = GeodesicCase::Oblique;
        c.start = {0.0, line.c / line.b};
        c.du = 1.0;
        c.dv = -line.a / line.b;
    }
    if (unit_speed) {
        double norm = std::hypot(c.du, c.dv);
        c.du /= norm;
        c.dv /= norm;
    }
    return c;
}

ConnectingGeodesic geodesic_between(const HyperboloidPoint& p, const HyperboloidPoint& q, double mu) {
    require_positive_mu(mu);
    ChartPoint cp = chart_invert(p), cq = chart_invert(q);
    double raw = cq.u - cp.u;
    double best = raw;
    for (double cand : {raw - 2.0 * pi, raw + 2.0 * pi})
        if (std::abs(cand) < std::abs(best)) best = cand;
    bool tie = std::abs(std::abs(best) - pi) < 1e-12;
    if (tie) best = pi;
    double dv = cq.v - cp.v;
    if (std::abs(best) < 1e-14 && std::abs(dv) < 1e-14)
        throw std::invalid_argument("endpoints coincide; no connecting geodesic");

    ConnectingGeodesic out;
    out.delta_u = best;
    out.delta_v = dv;
    out.antipodal_tie = tie;
    out.curve.start = cp;
    out.curve.du = best;
    out.curve.dv = dv;
    if (best == 0.0)
        out.curve.kind = GeodesicCase::Vertical;
    else if (dv == 0.0)
        out.curve.kind = GeodesicCase::Horizontal;
    else
        out.curve.kind = GeodesicCase::Oblique;
    out.curve.line = {dv, -best, dv * cp.u - best * cp.v};
    return out;
}

HyperboloidCurve horizontal_lift_curve(double xi, double t0) {
    HyperboloidCurve c;
    c.kind = GeodesicCase::Horizontal;
    c.start = {2.0 * t0, 2.0 * xi};
    c.du = 2.0;
    c.dv = 0.0;
    c.line = {0.0, 1.0, 2.0 * xi};
    return c;
}

HyperboloidPoint lift_tangent(const Vec2& base, const Vec2& fiber) {
    if (std::abs(base.squaredNorm() - 1.0) > 1e-10) throw std::invalid_argument("base must be a unit vector");
    double r = base.x(), s = base.y();
    double tau = fiber.dot(Vec2{-s, r});
    return {r - tau * s, s + tau * r, tau};
}

std::string curve_csv(const HyperboloidCurve& c, double t0, double t1, int steps) {
    if (steps < 2) throw std::invalid_argument("need at least 2 samples");
    std::ostringstream out;
    out << "t,x,y,z\n";
    for (int k = 0; k < steps; ++k) {
        double t = t0 + (t1 - t0) * k / (steps - 1);
        HyperboloidPoint p = c.at(t);
        out << g17(t) << ',' << g17(p.x) << ',' << g17(p.y) << ',' << g17(p.z) << '\n';
    }
    return out.str();
}

std::string chart_csv(const HyperboloidCurve& c, double t0, double t1, int steps) {
    if (steps < 2) throw std::invalid_argument("need at least 2 samples");
    std::ostringstream out;
    out << "t,u,v\n";
    for (int k = 0; k < steps; ++k) {
        double t = t0 + (t1 - t0) * k / (steps - 1);
        ChartPoint p = c.chart_at(t);
        out << g17(t) << ',' << g17(p.u) << ',' << g17(p.v) << '\n';
    }
    return out.str();
}

std::string surface_obj(int u_steps, int v_steps, double v_min, double v_max) {
    if (u_steps < 3 || v_steps < 2) throw std::invalid_argument("mesh needs at least 3 angular and 2 height samples");
    if (!(v_max > v_min)) throw std::invalid_argument("height range must be increasing");
    std::ostringstream out;
    out << "# one-sheeted hyperboloid x^2+y^2-z^2=1, ruled patch\n";
    for (int iv = 0; iv < v_steps; ++iv) {
        double v = v_min + (v_max - v_min) * iv / (v_steps - 1);
        for (int iu = 0; iu < u_steps; ++iu) {
            double u = 2.0 * pi * iu / u_steps;
            HyperboloidPoint p = chart_embed({u, v});
            out << "v " << g17(p.x) << ' ' << g17(p.y) << ' ' << g17(p.z) << '\n';
        }
    }
    auto vid = [&](int iv, int iu) { return iv * u_steps + (iu % u_steps) + 1; };
    for (int iv = 0; iv + 1 < v_steps; ++iv)
        for (int iu = 0; iu < u_steps; ++iu)
            out << "f " << vid(iv, iu) << ' ' << vid(iv, iu + 1) << ' ' << vid(iv + 1, iu + 1) << ' '
                << vid(iv + 1, iu) << '\n';
    return out.str();
}

}  // namespace orbitgeo
