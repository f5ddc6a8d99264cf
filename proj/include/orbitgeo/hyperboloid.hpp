#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>

namespace orbitgeo {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;

// Point of the one-sheeted hyperboloid x^2 + y^2 - z^2 = 1, the model of the
// tangent bundle of the circle of cosets.
struct HyperboloidPoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

bool on_hyperboloid(const HyperboloidPoint& q, double tol = 1e-10);

// Coordinates of the covering parametrization
// (u, v) -> (cos u - v sin u, sin u + v cos u, v); u lives on (-pi, pi].
struct ChartPoint {
    double u = 0.0, v = 0.0;
};

// Line a u + b v = c in the chart plane; (a, b) != (0, 0).
struct ChartLine {
    double a = 0.0, b = 0.0, c = 0.0;
};

enum class GeodesicCase { Horizontal, Vertical, Oblique };

// Reduce an angle to (-pi, pi].
double wrap_angle(double u);

// Double-angle identification of the coset circle: Q with first column (a, c)
// maps to (a^2 - c^2, 2 a c). Invariant under Q -> -Q.
Vec2 f_map(const Mat2& q);

// Coset representative over a circle point, inverse to f_map. Uses the
// (x+1)-half-angle branch away from (-1, 0) and the quarter-turn there.
Mat2 g_inverse(const Vec2& p);

// Bundle projection of the hyperboloid onto the circle; constant on rulings.
Vec2 p_projection(const HyperboloidPoint& q);

// Fiber coordinate of a hyperboloid point: on the ruling through (r, s) with
// parameter t it equals (-t s, t r).
Vec2 psi_map(const HyperboloidPoint& q);

HyperboloidPoint chart_embed(const ChartPoint& c);
ChartPoint chart_invert(const HyperboloidPoint& q);

// The frame (d/dv, d/du) of the parametrization at q; both have squared
// norm mu/4 and are orthogonal in the bundle metric.
std::pair<Vec3, Vec3> sasaki_generators(const HyperboloidPoint& q);

// Bundle metric evaluated on tangent vectors at q, via their coordinates in
// the generator frame. Inputs must be tangent to the hyperboloid at q.
double sasaki_form(const HyperboloidPoint& q, const Vec3& w1, const Vec3& w2, double mu);

// Affine path in the chart; geodesics are exactly these since the chart
// metric is the flat (mu/4)(du^2 + dv^2).
struct HyperboloidCurve {
    GeodesicCase kind = GeodesicCase::Horizontal;
    ChartPoint start;  // chart position at t = 0, u left unwrapped
    double du = 0.0, dv = 0.0;
    ChartLine line;  // satisfied by every chart point of the path

    ChartPoint chart_at(double t) const;
    HyperboloidPoint at(double t) const;
};

// Geodesic carried by the line a u + b v = c: a = 0 gives the horizontal
// circle at height c/b, b = 0 the vertical ruling at angle c/a, otherwise an
// oblique spiral. unit_speed rescales the parametrization to unit chart speed.
HyperboloidCurve geodesic_from_line(const ChartLine& line, double mu, bool unit_speed = false);

struct ConnectingGeodesic {
    HyperboloidCurve curve;  // parametrized on [0, 1]
    double delta_u = 0.0, delta_v = 0.0;
    bool antipodal_tie = false;  // |delta_u| = pi, resolved to +pi
};

// Shortest-lift connecting geodesic: chart-invert both points, take the u
// increment of minimal magnitude among the 2 pi shifts (ties resolved to +pi),
// and join by the straight chart segment.
ConnectingGeodesic geodesic_between(const HyperboloidPoint& p, const HyperboloidPoint& q, double mu);

// Horizontal geodesic traced by a constant fiber of size xi over the coset
// circle: t -> (cos 2(t+t0) - 2 xi sin 2(t+t0), sin 2(t+t0) + 2 xi cos 2(t+t0), 2 xi).
HyperboloidCurve horizontal_lift_curve(double xi, double t0);

// Hyperboloid point representing the tangent vector `fiber` at circle point
// `base`: the ruling parameter is the component of the fiber along (-s, r).
HyperboloidPoint lift_tangent(const Vec2& base, const Vec2& fiber);

// Sampled exports: curve rows "t,x,y,z", chart rows "t,u,v", and the ruled
// surface as an OBJ quad mesh closed around u.
std::string curve_csv(const HyperboloidCurve& c, double t0, double t1, int steps);
std::string chart_csv(const HyperboloidCurve& c, double t0, double t1, int steps);
std::string surface_obj(int u_steps, int v_steps, double v_min, double v_max);

}  // namespace orbitgeo
