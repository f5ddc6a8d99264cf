#include "orbitgeo/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbitgeo {

namespace {

void require_problem(const IvpProblem& p) {
    if (p.dim <= 0) throw std::invalid_argument("problem dimension must be positive");
    if (!p.rhs) throw std::invalid_argument("problem has no right-hand side");
    if (p.y0.size() != p.dim) throw std::invalid_argument("initial state length does not match dimension");
}

void require_finite(const Vector& y) {
    if (!y.allFinite()) throw std::runtime_error("non-finite state encountered during integration");
}

}  // namespace

Vector Trajectory::at(double t) const {
    if (ts.size() < 2) {
        if (ts.size() == 1 && std::abs(t - ts[0]) < 1e-12) return ys[0];
        throw std::invalid_argument("trajectory has no interval to interpolate");
    }
    bool forward = ts.back() >= ts.front();
    double lo = forward ? ts.front() : ts.back();
    double hi = forward ? ts.back() : ts.front();
    double span = hi - lo;
    double slack = 1e-9 * std::max(1.0, span);
    if (t < lo - slack || t > hi + slack) throw std::invalid_argument("interpolation time outside trajectory range");
    t = std::clamp(t, lo, hi);

    std::size_t k = 0;
    if (forward) {
        auto it = std::upper_bound(ts.begin(), ts.end(), t);
        k = static_cast<std::size_t>(std::distance(ts.begin(), it));
    } else {
        auto it = std::upper_bound(ts.begin(), ts.end(), t, std::greater<double>());
        k = static_cast<std::size_t>(std::distance(ts.begin(), it));
    }
    if (k == 0) k = 1;
    if (k >= ts.size()) k = ts.size() - 1;
    std::size_t a = k - 1, b = k;

    double h = ts[b] - ts[a];
    if (h == 0.0) return ys[a];
    double th = (t - ts[a]) / h;
    double t2 = th * th, t3 = t2 * th;
    double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + th;
    double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    return h00 * ys[a] + (h10 * h) * fs[a] + h01 * ys[b] + (h11 * h) * fs[b];
}

Trajectory rk4_fixed(const IvpProblem& p, double step) {
    require_problem(p);
    double span = p.t1 - p.t0;
    if (!(step > 0.0) || step > span * (1.0 + 1e-12))
        throw std::invalid_argument("rk4 step must satisfy 0 < step <= t1 - t0");
    long n = std::max(1l, std::lround(span / step));
    double h = span / static_cast<double>(n);

    Trajectory out;
    out.ts.reserve(n + 1);
    out.ys.reserve(n + 1);
    out.fs.reserve(n + 1);

    double t = p.t0;
    Vector y = p.y0;
    Vector f = p.rhs(t, y);
    out.ts.push_back(t);
    out.ys.push_back(y);
    out.fs.push_back(f);
    for (long i = 0; i < n; ++i) {
        Vector k1 = f;
        Vector k2 = p.rhs(t + h / 2, y + (h / 2) * k1);
        Vector k3 = p.rhs(t + h / 2, y + (h / 2) * k2);
        Vector k4 = p.rhs(t + h, y + h * k3);
        y = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
        t = p.t0 + (i + 1) * h;
        require_finite(y);
        f = p.rhs(t, y);
        out.ts.push_back(t);
        out.ys.push_back(y);
        out.fs.push_back(f);
    }
    return out;
}

namespace {

// Dormand-Prince 5(4) tableau; row 7 equals the fifth-order weights (FSAL).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

Trajectory rk_adaptive(const IvpProblem& p, double rtol, double atol) {
    require_problem(p);
    if (!(rtol > 0.0) || !(atol > 0.0)) throw std::invalid_argument("tolerances must be positive");

    double span = p.t1 - p.t0;
    Trajectory out;
    double t = p.t0;
    Vector y = p.y0;
    Vector k1 = p.rhs(t, y);
    out.ts.push_back(t);
    out.ys.push_back(y);
    out.fs.push_back(k1);
    if (span == 0.0) return out;

    double dir = (span > 0.0) ? 1.0 : -1.0;
    double h = span / 100.0;

    while (dir * (p.t1 - t) > 0.0) {
        if (dir * h > dir * (p.t1 - t)) h = p.t1 - t;
        if (std::abs(h) < 1e-14) throw std::runtime_error("adaptive step size underflow");

        Vector k2 = p.rhs(t + c2 * h, y + h * (a21 * k1));
        Vector k3 = p.rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        Vector k4 = p.rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        Vector k5 = p.rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        Vector k6 = p.rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        Vector ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        Vector k7 = p.rhs(t + h, ynew);
        require_finite(ynew);

        Vector diff = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double err = 0.0;
        for (int i = 0; i < p.dim; ++i) {
            double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            double r = diff[i] / sc;
            err += r * r;
        }
        err = std::sqrt(err / p.dim);

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;
            out.ts.push_back(t);
            out.ys.push_back(y);
            out.fs.push_back(k1);
        }
        double factor = (err == 0.0) ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
    }
    return out;
}

namespace {

// Fornberg weights for the m-th derivative at x0 from arbitrary nodes.
std::vector<double> fornberg_weights(double x0, const std::vector<double>& x, int m) {
    int nn = static_cast<int>(x.size());
    std::vector<std::vector<double>> c(nn, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < nn; ++i) {
        int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(nn);
    for (int i = 0; i < nn; ++i) w[i] = c[i][m];
    return w;
}

}  // namespace

std::vector<double> finite_difference(const std::vector<double>& values, double dt, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
    if (!(dt > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    int n = static_cast<int>(values.size());
    if (n < 5) throw std::invalid_argument("finite differences need at least 5 grid points");

    int wide = std::min(6, n);
    std::vector<double> out(n);

    // Stencils are window-relative, so each distinct (width, offset) pair is
    // computed once and reused along the grid.
    auto window_weights = [&](int width, int offset) {
        std::vector<double> nodes(width);
        for (int k = 0; k < width; ++k) nodes[k] = k * dt;
        return fornberg_weights(offset * dt, nodes, order);
    };

    auto apply = [&](int at, int start, const std::vector<double>& w) {
        double acc = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * values[start + static_cast<int>(k)];
        out[at] = acc;
    };

    std::vector<double> central = window_weights(5, 2);
    for (int i = 2; i <= n - 3; ++i) apply(i, i - 2, central);
    for (int i : {0, 1}) apply(i, 0, window_weights(wide, i));
    for (int i : {n - 2, n - 1}) apply(i, n - wide, window_weights(wide, i - (n - wide)));
    return out;
}

}  // namespace orbitgeo
