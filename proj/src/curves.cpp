#include "orbitgeo/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbitgeo {

namespace {

double integrand(double mu, double u) {
    double e = 0.5 * mu * u * u;
    if (e > 700.0) throw std::runtime_error("oblique scalar quadrature out of representable range");
    return std::exp(e);
}

double simpson(double mu, double lo, double hi) {
    return (hi - lo) / 6.0 * (integrand(mu, lo) + 4.0 * integrand(mu, 0.5 * (lo + hi)) + integrand(mu, hi));
}

double adaptive_simpson(double mu, double lo, double hi, double whole, double tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double left = simpson(mu, lo, mid);
    double right = simpson(mu, mid, hi);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(mu, lo, mid, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(mu, mid, hi, right, 0.5 * tol, depth - 1);
}

// F(x) = int_{x0}^{x} e^{mu u^2/2} du, strictly increasing in x.
double oblique_integral(double mu, double x0, double x) {
    if (x == x0) return 0.0;
    double tol = 1e-13 * std::max(1.0, std::abs(x - x0));
    return adaptive_simpson(mu, x0, x, simpson(mu, x0, x), tol, 48);
}

// Invert F(x) = target by bracket expansion plus safeguarded Newton.
double oblique_invert(double mu, double x0, double target) {
    if (target == 0.0) return x0;
    double dir = (target > 0.0) ? 1.0 : -1.0;
    double step = std::max(std::abs(target) * std::exp(-std::min(0.5 * mu * x0 * x0, 700.0)), 1e-3);
    double lo = x0, hi = x0;
    for (int k = 0;; ++k) {
        if (k == 200) throw std::runtime_error("oblique scalar bracket expansion failed");
        hi = lo + dir * step;
        if (dir * (oblique_integral(mu, x0, hi) - target) >= 0.0) break;
        lo = hi;
        step *= 2.0;
    }
    if (dir < 0.0) std::swap(lo, hi);

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        double f = oblique_integral(mu, x0, x) - target;
        if (std::abs(f) <= 1e-13 * (1.0 + std::abs(target))) return x;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        double xn = x - f / integrand(mu, x);
        x = (xn > lo && xn < hi) ? xn : 0.5 * (lo + hi);
    }
    return x;
}

}  // namespace

CurveSpec CurveSpec::constant(double value) {
    CurveSpec c;
    c.kind_ = Kind::Constant;
    c.a_ = value;
    return c;
}

CurveSpec CurveSpec::trig_pair(double cos_amp, double sin_amp, double omega) {
    CurveSpec c;
    c.kind_ = Kind::TrigPair;
    c.a_ = cos_amp;
    c.b_ = sin_amp;
    c.w_ = omega;
    return c;
}

CurveSpec CurveSpec::rotating_frame(int component, double p0, double q0, double alpha, double beta, int sign) {
    if (component != 0 && component != 1) throw std::invalid_argument("rotating frame component must be 0 or 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("rotating frame sign must be +1 or -1");
    if (alpha * beta < 0.0) throw std::invalid_argument("rotating frame rates must have matching signs");
    CurveSpec c;
    c.kind_ = Kind::RotatingFrame;
    c.a_ = p0;
    c.b_ = q0;
    c.w_ = alpha;
    c.w2_ = beta;
    c.sign_ = sign;
    c.component_ = component;
    return c;
}

CurveSpec CurveSpec::oblique_scalar(double mu, double x0, double v0) {
    if (!(mu > 0.0)) throw std::invalid_argument("oblique scalar weight must be positive");
    CurveSpec c;
    c.kind_ = Kind::ObliqueScalar;
    c.a_ = x0;
    c.b_ = v0;
    c.w_ = mu;
    return c;
}

std::vector<CurveSpec> CurveSpec::oblique_system(const std::vector<double>& mus, const std::vector<double>& x0s,
                                                 const std::vector<double>& v0s, double t0, double t1,
                                                 double rtol, double atol) {
    std::size_t m = mus.size();
    if (m == 0 || x0s.size() != m || v0s.size() != m)
        throw std::invalid_argument("oblique system parameter lengths disagree");
    for (double mu : mus)
        if (!(mu > 0.0)) throw std::invalid_argument("oblique system weights must be positive");

    auto shared_mus = std::make_shared<const std::vector<double>>(mus);
    IvpProblem p;
    p.dim = static_cast<int>(2 * m);
    p.t0 = t0;
    p.t1 = t1;
    p.y0 = Vector(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        p.y0[k] = x0s[k];
        p.y0[m + k] = v0s[k];
    }
    p.rhs = [shared_mus, m](double, const Vector& y) {
        double speed2 = 0.0;
        for (std::size_t k = 0; k < m; ++k) speed2 += (*shared_mus)[k] * y[m + k] * y[m + k];
        Vector dy(2 * m);
        for (std::size_t k = 0; k < m; ++k) {
            dy[k] = y[m + k];
            dy[m + k] = -speed2 * y[k];
        }
        return dy;
    };
    auto traj = std::make_shared<const Trajectory>(rk_adaptive(p, rtol, atol));

    std::vector<CurveSpec> out(m);
    for (std::size_t k = 0; k < m; ++k) {
        out[k].kind_ = Kind::ObliqueSystem;
        out[k].component_ = static_cast<int>(k);
        out[k].traj_ = traj;
        out[k].mus_ = shared_mus;
    }
    return out;
}

CurveSpec CurveSpec::numeric_samples(double t0, double dt, std::vector<double> values) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample spacing must be positive");
    auto s = std::make_shared<Samples>();
    s->t0 = t0;
    s->dt = dt;
    s->d1 = finite_difference(values, dt, 1);
    s->d2 = finite_difference(values, dt, 2);
    s->y = std::move(values);
    CurveSpec c;
    c.kind_ = Kind::NumericSamples;
    c.samples_ = std::move(s);
    return c;
}

namespace {

// Hermite evaluation over sample arrays y (values) and d (their derivatives).
double hermite_samples(const std::vector<double>& y, const std::vector<double>& d, double t0, double dt, double t) {
    double pos = (t - t0) / dt;
    auto nmax = static_cast<double>(y.size() - 1);
    if (pos < -1e-9 || pos > nmax + 1e-9) throw std::invalid_argument("evaluation time outside sample range");
    pos = std::clamp(pos, 0.0, nmax);
    auto k = static_cast<std::size_t>(pos);
    if (k >= y.size() - 1) k = y.size() - 2;
    double th = pos - static_cast<double>(k);
    if (th == 0.0) return y[k];
    double t2 = th * th, t3 = t2 * th;
    return (2 * t3 - 3 * t2 + 1) * y[k] + (t3 - 2 * t2 + th) * dt * d[k] + (-2 * t3 + 3 * t2) * y[k + 1] +
           (t3 - t2) * dt * d[k + 1];
}

double linear_samples(const std::vector<double>& y, double t0, double dt, double t) {
    double pos = (t - t0) / dt;
    auto nmax = static_cast<double>(y.size() - 1);
    if (pos < -1e-9 || pos > nmax + 1e-9) throw std::invalid_argument("evaluation time outside sample range");
    pos = std::clamp(pos, 0.0, nmax);
    auto k = static_cast<std::size_t>(pos);
    if (k >= y.size() - 1) k = y.size() - 2;
    double th = pos - static_cast<double>(k);
    return (1.0 - th) * y[k] + th * y[k + 1];
}

struct PairState {
    double p, q, dp, dq, d2p, d2q;
};

PairState rotating_pair(double p0, double q0, double alpha, double beta, int sign, double t) {
    double omega = std::sqrt(alpha * beta);
    PairState s{};
    if (omega == 0.0) {
        s.p = p0;
        s.q = q0;
    } else {
        double c = std::cos(omega * t), sn = std::sin(omega * t);
        s.p = p0 * c + sign * (alpha / omega) * q0 * sn;
        s.q = q0 * c - sign * (beta / omega) * p0 * sn;
    }
    s.dp = sign * alpha * s.q;
    s.dq = -sign * beta * s.p;
    s.d2p = sign * alpha * s.dq;
    s.d2q = -sign * beta * s.dp;
    return s;
}

}  // namespace

double CurveSpec::value(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return a_;
        case Kind::TrigPair:
            return a_ * std::cos(w_ * t) + b_ * std::sin(w_ * t);
        case Kind::RotatingFrame: {
            PairState s = rotating_pair(a_, b_, w_, w2_, sign_, t);
            double c = std::cos(t), sn = sign_ * std::sin(t);
            return component_ == 0 ? c * s.p - sn * s.q : sn * s.p + c * s.q;
        }
        case Kind::ObliqueScalar: {
            if (b_ == 0.0) return a_;
            double target = b_ * std::exp(0.5 * w_ * a_ * a_) * t;
            return oblique_invert(w_, a_, target);
        }
        case Kind::ObliqueSystem:
            return traj_->at(t)[component_];
        case Kind::NumericSamples:
            return hermite_samples(samples_->y, samples_->d1, samples_->t0, samples_->dt, t);
    }
    throw std::logic_error("unreachable curve kind");
}

double CurveSpec::deriv1(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return 0.0;
        case Kind::TrigPair:
            return -a_ * w_ * std::sin(w_ * t) + b_ * w_ * std::cos(w_ * t);
        case Kind::RotatingFrame: {
            PairState s = rotating_pair(a_, b_, w_, w2_, sign_, t);
            double c = std::cos(t), sn = sign_ * std::sin(t);
            double dc = -std::sin(t), dsn = sign_ * std::cos(t);
            return component_ == 0 ? dc * s.p + c * s.dp - dsn * s.q - sn * s.dq
                                   : dsn * s.p + sn * s.dp + dc * s.q + c * s.dq;
        }
        case Kind::ObliqueScalar: {
            if (b_ == 0.0) return 0.0;
            double x = value(t);
            return b_ * std::exp(0.5 * w_ * (a_ * a_ - x * x));
        }
        case Kind::ObliqueSystem: {
            Vector y = traj_->at(t);
            return y[static_cast<int>(mus_->size()) + component_];
        }
        case Kind::NumericSamples:
            return hermite_samples(samples_->d1, samples_->d2, samples_->t0, samples_->dt, t);
    }
    throw std::logic_error("unreachable curve kind");
}

double CurveSpec::deriv2(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return 0.0;
        case Kind::TrigPair:
            return -w_ * w_ * value(t);
        case Kind::RotatingFrame: {
            PairState s = rotating_pair(a_, b_, w_, w2_, sign_, t);
            double c = std::cos(t), sn = sign_ * std::sin(t);
            double dc = -std::sin(t), dsn = sign_ * std::cos(t);
            double d2c = -c, d2sn = -sn;
            return component_ == 0 ? d2c * s.p + 2 * dc * s.dp + c * s.d2p - d2sn * s.q - 2 * dsn * s.dq - sn * s.d2q
                                   : d2sn * s.p + 2 * dsn * s.dp + sn * s.d2p + d2c * s.q + 2 * dc * s.dq + c * s.d2q;
        }
        case Kind::ObliqueScalar: {
            double x = value(t), v = deriv1(t);
            return -w_ * x * v * v;
        }
        case Kind::ObliqueSystem: {
            Vector y = traj_->at(t);
            auto m = static_cast<int>(mus_->size());
            double speed2 = 0.0;
            for (int k = 0; k < m; ++k) speed2 += (*mus_)[k] * y[m + k] * y[m + k];
            return -speed2 * y[component_];
        }
        case Kind::NumericSamples:
            return linear_samples(samples_->d2, samples_->t0, samples_->dt, t);
    }
    throw std::logic_error("unreachable curve kind");
}

FieldAlongBase::FieldAlongBase(int n_, int i, int j) : n(n_), base_i(i), base_j(j) {
    require_basis_index(n_, i, j);
    coeffs.assign(basis_dim(n_), CurveSpec::constant(0.0));
}

CurveSpec& FieldAlongBase::coeff(int i, int j) { return coeffs[basis_index(n, i, j)]; }
const CurveSpec& FieldAlongBase::coeff(int i, int j) const { return coeffs[basis_index(n, i, j)]; }

AlgebraVector FieldAlongBase::eval(double t) const {
    AlgebraVector x = AlgebraVector::zero(n);
    for (int k = 0; k < basis_dim(n); ++k) x.c[k] = coeffs[k].value(t);
    return x;
}

AlgebraVector FieldAlongBase::eval_d1(double t) const {
    AlgebraVector x = AlgebraVector::zero(n);
    for (int k = 0; k < basis_dim(n); ++k) x.c[k] = coeffs[k].deriv1(t);
    return x;
}

AlgebraVector FieldAlongBase::eval_d2(double t) const {
    AlgebraVector x = AlgebraVector::zero(n);
    for (int k = 0; k < basis_dim(n); ++k) x.c[k] = coeffs[k].deriv2(t);
    return x;
}

}  // namespace orbitgeo
