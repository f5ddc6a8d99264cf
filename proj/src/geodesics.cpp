#include "orbitgeo/geodesics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitgeo {

Regime regime_of(int i, int j, int s) {
    if (s < 1) throw std::invalid_argument("partner index must be at least 1");
    if (s == i || s == j) throw std::invalid_argument("partner index must differ from the base pair");
    if (s < j) return Regime::Below;
    if (s < i) return Regime::Between;
    return Regime::Above;
}

std::pair<std::pair<int, int>, std::pair<int, int>> regime_pair(int i, int j, int s, Regime regime) {
    if (regime_of(i, j, s) != regime) throw std::invalid_argument("partner index inconsistent with regime");
    switch (regime) {
        case Regime::Between:
            return {{i, s}, {s, j}};
        case Regime::Below:
            return {{i, s}, {j, s}};
        case Regime::Above:
            return {{s, i}, {s, j}};
    }
    throw std::logic_error("unreachable regime");
}

Vector horizontal_residual(const DiagonalMetric& g, const FieldAlongBase& field, double t) {
    if (g.n != field.n) throw std::invalid_argument("metric and field dimension mismatch");
    int n = g.n, i = field.base_i, j = field.base_j;
    AlgebraVector rx = adjoint_rotation_apply(n, i, j, t, field.eval(t));
    AlgebraVector rdx = adjoint_rotation_apply(n, i, j, t, field.eval_d1(t));
    AlgebraVector w = AlgebraVector::basis(n, i, j);
    return (rdx + nabla_origin(g, w, rx)).c;
}

std::pair<CurveSpec, CurveSpec> solve_horizontal_pair(const DiagonalMetric& g, int i, int j, int s, Regime regime,
                                                      double a, double b) {
    require_basis_index(g.n, i, j);
    auto [first, second] = regime_pair(i, j, s, regime);
    if (std::max(first.first, second.first) > g.n) throw std::invalid_argument("partner index out of range");
    int sign = (regime == Regime::Between) ? 1 : -1;
    double mu_ij = g.mu_at(i, j);
    double mu1 = g.mu_at(first.first, first.second);
    double mu2 = g.mu_at(second.first, second.second);

    if (mu1 == mu2) {
        double omega = mu_ij / (2.0 * mu1);
        if (sign > 0) return {CurveSpec::trig_pair(a, -b, omega), CurveSpec::trig_pair(b, a, omega)};
        return {CurveSpec::trig_pair(a, b, omega), CurveSpec::trig_pair(b, -a, omega)};
    }
    double kappa = 0.5 * (mu1 + mu2 - mu_ij);
    double alpha = kappa / mu1, beta = kappa / mu2;
    return {CurveSpec::rotating_frame(0, a, b, alpha, beta, sign),
            CurveSpec::rotating_frame(1, a, b, alpha, beta, sign)};
}

FieldAlongBase family_horizontal_I(const DiagonalMetric& g, int i, int j, int s, Regime regime, double a, double b,
                                   double base_coeff) {
    auto [first, second] = regime_pair(i, j, s, regime);
    auto pair = solve_horizontal_pair(g, i, j, s, regime, a, b);
    FieldAlongBase field(g.n, i, j);
    field.coeff(first.first, first.second) = pair.first;
    field.coeff(second.first, second.second) = pair.second;
    if (base_coeff != 0.0) field.coeff(i, j) = CurveSpec::constant(base_coeff);
    return field;
}

namespace {

bool shares_one_index(int i, int j, int r, int s) {
    bool same = (r == i && s == j);
    bool disjoint = (r != i && r != j && s != i && s != j);
    return !same && !disjoint;
}

}  // namespace

FieldAlongBase horizontal_family_II(const DiagonalMetric& g, int i, int j, const std::vector<IndexCoeff>& entries) {
    require_basis_index(g.n, i, j);
    FieldAlongBase field(g.n, i, j);
    for (const auto& e : entries) {
        require_basis_index(g.n, e.r, e.s);
        if (shares_one_index(i, j, e.r, e.s))
            throw std::invalid_argument("index (" + std::to_string(e.r) + "," + std::to_string(e.s) +
                                        ") shares exactly one index with the base pair");
        field.coeff(e.r, e.s) = CurveSpec::constant(e.value);
    }
    return field;
}

Vector oblique_system_residual(const DiagonalMetric& g, const FieldAlongBase& field, double t) {
    if (g.n != field.n) throw std::invalid_argument("metric and field dimension mismatch");
    int n = g.n, i = field.base_i, j = field.base_j;
    for (int k = 0; k < basis_dim(n); ++k) {
        auto [r, s] = basis_pair(n, k);
        if (shares_one_index(i, j, r, s) && !field.coeffs[k].is_zero_constant())
            throw std::invalid_argument("oblique support must avoid indices sharing one index with the base pair");
    }
    AlgebraVector x = field.eval(t);
    AlgebraVector d1 = field.eval_d1(t);
    AlgebraVector d2 = field.eval_d2(t);
    double speed2 = metric_eval(g, d1, d1);
    return d2.c + speed2 * x.c;
}

double solve_oblique_scalar(double mu, double x0, double v0, double t) {
    return CurveSpec::oblique_scalar(mu, x0, v0).value(t);
}

namespace {

struct Rational {
    __int128 num = 0, den = 1;
};

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool mul128(__int128 a, __int128 b, __int128& out) { return !__builtin_mul_overflow(a, b, &out); }

bool rational_reduce(Rational& r) {
    __int128 d = gcd128(r.num, r.den);
    if (d != 0) {
        r.num /= d;
        r.den /= d;
    }
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    return true;
}

bool rational_add_product(Rational& acc, const Rational& x, const Rational& y, __int128 divisor) {
    Rational term;
    if (!mul128(x.num, y.num, term.num)) return false;
    if (!mul128(x.den, y.den, term.den)) return false;
    if (!mul128(term.den, divisor, term.den)) return false;
    rational_reduce(term);
    Rational sum;
    __int128 l, r;
    if (!mul128(acc.num, term.den, l) || !mul128(term.num, acc.den, r)) return false;
    if (__builtin_add_overflow(l, r, &sum.num)) return false;
    if (!mul128(acc.den, term.den, sum.den)) return false;
    rational_reduce(sum);
    acc = sum;
    return true;
}

double rational_to_double(const Rational& r) {
    __int128 num = r.num, den = r.den;
    // Scale down together until both halves fit a double mantissa exactly.
    auto fits = [](__int128 v) {
        if (v < 0) v = -v;
        return v <= (static_cast<__int128>(1) << 53);
    };
    while (!fits(num) || !fits(den)) {
        num >>= 1;
        den >>= 1;
        if (den == 0) return static_cast<double>(static_cast<long double>(r.num) / static_cast<long double>(r.den));
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::vector<double> oblique_series_coefficients(int k_max) {
    if (k_max < 0) throw std::invalid_argument("series order must be nonnegative");
    std::vector<double> out;
    out.reserve(k_max + 1);
    std::vector<Rational> exact;
    exact.push_back({1, 1});
    out.push_back(1.0);
    bool exact_ok = true;
    for (int k = 1; k <= k_max; ++k) {
        if (exact_ok) {
            Rational acc{0, 1};
            for (int m = 0; m < k && exact_ok; ++m)
                exact_ok = rational_add_product(acc, exact[m], exact[k - 1 - m],
                                                static_cast<__int128>(m + 1) * (2 * m + 1));
            if (exact_ok) {
                exact.push_back(acc);
                out.push_back(rational_to_double(acc));
                continue;
            }
        }
        double acc = 0.0;
        for (int m = 0; m < k; ++m) acc += out[m] * out[k - 1 - m] / ((m + 1.0) * (2 * m + 1.0));
        out.push_back(acc);
    }
    return out;
}

namespace {

// S(y) = int_0^y e^{w^2} dw as a power series; entire, so plain summation.
double gauss_integral_series(double y) {
    double term = y;
    double sum = y;
    double y2 = y * y;
    for (int m = 1; m < 400; ++m) {
        term *= y2 / m;
        double add = term / (2 * m + 1);
        sum += add;
        if (std::abs(add) < 1e-17 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

}  // namespace

double oblique_series_eval(double mu, double x0, double v0, double t) {
    if (!(mu > 0.0)) throw std::invalid_argument("oblique series weight must be positive");
    double root = std::sqrt(0.5 * mu);
    double z = gauss_integral_series(root * x0) + root * v0 * std::exp(0.5 * mu * x0 * x0) * t;
    if (std::abs(z) > 0.5) throw std::domain_error("oblique series argument outside the convergence guard 0.5");
    static const std::vector<double> coeffs = oblique_series_coefficients(48);
    double z2 = z * z;
    double power = z;
    double sum = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        double term = coeffs[k] * power / (2.0 * k + 1.0);
        sum += (k % 2 == 0) ? term : -term;
        power *= z2;
    }
    return std::sqrt(2.0 / mu) * sum;
}

FieldAlongBase family_oblique(const DiagonalMetric& g, int i, int j, const std::vector<ObliqueComponent>& comps,
                              double t0, double t1) {
    require_basis_index(g.n, i, j);
    if (comps.empty()) throw std::invalid_argument("oblique family needs at least one component");
    FieldAlongBase field(g.n, i, j);
    for (const auto& c : comps) {
        require_basis_index(g.n, c.r, c.s);
        if (shares_one_index(i, j, c.r, c.s))
            throw std::invalid_argument("oblique support must avoid indices sharing one index with the base pair");
    }
    if (comps.size() == 1) {
        const auto& c = comps.front();
        field.coeff(c.r, c.s) = CurveSpec::oblique_scalar(g.mu_at(c.r, c.s), c.x0, c.v0);
        return field;
    }
    std::vector<double> mus, x0s, v0s;
    for (const auto& c : comps) {
        mus.push_back(g.mu_at(c.r, c.s));
        x0s.push_back(c.x0);
        v0s.push_back(c.v0);
    }
    auto specs = CurveSpec::oblique_system(mus, x0s, v0s, t0, t1);
    for (std::size_t k = 0; k < comps.size(); ++k) field.coeff(comps[k].r, comps[k].s) = specs[k];
    return field;
}

namespace {

IvpProblem transport_problem(const DiagonalMetric& g, int i, int j, const AlgebraVector& v0, double t) {
    require_basis_index(g.n, i, j);
    if (g.n != v0.n) throw std::invalid_argument("metric and vector dimension mismatch");
    Matrix system = -nabla_left_matrix(g, AlgebraVector::basis(g.n, i, j));
    IvpProblem p;
    p.dim = basis_dim(g.n);
    p.t0 = 0.0;
    p.t1 = t;
    p.y0 = v0.c;
    p.rhs = [system](double, const Vector& y) { return system * y; };
    return p;
}

}  // namespace

AlgebraVector parallel_transport(const DiagonalMetric& g, int i, int j, const AlgebraVector& v0, double t,
                                 double rtol, double atol) {
    if (t == 0.0) return v0;
    Trajectory traj = rk_adaptive(transport_problem(g, i, j, v0, t), rtol, atol);
    return AlgebraVector(g.n, traj.y_back());
}

Trajectory parallel_transport_dense(const DiagonalMetric& g, int i, int j, const AlgebraVector& v0, double t,
                                    double rtol, double atol) {
    return rk_adaptive(transport_problem(g, i, j, v0, t), rtol, atol);
}

std::pair<AlgebraVector, AlgebraVector> sasaki_residual(const DiagonalMetric& g, const FieldAlongBase& field,
                                                        double t) {
    if (g.n != field.n) throw std::invalid_argument("metric and field dimension mismatch");
    int n = g.n, i = field.base_i, j = field.base_j;
    Matrix wm = basis_element(n, i, j);
    AlgebraVector w = AlgebraVector::basis(n, i, j);
    auto ad_w = [&](const AlgebraVector& y) { return skew_to_vector(bracket(wm, vector_to_skew(y))); };

    AlgebraVector b0 = adjoint_rotation_apply(n, i, j, t, field.eval(t));
    AlgebraVector b1 = adjoint_rotation_apply(n, i, j, t, field.eval_d1(t));
    AlgebraVector b2 = adjoint_rotation_apply(n, i, j, t, field.eval_d2(t));

    // Left-trivialized fiber curve and its time derivatives.
    AlgebraVector gamma = b0;
    AlgebraVector gamma_d1 = b1 - ad_w(gamma);
    AlgebraVector gamma_d2 = b2 - ad_w(b1) - ad_w(gamma_d1);

    AlgebraVector dgamma = gamma_d1 + nabla_left(g, w, gamma);
    AlgebraVector dgamma_d1 = gamma_d2 + nabla_left(g, w, gamma_d1);
    AlgebraVector ddgamma = dgamma_d1 + nabla_left(g, w, dgamma);

    AlgebraVector base_defect = nabla_left(g, w, w) + curvature_origin(g, gamma, dgamma, w);
    AlgebraVector fiber_defect = ddgamma + metric_eval(g, dgamma, dgamma) * gamma;
    return {base_defect, fiber_defect};
}

}  // namespace orbitgeo
