#pragma once

#include "orbitgeo/curves.hpp"
#include "orbitgeo/metric.hpp"

#include <utility>
#include <vector>

namespace orbitgeo {

// Position of the shared-index partner s relative to the base pair (i, j):
// Between means j < s < i, Below means s < j, Above means s > i.
enum class Regime { Between, Below, Above };

Regime regime_of(int i, int j, int s);

// The two coupled coefficients for base (i,j) and partner s, in a fixed order:
// Between -> (w_is, w_sj), Below -> (w_is, w_js), Above -> (w_si, w_sj).
std::pair<std::pair<int, int>, std::pair<int, int>> regime_pair(int i, int j, int s, Regime regime);

// Defect of the parallelism system along exp(t w_ij), one entry per basis
// index: the (i,j) and disjoint entries are plain derivatives x'_rs, and the
// shared-index entries form the coupled two-by-two blocks. Zero exactly when
// the field is parallel along the base curve.
Vector horizontal_residual(const DiagonalMetric& g, const FieldAlongBase& field, double t);

// Exact solution of one two-by-two parallelism block with initial coefficients
// (a, b) on the ordered pair. Returns the pair of coefficient curves; equal
// metric weights on the pair reduce to a single-frequency trigonometric pair.
std::pair<CurveSpec, CurveSpec> solve_horizontal_pair(const DiagonalMetric& g, int i, int j, int s, Regime regime,
                                                      double a, double b);

// Field with the given pair coefficients plus an optional constant coefficient
// on the base index itself.
FieldAlongBase family_horizontal_I(const DiagonalMetric& g, int i, int j, int s, Regime regime, double a, double b,
                                   double base_coeff = 0.0);

// Constant entries allowed only on (i,j) or on indices disjoint from {i,j};
// any other index is rejected. The resulting constant field is parallel.
struct IndexCoeff {
    int r = 0, s = 0;
    double value = 0.0;
};
FieldAlongBase horizontal_family_II(const DiagonalMetric& g, int i, int j, const std::vector<IndexCoeff>& entries);

// Defect of the oblique geodesic system x''_uv = -(sum mu (x')^2) x_uv.
// The field may only be supported on (i,j) and indices disjoint from {i,j}.
Vector oblique_system_residual(const DiagonalMetric& g, const FieldAlongBase& field, double t);

// Scalar oblique solution x'' = -mu x (x')^2 via quadrature inversion of the
// first integral. v0 = 0 returns the equilibrium x0.
double solve_oblique_scalar(double mu, double x0, double v0, double t);

// Coefficients c_0..c_kmax of the series inverse of y -> int_0^y e^{w^2} dw,
// from c_0 = 1 and c_k = sum_{m<k} c_m c_{k-1-m} / ((m+1)(2m+1)). Computed in
// exact integer rationals while they fit 128 bits, then in doubles.
std::vector<double> oblique_series_coefficients(int k_max);

// Series form of the scalar oblique solution,
// x(t) = sqrt(2/mu) * sum_k (-1)^k c_k z^{2k+1} / (2k+1),
// with z = S(sqrt(mu/2) x0) + sqrt(mu/2) v0 e^{mu x0^2/2} t and S the integral
// above. Throws std::domain_error when |z| exceeds the convergence guard 0.5.
double oblique_series_eval(double mu, double x0, double v0, double t);

// Oblique family: initial data per supported index; a single component uses the
// exact scalar solution, several components share one numerical trajectory of
// the coupled system over [t0, t1].
struct ObliqueComponent {
    int r = 0, s = 0;
    double x0 = 0.0, v0 = 0.0;
};
FieldAlongBase family_oblique(const DiagonalMetric& g, int i, int j, const std::vector<ObliqueComponent>& comps,
                              double t0, double t1);

// Parallel transport of v0 along exp(t w_ij), integrated in the left-invariant
// frame where the transport system has constant coefficients and the diagonal
// metric norm of the state is conserved exactly.
AlgebraVector parallel_transport(const DiagonalMetric& g, int i, int j, const AlgebraVector& v0, double t,
                                 double rtol = 1e-11, double atol = 1e-13);
Trajectory parallel_transport_dense(const DiagonalMetric& g, int i, int j, const AlgebraVector& v0, double t,
                                    double rtol = 1e-11, double atol = 1e-13);

// Defect pair of the tangent-bundle geodesic equations along exp(t w_ij), in
// the left-invariant frame at the moving point:
// first  = D_t zdot + R(gamma, D_t gamma) zdot   (base equation)
// second = D_t D_t gamma + g(D_t gamma, D_t gamma) gamma   (fiber equation).
std::pair<AlgebraVector, AlgebraVector> sasaki_residual(const DiagonalMetric& g, const FieldAlongBase& field,
                                                        double t);

}  // namespace orbitgeo
