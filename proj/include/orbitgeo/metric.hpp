#pragma once

#include "orbitgeo/so_algebra.hpp"

#include <string>

namespace orbitgeo {

// Diagonal invariant metric on so(n): g(w_ij, w_rs) = mu_ij when (r,s)=(i,j), else 0.
struct DiagonalMetric {
    int n = 0;
    Vector mu;  // length n(n-1)/2, basis order, all entries > 0

    DiagonalMetric() = default;
    DiagonalMetric(int n_, Vector mu_);
    double mu_at(int i, int j) const;
    double& mu_at(int i, int j);
};

DiagonalMetric equal_metric(int n, double mu);

double metric_eval(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y);

// Eigenvalues of the operator P with g = Q(P., .): p_ij = mu_ij / (2(n-2)).
// Throws std::domain_error for n = 2, where Q vanishes identically (so(2) is abelian).
Vector metric_to_P(const DiagonalMetric& g);

// Symmetric bilinear map defined by 2 g(U(X,Y), Z) = g([Z,X], Y) + g([Z,Y], X) for all Z.
AlgebraVector u_operator(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y);

// Covariant derivative of action fields at the origin coset: -(1/2)[X,Y] + U(X,Y).
AlgebraVector nabla_origin(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y);

// Connection coefficients on left-invariant fields: (1/2)[X,Y] + U(X,Y).
// Skew-adjoint in Y for fixed X, which is what makes parallel transport an isometry.
AlgebraVector nabla_left(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y);

// Matrix of Y -> nabla_left(X, Y) over the basis, for building transport systems.
Matrix nabla_left_matrix(const DiagonalMetric& g, const AlgebraVector& x);

// Curvature tensor R(X,Y)Z at the origin, evaluated in the left-invariant frame:
// R(X,Y)Z = L_X L_Y Z - L_Y L_X Z - L_[X,Y] Z with L = nabla_left.
// Sign convention: equal-mu coordinate planes on so(3) get sectional curvature +1/(4 mu).
AlgebraVector curvature_origin(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y,
                               const AlgebraVector& z);

// g(R(X,Y)Y, X) / (|X|^2 |Y|^2 - g(X,Y)^2). Throws std::domain_error when the
// denominator is below 1e-14 (degenerate plane, including every n = 2 input).
double sectional_curvature(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y);

// JSON form: {"n": int, "mu": {"i,j": float, ...}}. Missing entries default to 1.0;
// non-positive values and unknown keys are rejected.
DiagonalMetric metric_from_json(const std::string& text);
std::string metric_to_json(const DiagonalMetric& g, int indent = 2);

}  // namespace orbitgeo
