#pragma once

#include "orbitgeo/so_algebra.hpp"

#include <utility>
#include <vector>

namespace orbitgeo {

// Element (X, a) of the semidirect product so(n) x_Ad SO(n).
struct GStarElement {
    AlgebraVector X;
    Matrix a;
};

// Tangent-bundle point over the flag of full coordinate lines: base coset
// representative b in SO(n) plus the fiber coefficient vector Y of the tangent
// vector (d phi_b)(Y*(origin)). (b, Y) and (b h, Ad(h^{-1}) Y) are the same point
// for h in the discrete isotropy H of diagonal +-1 matrices with det 1.
struct TangentPoint {
    Matrix base;
    AlgebraVector fiber;
};

GStarElement gstar_identity(int n);
GStarElement gstar_mul(const GStarElement& p, const GStarElement& q);   // (X + Ad(a)Y, ab)
GStarElement gstar_inv(const GStarElement& p);                          // (-Ad(a^{-1})X, a^{-1})

// Lie bracket of the semidirect algebra on pairs (X, Y):
// [(X1,Y1),(X2,Y2)] = ([Y1,X2] - [Y2,X1], [Y1,Y2]).
std::pair<AlgebraVector, AlgebraVector> gstar_bracket(const std::pair<AlgebraVector, AlgebraVector>& u,
                                                      const std::pair<AlgebraVector, AlgebraVector>& v);

// Action of (X, a) on a tangent point: pushforward by a plus the action field of X.
// In the (base, fiber) trivialization: base -> a b, fiber -> Y + Ad((a b)^{-1}) X.
TangentPoint action_tangent(const GStarElement& p, const TangentPoint& v);

// The identification (X, a) H* <-> (X, a H). Both directions repackage the pair;
// the fiber slot of the result is the action-field generator X, not the
// pushforward coefficient, and the base is a coset representative.
TangentPoint omega_ident(const GStarElement& p);
GStarElement omega_ident_inv(const TangentPoint& v);

// Coset equality: a^{-1} b is a diagonal +-1 matrix with det 1, within tol.
bool coset_equal(const Matrix& a, const Matrix& b, double tol = 1e-10);

// Point equality on the tangent bundle: bases agree as cosets via some h in H
// and the fibers are related by Ad(h).
bool tangent_equal(const TangentPoint& v, const TangentPoint& w, double tol = 1e-10);

// A group element mapping v to w under action_tangent, built constructively:
// (Ad(c)(Z - Y), c b^{-1}) for v = (b, Y), w = (c, Z).
GStarElement transporting_element(const TangentPoint& v, const TangentPoint& w);

// All 2^{n-1} diagonal +-1 matrices with determinant 1 (the isotropy of the origin coset).
std::vector<Matrix> isotropy_elements(int n);

}  // namespace orbitgeo
