#include "orbitgeo/semidirect.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitgeo {

namespace {

void require_group_part(const Matrix& a, double tol = 1e-8) {
    if (a.rows() != a.cols()) throw std::invalid_argument("group part must be square");
    int n = static_cast<int>(a.rows());
    if ((a.transpose() * a - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("group part is not orthogonal");
    if (std::abs(a.determinant() - 1.0) > tol) throw std::invalid_argument("group part must have determinant 1");
}

void require_element(const GStarElement& p) {
    require_group_part(p.a);
    if (p.X.n != static_cast<int>(p.a.rows())) throw std::invalid_argument("element parts have mismatched dimension");
}

AlgebraVector ad_conjugate(const Matrix& a, const AlgebraVector& x) {
    return skew_to_vector(a * vector_to_skew(x) * a.transpose());
}

}  // namespace

GStarElement gstar_identity(int n) { return {AlgebraVector::zero(n), Matrix::Identity(n, n)}; }

GStarElement gstar_mul(const GStarElement& p, const GStarElement& q) {
    require_element(p);
    require_element(q);
    if (p.X.n != q.X.n) throw std::invalid_argument("semidirect product dimension mismatch");
    return {p.X + ad_conjugate(p.a, q.X), p.a * q.a};
}

GStarElement gstar_inv(const GStarElement& p) {
    require_element(p);
    Matrix ainv = p.a.transpose();
    return {-ad_conjugate(ainv, p.X), ainv};
}

std::pair<AlgebraVector, AlgebraVector> gstar_bracket(const std::pair<AlgebraVector, AlgebraVector>& u,
                                                      const std::pair<AlgebraVector, AlgebraVector>& v) {
    if (u.first.n != v.first.n || u.first.n != u.second.n || v.first.n != v.second.n)
        throw std::invalid_argument("semidirect bracket dimension mismatch");
    Matrix x1 = vector_to_skew(u.first), y1 = vector_to_skew(u.second);
    Matrix x2 = vector_to_skew(v.first), y2 = vector_to_skew(v.second);
    return {skew_to_vector(bracket(y1, x2) - bracket(y2, x1)), skew_to_vector(bracket(y1, y2))};
}

TangentPoint action_tangent(const GStarElement& p, const TangentPoint& v) {
    require_element(p);
    require_group_part(v.base);
    if (p.X.n != v.fiber.n) throw std::invalid_argument("action dimension mismatch");
    Matrix nb = p.a * v.base;
    return {nb, v.fiber + ad_conjugate(nb.transpose(), p.X)};
}

TangentPoint omega_ident(const GStarElement& p) {
    require_element(p);
    return {p.a, p.X};
}

GStarElement omega_ident_inv(const TangentPoint& v) {
    require_group_part(v.base);
    return {v.fiber, v.base};
}

bool coset_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    int n = static_cast<int>(a.rows());
    Matrix h = a.transpose() * b;
    double det = 1.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r == c) {
                if (std::abs(std::abs(h(r, c)) - 1.0) > tol) return false;
                det *= (h(r, c) > 0.0) ? 1.0 : -1.0;
            } else if (std::abs(h(r, c)) > tol) {
                return false;
            }
        }
    return det > 0.0;
}

bool tangent_equal(const TangentPoint& v, const TangentPoint& w, double tol) {
    if (v.fiber.n != w.fiber.n) return false;
    if (!coset_equal(v.base, w.base, tol)) return false;
    int n = v.fiber.n;
    Matrix h = v.base.transpose() * w.base;
    Vector sign(n);
    for (int r = 0; r < n; ++r) sign[r] = (h(r, r) > 0.0) ? 1.0 : -1.0;
    // v = (b, Y), w = (b h, Z) mark the same point exactly when Y = Ad(h) Z;
    // Ad(h) acts on coefficients by w_ij -> sign_i sign_j w_ij.
    for (int k = 0; k < basis_dim(n); ++k) {
        auto [i, j] = basis_pair(n, k);
        if (std::abs(v.fiber.c[k] - sign[i - 1] * sign[j - 1] * w.fiber.c[k]) > tol) return false;
    }
    return true;
}

GStarElement transporting_element(const TangentPoint& v, const TangentPoint& w) {
    require_group_part(v.base);
    require_group_part(w.base);
    if (v.fiber.n != w.fiber.n) throw std::invalid_argument("transport dimension mismatch");
    return {ad_conjugate(w.base, w.fiber - v.fiber), w.base * v.base.transpose()};
}

std::vector<Matrix> isotropy_elements(int n) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    std::vector<Matrix> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Matrix h = Matrix::Identity(n, n);
        int flips = 0;
        for (int r = 0; r < n - 1; ++r)
            if (mask & (1u << r)) {
                h(r, r) = -1.0;
                ++flips;
            }
        if (flips % 2 == 1) h(n - 1, n - 1) = -1.0;
        out.push_back(h);
    }
    return out;
}

}  // namespace orbitgeo
