#include "orbitgeo/so_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitgeo {

namespace {

void require_dim(int n) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2, got " + std::to_string(n));
}

}  // namespace

int basis_dim(int n) {
    require_dim(n);
    return n * (n - 1) / 2;
}

void require_basis_index(int n, int i, int j) {
    require_dim(n);
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("basis index (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range for n=" + std::to_string(n));
    if (i <= j)
        throw std::invalid_argument("basis index requires i > j, got (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
}

int basis_index(int n, int i, int j) {
    require_basis_index(n, i, j);
    return (i - 1) * (i - 2) / 2 + (j - 1);
}

std::pair<int, int> basis_pair(int n, int k) {
    if (k < 0 || k >= basis_dim(n)) throw std::invalid_argument("flat basis index out of range");
    int i = 2;
    while (i * (i - 1) / 2 <= k) ++i;
    int j = k - (i - 1) * (i - 2) / 2 + 1;
    return {i, j};
}

AlgebraVector::AlgebraVector(int n_, Vector c_) : n(n_), c(std::move(c_)) {
    if (c.size() != basis_dim(n)) throw std::invalid_argument("coefficient length does not match n(n-1)/2");
}

AlgebraVector AlgebraVector::zero(int n) { return AlgebraVector(n, Vector::Zero(basis_dim(n))); }

AlgebraVector AlgebraVector::basis(int n, int i, int j) {
    AlgebraVector x = zero(n);
    x.c[basis_index(n, i, j)] = 1.0;
    return x;
}

double AlgebraVector::coeff(int i, int j) const { return c[basis_index(n, i, j)]; }
double& AlgebraVector::coeff(int i, int j) { return c[basis_index(n, i, j)]; }

namespace {

void require_same(const AlgebraVector& a, const AlgebraVector& b) {
    if (a.n != b.n) throw std::invalid_argument("algebra vector dimension mismatch");
}

}  // namespace

AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b) {
    require_same(a, b);
    return AlgebraVector(a.n, a.c + b.c);
}

AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b) {
    require_same(a, b);
    return AlgebraVector(a.n, a.c - b.c);
}

AlgebraVector operator*(double s, const AlgebraVector& a) { return AlgebraVector(a.n, s * a.c); }

AlgebraVector operator-(const AlgebraVector& a) { return AlgebraVector(a.n, -a.c); }

Matrix basis_element(int n, int i, int j) {
    require_basis_index(n, i, j);
    Matrix w = Matrix::Zero(n, n);
    w(i - 1, j - 1) = 1.0;
    w(j - 1, i - 1) = -1.0;
    return w;
}

Matrix bracket(const Matrix& X, const Matrix& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols() || X.rows() != X.cols())
        throw std::invalid_argument("bracket requires square matrices of equal dimension");
    return X * Y - Y * X;
}

AlgebraVector skew_to_vector(const Matrix& X) {
    int n = static_cast<int>(X.rows());
    require_dim(n);
    AlgebraVector x = AlgebraVector::zero(n);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) x.c[basis_index(n, i, j)] = X(i - 1, j - 1);
    return x;
}

Matrix vector_to_skew(const AlgebraVector& x) {
    Matrix X = Matrix::Zero(x.n, x.n);
    for (int i = 2; i <= x.n; ++i)
        for (int j = 1; j < i; ++j) {
            double v = x.c[basis_index(x.n, i, j)];
            X(i - 1, j - 1) = v;
            X(j - 1, i - 1) = -v;
        }
    return X;
}

double killing_Q(const Matrix& X, const Matrix& Y) {
    if (X.rows() != Y.rows() || X.rows() != X.cols() || X.cols() != Y.cols())
        throw std::invalid_argument("killing_Q requires square matrices of equal dimension");
    int n = static_cast<int>(X.rows());
    require_dim(n);
    return -static_cast<double>(n - 2) * (X * Y).trace();
}

Matrix givens_exp(int n, int i, int j, double t) {
    require_basis_index(n, i, j);
    Matrix a = Matrix::Identity(n, n);
    double c = std::cos(t), s = std::sin(t);
    // w_ij has +1 at (i,j), so exp(t w_ij) rotates coordinate j toward coordinate i.
    a(j - 1, j - 1) = c;
    a(i - 1, i - 1) = c;
    a(j - 1, i - 1) = -s;
    a(i - 1, j - 1) = s;
    return a;
}

AlgebraVector adjoint_rotation(int n, int i, int j, double t, int r, int s) {
    require_basis_index(n, i, j);
    require_basis_index(n, r, s);
    AlgebraVector out = AlgebraVector::zero(n);
    double ct = std::cos(t), st = std::sin(t);

    if ((r == i && s == j) || (r != i && r != j && s != i && s != j)) {
        out.coeff(r, s) = 1.0;
        return out;
    }

    // Exactly one index shared with (i,j); m is the other index of (r,s).
    if (r == i || s == i) {
        int m = (r == i) ? s : r;
        if (m < j) {                       // pair (w_im, w_jm)
            out.coeff(i, m) = ct;
            out.coeff(j, m) = st;
        } else if (m < i) {                // pair (w_im, w_mj)
            out.coeff(i, m) = ct;
            out.coeff(m, j) = -st;
        } else {                           // pair (w_mi, w_mj)
            out.coeff(m, i) = ct;
            out.coeff(m, j) = st;
        }
    } else {  // shares j
        int m = (r == j) ? s : r;
        if (m < j) {                       // partner of w_jm is w_im
            out.coeff(j, m) = ct;
            out.coeff(i, m) = -st;
        } else if (m < i) {                // partner of w_mj is w_im
            out.coeff(m, j) = ct;
            out.coeff(i, m) = st;
        } else {                           // partner of w_mj is w_mi
            out.coeff(m, j) = ct;
            out.coeff(m, i) = -st;
        }
    }
    return out;
}

AlgebraVector adjoint_rotation_apply(int n, int i, int j, double t, const AlgebraVector& x) {
    if (x.n != n) throw std::invalid_argument("algebra vector dimension mismatch");
    AlgebraVector out = AlgebraVector::zero(n);
    int d = basis_dim(n);
    for (int k = 0; k < d; ++k) {
        if (x.c[k] == 0.0) continue;
        auto [r, s] = basis_pair(n, k);
        AlgebraVector img = adjoint_rotation(n, i, j, t, r, s);
        out.c += x.c[k] * img.c;
    }
    return out;
}

}  // namespace orbitgeo
