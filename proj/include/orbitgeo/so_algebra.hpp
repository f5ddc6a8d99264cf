#pragma once

#include <Eigen/Dense>
#include <utility>

namespace orbitgeo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Coefficient vector over the basis {w_ij = E_ij - E_ji : 1 <= j < i <= n} of so(n),
// ordered lexicographically on (i,j): (2,1),(3,1),(3,2),(4,1),...
struct AlgebraVector {
    int n = 0;
    Vector c;  // length n(n-1)/2, basis order above

    AlgebraVector() = default;
    AlgebraVector(int n_, Vector c_);
    static AlgebraVector zero(int n);
    static AlgebraVector basis(int n, int i, int j);  // coefficient 1 on w_ij

    double coeff(int i, int j) const;
    double& coeff(int i, int j);
};

AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b);
AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b);
AlgebraVector operator*(double s, const AlgebraVector& a);
AlgebraVector operator-(const AlgebraVector& a);

int basis_dim(int n);                          // n(n-1)/2
int basis_index(int n, int i, int j);          // flat position, 0-based
std::pair<int, int> basis_pair(int n, int k);  // inverse of basis_index
void require_basis_index(int n, int i, int j); // throws std::invalid_argument

// w_ij = E_ij - E_ji; entry (i,j) below the diagonal is +1 and (j,i) is -1
// with the 1-based convention E_ab(row a, col b) = 1.
Matrix basis_element(int n, int i, int j);

Matrix bracket(const Matrix& X, const Matrix& Y);  // XY - YX

// Coefficients of a skew matrix in the w_ij basis: x_ij = entry (i,j) below the diagonal.
AlgebraVector skew_to_vector(const Matrix& X);
Matrix vector_to_skew(const AlgebraVector& x);

// -(n-2) tr(XY); positive definite on so(n) for n >= 3, identically 0 for n = 2.
double killing_Q(const Matrix& X, const Matrix& Y);

// exp(t w_ij): plane rotation by t in coordinates (i,j).
Matrix givens_exp(int n, int i, int j, double t);

// e^{-t ad(w_ij)} w_rs by the closed-form rotation relations. Basis vectors whose
// index pair equals (i,j) or is disjoint from it are fixed; the rest rotate in
// pairs determined by the position of the non-shared index.
AlgebraVector adjoint_rotation(int n, int i, int j, double t, int r, int s);

// e^{-t ad(w_ij)} applied to a whole coefficient vector.
AlgebraVector adjoint_rotation_apply(int n, int i, int j, double t, const AlgebraVector& x);

}  // namespace orbitgeo
