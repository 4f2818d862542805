#pragma once

#include "recnodes/geometry.hpp"
#include "recnodes/interp.hpp"

#include <Eigen/Dense>

namespace recnodes {

// Conical-product quadrature on the unit d-simplex assembled from 1D
// Gauss-Jacobi rules; exact for total degree <= 2q - 1.
struct SimplexQuadrature {
  int dim = 0;
  std::vector<BaryPoint> points;
  Eigen::VectorXd weights; // positive, summing to 1/d!
  int exactness_degree = 0;
};

SimplexQuadrature simplex_quadrature(int d, int q);

struct ConditionReport {
  double value = 1.0; // sigma_max / sigma_min_nonzero
  double sigma_max = 0.0;
  double sigma_min_nonzero = 0.0;
  int numerical_rank = 0;
  int kernel_dim = 0;
};

// Full SVD; singular values below rel_threshold * sigma_max count as zero.
ConditionReport cond2(const Eigen::MatrixXd& A, double rel_threshold = 1e-10);

// Condition number with the kernel dimension supplied analytically, for
// matrices whose genuine smallest singular value can fall below any fixed
// relative threshold at high degree.
ConditionReport cond2_tables(const Eigen::MatrixXd& A, int kernel_dim);

// Mass matrix over the unit simplex, computed both in closed form from the
// orthonormal modal basis and by quadrature; the two paths are
// cross-checked before the quadrature result is returned.
Eigen::MatrixXd mass_matrix(const LagrangeOperator& op, int quad_order = 0);

// Mass matrix scaled to a concrete geometry (volume factor only, since the
// map is affine).
Eigen::MatrixXd mass_matrix(const LagrangeOperator& op, const SimplexGeometry& g,
                            int quad_order = 0);

// Stiffness matrix over g; symmetric positive semidefinite with the
// constants as kernel.
Eigen::MatrixXd stiffness_matrix(const LagrangeOperator& op, const SimplexGeometry& g,
                                 int quad_order = 0);

// Nodal derivative blocks stacked into a (d N) x N matrix.
Eigen::MatrixXd nodal_gradient(const LagrangeOperator& op, const SimplexGeometry& g);

// Nodal Laplacian assembled as sum_j D_j D_j, exact on degree-n polynomials.
Eigen::MatrixXd nodal_laplacian(const LagrangeOperator& op, const SimplexGeometry& g);

// Integral of the sum of squared Lagrange basis functions; equals trace(M).
double lambda2(const LagrangeOperator& op, int quad_order = 0);

} // namespace recnodes
