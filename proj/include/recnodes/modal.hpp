#pragma once

#include "recnodes/geometry.hpp"
#include "recnodes/multiindex.hpp"
#include "recnodes/simplexnodes.hpp"

#include <Eigen/Dense>

#include <vector>

namespace recnodes {

// Orthonormal modal polynomial basis on the unit d-simplex, evaluated
// directly on barycentric coordinates.  Each function is a product over
// collapsed-coordinate levels of Jacobi polynomials homogenized in two
// barycentric partial sums, so values and first derivatives stay finite on
// the whole closed simplex, boundary and vertices included.
class ModalBasis {
public:
  ModalBasis(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(tuples_.size()); }

  // Degree-graded index tuples (one entry per level), lexicographically
  // ordered within each total degree; the first binomial(m+d,d) functions
  // span the degree-m polynomials.
  const std::vector<MultiIndex>& tuples() const { return tuples_; }

  // Values: entry (i, k) = psi_k(p_i).
  Eigen::MatrixXd eval(const std::vector<BaryPoint>& pts) const;

  // Barycentric partials: d+1 matrices, matrix i holding d(psi_k)/d(b_i).
  std::vector<Eigen::MatrixXd> grad_bary(const std::vector<BaryPoint>& pts) const;

  // Cartesian gradients on a geometry via the affine chain rule: d matrices,
  // matrix j holding d(psi_k)/d(x_j).
  std::vector<Eigen::MatrixXd> grad(const std::vector<BaryPoint>& pts,
                                    const SimplexGeometry& g) const;

private:
  void eval_impl(const std::vector<BaryPoint>& pts, Eigen::MatrixXd* values,
                 std::vector<Eigen::MatrixXd>* partials) const;

  int dim_;
  int degree_;
  std::vector<MultiIndex> tuples_;
  std::vector<double> norms_; // per-function normalization constants
};

} // namespace recnodes
