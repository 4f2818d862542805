#pragma once

#include "recnodes/geometry.hpp"
#include "recnodes/modal.hpp"
#include "recnodes/simplexnodes.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace recnodes {

// Options for maximizing a function over the simplex: a symmetric
// equispaced barycentric scan followed by nested local refinement of the
// best candidates.  grid_degree <= 0 selects the per-dimension default.
struct SearchOptions {
  int grid_degree = 0;
  int top_k = 10;
  int refine_levels = 8;
  double shrink = 4.0;
};

int default_grid_degree(int d, int n);
int default_sample_degree(int d);

struct LebesgueResult {
  double constant = 0.0;
  BaryPoint argmax;
  long samples_used = 0;
  int refinement_levels = 0;
};

// Lagrange basis machinery for one node set: the modal Vandermonde V is
// factorized once, evaluation batches solve against the factorization.
class LagrangeOperator {
public:
  explicit LagrangeOperator(NodeSet nodes);

  const NodeSet& nodes() const { return nodes_; }
  const ModalBasis& basis() const { return basis_; }
  int dim() const { return nodes_.dim; }
  int degree() const { return nodes_.degree; }
  int size() const { return basis_.size(); }

  // 1-norm condition estimate of the Vandermonde.
  double vandermonde_condition() const { return vcond_; }
  const Eigen::MatrixXd& vandermonde() const { return vmat_; }

  // Entry (i, j) = phi_j(p_i).
  Eigen::MatrixXd eval(const std::vector<BaryPoint>& pts) const;

  // d matrices; matrix j holds d(phi_k)/d(x_j) in the coordinates of g.
  std::vector<Eigen::MatrixXd> grad_eval(const std::vector<BaryPoint>& pts,
                                         const SimplexGeometry& g) const;

  // lambda(p_i) = sum_j |phi_j(p_i)|.
  Eigen::VectorXd lebesgue_function(const std::vector<BaryPoint>& pts) const;

  // Lower bound on the Lebesgue constant by grid scan plus refinement.
  LebesgueResult lebesgue_constant(const SearchOptions& opts = {}) const;

private:
  // Right-multiplies by V^{-1} through the factorization.
  Eigen::MatrixXd apply_inverse_vandermonde(const Eigen::MatrixXd& batch) const;

  NodeSet nodes_;
  ModalBasis basis_;
  Eigen::MatrixXd vmat_;
  Eigen::PartialPivLU<Eigen::MatrixXd> vlu_;
  double vcond_ = 0.0;
};

// Maximize a batched objective over the closed d-simplex; returns the best
// value found, its barycentric location, and the number of evaluations.
struct MaximizeResult {
  double value = 0.0;
  BaryPoint argmax;
  long samples = 0;
};
MaximizeResult maximize_on_simplex(
    int d, const std::function<Eigen::VectorXd(const std::vector<BaryPoint>&)>& objective,
    const SearchOptions& opts);

// Interpolation benchmark functions.
double f_A(const Eigen::VectorXd& x);
double f_B(const Eigen::VectorXd& x, double alpha);

// Sup-norm estimate of I_X f - f over g, sampled on a degree-sample_degree
// grid with top-k refinement seeded at the largest residuals.
double interpolation_error(const LagrangeOperator& op,
                           const std::function<double(const Eigen::VectorXd&)>& f,
                           const SimplexGeometry& g, int sample_degree,
                           const SearchOptions& search = {});

} // namespace recnodes
