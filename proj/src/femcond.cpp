#include "recnodes/femcond.hpp"

#include "recnodes/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace recnodes {

SimplexQuadrature simplex_quadrature(int d, int q)
{
  if (d < 1 || d > 3)
    throw std::invalid_argument("simplex_quadrature: d must be in 1..3");
  if (q < 1 || q > kMaxQuadPoints1D)
    throw std::invalid_argument("simplex_quadrature: q out of range");

  // direction k integrates against (1-t)^{k-1}, the collapsed-map Jacobian
  std::vector<QuadratureRule1D> rules;
  for (int k = 1; k <= d; ++k)
    rules.push_back(gauss_jacobi(k - 1.0, 0.0, q));

  SimplexQuadrature quad;
  quad.dim = d;
  quad.exactness_degree = 2 * q - 1;
  int npts = 1;
  for (int k = 0; k < d; ++k)
    npts *= q;
  quad.points.reserve(npts);
  quad.weights.resize(npts);

  std::vector<int> idx(d, 0);
  for (int p = 0; p < npts; ++p) {
    BaryPoint b(d + 1);
    double w = 1.0;
    double shrink = 1.0; // prod_{j>k} (1 - t_j), accumulated top down
    for (int k = d; k >= 1; --k) {
      double t = rules[k - 1].points[idx[k - 1]];
      w *= rules[k - 1].weights[idx[k - 1]];
      b[k] = t * shrink;
      shrink *= 1.0 - t;
    }
    b[0] = shrink;
    quad.points.push_back(std::move(b));
    quad.weights(p) = w;
    for (int k = 0; k < d; ++k) {
      if (++idx[k] < q)
        break;
      idx[k] = 0;
    }
  }
  return quad;
}

ConditionReport cond2(const Eigen::MatrixXd& A, double rel_threshold)
{
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  const Eigen::VectorXd& sv = svd.singularValues();
  int mn = static_cast<int>(sv.size());
  double smax = sv(0);
  if (!(smax > 0.0))
    throw numerical_error("cond2: condition number of the zero matrix is undefined");
  ConditionReport rep;
  rep.sigma_max = smax;
  rep.numerical_rank = 0;
  for (int i = 0; i < mn; ++i)
    if (sv(i) > rel_threshold * smax)
      rep.numerical_rank = i + 1;
  rep.kernel_dim = mn - rep.numerical_rank;
  rep.sigma_min_nonzero = sv(rep.numerical_rank - 1);
  rep.value = smax / rep.sigma_min_nonzero;
  return rep;
}

namespace {

// Pseudoinverse condition number with the kernel dimension known a priori
// instead of thresholded; used for the condition tables where the genuine
// smallest singular value can drop below any fixed relative threshold.
ConditionReport cond2_known_kernel(const Eigen::MatrixXd& A, int kernel_dim)
{
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  const Eigen::VectorXd& sv = svd.singularValues();
  int mn = static_cast<int>(sv.size());
  if (kernel_dim < 0 || kernel_dim >= mn)
    throw std::invalid_argument("cond2_known_kernel: kernel dimension out of range");
  ConditionReport rep;
  rep.sigma_max = sv(0);
  rep.kernel_dim = kernel_dim;
  rep.numerical_rank = mn - kernel_dim;
  rep.sigma_min_nonzero = sv(rep.numerical_rank - 1);
  rep.value = rep.sigma_max / rep.sigma_min_nonzero;
  return rep;
}

Eigen::MatrixXd mass_closed_form(const LagrangeOperator& op)
{
  const Eigen::MatrixXd& V = op.vandermonde();
  Eigen::MatrixXd G = V * V.transpose();
  return G.ldlt().solve(Eigen::MatrixXd::Identity(G.rows(), G.cols()));
}

Eigen::MatrixXd mass_quadrature(const LagrangeOperator& op, int q)
{
  SimplexQuadrature quad = simplex_quadrature(op.dim(), q > 0 ? q : op.degree() + 2);
  Eigen::MatrixXd phi = op.eval(quad.points);
  return phi.transpose() * quad.weights.asDiagonal() * phi;
}

} // namespace

Eigen::MatrixXd mass_matrix(const LagrangeOperator& op, int quad_order)
{
  Eigen::MatrixXd mq = mass_quadrature(op, quad_order);
  Eigen::MatrixXd mc = mass_closed_form(op);
  double kv = op.vandermonde_condition();
  // the closed-form inverse loses accuracy like eps * cond(V)^2
  double tol = std::max(1e-9, 10.0 * std::numeric_limits<double>::epsilon() * kv * kv);
  double rel = (mq - mc).norm() / mq.norm();
  if (!(rel <= tol))
    throw numerical_error("mass matrix dual-path disagreement: relative " +
                          std::to_string(rel));
  if (Eigen::LLT<Eigen::MatrixXd>(mq).info() != Eigen::Success)
    throw numerical_error("mass matrix is not numerically positive definite");
  return mq;
}

Eigen::MatrixXd mass_matrix(const LagrangeOperator& op, const SimplexGeometry& g,
                            int quad_order)
{
  double scale = g.volume();
  for (int k = 2; k <= g.dim(); ++k)
    scale *= k; // d! vol(g) relative to the unit simplex
  return scale * mass_matrix(op, quad_order);
}

Eigen::MatrixXd stiffness_matrix(const LagrangeOperator& op, const SimplexGeometry& g,
                                 int quad_order)
{
  if (g.dim() != op.dim())
    throw std::invalid_argument("stiffness_matrix: geometry dimension mismatch");
  SimplexQuadrature quad = simplex_quadrature(op.dim(), quad_order > 0 ? quad_order : op.degree() + 2);
  std::vector<Eigen::MatrixXd> gq = op.basis().grad(quad.points, g);
  double scale = g.volume();
  for (int k = 2; k <= g.dim(); ++k)
    scale *= k;
  Eigen::VectorXd w = scale * quad.weights;

  int nb = op.size();
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(nb, nb);
  for (const Eigen::MatrixXd& gj : gq)
    S.noalias() += gj.transpose() * w.asDiagonal() * gj;

  // K = V^{-T} S V^{-1}, via two solves against the stored factorization
  const Eigen::MatrixXd& V = op.vandermonde();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(V);
  Eigen::MatrixXd Y = lu.transpose().solve(S);
  Eigen::MatrixXd K = lu.transpose().solve(Y.transpose());
  K.transposeInPlace();
  K = 0.5 * (K + K.transpose()).eval();
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(nb);
  if ((K * ones).norm() > 1e-8 * K.norm())
    throw numerical_error("stiffness matrix does not annihilate constants");
  return K;
}

Eigen::MatrixXd nodal_gradient(const LagrangeOperator& op, const SimplexGeometry& g)
{
  std::vector<Eigen::MatrixXd> blocks = op.grad_eval(op.nodes().points, g);
  int nb = op.size();
  Eigen::MatrixXd G(op.dim() * nb, nb);
  for (int j = 0; j < op.dim(); ++j)
    G.middleRows(j * nb, nb) = blocks[j];
  return G;
}

Eigen::MatrixXd nodal_laplacian(const LagrangeOperator& op, const SimplexGeometry& g)
{
  std::vector<Eigen::MatrixXd> blocks = op.grad_eval(op.nodes().points, g);
  int nb = op.size();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(nb, nb);
  for (const Eigen::MatrixXd& dj : blocks)
    L.noalias() += dj * dj;
  return L;
}

double lambda2(const LagrangeOperator& op, int quad_order)
{
  return mass_matrix(op, quad_order).trace();
}

ConditionReport cond2_tables(const Eigen::MatrixXd& A, int kernel_dim)
{
  return cond2_known_kernel(A, kernel_dim);
}

} // namespace recnodes
