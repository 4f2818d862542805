#include "recnodes/interp.hpp"

#include "recnodes/errors.hpp"
#include "recnodes/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace recnodes {

int default_grid_degree(int d, int n)
{
  return d >= 3 ? std::max(5 * n, 40) : std::max(10 * n, 60);
}

int default_sample_degree(int d)
{
  return d >= 3 ? 40 : 50;
}

LagrangeOperator::LagrangeOperator(NodeSet nodes)
  : nodes_(std::move(nodes)), basis_(nodes_.dim, nodes_.degree)
{
  auto expected = static_cast<std::size_t>(binomial(nodes_.degree + nodes_.dim, nodes_.dim));
  if (nodes_.points.size() != expected)
    throw std::invalid_argument("LagrangeOperator: node count does not match the degree");
  vmat_ = basis_.eval(nodes_.points);
  vlu_.compute(vmat_);
  // rcond() is only meaningful when the factorization has no vanishing
  // pivot, so check the U diagonal first (it catches exact singularity,
  // e.g. duplicated nodes, where the estimator returns garbage)
  Eigen::VectorXd piv = vlu_.matrixLU().diagonal().cwiseAbs();
  double rcond = (piv.minCoeff() > 1e-14 * piv.maxCoeff()) ? vlu_.rcond() : 0.0;
  vcond_ = (rcond > 0.0) ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(rcond > 1e-14))
    throw numerical_error("node set is not unisolvent: Vandermonde condition estimate " +
                          std::to_string(vcond_));
}

Eigen::MatrixXd LagrangeOperator::apply_inverse_vandermonde(const Eigen::MatrixXd& batch) const
{
  Eigen::MatrixXd out(batch.rows(), batch.cols());
  parallel_for(batch.rows(), [&](std::int64_t r0, std::int64_t r1) {
    Eigen::MatrixXd sol = vlu_.transpose().solve(batch.middleRows(r0, r1 - r0).transpose());
    out.middleRows(r0, r1 - r0) = sol.transpose();
  });
  return out;
}

Eigen::MatrixXd LagrangeOperator::eval(const std::vector<BaryPoint>& pts) const
{
  return apply_inverse_vandermonde(basis_.eval(pts));
}

std::vector<Eigen::MatrixXd> LagrangeOperator::grad_eval(const std::vector<BaryPoint>& pts,
                                                         const SimplexGeometry& g) const
{
  std::vector<Eigen::MatrixXd> out = basis_.grad(pts, g);
  for (auto& m : out)
    m = apply_inverse_vandermonde(m);
  return out;
}

Eigen::VectorXd LagrangeOperator::lebesgue_function(const std::vector<BaryPoint>& pts) const
{
  return eval(pts).array().abs().rowwise().sum();
}

LebesgueResult LagrangeOperator::lebesgue_constant(const SearchOptions& opts) const
{
  SearchOptions o = opts;
  if (o.grid_degree <= 0)
    o.grid_degree = default_grid_degree(dim(), degree());
  MaximizeResult best = maximize_on_simplex(
      dim(),
      [this](const std::vector<BaryPoint>& pts) -> Eigen::VectorXd {
        return lebesgue_function(pts);
      },
      o);
  LebesgueResult result;
  result.constant = best.value;
  result.argmax = best.argmax;
  result.samples_used = best.samples;
  result.refinement_levels = o.refine_levels;
  return result;
}

MaximizeResult maximize_on_simplex(
    int d, const std::function<Eigen::VectorXd(const std::vector<BaryPoint>&)>& objective,
    const SearchOptions& opts)
{
  if (opts.grid_degree < 1 || opts.top_k < 1 || opts.refine_levels < 0 || opts.shrink <= 1.0)
    throw std::invalid_argument("maximize_on_simplex: invalid search options");
  const int G = opts.grid_degree;

  std::vector<BaryPoint> grid;
  for (const MultiIndex& alpha : enumerate_indices(d, G)) {
    BaryPoint b(d + 1);
    for (int i = 0; i <= d; ++i)
      b[i] = static_cast<double>(alpha[i]) / G;
    grid.push_back(std::move(b));
  }
  Eigen::VectorXd vals = objective(grid);

  MaximizeResult result;
  result.samples = static_cast<long>(grid.size());

  int k = std::min<int>(opts.top_k, static_cast<int>(grid.size()));
  std::vector<int> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](int a, int b) {
    if (vals(a) != vals(b))
      return vals(a) > vals(b);
    return a < b;
  });

  result.value = vals(order[0]);
  result.argmax = grid[order[0]];

  // local refinement template: an equispaced barycentric patch recentred
  // and shrunk around the running best point
  const int mloc = 8;
  std::vector<BaryPoint> offsets;
  double centroid = 1.0 / (d + 1);
  for (const MultiIndex& alpha : enumerate_indices(d, mloc)) {
    BaryPoint u(d + 1);
    for (int i = 0; i <= d; ++i)
      u[i] = static_cast<double>(alpha[i]) / mloc - centroid;
    offsets.push_back(std::move(u));
  }

  for (int cand = 0; cand < k; ++cand) {
    BaryPoint center = grid[order[cand]];
    double local_best = vals(order[cand]);
    double h = 4.0 / G;
    for (int level = 0; level < opts.refine_levels; ++level) {
      std::vector<BaryPoint> patch;
      patch.reserve(offsets.size());
      for (const BaryPoint& u : offsets) {
        BaryPoint p(d + 1);
        double sum = 0.0;
        for (int i = 0; i <= d; ++i) {
          double v = center[i] + h * u[i];
          p[i] = v > 0.0 ? v : 0.0;
          sum += p[i];
        }
        for (double& v : p)
          v /= sum;
        patch.push_back(std::move(p));
      }
      Eigen::VectorXd pv = objective(patch);
      result.samples += static_cast<long>(patch.size());
      int pbest = 0;
      for (int i = 1; i < pv.size(); ++i)
        if (pv(i) > pv(pbest))
          pbest = i;
      if (pv(pbest) > local_best) {
        local_best = pv(pbest);
        center = patch[pbest];
      }
      h /= opts.shrink;
    }
    if (local_best > result.value) {
      result.value = local_best;
      result.argmax = center;
    }
  }
  return result;
}

double f_A(const Eigen::VectorXd& x)
{
  double prod = 1.0;
  for (int i = 0; i < x.size(); ++i)
    prod *= x(i) + 1.0;
  return prod * std::cosh(x.sum() - 1.0);
}

double f_B(const Eigen::VectorXd& x, double alpha)
{
  return 1.0 / (1.0 + alpha * x.squaredNorm());
}

double interpolation_error(const LagrangeOperator& op,
                           const std::function<double(const Eigen::VectorXd&)>& f,
                           const SimplexGeometry& g, int sample_degree,
                           const SearchOptions& search)
{
  if (g.dim() != op.dim())
    throw std::invalid_argument("interpolation_error: geometry dimension mismatch");
  Eigen::VectorXd fnodal(op.size());
  for (int j = 0; j < op.size(); ++j)
    fnodal(j) = f(g.bary_to_cart(op.nodes().points[j]));

  SearchOptions o = search;
  o.grid_degree = sample_degree > 0 ? sample_degree : default_sample_degree(op.dim());

  auto residual = [&](const std::vector<BaryPoint>& pts) -> Eigen::VectorXd {
    Eigen::VectorXd interp = op.eval(pts) * fnodal;
    Eigen::VectorXd out(interp.size());
    for (int i = 0; i < interp.size(); ++i)
      out(i) = std::abs(interp(i) - f(g.bary_to_cart(pts[i])));
    return out;
  };
  return maximize_on_simplex(op.dim(), residual, o).value;
}

} // namespace recnodes
