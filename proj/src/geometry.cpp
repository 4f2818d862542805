#include "recnodes/geometry.hpp"

#include "recnodes/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace recnodes {

SimplexKind parse_simplex_kind(const std::string& name)
{
  if (name == "unit")
    return SimplexKind::unit;
  if (name == "biunit")
    return SimplexKind::biunit;
  if (name == "equilateral")
    return SimplexKind::equilateral;
  throw std::invalid_argument("unknown simplex geometry: " + name);
}

SimplexGeometry::SimplexGeometry(SimplexKind kind, int dim, Eigen::MatrixXd vertices)
  : kind_(kind), dim_(dim), vertices_(std::move(vertices))
{
  // Affine system [v_0 ... v_d; 1 ... 1] b = [x; 1], factorized once.
  Eigen::MatrixXd A(dim_ + 1, dim_ + 1);
  A.topRows(dim_) = vertices_;
  A.bottomRows(1).setOnes();
  affine_lu_.compute(A);

  Eigen::MatrixXd Ainv = affine_lu_.inverse();
  bary_grad_ = Ainv.leftCols(dim_);

  Eigen::MatrixXd edges(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    edges.col(i) = vertices_.col(i + 1) - vertices_.col(0);
  double det = edges.determinant();
  volume_ = std::abs(det);
  for (int k = 2; k <= dim_; ++k)
    volume_ /= k;
  if (volume_ <= 0.0 || !std::isfinite(volume_))
    throw std::invalid_argument("simplex vertices are affinely dependent");
}

Eigen::VectorXd SimplexGeometry::bary_to_cart(const BaryPoint& b) const
{
  if (static_cast<int>(b.size()) != dim_ + 1)
    throw std::invalid_argument("bary_to_cart: coordinate length mismatch");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i <= dim_; ++i)
    x += b[i] * vertices_.col(i);
  return x;
}

BaryPoint SimplexGeometry::cart_to_bary(const Eigen::VectorXd& x) const
{
  if (x.size() != dim_)
    throw std::invalid_argument("cart_to_bary: point dimension mismatch");
  Eigen::VectorXd rhs(dim_ + 1);
  rhs.head(dim_) = x;
  rhs(dim_) = 1.0;
  Eigen::VectorXd b = affine_lu_.solve(rhs);
  double scale = 1e-12 * (1.0 + x.lpNorm<Eigen::Infinity>());
  BaryPoint out(dim_ + 1);
  double sum = 0.0;
  for (int i = 0; i <= dim_; ++i) {
    double v = b(i);
    if (v < 0.0) {
      if (v < -scale)
        throw std::domain_error("cart_to_bary: point lies outside the simplex");
      v = 0.0;
    }
    out[i] = v;
    sum += v;
  }
  for (double& v : out)
    v /= sum;
  return out;
}

SimplexGeometry reference_simplex(SimplexKind kind, int d)
{
  if (d < 1)
    throw std::invalid_argument("reference_simplex: dimension must be >= 1");
  Eigen::MatrixXd v(d, d + 1);
  switch (kind) {
  case SimplexKind::unit:
    v.setZero();
    for (int i = 0; i < d; ++i)
      v(i, i + 1) = 1.0;
    break;
  case SimplexKind::biunit:
    v.setConstant(-1.0);
    for (int i = 0; i < d; ++i)
      v(i, i + 1) = 1.0;
    break;
  case SimplexKind::equilateral:
    if (d == 1) {
      v(0, 0) = -1.0;
      v(0, 1) = 1.0;
    } else if (d == 2) {
      // vertices at angles 90, 210, 330 degrees, circumradius 2/sqrt(3)
      double r = 2.0 / std::sqrt(3.0);
      double angles[3] = {M_PI / 2, M_PI * 7 / 6, M_PI * 11 / 6};
      for (int i = 0; i < 3; ++i) {
        v(0, i) = r * std::cos(angles[i]);
        v(1, i) = r * std::sin(angles[i]);
      }
    } else if (d == 3) {
      // one vertex on +z, base triangle below; edge length 2
      double R = std::sqrt(1.5); // circumradius
      double rho = 2.0 / std::sqrt(3.0);
      double zb = -R / 3.0;
      double angles[3] = {M_PI / 2, M_PI * 7 / 6, M_PI * 11 / 6};
      for (int i = 0; i < 3; ++i) {
        v(0, i) = rho * std::cos(angles[i]);
        v(1, i) = rho * std::sin(angles[i]);
        v(2, i) = zb;
      }
      v(0, 3) = 0.0;
      v(1, 3) = 0.0;
      v(2, 3) = R;
    } else {
      throw std::invalid_argument("equilateral reference simplex supports d <= 3");
    }
    break;
  }
  return SimplexGeometry(kind, d, std::move(v));
}

} // namespace recnodes
