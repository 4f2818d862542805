#pragma once

#include "recnodes/simplexnodes.hpp"

#include <Eigen/Dense>

#include <string>

namespace recnodes {

enum class SimplexKind { unit, biunit, equilateral };

SimplexKind parse_simplex_kind(const std::string& name);

// A reference d-simplex with cached barycentric <-> Cartesian maps.
class SimplexGeometry {
public:
  SimplexGeometry(SimplexKind kind, int dim, Eigen::MatrixXd vertices);

  SimplexKind kind() const { return kind_; }
  int dim() const { return dim_; }

  // Vertex i as a column; matrix is d x (d+1).
  const Eigen::MatrixXd& vertices() const { return vertices_; }

  // x = sum_i b_i v_i.
  Eigen::VectorXd bary_to_cart(const BaryPoint& b) const;

  // Inverse affine map; points up to 1e-12 outside are clamped back onto
  // the simplex, farther out is a domain error.
  BaryPoint cart_to_bary(const Eigen::VectorXd& x) const;

  // d(b_i)/d(x_j), constant for an affine map; (d+1) x d.
  const Eigen::MatrixXd& bary_gradient() const { return bary_grad_; }

  double volume() const { return volume_; }

private:
  SimplexKind kind_;
  int dim_;
  Eigen::MatrixXd vertices_;
  Eigen::PartialPivLU<Eigen::MatrixXd> affine_lu_; // [vertices; 1^T]
  Eigen::MatrixXd bary_grad_;
  double volume_;
};

// unit: hull of the origin and the standard basis vectors.
// biunit: {x >= -1, sum x_i <= 2 - d}.
// equilateral (d <= 3): edge length 2, centroid at the origin.
SimplexGeometry reference_simplex(SimplexKind kind, int d);

} // namespace recnodes
