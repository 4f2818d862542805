#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recnodes/geometry.hpp"

#include <cmath>
#include <stdexcept>

using namespace recnodes;

TEST_CASE("parse_simplex_kind")
{
  CHECK(parse_simplex_kind("unit") == SimplexKind::unit);
  CHECK(parse_simplex_kind("biunit") == SimplexKind::biunit);
  CHECK(parse_simplex_kind("equilateral") == SimplexKind::equilateral);
  CHECK_THROWS_AS((void)parse_simplex_kind("sphere"), std::invalid_argument);
}

TEST_CASE("unit simplex vertices and volume")
{
  for (int d = 1; d <= 4; ++d) {
    SimplexGeometry g = reference_simplex(SimplexKind::unit, d);
    CHECK(g.vertices().col(0).norm() == 0.0);
    for (int i = 1; i <= d; ++i) {
      CHECK(g.vertices()(i - 1, i) == 1.0);
      CHECK(g.vertices().col(i).sum() == 1.0);
    }
    double fact = 1.0;
    for (int k = 2; k <= d; ++k)
      fact *= k;
    CHECK(g.volume() == doctest::Approx(1.0 / fact).epsilon(1e-14));
  }
}

TEST_CASE("biunit simplex vertices and volume")
{
  for (int d = 1; d <= 3; ++d) {
    SimplexGeometry g = reference_simplex(SimplexKind::biunit, d);
    CHECK((g.vertices().col(0).array() == -1.0).all());
    double fact = 1.0;
    for (int k = 2; k <= d; ++k)
      fact *= k;
    CHECK(g.volume() == doctest::Approx(std::pow(2.0, d) / fact).epsilon(1e-13));
    // vertices satisfy x >= -1 and sum(x) <= 2 - d with equality at extremes
    for (int i = 0; i <= d; ++i) {
      CHECK((g.vertices().col(i).array() >= -1.0 - 1e-15).all());
      CHECK(g.vertices().col(i).sum() <= 2.0 - d + 1e-13);
    }
  }
}

TEST_CASE("equilateral simplex: edge length 2 and centroid at the origin")
{
  for (int d = 2; d <= 3; ++d) {
    SimplexGeometry g = reference_simplex(SimplexKind::equilateral, d);
    for (int i = 0; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        CHECK((g.vertices().col(i) - g.vertices().col(j)).norm() ==
              doctest::Approx(2.0).epsilon(1e-13));
    CHECK(g.vertices().rowwise().sum().norm() <= 1e-13);
  }
  // areas: sqrt(3) for the triangle, 2*sqrt(2)/3 for the tetrahedron
  CHECK(reference_simplex(SimplexKind::equilateral, 2).volume() ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(reference_simplex(SimplexKind::equilateral, 3).volume() ==
        doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-13));
  CHECK_THROWS_AS((void)reference_simplex(SimplexKind::equilateral, 4),
                  std::invalid_argument);
}

TEST_CASE("bary_to_cart and cart_to_bary round trip")
{
  for (SimplexKind kind : {SimplexKind::unit, SimplexKind::biunit, SimplexKind::equilateral}) {
    for (int d = 1; d <= 3; ++d) {
      SimplexGeometry g = reference_simplex(kind, d);
      // vertices map to unit barycentric vectors
      for (int i = 0; i <= d; ++i) {
        BaryPoint e(d + 1, 0.0);
        e[i] = 1.0;
        Eigen::VectorXd x = g.bary_to_cart(e);
        CHECK((x - g.vertices().col(i)).norm() <= 1e-14);
        BaryPoint back = g.cart_to_bary(x);
        for (int j = 0; j <= d; ++j)
          CHECK(std::abs(back[j] - e[j]) <= 1e-12);
      }
      BaryPoint c(d + 1, 1.0 / (d + 1));
      BaryPoint back = g.cart_to_bary(g.bary_to_cart(c));
      for (int j = 0; j <= d; ++j)
        CHECK(std::abs(back[j] - c[j]) <= 1e-13);
    }
  }
}

TEST_CASE("cart_to_bary clamps near misses and rejects outside points")
{
  SimplexGeometry g = reference_simplex(SimplexKind::unit, 2);
  Eigen::VectorXd x(2);
  x << -1e-14, 0.5; // a hair outside across the x=0 edge
  BaryPoint b = g.cart_to_bary(x);
  CHECK(b[1] == 0.0);
  x << -0.1, 0.5;
  CHECK_THROWS_AS((void)g.cart_to_bary(x), std::domain_error);
  Eigen::VectorXd wrong(3);
  wrong.setZero();
  CHECK_THROWS_AS((void)g.cart_to_bary(wrong), std::invalid_argument);
}

TEST_CASE("bary_gradient is the derivative of the inverse affine map")
{
  for (SimplexKind kind : {SimplexKind::unit, SimplexKind::biunit, SimplexKind::equilateral}) {
    for (int d = 1; d <= 3; ++d) {
      SimplexGeometry g = reference_simplex(kind, d);
      const Eigen::MatrixXd& B = g.bary_gradient(); // (d+1) x d
      REQUIRE(B.rows() == d + 1);
      REQUIRE(B.cols() == d);
      // grad(b_i) dot (v_j - v_0) = delta_ij - delta_i0
      for (int i = 0; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
          double dot = B.row(i).dot((g.vertices().col(j) - g.vertices().col(0)).transpose());
          double expect = (i == j ? 1.0 : 0.0) - (i == 0 ? 1.0 : 0.0);
          CHECK(dot == doctest::Approx(expect).epsilon(1e-12));
        }
      }
      // gradients of a partition of unity sum to zero
      CHECK(B.colwise().sum().norm() <= 1e-12);
    }
  }
}

TEST_CASE("degenerate vertices are rejected")
{
  Eigen::MatrixXd v(2, 3);
  v << 0.0, 1.0, 2.0, 0.0, 1.0, 2.0; // collinear
  CHECK_THROWS_AS(SimplexGeometry(SimplexKind::unit, 2, v), std::invalid_argument);
}
