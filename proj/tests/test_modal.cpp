#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recnodes/femcond.hpp"
#include "recnodes/modal.hpp"

#include <cmath>
#include <random>

using namespace recnodes;

namespace {

std::vector<BaryPoint> random_interior(int d, int count, unsigned seed)
{
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.05, 1.0);
  std::vector<BaryPoint> pts;
  for (int k = 0; k < count; ++k) {
    BaryPoint b(d + 1);
    double s = 0.0;
    for (double& v : b)
      s += (v = uni(rng));
    for (double& v : b)
      v /= s;
    pts.push_back(std::move(b));
  }
  return pts;
}

} // namespace

TEST_CASE("basis size and graded tuple ordering")
{
  for (int d = 1; d <= 3; ++d) {
    ModalBasis basis(d, 5);
    CHECK(basis.size() == binomial(5 + d, d));
    // the first binomial(m+d, d) tuples have total degree <= m
    for (int m = 0; m <= 5; ++m) {
      int count = static_cast<int>(binomial(m + d, d));
      for (int k = 0; k < count; ++k)
        CHECK(total(basis.tuples()[k]) <= m);
      for (int k = count; k < basis.size(); ++k)
        CHECK(total(basis.tuples()[k]) > m);
    }
  }
}

TEST_CASE("constant mode is the reciprocal square-root volume")
{
  // psi_0 = sqrt(d!) on the unit simplex of volume 1/d!
  for (int d = 1; d <= 3; ++d) {
    double fact = 1.0;
    for (int k = 2; k <= d; ++k)
      fact *= k;
    ModalBasis basis(d, 3);
    for (const BaryPoint& p : random_interior(d, 5, 11))
      CHECK(basis.eval({p})(0, 0) == doctest::Approx(std::sqrt(fact)).epsilon(1e-13));
  }
}

TEST_CASE("1D basis equals normalized shifted Legendre")
{
  // psi_m(b0, b1) = sqrt(2m+1) P_m(b1 - b0)
  auto legendre = [](int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0)
      return p0;
    for (int k = 1; k < n; ++k) {
      double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
      p0 = p1;
      p1 = p2;
    }
    return p1;
  };
  ModalBasis basis(1, 6);
  for (double t : {0.0, 0.1, 0.37, 0.5, 0.92, 1.0}) {
    Eigen::MatrixXd v = basis.eval({{1.0 - t, t}});
    for (int m = 0; m <= 6; ++m)
      CHECK(v(0, m) ==
            doctest::Approx(std::sqrt(2.0 * m + 1.0) * legendre(m, 2.0 * t - 1.0))
                .epsilon(1e-12));
  }
}

TEST_CASE("orthonormality: Gram matrix deviation below 1e-11")
{
  for (int d = 1; d <= 3; ++d) {
    for (int n : {4, 9, 16}) {
      ModalBasis basis(d, n);
      SimplexQuadrature quad = simplex_quadrature(d, n + 2);
      Eigen::MatrixXd phi = basis.eval(quad.points);
      Eigen::MatrixXd gram = phi.transpose() * quad.weights.asDiagonal() * phi;
      Eigen::MatrixXd dev = gram - Eigen::MatrixXd::Identity(basis.size(), basis.size());
      CHECK(dev.cwiseAbs().maxCoeff() <= 1e-11);
    }
  }
}

TEST_CASE("values and barycentric partials stay finite at the vertices")
{
  for (int d = 1; d <= 3; ++d) {
    ModalBasis basis(d, 20);
    std::vector<BaryPoint> vertices;
    for (int i = 0; i <= d; ++i) {
      BaryPoint e(d + 1, 0.0);
      e[i] = 1.0;
      vertices.push_back(std::move(e));
    }
    Eigen::MatrixXd v = basis.eval(vertices);
    CHECK(v.allFinite());
    for (const Eigen::MatrixXd& m : basis.grad_bary(vertices))
      CHECK(m.allFinite());
  }
}

TEST_CASE("gradients match central finite differences")
{
  const double h = 1e-6;
  for (int d = 1; d <= 3; ++d) {
    SimplexGeometry g = reference_simplex(SimplexKind::unit, d);
    ModalBasis basis(d, 6);
    for (const BaryPoint& b : random_interior(d, 4, 29)) {
      Eigen::VectorXd x = g.bary_to_cart(b);
      std::vector<Eigen::MatrixXd> grad = basis.grad({b}, g);
      for (int j = 0; j < d; ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp(j) += h;
        xm(j) -= h;
        Eigen::MatrixXd fp = basis.eval({g.cart_to_bary(xp)});
        Eigen::MatrixXd fm = basis.eval({g.cart_to_bary(xm)});
        for (int k = 0; k < basis.size(); ++k) {
          double fd = (fp(0, k) - fm(0, k)) / (2.0 * h);
          double an = grad[j](0, k);
          double scale = std::max({std::abs(fd), std::abs(an), 1.0});
          CHECK(std::abs(fd - an) <= 1e-5 * scale);
        }
      }
    }
  }
}

TEST_CASE("cartesian gradients follow the affine chain rule across geometries")
{
  // gradient on the biunit simplex is half the gradient on the unit simplex
  ModalBasis basis(2, 5);
  SimplexGeometry unit = reference_simplex(SimplexKind::unit, 2);
  SimplexGeometry biunit = reference_simplex(SimplexKind::biunit, 2);
  std::vector<BaryPoint> pts = random_interior(2, 6, 47);
  auto gu = basis.grad(pts, unit);
  auto gb = basis.grad(pts, biunit);
  for (int j = 0; j < 2; ++j)
    CHECK((gu[j] - 2.0 * gb[j]).cwiseAbs().maxCoeff() <= 1e-11 * gu[j].cwiseAbs().maxCoeff());
}

TEST_CASE("barycentric partials sum to zero along the constraint direction")
{
  // moving all coordinates together leaves the simplex, so only differences
  // of partials are meaningful; the directional derivative along (1,...,1)
  // of the homogeneous representation must cancel in the cartesian gradient.
  ModalBasis basis(3, 4);
  SimplexGeometry g = reference_simplex(SimplexKind::unit, 3);
  std::vector<BaryPoint> pts = random_interior(3, 5, 83);
  auto gb = basis.grad_bary(pts);
  auto gc = basis.grad(pts, g);
  const Eigen::MatrixXd& B = g.bary_gradient();
  for (int j = 0; j < 3; ++j) {
    Eigen::MatrixXd chain = Eigen::MatrixXd::Zero(gc[j].rows(), gc[j].cols());
    for (int i = 0; i <= 3; ++i)
      chain += B(i, j) * gb[i];
    CHECK((chain - gc[j]).cwiseAbs().maxCoeff() <= 1e-11 * (1.0 + gc[j].cwiseAbs().maxCoeff()));
  }
}
