#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recnodes/errors.hpp"
#include "recnodes/interp.hpp"

#include <cmath>
#include <random>

using namespace recnodes;

namespace {

std::vector<BaryPoint> random_points(int d, int count, unsigned seed)
{
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<BaryPoint> pts;
  for (int k = 0; k < count; ++k) {
    BaryPoint b(d + 1);
    double s = 0.0;
    for (double& v : b)
      s += (v = -std::log(1.0 - uni(rng)));
    for (double& v : b)
      v /= s;
    pts.push_back(std::move(b));
  }
  return pts;
}

} // namespace

TEST_CASE("Lagrange cardinality at the nodes")
{
  for (auto [d, n] : {std::pair{2, 6}, std::pair{3, 4}}) {
    LagrangeOperator op(make_nodeset("lgl", d, n));
    Eigen::MatrixXd id = op.eval(op.nodes().points);
    Eigen::MatrixXd dev = id - Eigen::MatrixXd::Identity(op.size(), op.size());
    CHECK(dev.cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("partition of unity")
{
  for (int d = 1; d <= 3; ++d) {
    LagrangeOperator op(make_nodeset("lgl", d, 5));
    Eigen::MatrixXd v = op.eval(random_points(d, 20, 5));
    for (int r = 0; r < v.rows(); ++r)
      CHECK(v.row(r).sum() == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("degree-n polynomial reproduction to 1e-9")
{
  SimplexGeometry g = reference_simplex(SimplexKind::unit, 2);
  for (const std::string& fam : {"lgl", "equispaced", "blp", "gl", "lgc"}) {
    int n = 6;
    LagrangeOperator op(make_nodeset(fam, 2, n));
    auto poly = [n](const Eigen::VectorXd& x) {
      return std::pow(0.3 + 0.5 * x(0) + 0.2 * x(1), n) + x(0) * x(1);
    };
    Eigen::VectorXd fnodal(op.size());
    for (int j = 0; j < op.size(); ++j)
      fnodal(j) = poly(g.bary_to_cart(op.nodes().points[j]));
    std::vector<BaryPoint> pts = random_points(2, 40, 9);
    Eigen::VectorXd vals = op.eval(pts) * fnodal;
    for (int i = 0; i < vals.size(); ++i)
      CHECK(std::abs(vals(i) - poly(g.bary_to_cart(pts[i]))) <= 1e-9);
  }
}

TEST_CASE("Lagrange values agree with a monomial-basis oracle at the centroid")
{
  // independent route: solve the monomial Vandermonde system directly
  int d = 2, n = 6;
  NodeSet ns = make_nodeset("equispaced", d, n);
  SimplexGeometry g = reference_simplex(SimplexKind::unit, d);
  auto exps = enumerate_indices(d, n); // (a0, a1, a2) -> x^a1 y^a2 over total <= n
  int N = static_cast<int>(exps.size());
  Eigen::MatrixXd V(N, N);
  for (int r = 0; r < N; ++r) {
    Eigen::VectorXd x = g.bary_to_cart(ns.points[r]);
    for (int c = 0; c < N; ++c)
      V(r, c) = std::pow(x(0), exps[c][1]) * std::pow(x(1), exps[c][2]);
  }
  BaryPoint centroid(d + 1, 1.0 / (d + 1));
  Eigen::VectorXd xc = g.bary_to_cart(centroid);
  Eigen::VectorXd mono(N);
  for (int c = 0; c < N; ++c)
    mono(c) = std::pow(xc(0), exps[c][1]) * std::pow(xc(1), exps[c][2]);
  Eigen::VectorXd oracle = V.transpose().fullPivLu().solve(mono);

  LagrangeOperator op(ns);
  Eigen::MatrixXd got = op.eval({centroid});
  for (int j = 0; j < N; ++j)
    CHECK(got(0, j) == doctest::Approx(oracle(j)).epsilon(1e-8));
}

TEST_CASE("degenerate node sets are rejected as non-unisolvent")
{
  NodeSet ns = make_nodeset("lgl", 2, 3);
  ns.points[4] = ns.points[5]; // duplicate point
  CHECK_THROWS_AS(LagrangeOperator{ns}, numerical_error);

  NodeSet wrong = make_nodeset("lgl", 2, 3);
  wrong.points.pop_back();
  CHECK_THROWS_AS(LagrangeOperator{wrong}, std::invalid_argument);
}

TEST_CASE("lebesgue function is one at the nodes and at least one everywhere")
{
  LagrangeOperator op(make_nodeset("lgl", 2, 5));
  Eigen::VectorXd at_nodes = op.lebesgue_function(op.nodes().points);
  for (int i = 0; i < at_nodes.size(); ++i)
    CHECK(at_nodes(i) == doctest::Approx(1.0).epsilon(1e-10));
  Eigen::VectorXd anywhere = op.lebesgue_function(random_points(2, 30, 17));
  for (int i = 0; i < anywhere.size(); ++i)
    CHECK(anywhere(i) >= 1.0 - 1e-11);
}

TEST_CASE("maximize_on_simplex finds an interior quadratic peak")
{
  // objective peaks at b = (0.5, 0.3, 0.2) with value 7
  BaryPoint target{0.5, 0.3, 0.2};
  auto obj = [&](const std::vector<BaryPoint>& pts) {
    Eigen::VectorXd out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j)
        s += (pts[i][j] - target[j]) * (pts[i][j] - target[j]);
      out(i) = 7.0 - s;
    }
    return out;
  };
  SearchOptions opts;
  opts.grid_degree = 20;
  MaximizeResult best = maximize_on_simplex(2, obj, opts);
  CHECK(best.value == doctest::Approx(7.0).epsilon(1e-8));
  for (int j = 0; j < 3; ++j)
    CHECK(best.argmax[j] == doctest::Approx(target[j]).epsilon(1e-3));
  CHECK(best.samples > 0);

  SearchOptions bad;
  bad.grid_degree = 0;
  CHECK_THROWS_AS((void)maximize_on_simplex(2, obj, bad), std::invalid_argument);
}

TEST_CASE("Lebesgue constants reproduce published values")
{
  // triangle, recursive LGL: 2.67857 at n=4 and 6.77248 at n=10
  {
    LagrangeOperator op(make_nodeset("lgl", 2, 4));
    CHECK(op.lebesgue_constant().constant == doctest::Approx(2.67857).epsilon(5e-3));
  }
  {
    LagrangeOperator op(make_nodeset("lgl", 2, 10));
    CHECK(op.lebesgue_constant().constant == doctest::Approx(6.77248).epsilon(5e-3));
  }
}

TEST_CASE("Lebesgue constant is monotone in degree for equispaced nodes")
{
  double prev = 0.0;
  for (int n = 2; n <= 8; ++n) {
    LagrangeOperator op(make_nodeset("equispaced", 2, n));
    double lam = op.lebesgue_constant().constant;
    CHECK(lam > prev);
    prev = lam;
  }
}

TEST_CASE("benchmark functions")
{
  Eigen::Vector2d x(0.5, 0.25);
  CHECK(f_A(x) == doctest::Approx(1.5 * 1.25 * std::cosh(-0.25)).epsilon(1e-15));
  CHECK(f_B(x, 25.0) == doctest::Approx(1.0 / (1.0 + 25.0 * 0.3125)).epsilon(1e-15));
  Eigen::Vector3d z(0.0, 0.0, 0.0);
  CHECK(f_B(z, 60.0) == 1.0);
}

TEST_CASE("interpolation error matches the published f_A entry at d=2, n=6")
{
  LagrangeOperator op(make_nodeset("lgl", 2, 6));
  SimplexGeometry g = reference_simplex(SimplexKind::biunit, 2);
  double err = interpolation_error(op, [](const Eigen::VectorXd& x) { return f_A(x); }, g, 0);
  CHECK(err >= 2.2e-4 / 1.3);
  CHECK(err <= 2.2e-4 * 1.3);
}

TEST_CASE("interpolation error of a degree-n polynomial is at round-off")
{
  int n = 5;
  LagrangeOperator op(make_nodeset("lgl", 2, n));
  SimplexGeometry g = reference_simplex(SimplexKind::unit, 2);
  auto poly = [n](const Eigen::VectorXd& x) {
    return std::pow(0.25 + x(0) / 4.0 + x(1) / 2.0, n);
  };
  CHECK(interpolation_error(op, poly, g, 0) <= 1e-9);
}
