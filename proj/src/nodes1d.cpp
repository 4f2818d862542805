#include "recnodes/nodes1d.hpp"

#include "recnodes/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recnodes {

namespace {

void check_degree(int n, int min)
{
  if (n < min)
    throw std::invalid_argument("node family degree must be >= " + std::to_string(min));
  if (n > kMaxDegree1D)
    throw std::invalid_argument("node family degree exceeds supported cap of " +
                                std::to_string(kMaxDegree1D));
}

// Legendre P_n(x) and P_n'(x) on [-1,1] by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp)
{
  double p0 = 1.0, p1 = x;
  double d0 = 0.0, d1 = 1.0;
  if (n == 0) {
    p = p0;
    dp = d0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    double d2 = ((2 * k + 1) * (p1 + x * d1) - k * d0) / (k + 1);
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  p = p1;
  dp = d1;
}

constexpr int kNewtonCap = 100;
constexpr double kNewtonTol = 1e-15;

// One Newton root with hard iteration cap.  f reports value and derivative.
template <typename F>
double newton_root(double x, F&& f, const char* what)
{
  for (int it = 0; it < kNewtonCap; ++it) {
    double v, dv;
    f(x, v, dv);
    double dx = v / dv;
    x -= dx;
    if (std::abs(dx) <= kNewtonTol)
      return x;
  }
  throw numerical_error(std::string("Newton iteration did not converge for ") + what);
}

// Average x_i with 1 - x_{n-i} so the symmetry invariant holds to rounding.
void symmetrize(std::vector<double>& x)
{
  int n = static_cast<int>(x.size()) - 1;
  for (int i = 0; 2 * i <= n; ++i) {
    double v = 0.5 * (x[i] + (1.0 - x[n - i]));
    x[i] = v;
    x[n - i] = 1.0 - v;
  }
}

} // namespace

NodeSet1D equispaced1d(int n)
{
  check_degree(n, 1);
  NodeSet1D out{n, {}};
  out.points.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    out.points[i] = static_cast<double>(i) / n;
  out.points.front() = 0.0;
  out.points.back() = 1.0;
  return out;
}

NodeSet1D lgl1d(int n)
{
  check_degree(n, 1);
  NodeSet1D out{n, {}};
  out.points.resize(n + 1);
  out.points.front() = 0.0;
  out.points.back() = 1.0;
  // Interior points: roots of P_n' on [-1,1], seeded from the
  // Chebyshev-Lobatto points.  P_n'' is eliminated through the Legendre ODE.
  for (int k = 1; k < n; ++k) {
    double x0 = std::cos(M_PI * k / n);
    double r = newton_root(x0,
                           [n](double x, double& v, double& dv) {
                             double p, dp;
                             legendre(n, x, p, dp);
                             v = dp;
                             dv = (2.0 * x * dp - n * (n + 1.0) * p) / (1.0 - x * x);
                           },
                           "LGL nodes");
    out.points[n - k] = 0.5 * (1.0 + r);
  }
  symmetrize(out.points);
  return out;
}

NodeSet1D gl1d(int n)
{
  if (n < 0)
    throw std::invalid_argument("gl1d: degree must be >= 0");
  if (n > kMaxDegree1D)
    throw std::invalid_argument("gl1d: degree exceeds supported cap");
  NodeSet1D out{n, {}};
  out.points.resize(n + 1);
  if (n == 0) {
    out.points[0] = 0.5;
    return out;
  }
  int m = n + 1; // roots of P_{n+1}
  for (int k = 0; k < m; ++k) {
    double x0 = std::cos(M_PI * (k + 0.75) / (m + 0.5));
    double r = newton_root(x0,
                           [m](double x, double& v, double& dv) {
                             legendre(m, x, v, dv);
                           },
                           "GL nodes");
    out.points[m - 1 - k] = 0.5 * (1.0 + r);
  }
  std::sort(out.points.begin(), out.points.end());
  symmetrize(out.points);
  return out;
}

NodeSet1D lgc1d(int n)
{
  check_degree(n, 1);
  NodeSet1D out{n, {}};
  out.points.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    out.points[i] = 0.5 * (1.0 - std::cos(M_PI * i / n));
  out.points.front() = 0.0;
  out.points.back() = 1.0;
  symmetrize(out.points);
  return out;
}

QuadratureRule1D gauss_jacobi(double a, double b, int q)
{
  if (!(a > -1.0) || !(b > -1.0))
    throw std::invalid_argument("gauss_jacobi: exponents must be > -1");
  if (q < 1 || q > kMaxQuadPoints1D)
    throw std::invalid_argument("gauss_jacobi: point count out of range");

  // Golub-Welsch on the monic Jacobi recurrence for weight
  // (1-x)^a (1+x)^b on [-1,1], mapped to [0,1].
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(q, q);
  for (int k = 0; k < q; ++k) {
    double s = 2.0 * k + a + b;
    double diag = (k == 0) ? (b - a) / (a + b + 2.0)
                           : (b * b - a * a) / (s * (s + 2.0));
    J(k, k) = 0.5 * (diag + 1.0);
  }
  for (int k = 1; k < q; ++k) {
    double s = 2.0 * k + a + b;
    // k = 1 uses the cancelled form: the (1+a+b) factors drop out.
    double bk = (k == 1)
                    ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b))
                    : 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                          (s * s * (s + 1.0) * (s - 1.0));
    double off = 0.5 * std::sqrt(bk);
    J(k, k - 1) = off;
    J(k - 1, k) = off;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw numerical_error("gauss_jacobi: eigensolver did not converge");

  double mu0 = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  QuadratureRule1D rule;
  rule.points.resize(q);
  rule.weights.resize(q);
  for (int k = 0; k < q; ++k) {
    rule.points[k] = es.eigenvalues()(k);
    double v0 = es.eigenvectors()(0, k);
    rule.weights[k] = mu0 * v0 * v0;
  }
  return rule;
}

std::string NodeFamily1D::tag() const
{
  switch (kind_) {
  case Family1D::equispaced: return "equispaced";
  case Family1D::lgl: return "lgl";
  case Family1D::gl: return "gl";
  case Family1D::lgc: return "lgc";
  }
  return "unknown";
}

const NodeSet1D& NodeFamily1D::at(int n) const
{
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = memo_.find(n);
  if (it != memo_.end())
    return it->second;
  NodeSet1D ns;
  switch (kind_) {
  case Family1D::equispaced: ns = equispaced1d(n); break;
  case Family1D::lgl: ns = lgl1d(n); break;
  case Family1D::gl: ns = gl1d(n); break;
  case Family1D::lgc: ns = lgc1d(n); break;
  }
  return memo_.emplace(n, std::move(ns)).first->second;
}

} // namespace recnodes
