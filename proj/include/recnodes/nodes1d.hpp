#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace recnodes {

// 1D node families on [0,1].  All node sets are symmetric about 1/2 and
// strictly increasing; the Lobatto families store the endpoints 0 and 1
// exactly.
enum class Family1D { equispaced, lgl, gl, lgc };

inline constexpr int kMaxDegree1D = 64;
inline constexpr int kMaxQuadPoints1D = 128;

struct NodeSet1D {
  int degree = 0;                // n; the set has n+1 points
  std::vector<double> points;    // increasing, in [0,1]
};

// Gauss-Jacobi rule on [0,1] against the weight (1-t)^a t^b.
// Exact for polynomial degree <= 2q-1; weights are positive and sum to
// B(a+1, b+1).
struct QuadratureRule1D {
  std::vector<double> points;
  std::vector<double> weights;
};

// x_{n,i} = i/n.
NodeSet1D equispaced1d(int n);

// Lobatto-Gauss-Legendre: endpoints plus the roots of P_n' mapped to [0,1].
NodeSet1D lgl1d(int n);

// Gauss-Legendre: the n+1 roots of P_{n+1} mapped to (0,1).  n = 0 is the
// midpoint rule (the single point 1/2).
NodeSet1D gl1d(int n);

// Lobatto-Gauss-Chebyshev: x_{n,i} = (1 - cos(i pi / n)) / 2.
NodeSet1D lgc1d(int n);

QuadratureRule1D gauss_jacobi(double a, double b, int q);

// Memoizing wrapper around one family kind.  Lookups are internally
// synchronized, so a family may be shared across threads.
class NodeFamily1D {
public:
  explicit NodeFamily1D(Family1D kind) : kind_(kind) {}

  Family1D kind() const { return kind_; }
  std::string tag() const;

  const NodeSet1D& at(int n) const;

private:
  Family1D kind_;
  mutable std::mutex mutex_;
  mutable std::map<int, NodeSet1D> memo_;
};

} // namespace recnodes
