#pragma once

#include "recnodes/multiindex.hpp"
#include "recnodes/nodes1d.hpp"

#include <iosfwd>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace recnodes {

inline constexpr int kMaxSimplexDim = 7;

// Barycentric coordinates: length d+1, nonnegative, summing to 1.
using BaryPoint = std::vector<double>;

// A degree-n node set on the d-simplex, indexed by the multi-indices of
// A^d_n in enumeration order.
struct NodeSet {
  int dim = 0;
  int degree = 0;
  std::string family_tag;
  std::vector<MultiIndex> indices;
  std::vector<BaryPoint> points; // parallel to indices
};

// Cache of recursively constructed nodes, keyed by the raw multi-index.
// One cache serves one 1D family; entries are bit-identical to uncached
// recomputation.
class NodeCache {
public:
  explicit NodeCache(const NodeFamily1D& family) : family_(&family) {}

  const NodeFamily1D& family() const { return *family_; }

  // Returns the cached point, or invokes compute() and stores the result.
  template <typename F>
  const BaryPoint& get_or_compute(const MultiIndex& alpha, F&& compute)
  {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = map_.find(alpha);
      if (it != map_.end())
        return it->second;
    }
    BaryPoint value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.emplace(alpha, std::move(value)).first->second;
  }

private:
  const NodeFamily1D* family_;
  std::mutex mutex_;
  std::map<MultiIndex, BaryPoint> map_;
};

// One node of the dimensionally recursive rule: the base case (1) for
// length-1 indices, otherwise the normalized combination of augmented
// facet nodes weighted by x_{|alpha|, |alpha \ i|}.
BaryPoint recursive_node(const MultiIndex& alpha, const NodeFamily1D& family,
                         NodeCache& cache);

// The full node set over A^d_n, sharing one cache across all indices.
NodeSet recursive_nodeset(int d, int n, const NodeFamily1D& family);

// b_i = alpha_i / n.
NodeSet equispaced_nodeset(int d, int n);

// Blyth-Luo-Pozrikidis nodes: interior nodes by the explicit LGL formula,
// boundary nodes mapped from the same rule on the (d-1)-simplex.
NodeSet blp_nodeset(int d, int n);

// Resolves a family tag into a node set: "lgl", "gl" and "lgc" run the
// recursive rule on that 1D family, "equispaced" and "blp" use their
// explicit formulas, "external:<path>" loads a node-set file (whose
// dimension and degree must match).
NodeSet make_nodeset(const std::string& family_tag, int d, int n);

enum class NodeSetFormat { csv, json };

void write_nodeset(const NodeSet& ns, NodeSetFormat format, std::ostream& out);
void write_nodeset(const NodeSet& ns, NodeSetFormat format, const std::string& path);

// Reads either format (sniffed from the content) and validates the point
// count and coordinate sums, naming the offending row on failure.
NodeSet read_nodeset(std::istream& in);
NodeSet read_nodeset(const std::string& path);

} // namespace recnodes
