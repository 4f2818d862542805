#include "recnodes/simplexnodes.hpp"

#include "recnodes/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace recnodes {

namespace {

constexpr double kClampTol = 1e-14;

void clamp_and_renormalize(BaryPoint& b)
{
  double sum = 0.0;
  for (double& v : b) {
    if (v < 0.0) {
      if (v < -kClampTol)
        throw numerical_error("recursive node left the barycentric simplex");
      v = 0.0;
    }
    sum += v;
  }
  for (double& v : b)
    v /= sum;
}

BaryPoint recursive_node_impl(const MultiIndex& alpha, const NodeFamily1D& family,
                              NodeCache& cache)
{
  int len = static_cast<int>(alpha.size());
  if (len == 1)
    return BaryPoint{1.0};

  // n = 0 sub-indices arise for interior-only families (GL), whose X_0 exists
  int n = total(alpha);
  const std::vector<double>& xn = family.at(n).points;

  BaryPoint b(len, 0.0);
  double wsum = 0.0;
  for (int i = 0; i < len; ++i) {
    double w = xn[n - alpha[i]]; // x_{n, |alpha \ i|}
    if (w == 0.0)
      continue;
    const BaryPoint& sub = recursive_node(remove_entry(alpha, i), family, cache);
    // accumulate the facet node augmented with a zero at position i
    for (int j = 0; j < i; ++j)
      b[j] += w * sub[j];
    for (int j = i + 1; j < len; ++j)
      b[j] += w * sub[j - 1];
    wsum += w;
  }
  if (wsum == 0.0)
    throw numerical_error("recursive_node: degenerate 1D family, zero weight sum");
  for (double& v : b)
    v /= wsum;
  clamp_and_renormalize(b);
  return b;
}

void check_dim_degree(int d, int n)
{
  if (d < 1 || d > kMaxSimplexDim)
    throw std::invalid_argument("node set dimension must be in 1.." +
                                std::to_string(kMaxSimplexDim));
  if (n < 1 || n > kMaxDegree1D)
    throw std::invalid_argument("node set degree must be in 1.." +
                                std::to_string(kMaxDegree1D));
}

} // namespace

BaryPoint recursive_node(const MultiIndex& alpha, const NodeFamily1D& family,
                         NodeCache& cache)
{
  if (alpha.empty())
    throw std::invalid_argument("recursive_node: empty multi-index");
  if (static_cast<int>(alpha.size()) - 1 > kMaxSimplexDim)
    throw std::invalid_argument("recursive_node: dimension exceeds supported cap");
  if (cache.family().kind() != family.kind())
    throw std::invalid_argument("recursive_node: cache belongs to a different family");
  return cache.get_or_compute(alpha, [&] { return recursive_node_impl(alpha, family, cache); });
}

NodeSet recursive_nodeset(int d, int n, const NodeFamily1D& family)
{
  check_dim_degree(d, n);
  NodeSet ns;
  ns.dim = d;
  ns.degree = n;
  ns.family_tag = family.tag();
  ns.indices = enumerate_indices(d, n);
  ns.points.reserve(ns.indices.size());
  NodeCache cache(family);
  for (const MultiIndex& alpha : ns.indices)
    ns.points.push_back(recursive_node(alpha, family, cache));
  return ns;
}

NodeSet equispaced_nodeset(int d, int n)
{
  check_dim_degree(d, n);
  NodeSet ns;
  ns.dim = d;
  ns.degree = n;
  ns.family_tag = "equispaced";
  ns.indices = enumerate_indices(d, n);
  ns.points.reserve(ns.indices.size());
  for (const MultiIndex& alpha : ns.indices) {
    BaryPoint b(d + 1);
    for (int i = 0; i <= d; ++i)
      b[i] = static_cast<double>(alpha[i]) / n;
    ns.points.push_back(std::move(b));
  }
  return ns;
}

namespace {

BaryPoint blp_point(const MultiIndex& alpha, const NodeFamily1D& lgl)
{
  int len = static_cast<int>(alpha.size());
  if (len == 1)
    return BaryPoint{1.0};
  auto zero = std::find(alpha.begin(), alpha.end(), 0);
  if (zero != alpha.end()) {
    int j = static_cast<int>(zero - alpha.begin());
    BaryPoint sub = blp_point(remove_entry(alpha, j), lgl);
    sub.insert(sub.begin() + j, 0.0);
    return sub;
  }
  // interior rule: b_i = (1 + (d+1) x_{n,alpha_i} - sum_j x_{n,alpha_j}) / (d+1),
  // which sums to one identically
  int n = total(alpha);
  const std::vector<double>& xn = lgl.at(n).points;
  double s = 0.0;
  for (int j = 0; j < len; ++j)
    s += xn[alpha[j]];
  BaryPoint b(len);
  for (int i = 0; i < len; ++i)
    b[i] = (1.0 + len * xn[alpha[i]] - s) / len;
  clamp_and_renormalize(b);
  return b;
}

} // namespace

NodeSet blp_nodeset(int d, int n)
{
  check_dim_degree(d, n);
  NodeFamily1D lgl(Family1D::lgl);
  NodeSet ns;
  ns.dim = d;
  ns.degree = n;
  ns.family_tag = "blp";
  ns.indices = enumerate_indices(d, n);
  ns.points.reserve(ns.indices.size());
  for (const MultiIndex& alpha : ns.indices)
    ns.points.push_back(blp_point(alpha, lgl));
  return ns;
}

NodeSet make_nodeset(const std::string& family_tag, int d, int n)
{
  if (family_tag == "lgl")
    return recursive_nodeset(d, n, NodeFamily1D(Family1D::lgl));
  if (family_tag == "gl")
    return recursive_nodeset(d, n, NodeFamily1D(Family1D::gl));
  if (family_tag == "lgc")
    return recursive_nodeset(d, n, NodeFamily1D(Family1D::lgc));
  if (family_tag == "equispaced")
    return equispaced_nodeset(d, n);
  if (family_tag == "blp")
    return blp_nodeset(d, n);
  if (family_tag.rfind("external:", 0) == 0) {
    NodeSet ns = read_nodeset(family_tag.substr(9));
    if (ns.dim != d || ns.degree != n)
      throw validation_error("external node set is (d=" + std::to_string(ns.dim) +
                             ", n=" + std::to_string(ns.degree) + "), requested (d=" +
                             std::to_string(d) + ", n=" + std::to_string(n) + ")");
    if (ns.family_tag.rfind("external:", 0) != 0)
      ns.family_tag = "external:" + ns.family_tag;
    return ns;
  }
  throw std::invalid_argument("unknown node family tag: " + family_tag);
}

namespace {

std::string fmt17(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

NodeSet parse_csv(std::istream& in)
{
  NodeSet ns;
  std::string line;
  if (!std::getline(in, line))
    throw validation_error("node-set file is empty");
  char family[128] = {0};
  if (std::sscanf(line.c_str(), "# dim=%d degree=%d family=%127s", &ns.dim, &ns.degree,
                  family) != 3)
    throw validation_error("malformed node-set header: " + line);
  ns.family_tag = family;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line[0] == '#')
      continue;
    std::stringstream ss(line);
    std::vector<double> vals;
    std::string tok;
    while (std::getline(ss, tok, ','))
      vals.push_back(std::stod(tok));
    if (static_cast<int>(vals.size()) < 2 * (ns.dim + 1))
      throw validation_error("row " + std::to_string(row) + ": too few columns");
    MultiIndex alpha(ns.dim + 1);
    BaryPoint b(ns.dim + 1);
    for (int i = 0; i <= ns.dim; ++i)
      alpha[i] = static_cast<int>(std::lround(vals[i]));
    for (int i = 0; i <= ns.dim; ++i)
      b[i] = vals[ns.dim + 1 + i];
    ns.indices.push_back(std::move(alpha));
    ns.points.push_back(std::move(b));
  }
  return ns;
}

NodeSet parse_json(std::istream& in)
{
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("malformed JSON node-set file: ") + e.what());
  }
  NodeSet ns;
  try {
    ns.dim = j.at("dim").get<int>();
    ns.degree = j.at("degree").get<int>();
    ns.family_tag = j.at("family").get<std::string>();
    for (const auto& a : j.at("indices"))
      ns.indices.push_back(a.get<MultiIndex>());
    for (const auto& p : j.at("points"))
      ns.points.push_back(p.get<BaryPoint>());
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("node-set JSON missing or ill-typed field: ") + e.what());
  }
  return ns;
}

void validate(const NodeSet& ns)
{
  if (ns.dim < 1 || ns.degree < 1)
    throw validation_error("node-set dimension and degree must be >= 1");
  auto expected = static_cast<std::size_t>(binomial(ns.degree + ns.dim, ns.dim));
  if (ns.points.size() != expected || ns.indices.size() != expected)
    throw validation_error("node set has " + std::to_string(ns.points.size()) +
                           " points, expected " + std::to_string(expected));
  for (std::size_t r = 0; r < ns.points.size(); ++r) {
    const BaryPoint& b = ns.points[r];
    if (b.size() != static_cast<std::size_t>(ns.dim + 1))
      throw validation_error("row " + std::to_string(r + 1) + ": wrong coordinate count");
    double sum = 0.0;
    for (double v : b) {
      if (v < -1e-8)
        throw validation_error("row " + std::to_string(r + 1) +
                               ": negative barycentric coordinate");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-8)
      throw validation_error("row " + std::to_string(r + 1) +
                             ": barycentric coordinates sum to " + std::to_string(sum));
  }
}

} // namespace

void write_nodeset(const NodeSet& ns, NodeSetFormat format, std::ostream& out)
{
  if (format == NodeSetFormat::csv) {
    out << "# dim=" << ns.dim << " degree=" << ns.degree << " family=" << ns.family_tag
        << "\n";
    for (std::size_t r = 0; r < ns.points.size(); ++r) {
      for (int i = 0; i <= ns.dim; ++i)
        out << ns.indices[r][i] << ",";
      for (int i = 0; i <= ns.dim; ++i)
        out << fmt17(ns.points[r][i]) << (i < ns.dim ? "," : "");
      out << "\n";
    }
  } else {
    nlohmann::json j;
    j["dim"] = ns.dim;
    j["degree"] = ns.degree;
    j["family"] = ns.family_tag;
    j["indices"] = ns.indices;
    j["points"] = ns.points;
    out << j.dump(2) << "\n";
  }
}

void write_nodeset(const NodeSet& ns, NodeSetFormat format, const std::string& path)
{
  std::ofstream out(path);
  if (!out)
    throw validation_error("cannot open for writing: " + path);
  write_nodeset(ns, format, out);
}

NodeSet read_nodeset(std::istream& in)
{
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  NodeSet ns = (c == '{') ? parse_json(in) : parse_csv(in);
  validate(ns);
  return ns;
}

NodeSet read_nodeset(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw validation_error("cannot open node-set file: " + path);
  return read_nodeset(in);
}

} // namespace recnodes
