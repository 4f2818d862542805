// Command-line front end: node-set generation and quality-metric tables.

#include "recnodes/errors.hpp"
#include "recnodes/femcond.hpp"
#include "recnodes/geometry.hpp"
#include "recnodes/interp.hpp"
#include "recnodes/parallel.hpp"
#include "recnodes/simplexnodes.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using recnodes::BaryPoint;
using recnodes::LagrangeOperator;
using recnodes::NodeSet;
using recnodes::NodeSetFormat;
using recnodes::SearchOptions;
using recnodes::SimplexGeometry;

std::string fmt6(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt17(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct DegreeRange {
  int lo = 0;
  int hi = 0;
};

DegreeRange parse_degree(const std::string& s)
{
  DegreeRange r;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse degree '" + s + "' (expected n or a..b)");
  }
  if (r.lo < 1 || r.hi < r.lo || r.hi > recnodes::kMaxDegree1D)
    throw std::invalid_argument("degree range must satisfy 1 <= a <= b <= " +
                                std::to_string(recnodes::kMaxDegree1D));
  return r;
}

NodeSetFormat parse_format(const std::string& s)
{
  if (s == "csv")
    return NodeSetFormat::csv;
  if (s == "json")
    return NodeSetFormat::json;
  throw std::invalid_argument("unknown format: " + s);
}

// A metric table: a config echo line, column names, and typed cells so the
// CSV and JSON writers can share rows.
struct Table {
  std::string config;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

std::string cell_to_csv(const nlohmann::json& c)
{
  if (c.is_number_float())
    return fmt6(c.get<double>());
  if (c.is_string())
    return c.get<std::string>();
  return c.dump();
}

void emit_table(const Table& t, NodeSetFormat fmt, std::ostream& out)
{
  if (fmt == NodeSetFormat::csv) {
    out << "# " << t.config << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << cell_to_csv(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
  } else {
    nlohmann::json j;
    j["config"] = t.config;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    out << j.dump(2) << "\n";
  }
}

struct Options {
  int dim = 2;
  std::string degree = "4";
  std::vector<std::string> families;
  std::string geometry;
  std::string format = "csv";
  std::string output;
  std::string function = "fA";
  double alpha = 0.0; // 0 selects the per-dimension default
  int grid_degree = 0;
  int refine_levels = 8;
  int top_k = 10;
  int quad_order = 0;
  int threads = 0;
  std::string metric = "lebesgue";
};

std::ostream& open_output(const Options& o, std::ofstream& file)
{
  if (o.output.empty())
    return std::cout;
  file.open(o.output);
  if (!file)
    throw recnodes::validation_error("cannot open for writing: " + o.output);
  return file;
}

std::string config_echo(const std::string& cmd, const Options& o, bool search_opts,
                        bool quad)
{
  std::ostringstream s;
  s << "cmd=" << cmd << " dim=" << o.dim << " degree=" << o.degree;
  for (const std::string& f : o.families)
    s << " family=" << f;
  if (!o.geometry.empty())
    s << " geometry=" << o.geometry;
  if (cmd == "interp")
    s << " function=" << o.function << " alpha=" << fmt6(o.alpha);
  if (cmd == "compare")
    s << " metric=" << o.metric;
  if (search_opts)
    s << " grid-degree=" << o.grid_degree << " top-k=" << o.top_k
      << " refine-levels=" << o.refine_levels;
  if (quad)
    s << " quad-order=" << o.quad_order;
  s << " threads=" << o.threads;
  return s.str();
}

SearchOptions search_options(const Options& o)
{
  SearchOptions s;
  s.grid_degree = o.grid_degree;
  s.top_k = o.top_k;
  s.refine_levels = o.refine_levels;
  return s;
}

std::string single_family(const Options& o, const std::string& fallback)
{
  if (o.families.empty())
    return fallback;
  if (o.families.size() > 1)
    throw std::invalid_argument("this command takes a single --family");
  return o.families[0];
}

void cmd_nodes(const Options& o)
{
  DegreeRange r = parse_degree(o.degree);
  if (r.lo != r.hi)
    throw std::invalid_argument("nodes takes a single degree, not a range");
  NodeSet ns = recnodes::make_nodeset(single_family(o, "lgl"), o.dim, r.lo);
  NodeSetFormat fmt = parse_format(o.format);

  std::ofstream file;
  std::ostream& out = open_output(o, file);

  if (o.geometry.empty()) {
    recnodes::write_nodeset(ns, fmt, out);
    return;
  }
  SimplexGeometry g =
      recnodes::reference_simplex(recnodes::parse_simplex_kind(o.geometry), o.dim);
  if (fmt == NodeSetFormat::csv) {
    out << "# dim=" << ns.dim << " degree=" << ns.degree << " family=" << ns.family_tag
        << " geometry=" << o.geometry << "\n";
    for (std::size_t p = 0; p < ns.points.size(); ++p) {
      for (int i = 0; i <= ns.dim; ++i)
        out << ns.indices[p][i] << ",";
      for (int i = 0; i <= ns.dim; ++i)
        out << fmt17(ns.points[p][i]) << ",";
      Eigen::VectorXd x = g.bary_to_cart(ns.points[p]);
      for (int i = 0; i < ns.dim; ++i)
        out << fmt17(x(i)) << (i + 1 < ns.dim ? "," : "\n");
    }
  } else {
    nlohmann::json j;
    j["dim"] = ns.dim;
    j["degree"] = ns.degree;
    j["family"] = ns.family_tag;
    j["indices"] = ns.indices;
    j["points"] = ns.points;
    std::vector<std::vector<double>> cart;
    for (const BaryPoint& b : ns.points) {
      Eigen::VectorXd x = g.bary_to_cart(b);
      cart.emplace_back(x.data(), x.data() + x.size());
    }
    j["cartesian"] = cart;
    out << j.dump(2) << "\n";
  }
}

void cmd_lebesgue(const Options& o)
{
  DegreeRange r = parse_degree(o.degree);
  std::string family = single_family(o, "lgl");
  Table t;
  t.config = config_echo("lebesgue", o, true, false);
  t.columns = {"d", "n", "family", "lebesgue", "lebesgue_root"};
  for (int n = r.lo; n <= r.hi; ++n) {
    LagrangeOperator op(recnodes::make_nodeset(family, o.dim, n));
    double lam = op.lebesgue_constant(search_options(o)).constant;
    t.rows.push_back({o.dim, n, family, lam, std::pow(lam, 1.0 / n)});
  }
  std::ofstream file;
  emit_table(t, parse_format(o.format), open_output(o, file));
}

int laplacian_kernel_dim(int d, int n)
{
  if (d == 1)
    return 2;
  if (d == 2)
    return 2 * n + 1;
  return (n + 1) * (n + 1);
}

std::vector<double> cond_row(const Options& o, const std::string& family, int n,
                             const SimplexGeometry& g)
{
  LagrangeOperator op(recnodes::make_nodeset(family, o.dim, n));
  double km = recnodes::cond2_tables(recnodes::mass_matrix(op, g, o.quad_order), 0).value;
  double kk =
      recnodes::cond2_tables(recnodes::stiffness_matrix(op, g, o.quad_order), 1).value;
  double kg = recnodes::cond2_tables(recnodes::nodal_gradient(op, g), 1).value;
  double kl = recnodes::cond2_tables(recnodes::nodal_laplacian(op, g),
                                     laplacian_kernel_dim(o.dim, n))
                  .value;
  return {km, kk, kg, kl};
}

void cmd_cond(const Options& o)
{
  DegreeRange r = parse_degree(o.degree);
  std::string family = single_family(o, "lgl");
  std::string geom = o.geometry.empty() ? "biunit" : o.geometry;
  SimplexGeometry g =
      recnodes::reference_simplex(recnodes::parse_simplex_kind(geom), o.dim);

  Options echo = o;
  echo.geometry = geom;
  Table t;
  t.config = config_echo("cond", echo, false, true);
  t.columns = {"d",
               "n",
               "family",
               "cond_mass",
               "cond_mass_root",
               "cond_stiffness",
               "cond_stiffness_root",
               "cond_gradient",
               "cond_gradient_root",
               "cond_laplacian",
               "cond_laplacian_root"};
  for (int n = r.lo; n <= r.hi; ++n) {
    std::vector<double> k = cond_row(o, family, n, g);
    std::vector<nlohmann::json> row = {o.dim, n, family};
    for (double v : k) {
      row.push_back(v);
      row.push_back(std::pow(v, 1.0 / n));
    }
    t.rows.push_back(std::move(row));
  }
  std::ofstream file;
  emit_table(t, parse_format(o.format), open_output(o, file));
}

// Target function, its natural geometry, and its name for one interp run.
struct InterpTarget {
  std::function<double(const Eigen::VectorXd&)> f;
  recnodes::SimplexKind geom = recnodes::SimplexKind::biunit;
};

InterpTarget make_target(const Options& o, int n)
{
  InterpTarget t;
  if (o.function == "fA") {
    t.f = [](const Eigen::VectorXd& x) { return recnodes::f_A(x); };
    t.geom = recnodes::SimplexKind::biunit;
  } else if (o.function == "fB") {
    double alpha = o.alpha > 0.0 ? o.alpha : (o.dim >= 3 ? 60.0 : 25.0);
    t.f = [alpha](const Eigen::VectorXd& x) { return recnodes::f_B(x, alpha); };
    t.geom = recnodes::SimplexKind::equilateral;
  } else if (o.function == "poly") {
    // a fixed degree-n polynomial, reproduced exactly by any unisolvent set
    int d = o.dim;
    t.f = [n, d](const Eigen::VectorXd& x) {
      double s = 0.25;
      for (int j = 0; j < d; ++j)
        s += (j + 1) * x(j) / (2.0 * d);
      return std::pow(s, n);
    };
    t.geom = recnodes::SimplexKind::unit;
  } else {
    throw std::invalid_argument("unknown function: " + o.function);
  }
  return t;
}

void cmd_interp(const Options& o)
{
  DegreeRange r = parse_degree(o.degree);
  std::string family = single_family(o, "lgl");
  Table t;
  t.config = config_echo("interp", o, true, false);
  t.columns = {"d", "n", "family", "function", "error"};
  for (int n = r.lo; n <= r.hi; ++n) {
    InterpTarget target = make_target(o, n);
    recnodes::SimplexKind kind =
        o.geometry.empty() ? target.geom : recnodes::parse_simplex_kind(o.geometry);
    SimplexGeometry g = recnodes::reference_simplex(kind, o.dim);
    LagrangeOperator op(recnodes::make_nodeset(family, o.dim, n));
    double err = recnodes::interpolation_error(op, target.f, g, o.grid_degree,
                                               search_options(o));
    t.rows.push_back({o.dim, n, family, o.function, err});
  }
  std::ofstream file;
  emit_table(t, parse_format(o.format), open_output(o, file));
}

void cmd_compare(const Options& o)
{
  if (o.families.size() < 2)
    throw std::invalid_argument("compare needs at least two --family tags");
  DegreeRange r = parse_degree(o.degree);

  Table t;
  t.config = config_echo("compare", o, o.metric != "cond", o.metric == "cond");
  t.columns = {"d", "n"};

  if (o.metric == "lebesgue") {
    for (const std::string& f : o.families)
      t.columns.push_back("lebesgue_" + f);
    for (int n = r.lo; n <= r.hi; ++n) {
      std::vector<nlohmann::json> row = {o.dim, n};
      for (const std::string& f : o.families) {
        LagrangeOperator op(recnodes::make_nodeset(f, o.dim, n));
        row.push_back(op.lebesgue_constant(search_options(o)).constant);
      }
      t.rows.push_back(std::move(row));
    }
  } else if (o.metric == "cond") {
    std::string geom = o.geometry.empty() ? "biunit" : o.geometry;
    SimplexGeometry g =
        recnodes::reference_simplex(recnodes::parse_simplex_kind(geom), o.dim);
    for (const std::string& f : o.families)
      for (const char* m : {"mass", "stiffness", "gradient", "laplacian"})
        t.columns.push_back(std::string("cond_") + m + "_" + f);
    for (int n = r.lo; n <= r.hi; ++n) {
      std::vector<nlohmann::json> row = {o.dim, n};
      for (const std::string& f : o.families)
        for (double v : cond_row(o, f, n, g))
          row.push_back(v);
      t.rows.push_back(std::move(row));
    }
  } else if (o.metric == "interp") {
    for (const std::string& f : o.families)
      t.columns.push_back("error_" + f);
    for (int n = r.lo; n <= r.hi; ++n) {
      InterpTarget target = make_target(o, n);
      recnodes::SimplexKind kind =
          o.geometry.empty() ? target.geom : recnodes::parse_simplex_kind(o.geometry);
      SimplexGeometry g = recnodes::reference_simplex(kind, o.dim);
      std::vector<nlohmann::json> row = {o.dim, n};
      for (const std::string& f : o.families) {
        LagrangeOperator op(recnodes::make_nodeset(f, o.dim, n));
        row.push_back(recnodes::interpolation_error(op, target.f, g, o.grid_degree,
                                                    search_options(o)));
      }
      t.rows.push_back(std::move(row));
    }
  } else {
    throw std::invalid_argument("unknown compare metric: " + o.metric);
  }
  std::ofstream file;
  emit_table(t, parse_format(o.format), open_output(o, file));
}

void add_common(CLI::App* cmd, Options& o, bool with_function)
{
  cmd->add_option("-d,--dim", o.dim, "simplex dimension");
  cmd->add_option("-n,--degree", o.degree, "degree n or inclusive range a..b");
  cmd->add_option("--family", o.families,
                  "node family: equispaced, lgl, gl, lgc, blp, external:<path>");
  cmd->add_option("--geometry", o.geometry, "unit, biunit, or equilateral");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", o.output, "output path (default: stdout)");
  if (with_function) {
    cmd->add_option("--function", o.function, "fA, fB, or poly")
        ->check(CLI::IsMember({"fA", "fB", "poly"}));
    cmd->add_option("--alpha", o.alpha, "fB steepness (default 25 for d=2, 60 for d=3)");
  }
  cmd->add_option("--grid-degree", o.grid_degree, "coarse scan grid degree (0 = auto)");
  cmd->add_option("--refine-levels", o.refine_levels, "local refinement levels");
  cmd->add_option("--top-k", o.top_k, "candidates refined from the coarse scan");
  cmd->add_option("--quad-order", o.quad_order, "1D quadrature order override (0 = auto)");
  cmd->add_option("--threads", o.threads, "worker threads (0 = machine parallelism)");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"recursive simplex interpolation nodes and quality metrics"};
  app.require_subcommand(1);

  Options o;
  std::string ran;
  auto reg = [&](const std::string& name, const std::string& desc, bool with_function) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_common(cmd, o, with_function);
    cmd->callback([&ran, name] { ran = name; });
    return cmd;
  };
  reg("nodes", "emit one node set", false);
  reg("lebesgue", "Lebesgue constants over a degree range", false);
  reg("cond", "finite element matrix condition numbers", false);
  reg("interp", "sup-norm interpolation errors", true);
  CLI::App* cmp = reg("compare", "side-by-side family comparison", true);
  cmp->add_option("--metric", o.metric, "lebesgue, cond, or interp")
      ->check(CLI::IsMember({"lebesgue", "cond", "interp"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    recnodes::set_thread_count(o.threads);
    if (ran == "nodes")
      cmd_nodes(o);
    else if (ran == "lebesgue")
      cmd_lebesgue(o);
    else if (ran == "cond")
      cmd_cond(o);
    else if (ran == "interp")
      cmd_interp(o);
    else
      cmd_compare(o);
  } catch (const recnodes::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const recnodes::numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
