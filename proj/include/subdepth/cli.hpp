#ifndef SUBDEPTH_CLI_HPP
#define SUBDEPTH_CLI_HPP

// Command-line front end. run_cli is kept stream-parameterized so the test
// suite can drive every subcommand in-process.
//
// Exit codes: 0 success, 2 input error, 3 internal invariant violation
// (including a failed `check` inequality).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subdepth/depth.hpp"
#include "subdepth/graph.hpp"
#include "subdepth/matrix_io.hpp"
#include "subdepth/report.hpp"
#include "subdepth/symmetric_group.hpp"

namespace subdepth::cli {

enum ExitCode : int { ok = 0, bad_input = 2, internal = 3 };

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw input_error("cannot open matrix file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline void print_symmetric_odd(const IntMatrix& sym, bool json, std::ostream& out) {
  const std::size_t odd = min_odd_depth_symmetric(sym);
  const std::size_t zeros = zero_count(sym);
  const std::size_t zeros_squared = zero_count(multiply(sym, sym));
  if (json) {
    out << "{\"rows\":" << sym.rows() << ",\"cols\":" << sym.cols()
        << ",\"min_odd_depth\":" << odd << ",\"zero_count\":" << zeros
        << ",\"zero_count_squared\":" << zeros_squared << "}\n";
  } else {
    out << "min odd depth     " << odd << '\n'
        << "zeros             " << zeros << '\n'
        << "zeros of square   " << zeros_squared << '\n';
  }
}

struct CheckLine {
  std::string name;
  std::string relation;
  bool passed;
};

inline std::vector<CheckLine> check_lines(const DepthReport& r) {
  const auto d = std::to_string(r.depth);
  const auto dt = std::to_string(r.depth_transpose);
  const auto dh = std::to_string(r.h_depth);
  const auto& c = r.methods_agree;
  return {
      {"comparison", "|d - d_H| <= 2        d=" + d + " d_H=" + dh, c.comparison},
      {"transpose", "|d(Mt) - d| <= 1      d(Mt)=" + dt + " d=" + d, c.transpose},
      {"endo", "0 <= d_H - d(Mt) <= 1  d_H=" + dh + " d(Mt)=" + dt, c.endo},
      {"spectral", "d <= 2deg - 1         d=" + d + " bound=" + std::to_string(r.spectral_bound),
       c.spectral},
      {"hdepth_odd", "d_H odd               d_H=" + dh, c.hdepth_odd},
      {"parity_rule", "d_H from d(Mt) parity d_H=" + dh + " d(Mt)=" + dt, c.parity_rule},
      {"graph_depth",
       "d = min(odd, even)    d=" + d + " odd=" + std::to_string(r.min_odd_depth) +
           " even=" + std::to_string(r.min_even_depth),
       c.graph_depth},
      {"graph_hdepth", "d_H = graph H-depth   d_H=" + dh + " graph=" + std::to_string(r.graph_h_depth),
       c.graph_hdepth},
  };
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in) {
  CLI::App app{"Depth and H-depth of inclusion matrices of semisimple algebra pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string matrix_path;
  bool transposed = false;
  bool symmetric_odd = false;
  auto* compute = app.add_subcommand("compute", "Depth report of an inclusion matrix");
  compute->add_option("--matrix", matrix_path, "Matrix file, or - for stdin")->required();
  compute->add_flag("--transpose", transposed, "Report on the transposed matrix");
  compute->add_flag("--symmetric-odd", symmetric_odd,
                    "Treat the file as M Mt and report the minimum odd depth only");

  std::string dot_path;
  auto* graph = app.add_subcommand("graph", "Depth values from the bipartite graph");
  graph->add_option("--matrix", matrix_path, "Matrix file, or - for stdin")->required();
  graph->add_option("--dot", dot_path, "Write Graphviz DOT to this file");

  unsigned n = 0;
  unsigned k = 0;
  auto* sym = app.add_subcommand("sym", "Inclusion matrix of S_k in S_n by the branching rule");
  sym->add_option("--n", n, "Order of the larger symmetric group")->required();
  sym->add_option("--k", k, "Order of the subgroup (default n - 1)");

  auto* check = app.add_subcommand("check", "Evaluate every depth inequality on one matrix");
  check->add_option("--matrix", matrix_path, "Matrix file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*compute) {
      const std::string text = detail::read_source(matrix_path, in);
      if (symmetric_odd) {
        detail::print_symmetric_odd(parse_int_matrix(text), json, out);
        return ok;
      }
      InclusionMatrix m = parse_matrix(text);
      if (transposed) m = m.transposed();
      const DepthReport r = depth_report(m);
      out << (json ? to_json(r) : to_text(r));
      return ok;
    }
    if (*graph) {
      const BipartiteGraph g = build_graph(parse_matrix(detail::read_source(matrix_path, in)));
      const auto odd = min_odd_depth_graph(g);
      const auto even = min_even_depth_graph(g);
      const auto h = min_hdepth_graph(g);
      if (json)
        out << "{\"min_odd_depth\":" << odd << ",\"min_even_depth\":" << even
            << ",\"h_depth\":" << h << "}\n";
      else
        out << "odd " << odd << "\neven " << even << "\nh " << h << '\n';
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path, std::ios::binary);
        if (!dot) throw input_error("cannot write DOT file '" + dot_path + "'");
        dot << to_dot(g);
      }
      return ok;
    }
    if (*sym) {
      if (n < 2) throw input_error("--n must be at least 2");
      if (sym->count("--k") == 0) k = n - 1;
      const InclusionMatrix m = tower_matrix(k, n);
      if (json) {
        out << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols() << ",\"entries\":[";
        for (std::size_t i = 0; i < m.rows(); ++i) {
          out << (i ? ",[" : "[");
          for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m.matrix()(i, j);
          out << ']';
        }
        out << "]}\n";
      } else {
        out << render_matrix(m);
      }
      return ok;
    }
    if (*check) {
      const DepthReport r =
          compute_depth_report(parse_matrix(detail::read_source(matrix_path, in)));
      const auto lines = detail::check_lines(r);
      bool all = true;
      for (const auto& line : lines) all = all && line.passed;
      if (json) {
        out << "{\"checks\":{";
        for (std::size_t i = 0; i < lines.size(); ++i)
          out << (i ? "," : "") << '"' << lines[i].name << "\":" << (lines[i].passed ? "true" : "false");
        out << "},\"passed\":" << (all ? "true" : "false") << "}\n";
      } else {
        for (const auto& line : lines)
          out << (line.passed ? "PASS  " : "FAIL  ") << line.relation << '\n';
      }
      return all ? ok : internal;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
  return internal;
}

}  // namespace subdepth::cli

#endif  // SUBDEPTH_CLI_HPP
