#ifndef SUBDEPTH_REPORT_HPP
#define SUBDEPTH_REPORT_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "subdepth/depth.hpp"
#include "subdepth/graph.hpp"
#include "subdepth/polynomial.hpp"

namespace subdepth {

/// Outcome of each cross-check between methods and of each depth inequality.
struct MethodChecks {
  bool graph_depth = false;    // d = min(graph odd depth, graph even depth)
  bool graph_hdepth = false;   // d_H = 1 + white diameter
  bool parity_rule = false;    // d_H = d(Mᵗ) if odd, else d(Mᵗ) + 1
  bool comparison = false;     // |d - d_H| <= 2
  bool transpose = false;      // |d(Mᵗ) - d| <= 1
  bool endo = false;           // 0 <= d_H - d(Mᵗ) <= 1
  bool spectral = false;       // d <= 2 deg(minpoly(M Mᵗ)) - 1
  bool hdepth_odd = false;

  /// (name, passed) in a fixed order.
  std::vector<std::pair<std::string, bool>> items() const {
    return {{"graph_depth", graph_depth}, {"graph_hdepth", graph_hdepth},
            {"parity_rule", parity_rule}, {"comparison", comparison},
            {"transpose", transpose},     {"endo", endo},
            {"spectral", spectral},       {"hdepth_odd", hdepth_odd}};
  }

  bool all() const {
    for (const auto& [name, ok] : items())
      if (!ok) return false;
    return true;
  }
};

struct DepthReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t depth = 0;
  std::size_t depth_transpose = 0;
  std::size_t h_depth = 0;
  std::size_t min_odd_depth = 0;
  std::size_t min_even_depth = 0;
  std::size_t graph_h_depth = 0;
  BigInt q_witness = 0;  // least q with M^[d+1] <= q M^[d-1]
  std::size_t spectral_bound = 0;
  MethodChecks methods_agree;
};

namespace detail {

inline std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace detail

/// All invariants and cross-checks, without asserting that they hold.
inline DepthReport compute_depth_report(const InclusionMatrix& m) {
  DepthReport r;
  r.rows = m.rows();
  r.cols = m.cols();
  r.depth = min_depth(m);
  r.depth_transpose = min_depth(m.transposed());
  r.h_depth = min_hdepth(m);

  const BipartiteGraph g = build_graph(m);
  r.min_odd_depth = min_odd_depth_graph(g);
  r.min_even_depth = min_even_depth_graph(g);
  r.graph_h_depth = min_hdepth_graph(g);

  auto q = has_depth(m, r.depth);
  if (!q) throw internal_error("no witness q at the computed minimum depth");
  r.q_witness = *q;
  r.spectral_bound = depth_upper_bound(m);

  MethodChecks& c = r.methods_agree;
  c.graph_depth = r.depth == std::min(r.min_odd_depth, r.min_even_depth);
  c.graph_hdepth = r.h_depth == r.graph_h_depth;
  c.parity_rule = r.h_depth == (r.depth_transpose % 2 == 1 ? r.depth_transpose
                                                           : r.depth_transpose + 1);
  c.comparison = detail::distance(r.depth, r.h_depth) <= 2;
  c.transpose = detail::distance(r.depth_transpose, r.depth) <= 1;
  c.endo = r.h_depth >= r.depth_transpose && r.h_depth - r.depth_transpose <= 1;
  c.spectral = r.depth <= r.spectral_bound;
  c.hdepth_odd = r.h_depth % 2 == 1;
  return r;
}

/// compute_depth_report, throwing internal_error if any check fails.
inline DepthReport depth_report(const InclusionMatrix& m) {
  DepthReport r = compute_depth_report(m);
  for (const auto& [name, ok] : r.methods_agree.items())
    if (!ok) throw internal_error("depth report invariant failed: " + name);
  return r;
}

/// JSON with fixed key order; integers are written exactly in decimal.
inline std::string to_json(const DepthReport& r) {
  std::ostringstream os;
  os << "{\"rows\":" << r.rows << ",\"cols\":" << r.cols << ",\"depth\":" << r.depth
     << ",\"depth_transpose\":" << r.depth_transpose << ",\"h_depth\":" << r.h_depth
     << ",\"min_odd_depth\":" << r.min_odd_depth << ",\"min_even_depth\":" << r.min_even_depth
     << ",\"q_witness\":" << r.q_witness << ",\"spectral_bound\":" << r.spectral_bound
     << ",\"methods_agree\":{";
  bool first = true;
  for (const auto& [name, ok] : r.methods_agree.items()) {
    os << (first ? "" : ",") << '"' << name << "\":" << (ok ? "true" : "false");
    first = false;
  }
  os << "}}\n";
  return os.str();
}

inline std::string to_text(const DepthReport& r) {
  std::ostringstream os;
  os << "dimensions        " << r.rows << " x " << r.cols << '\n'
     << "depth             " << r.depth << "  (q = " << r.q_witness << ")\n"
     << "depth transpose   " << r.depth_transpose << '\n'
     << "h-depth           " << r.h_depth << '\n'
     << "graph odd depth   " << r.min_odd_depth << '\n'
     << "graph even depth  " << r.min_even_depth << '\n'
     << "graph h-depth     " << r.graph_h_depth << '\n'
     << "spectral bound    " << r.spectral_bound << '\n'
     << "methods agree     " << (r.methods_agree.all() ? "yes" : "NO") << '\n';
  return os.str();
}

}  // namespace subdepth

#endif  // SUBDEPTH_REPORT_HPP
