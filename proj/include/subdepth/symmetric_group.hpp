#ifndef SUBDEPTH_SYMMETRIC_GROUP_HPP
#define SUBDEPTH_SYMMETRIC_GROUP_HPP

// Inclusion matrices of C[S_k] ⊆ C[S_n] from the Young branching rule.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "subdepth/inclusion_matrix.hpp"

namespace subdepth {

/// Integer partition with weakly decreasing positive parts.
struct Partition {
  std::vector<unsigned> parts;

  unsigned size() const {
    unsigned n = 0;
    for (unsigned p : parts) n += p;
    return n;
  }

  /// Partitions reachable by adding one box.
  std::vector<Partition> add_box() const {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (i == 0 || parts[i - 1] > parts[i]) {
        Partition next = *this;
        ++next.parts[i];
        out.push_back(std::move(next));
      }
    Partition longer = *this;
    longer.parts.push_back(1);
    out.push_back(std::move(longer));
    return out;
  }

  /// Lexicographic on parts; partitions lists are sorted by descending order.
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '[';
  for (std::size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
  return os << ']';
}

namespace detail {

inline void partitions_into(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in descending lexicographic order ([3], [2,1], [1,1,1]).
/// n = 0 yields the single empty partition.
inline std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  detail::partitions_into(n, n, prefix, out);
  return out;
}

/// Rows: partitions of n-1; columns: partitions of n; entry 1 when the column
/// is the row plus one box.
inline InclusionMatrix branching_matrix(unsigned n) {
  if (n < 2) throw input_error("branching_matrix: n must be at least 2, got " + std::to_string(n));
  const auto lower = partitions(n - 1);
  const auto upper = partitions(n);
  std::map<Partition, std::size_t> column_of;
  for (std::size_t j = 0; j < upper.size(); ++j) column_of.emplace(upper[j], j);
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t i = 0; i < lower.size(); ++i)
    for (const Partition& p : lower[i].add_box()) m(i, column_of.at(p)) = 1;
  return InclusionMatrix(std::move(m));
}

/// Inclusion matrix of S_k ⊆ S_n: product of the branching matrices k+1..n.
inline InclusionMatrix tower_matrix(unsigned k, unsigned n) {
  if (k < 1 || k >= n)
    throw input_error("tower_matrix: need 1 <= k < n, got k = " + std::to_string(k) +
                      ", n = " + std::to_string(n));
  IntMatrix product = branching_matrix(k + 1).matrix();
  for (unsigned level = k + 2; level <= n; ++level)
    product = multiply(product, branching_matrix(level).matrix());
  return InclusionMatrix(std::move(product));
}

}  // namespace subdepth

#endif  // SUBDEPTH_SYMMETRIC_GROUP_HPP
