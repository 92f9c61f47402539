#ifndef SUBDEPTH_DEPTH_HPP
#define SUBDEPTH_DEPTH_HPP

// Bracketed powers of an inclusion matrix and the depth / H-depth searches.
//
// M has depth n when M^[n+1] <= q M^[n-1] for some positive integer q, with
// M^[2k] = (M Mᵗ)^k and M^[2k+1] = (M Mᵗ)^k M. Because M has no zero row or
// column, M Mᵗ has a positive diagonal, so supp(M^[n-1]) ⊆ supp(M^[n+1]) and
// such a q exists exactly when the two supports coincide. The searches below
// therefore iterate on zero patterns and only build exact powers to report
// the least witness q.

#include <cstddef>
#include <optional>
#include <string>

#include "subdepth/exact_matrix.hpp"
#include "subdepth/inclusion_matrix.hpp"

namespace subdepth {

namespace detail {

inline IntMatrix power(const IntMatrix& base, std::size_t k) {
  IntMatrix result = IntMatrix::identity(base.rows());
  for (std::size_t i = 0; i < k; ++i) result = multiply(result, base);
  return result;
}

inline SupportMatrix power(const SupportMatrix& base, std::size_t k) {
  SupportMatrix result = SupportMatrix::identity(base.rows());
  for (std::size_t i = 0; i < k; ++i) result = bool_multiply(result, base);
  return result;
}

/// Searches never need more steps than this; hitting it means a bug.
inline std::size_t iteration_cap(const InclusionMatrix& m) { return 2 * (m.rows() + m.cols()) + 2; }

inline void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw input_error(std::string(what) + ": order must be positive");
}

}  // namespace detail

/// M^[n]: I_r for n = 0, (M Mᵗ)^(n/2) for even n, (M Mᵗ)^((n-1)/2) M for odd n.
inline IntMatrix bracketed_power(const InclusionMatrix& m, std::size_t n) {
  IntMatrix even = detail::power(m.row_gram(), n / 2);
  return n % 2 == 0 ? even : multiply(even, m.matrix());
}

/// Zero pattern of M^[n], computed in the boolean semiring.
inline SupportMatrix bracketed_support(const InclusionMatrix& m, std::size_t n) {
  const SupportMatrix sm = support(m.matrix());
  SupportMatrix even = detail::power(bool_multiply(sm, transpose(sm)), n / 2);
  return n % 2 == 0 ? even : bool_multiply(even, sm);
}

/// Least q with M^[n+1] <= q M^[n-1], or nullopt when M lacks depth n.
inline std::optional<BigInt> has_depth(const InclusionMatrix& m, std::size_t n) {
  detail::require_positive(n, "has_depth");
  return dominance_q(bracketed_power(m, n + 1), bracketed_power(m, n - 1));
}

/// Least q with S^k <= q S^(k-1) for S = Mᵗ M and odd = 2k - 1.
inline std::optional<BigInt> has_hdepth(const InclusionMatrix& m, std::size_t odd) {
  if (odd % 2 == 0) throw input_error("has_hdepth: H-depth must be odd");
  const std::size_t k = (odd + 1) / 2;
  const IntMatrix gram = m.col_gram();
  return dominance_q(detail::power(gram, k), detail::power(gram, k - 1));
}

/// Minimum depth d(M): least n >= 1 with supp(M^[n+1]) = supp(M^[n-1]).
inline std::size_t min_depth(const InclusionMatrix& m) {
  const SupportMatrix sm = support(m.matrix());
  const SupportMatrix gram = bool_multiply(sm, transpose(sm));
  // lower = supp(M^[n-1]), upper = supp(M^[n+1]); advancing n by one swaps
  // the parity of the pair, so both parities are carried along.
  SupportMatrix even_lower = SupportMatrix::identity(m.rows());  // M^[0]
  SupportMatrix odd_lower = sm;                                  // M^[1]
  SupportMatrix even_upper = gram;                               // M^[2]
  SupportMatrix odd_upper = bool_multiply(gram, sm);             // M^[3]
  const std::size_t cap = detail::iteration_cap(m);
  for (std::size_t n = 1; n <= cap; ++n) {
    if (n % 2 == 1) {
      if (even_upper == even_lower) return n;
      even_lower = even_upper;
      even_upper = bool_multiply(gram, even_upper);
    } else {
      if (odd_upper == odd_lower) return n;
      odd_lower = odd_upper;
      odd_upper = bool_multiply(gram, odd_upper);
    }
  }
  throw internal_error("min_depth: supports did not stabilize within " + std::to_string(cap) +
                       " steps");
}

namespace detail {

// Least k >= 0 with supp(sym^(k+1)) = supp(sym^k); sym needs a positive diagonal.
inline std::size_t stabilization_index(const SupportMatrix& sym, std::size_t cap) {
  SupportMatrix lower = SupportMatrix::identity(sym.rows());
  SupportMatrix upper = sym;
  for (std::size_t k = 0; k <= cap; ++k) {
    if (upper == lower) return k;
    lower = upper;
    upper = bool_multiply(upper, sym);
  }
  throw internal_error("support powers did not stabilize within " + std::to_string(cap) +
                       " steps");
}

}  // namespace detail

/// Minimum H-depth: 2k - 1 for the least k >= 1 with S^k <= q S^(k-1), S = Mᵗ M.
inline std::size_t min_hdepth(const InclusionMatrix& m) {
  const SupportMatrix sm = support(m.matrix());
  const SupportMatrix gram = bool_multiply(transpose(sm), sm);
  // stabilization_index returns k-1 in the above notation.
  return 2 * detail::stabilization_index(gram, detail::iteration_cap(m)) + 1;
}

/// Minimum odd depth read off a symmetric matrix standing for M Mᵗ:
/// 2k + 1 for the least k >= 0 with sym^(k+1) <= q sym^k.
inline std::size_t min_odd_depth_symmetric(const IntMatrix& sym) {
  if (!sym.is_square() || sym.rows() == 0)
    throw input_error("expected a nonempty square matrix, got " + std::to_string(sym.rows()) +
                      "x" + std::to_string(sym.cols()));
  if (!sym.is_symmetric()) throw input_error("matrix is not symmetric");
  if (!sym.is_nonnegative()) throw input_error("matrix has a negative entry");
  for (std::size_t i = 0; i < sym.rows(); ++i)
    if (sym(i, i) <= 0)
      throw input_error("diagonal entry " + std::to_string(i + 1) + " is not positive");
  return 2 * detail::stabilization_index(support(sym), 2 * sym.rows() + 2) + 1;
}

}  // namespace subdepth

#endif  // SUBDEPTH_DEPTH_HPP
