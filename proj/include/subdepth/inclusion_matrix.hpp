#ifndef SUBDEPTH_INCLUSION_MATRIX_HPP
#define SUBDEPTH_INCLUSION_MATRIX_HPP

#include <string>
#include <utility>

#include "subdepth/exact_matrix.hpp"

namespace subdepth {

/// Induction-restriction table of a semisimple pair B ⊆ A: rows index the
/// B-simples, columns the A-simples. Nonnegative, with no zero row or column.
class InclusionMatrix {
public:
  explicit InclusionMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.cols() == 0) throw input_error("inclusion matrix is empty");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j)
        if (m_(i, j) < 0)
          throw input_error("negative entry at row " + std::to_string(i + 1) + ", column " +
                            std::to_string(j + 1));
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      bool nonzero = false;
      for (std::size_t j = 0; j < m_.cols() && !nonzero; ++j) nonzero = m_(i, j) != 0;
      if (!nonzero) throw input_error("zero row " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      bool nonzero = false;
      for (std::size_t i = 0; i < m_.rows() && !nonzero; ++i) nonzero = m_(i, j) != 0;
      if (!nonzero) throw input_error("zero column " + std::to_string(j + 1));
    }
  }

  InclusionMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : InclusionMatrix(IntMatrix(rows)) {}

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }

  InclusionMatrix transposed() const { return InclusionMatrix(transpose(m_)); }

  /// M Mᵗ, r×r.
  IntMatrix row_gram() const { return multiply(m_, transpose(m_)); }
  /// Mᵗ M, s×s.
  IntMatrix col_gram() const { return multiply(transpose(m_), m_); }

  friend bool operator==(const InclusionMatrix&, const InclusionMatrix&) = default;

private:
  IntMatrix m_;
};

}  // namespace subdepth

#endif  // SUBDEPTH_INCLUSION_MATRIX_HPP
