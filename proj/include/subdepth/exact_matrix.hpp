#ifndef SUBDEPTH_EXACT_MATRIX_HPP
#define SUBDEPTH_EXACT_MATRIX_HPP

// Dense exact integer matrices and their boolean zero patterns.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subdepth/error.hpp"

namespace subdepth {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw input_error("entry count " + std::to_string(entries_.size()) +
                        " does not match shape " + std::to_string(rows_) + "x" +
                        std::to_string(cols_));
  }

  /// Row-wise literal, e.g. IntMatrix{{1, 1, 0}, {0, 1, 1}}.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw input_error("ragged matrix literal");
      for (long long v : row) entries_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  bool is_nonnegative() const {
    for (const auto& v : entries_)
      if (v < 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

/// Zero pattern of a nonnegative matrix: true marks a nonzero entry.
class SupportMatrix {
public:
  SupportMatrix() = default;
  SupportMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  static SupportMatrix identity(std::size_t n) {
    SupportMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto b : bits_) n += b;
    return n;
  }
  std::size_t zero_count() const noexcept { return bits_.size() - count(); }

  /// The pattern as a 0/1 integer matrix.
  IntMatrix to_int() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j) ? 1 : 0;
    return m;
  }

  friend bool operator==(const SupportMatrix&, const SupportMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw input_error("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline SupportMatrix support(const IntMatrix& m) {
  SupportMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) < 0)
        throw input_error("support: negative entry at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      s.set(i, j, m(i, j) > 0);
    }
  return s;
}

inline std::size_t zero_count(const IntMatrix& m) {
  std::size_t n = 0;
  for (const auto& v : m.entries()) n += (v == 0);
  return n;
}

/// Least q >= 1 with a <= q*b entrywise, or nullopt when some cell has
/// a > 0 over b = 0.
inline std::optional<BigInt> dominance_q(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("dominance_q: shape mismatch");
  if (!a.is_nonnegative() || !b.is_nonnegative())
    throw input_error("dominance_q: negative entry");
  BigInt q = 1;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const BigInt& num = a.entries()[i];
    const BigInt& den = b.entries()[i];
    if (den == 0) {
      if (num > 0) return std::nullopt;
      continue;
    }
    BigInt ceil = (num + den - 1) / den;
    if (ceil > q) q = ceil;
  }
  return q;
}

/// OR-AND product.
inline SupportMatrix bool_multiply(const SupportMatrix& a, const SupportMatrix& b) {
  if (a.cols() != b.rows())
    throw input_error("bool_multiply: " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  SupportMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j)) c.set(i, j, true);
    }
  return c;
}

inline SupportMatrix transpose(const SupportMatrix& m) {
  SupportMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, m(i, j));
  return t;
}

}  // namespace subdepth

#endif  // SUBDEPTH_EXACT_MATRIX_HPP
