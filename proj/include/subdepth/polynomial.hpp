#ifndef SUBDEPTH_POLYNOMIAL_HPP
#define SUBDEPTH_POLYNOMIAL_HPP

// Exact characteristic polynomials and squarefree degree, giving the
// minimal-polynomial bound on depth for symmetric matrices.

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "subdepth/exact_matrix.hpp"
#include "subdepth/inclusion_matrix.hpp"

namespace subdepth {

/// Integer polynomial, coefficients lowest degree first. Always trimmed, so
/// the zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  IntPolynomial derivative() const {
    std::vector<BigInt> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * k);
    return IntPolynomial(std::move(d));
  }

  /// gcd of the coefficients, nonnegative.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::integer::gcd(g, BigInt(abs(c)));
    return g;
  }

  /// Content divided out and leading coefficient made positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c / g);
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os;
}

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw input_error("pseudo_remainder: zero divisor");
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = b.leading();
  long steps = a.degree() - b.degree() + 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t dr = r.size() - 1;
    BigInt lr = r.back();
    const std::size_t shift = dr - db;
    for (auto& c : r) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * bc[k];
    --steps;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  // Pad the missing multiplications so the result matches the textbook prem.
  for (; steps > 0; --steps)
    for (auto& c : r) c *= lb;
  return IntPolynomial(std::move(r));
}

/// Primitive gcd over Q (returned with integer coefficients, positive leading
/// coefficient), via a primitive pseudo-remainder sequence.
inline IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// det(xI - m) by Berkowitz's method: ring operations only.
inline IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square())
    throw input_error("char_poly: matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", not square");
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial{1};

  // Highest-degree-first coefficients of the leading principal minor's polynomial.
  std::vector<BigInt> poly{BigInt(1), BigInt(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // Bordering: column c = m[0..r)[r], row m[r][0..r), corner m[r][r].
    // toeplitz = (1, -corner, -row*c, -row*A*c, ..., -row*A^(r-1)*c).
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    std::vector<BigInt> vec(r);
    for (std::size_t i = 0; i < r; ++i) vec[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * vec[j];
      toeplitz[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<BigInt> next(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * vec[j];
        vec = std::move(next);
      }
    }
    std::vector<BigInt> next_poly(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j)
        next_poly[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next_poly);
  }
  return IntPolynomial(std::vector<BigInt>(poly.rbegin(), poly.rend()));
}

/// p(m) by Horner's rule.
inline IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& m) {
  if (!m.is_square()) throw input_error("evaluate_at: matrix not square");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  for (long k = p.degree(); k >= 0; --k) {
    acc = multiply(acc, m);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coefficients()[static_cast<std::size_t>(k)];
  }
  return acc;
}

/// Number of distinct eigenvalues of a symmetric matrix, which is the degree
/// of its minimal polynomial: deg p - deg gcd(p, p').
inline std::size_t minpoly_degree(const IntMatrix& sym) {
  if (!sym.is_symmetric()) throw input_error("minpoly_degree: matrix is not symmetric");
  if (sym.rows() == 0) throw input_error("minpoly_degree: empty matrix");
  IntPolynomial p = char_poly(sym);
  IntPolynomial g = polynomial_gcd(p, p.derivative());
  return static_cast<std::size_t>(p.degree() - g.degree());
}

/// Odd upper bound 2*deg(minpoly(M Mᵗ)) - 1 on the minimum depth.
inline std::size_t depth_upper_bound(const InclusionMatrix& m) {
  return 2 * minpoly_degree(m.row_gram()) - 1;
}

}  // namespace subdepth

#endif  // SUBDEPTH_POLYNOMIAL_HPP
