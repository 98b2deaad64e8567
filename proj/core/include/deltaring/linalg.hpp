#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "deltaring/scalar.hpp"

namespace deltaring {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a coefficient ring. Maps act on column
/// vectors: y = A x with x of length cols().
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Scalar const& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<Scalar const> v);
  [[nodiscard]] Vec apply(Coeffs const& k, std::span<Scalar const> x) const;
  [[nodiscard]] Matrix multiply(Coeffs const& k, Matrix const& rhs) const;
  [[nodiscard]] bool is_zero() const;

  static Matrix identity(Coeffs const& k, std::size_t n);
  static Matrix from_columns(std::size_t rows,
                             std::vector<Vec> const& columns);
  /// Vertical concatenation (same number of columns).
  static Matrix stack(std::vector<Matrix> const& blocks);

  friend bool operator==(Matrix const&, Matrix const&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// A submodule of (coefficients)^dim held in Howell normal form. Over a
/// field this is the reduced row echelon form; over ℤ/m it is the canonical
/// Howell form, so equal submodules have identical representations.
class Span {
 public:
  Span() = default;
  Span(Coeffs k, std::size_t dim) : k_(k), dim_(dim) {}

  static Span from_generators(Coeffs const& k, std::size_t dim,
                              std::vector<Vec> const& gens);

  [[nodiscard]] Coeffs const& coeffs() const noexcept { return k_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::vector<Vec> const& rows() const noexcept {
    return rows_;
  }
  [[nodiscard]] std::vector<std::size_t> const& pivots() const noexcept {
    return pivots_;
  }
  [[nodiscard]] bool is_zero() const noexcept { return rows_.empty(); }

  /// Canonical coset representative of v modulo the span.
  [[nodiscard]] Vec reduce(std::span<Scalar const> v) const;
  [[nodiscard]] bool contains(std::span<Scalar const> v) const;
  [[nodiscard]] bool contains(Span const& other) const;
  [[nodiscard]] Span sum(Span const& other) const;
  [[nodiscard]] Span intersect(Span const& other) const;

  /// Composition length as a module over the coefficient ring (the rank
  /// over a field).
  [[nodiscard]] int length() const;
  /// Order of the underlying finite group; only for finite coefficients.
  [[nodiscard]] Order order() const;
  /// Rows whose pivot is a unit; over a field these are all rows.
  [[nodiscard]] std::vector<Vec> unit_pivot_rows() const;

  friend bool operator==(Span const& a, Span const& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  Coeffs k_;
  std::size_t dim_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Kernel {x : A x = 0} as a span in coefficients^cols.
Span kernel(Coeffs const& k, Matrix const& a);
/// Image of A (span of its columns) in coefficients^rows.
Span image(Coeffs const& k, Matrix const& a);
/// Preimage {x : A x in target}.
Span preimage(Coeffs const& k, Matrix const& a, Span const& target);
/// Some x with A x = b, if one exists.
std::optional<Vec> solve(Coeffs const& k, Matrix const& a,
                         std::span<Scalar const> b);
/// Rank over a field coefficient ring.
std::size_t rank(Coeffs const& k, Matrix const& a);

Vec zero_vec(Coeffs const& k, std::size_t n);
bool is_zero_vec(std::span<Scalar const> v);
Vec add(Coeffs const& k, std::span<Scalar const> a, std::span<Scalar const> b);
Vec sub(Coeffs const& k, std::span<Scalar const> a, std::span<Scalar const> b);
Vec scale(Coeffs const& k, Scalar c, std::span<Scalar const> a);
/// a += c * b
void axpy(Coeffs const& k, Vec& a, Scalar c, std::span<Scalar const> b);

}  // namespace deltaring
