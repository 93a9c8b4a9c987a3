#ifndef FIBERBOUND_LINALG_HPP
#define FIBERBOUND_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fiberbound/field.hpp"

namespace fiberbound {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

namespace linalg {

bool is_zero(const Vector& v);
Matrix multiply(const Matrix& a, const Matrix& b, const FieldSpec& F);
Vector apply(const Matrix& a, const Vector& v, const FieldSpec& F);
Matrix add(const Matrix& a, const Matrix& b, const FieldSpec& F);
Matrix scaled(const Matrix& a, const Scalar& c, const FieldSpec& F);
/// acc += c * v
void axpy(Vector& acc, const Scalar& c, const Vector& v, const FieldSpec& F);

/// In-place reduced row echelon form. Pivots are chosen as the first
/// nonzero entry in each column, so the result is deterministic.
/// Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, const FieldSpec& F);
std::size_t rank(Matrix m, const FieldSpec& F);
/// Basis of {x : m x = 0} as columns, one per free variable.
Matrix kernel(const Matrix& m, const FieldSpec& F);
/// Basis of {y : y^T m = 0} as rows.
Matrix left_kernel(const Matrix& m, const FieldSpec& F);
std::optional<Vector> solve(const Matrix& m, const Vector& b, const FieldSpec& F);

}  // namespace linalg

/// Linear subspace of k^n kept as a reduced row echelon basis, so equality
/// of subspaces is equality of representations.
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  static Subspace span(FieldSpec field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(FieldSpec field, std::size_t ambient);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns false if v was already in it.
  bool insert(Vector v);
  /// v minus its echelon reduction against the basis; zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis (v's entries at the pivots).
  /// Precondition: contains(v).
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void check_length(const Vector& v) const;

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;          // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

}  // namespace fiberbound

#endif  // FIBERBOUND_LINALG_HPP
