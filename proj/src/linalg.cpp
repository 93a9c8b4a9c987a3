#include "fiberbound/linalg.hpp"

#include <algorithm>

#include "fiberbound/errors.hpp"

namespace fiberbound {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("column has wrong length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

namespace linalg {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldSpec& F) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) F.add_mul(c(i, j), aik, b(k, j));
    }
  return c;
}

Vector apply(const Matrix& a, const Vector& v, const FieldSpec& F) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (sgn(a(i, k)) != 0) F.add_mul(out[i], a(i, k), v[k]);
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b, const FieldSpec& F) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Matrix scaled(const Matrix& a, const Scalar& s, const FieldSpec& F) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(a(i, j), s);
  return c;
}

void axpy(Vector& acc, const Scalar& c, const Vector& v, const FieldSpec& F) {
  if (acc.size() != v.size()) throw DimensionMismatch("vector length mismatch");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) F.add_mul(acc[i], c, v[i]);
}

std::vector<std::size_t> rref(Matrix& m, const FieldSpec& F) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    std::size_t sel = prow;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(prow, c));
    Scalar inv = F.inv(m(prow, col));
    for (std::size_t c = col; c < m.cols(); ++c)
      if (sgn(m(prow, c)) != 0) m(prow, c) = F.mul(m(prow, c), inv);
    std::vector<std::size_t> nz;
    for (std::size_t c = col + 1; c < m.cols(); ++c)
      if (sgn(m(prow, c)) != 0) nz.push_back(c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || sgn(m(r, col)) == 0) continue;
      Scalar f = m(r, col);
      for (std::size_t c : nz) F.sub_mul(m(r, c), f, m(prow, c));
      m(r, col) = 0;
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

std::size_t rank(Matrix m, const FieldSpec& F) { return rref(m, F).size(); }

Matrix kernel(const Matrix& m, const FieldSpec& F) {
  Matrix r = m;
  auto pivots = rref(r, F);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.cols(), basis);
}

Matrix left_kernel(const Matrix& m, const FieldSpec& F) { return kernel(m.transpose(), F).transpose(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b, const FieldSpec& F) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug, F);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace linalg

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(FieldSpec field, std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient);
    e[i] = 1;
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

void Subspace::check_length(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
}

Vector Subspace::reduce(Vector v) const {
  check_length(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (sgn(f) != 0) linalg::axpy(v, field_.neg(f), rows_[i], field_);
  }
  return v;
}

bool Subspace::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < v.size() && sgn(v[p]) == 0) ++p;
  if (p == v.size()) return false;
  Scalar inv = field_.inv(v[p]);
  for (auto& x : v)
    if (sgn(x) != 0) x = field_.mul(x, inv);
  for (auto& row : rows_) {
    const Scalar f = row[p];
    if (sgn(f) != 0) linalg::axpy(row, field_.neg(f), v, field_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vector& v) const { return linalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  check_length(v);
  Vector c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

}  // namespace fiberbound
