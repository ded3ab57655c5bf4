#include "molp/linalg.hpp"

#include <utility>

#include "molp/errors.hpp"

namespace molp {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows) {
  RatMatrix m;
  if (rows.empty()) return m;
  m.cols_ = rows.front().size();
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<RatVector> RatMatrix::row_list() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DimensionError("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot product size mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector scaled(const RatVector& v, const Rational& factor) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RatVector normalized(RatVector v) {
  for (const auto& x : v) {
    if (x != 0) {
      Rational lead = x;
      for (auto& y : v) y /= lead;
      break;
    }
  }
  return v;
}

Echelon row_reduce(RatMatrix m) {
  Echelon out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(found, j), m(pivot_row, j));
    }
    Rational inv = 1 / m(pivot_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c) == 0) continue;
      Rational factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(pivot_row, j);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<RatVector> null_space(const RatMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) {
    std::vector<RatVector> basis;
    for (std::size_t j = 0; j < n; ++j) {
      RatVector e(n);
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      v[e.pivot_columns[i]] = -e.reduced(i, free);
    }
    basis.push_back(normalized(std::move(v)));
  }
  return basis;
}

std::vector<RatVector> span_basis(std::span<const RatVector> vs) {
  std::vector<RatVector> kept;
  if (vs.empty()) return kept;
  const std::size_t dim = vs.front().size();
  // Rows of `reduced` stay in echelon form; each candidate is reduced against
  // them and kept iff a nonzero remainder survives.
  std::vector<RatVector> reduced;
  std::vector<std::size_t> pivots;
  for (const auto& v : vs) {
    if (v.size() != dim) throw DimensionError("span_basis: mixed vector dimensions");
    RatVector w = v;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (w[pivots[i]] == 0) continue;
      Rational f = w[pivots[i]];
      for (std::size_t j = 0; j < dim; ++j) w[j] -= f * reduced[i][j];
    }
    std::size_t p = 0;
    while (p < dim && w[p] == 0) ++p;
    if (p == dim) continue;
    Rational inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    // Keep earlier rows reduced in the new pivot column.
    for (auto& r : reduced) {
      if (r[p] == 0) continue;
      Rational f = r[p];
      for (std::size_t j = 0; j < dim; ++j) r[j] -= f * w[j];
    }
    reduced.push_back(std::move(w));
    pivots.push_back(p);
    kept.push_back(v);
  }
  return kept;
}

bool in_span(std::span<const RatVector> basis, std::span<const Rational> v) {
  std::vector<RatVector> rows(basis.begin(), basis.end());
  const std::size_t before = span_basis(rows).size();
  rows.emplace_back(v.begin(), v.end());
  return span_basis(rows).size() == before;
}

std::vector<RatVector> intersect_spans(std::span<const RatVector> b1,
                                       std::span<const RatVector> b2) {
  std::vector<RatVector> u = span_basis(b1);
  std::vector<RatVector> w = span_basis(b2);
  if (u.empty() || w.empty()) return {};
  const std::size_t dim = u.front().size();
  if (w.front().size() != dim) throw DimensionError("intersect_spans: dimension mismatch");

  // Columns [u_1 .. u_p | -w_1 .. -w_q]; a kernel vector (a, c) gives the
  // common element sum a_i u_i.
  RatMatrix stacked(dim, u.size() + w.size());
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) stacked(r, j) = u[j][r];
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) stacked(r, u.size() + j) = -w[j][r];

  std::vector<RatVector> common;
  for (const auto& coeffs : null_space(stacked)) {
    RatVector x(dim);
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (coeffs[j] == 0) continue;
      for (std::size_t r = 0; r < dim; ++r) x[r] += coeffs[j] * u[j][r];
    }
    common.push_back(normalized(std::move(x)));
  }
  return span_basis(common);
}

std::optional<RatVector> solve_square(const RatMatrix& m, std::span<const Rational> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw DimensionError("solve_square: shape mismatch");
  if (n == 0) return RatVector{};
  RatMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivot_columns.size() != n || e.pivot_columns.back() != n - 1) return std::nullopt;
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
  return x;
}

}  // namespace molp
