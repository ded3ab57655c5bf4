#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "molp/rational.hpp"

namespace molp {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix from_rows(std::span<const RatVector> rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  std::vector<RatVector> row_list() const;

  void append_row(std::span<const Rational> values);
  RatMatrix transposed() const;

  RatVector operator*(std::span<const Rational> x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& v, const Rational& factor);
bool is_zero(std::span<const Rational> v);

/// Scales v so its first nonzero component is +1. Zero vectors are returned unchanged.
RatVector normalized(RatVector v);

/// Row-reduced echelon form and its pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry of each
/// column scanned left to right.
Echelon row_reduce(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : Mx = 0}, one vector per free column, each normalized.
/// Empty iff the kernel is trivial.
std::vector<RatVector> null_space(const RatMatrix& m);

/// Greedy maximal linearly independent subset of `vs`, in input order.
std::vector<RatVector> span_basis(std::span<const RatVector> vs);

/// Basis of span(b1) ∩ span(b2); empty iff the intersection is {0}.
std::vector<RatVector> intersect_spans(std::span<const RatVector> b1,
                                       std::span<const RatVector> b2);

/// True iff v lies in span(basis).
bool in_span(std::span<const RatVector> basis, std::span<const Rational> v);

/// Unique solution of the square system Mx = rhs, or nullopt if M is singular.
std::optional<RatVector> solve_square(const RatMatrix& m, std::span<const Rational> rhs);

}  // namespace molp
