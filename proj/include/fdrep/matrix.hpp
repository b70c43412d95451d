#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdrep/rational.hpp"

namespace fdrep {

/// Dense row-major matrix over the rationals. Value type; all algorithms
/// below are pure functions of their arguments.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column_vector(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix hcat(const std::vector<Matrix>& parts, std::size_t rows);
Matrix vcat(const std::vector<Matrix>& parts, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Flattens row-major into a single column.
Matrix flatten(const Matrix& m);

struct RrefResult {
  Matrix form;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Forward elimination is fraction-free (Bareiss)
/// over integers; the echelon rows are then normalized and back-substituted.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right null space. The basis is the standard
/// one read off the rref: column j has a 1 in free variable j and zeros in
/// the other free variables.
Matrix kernel_basis(const Matrix& m);

/// Free (non-pivot) column indices matching the columns of kernel_basis(m).
std::vector<std::size_t> free_columns(const Matrix& m);

struct NullSpace {
  Matrix basis;                    // as kernel_basis
  std::vector<std::size_t> free;   // as free_columns
};
NullSpace null_space(const Matrix& m);

/// A subset of the columns of m forming a basis of its column span.
Matrix image_basis(const Matrix& m);

/// Rows form a basis of {y : y m = 0}.
Matrix left_kernel_basis(const Matrix& m);

/// Some X with a X = b, or nullopt. Throws std::invalid_argument when
/// a.rows() != b.rows().
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// True iff every column of v lies in the column span of a.
bool in_column_span(const Matrix& a, const Matrix& v);

/// Incrementally maintained subspace of Q^n, kept as echelon rows.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Adds v; returns true if the span grew.
  bool add(const std::vector<Rational>& v);
  bool add(const Matrix& column) { return add(column.data()); }
  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Matrix& column) const { return contains(column.data()); }

  /// Basis vectors as columns.
  Matrix basis() const;

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  std::size_t ambient_;
  // pivot column -> normalized row with a 1 at the pivot
  std::map<std::size_t, std::vector<Rational>> rows_;
};

}  // namespace fdrep
