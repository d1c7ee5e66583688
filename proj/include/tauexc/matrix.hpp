#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tauexc/fp.hpp"

namespace tauexc {

// Dense matrix over F_p. Rows and columns may be zero; the prime travels with
// the matrix so that module data stays self-contained.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), p_(2) {}
  Matrix(int rows, int cols, uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(size_t(rows) * cols, 0) {}

  static Matrix identity(int n, uint32_t p);
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint32_t p() const { return p_; }

  uint32_t at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  void set(int i, int j, uint32_t v) { a_[size_t(i) * cols_ + j] = v % p_; }
  void add_at(int i, int j, uint32_t v) { set(i, j, fp::add(at(i, j), v % p_, p_)); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  Matrix scaled(uint32_t c) const;
  Matrix transpose() const;
  Matrix pow(uint64_t e) const;  // square matrices

  Matrix col(int j) const;
  Matrix cols_subset(const std::vector<int>& idx) const;
  Matrix rows_subset(const std::vector<int>& idx) const;
  void set_block(int r0, int c0, const Matrix& b);
  Matrix block(int r0, int c0, int r, int c) const;

  bool is_zero() const;
  bool is_identity() const;

  // Gaussian elimination to reduced row echelon form; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  // Basis of the right kernel, one basis vector per column.
  Matrix kernel() const;
  // Solve this * X = B; nullopt if inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;
  std::optional<Matrix> inverse() const;

  uint64_t hash() const;

 private:
  int rows_, cols_;
  uint32_t p_;
  std::vector<uint32_t> a_;
};

// Subspace utilities. Subspaces are represented by matrices whose columns form
// a spanning set (not necessarily independent until reduced).
Matrix col_basis(const Matrix& span);
bool in_col_span(const Matrix& basis, const Matrix& v);
Matrix span_sum(const Matrix& a, const Matrix& b);
Matrix span_intersect(const Matrix& a, const Matrix& b);
// Unit vectors extending `basis` to the full space of dimension dim.
Matrix complement_basis(const Matrix& basis, int dim);
// Coordinates of v in the given (independent) basis; nullopt if outside.
std::optional<Matrix> coords_in_basis(const Matrix& basis, const Matrix& v);

}  // namespace tauexc
