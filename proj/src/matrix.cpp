#include "tauexc/matrix.hpp"

#include <stdexcept>

namespace tauexc {

Matrix Matrix::identity(int n, uint32_t p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::logic_error("hcat: row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_, a.p_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::logic_error("vcat: col mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_, a.p_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("mul: dim mismatch");
  Matrix m(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      uint64_t v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols_; ++j)
        m.a_[size_t(i) * o.cols_ + j] =
            uint32_t((m.a_[size_t(i) * o.cols_ + j] + v * o.at(k, j)) % p_);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("add: dim mismatch");
  Matrix m(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = fp::add(a_[i], o.a_[i], p_);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("sub: dim mismatch");
  Matrix m(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = fp::sub(a_[i], o.a_[i], p_);
  return m;
}

Matrix Matrix::scaled(uint32_t c) const {
  Matrix m(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = fp::mul(a_[i], c % p_, p_);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

Matrix Matrix::pow(uint64_t e) const {
  if (rows_ != cols_) throw std::logic_error("pow: not square");
  Matrix r = identity(rows_, p_);
  Matrix b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Matrix Matrix::col(int j) const {
  Matrix m(rows_, 1, p_);
  for (int i = 0; i < rows_; ++i) m.set(i, 0, at(i, j));
  return m;
}

Matrix Matrix::cols_subset(const std::vector<int>& idx) const {
  Matrix m(rows_, int(idx.size()), p_);
  for (int j = 0; j < int(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) m.set(i, j, at(i, idx[j]));
  return m;
}

Matrix Matrix::rows_subset(const std::vector<int>& idx) const {
  Matrix m(int(idx.size()), cols_, p_);
  for (int i = 0; i < int(idx.size()); ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(idx[i], j));
  return m;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b.at(i, j));
}

Matrix Matrix::block(int r0, int c0, int r, int c) const {
  Matrix m(r, c, p_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, at(r0 + i, c0 + j));
  return m;
}

bool Matrix::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != uint32_t(i == j ? 1 : 0)) return false;
  return true;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols_; ++j) {
        uint32_t t = at(r, j);
        set(r, j, at(piv, j));
        set(piv, j, t);
      }
    uint32_t iv = fp::inv(at(r, c), p_);
    for (int j = 0; j < cols_; ++j) set(r, j, fp::mul(at(r, j), iv, p_));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint32_t f = at(i, c);
      if (!f) continue;
      for (int j = 0; j < cols_; ++j) set(i, j, fp::sub(at(i, j), fp::mul(f, at(r, j), p_), p_));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return int(m.rref().size());
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(cols_, int(free_cols.size()), p_);
  for (int fi = 0; fi < int(free_cols.size()); ++fi) {
    int fc = free_cols[fi];
    k.set(fc, fi, 1);
    for (int pi = 0; pi < int(pivots.size()); ++pi) k.set(pivots[pi], fi, fp::neg(m.at(pi, fc), p_));
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw std::logic_error("solve: dim mismatch");
  Matrix aug = hcat(*this, b);
  std::vector<int> pivots = aug.rref();
  for (int c : pivots)
    if (c >= cols_) return std::nullopt;
  Matrix x(cols_, b.cols_, p_);
  for (int pi = 0; pi < int(pivots.size()); ++pi)
    for (int j = 0; j < b.cols_; ++j) x.set(pivots[pi], j, aug.at(pi, cols_ + j));
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug = hcat(*this, identity(rows_, p_));
  std::vector<int> pivots = aug.rref();
  if (int(pivots.size()) != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  return aug.block(0, cols_, rows_, cols_);
}

uint64_t Matrix::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(rows_);
  mix(cols_);
  mix(p_);
  for (uint32_t v : a_) mix(v);
  return h;
}

Matrix col_basis(const Matrix& span) {
  Matrix t = span.transpose();
  std::vector<int> pivots = t.rref();
  Matrix b(span.rows(), int(pivots.size()), span.p());
  for (int i = 0; i < int(pivots.size()); ++i)
    for (int r = 0; r < span.rows(); ++r) b.set(r, i, t.at(i, r));
  return b;
}

bool in_col_span(const Matrix& basis, const Matrix& v) { return basis.solve(v).has_value(); }

Matrix span_sum(const Matrix& a, const Matrix& b) { return col_basis(Matrix::hcat(a, b)); }

Matrix span_intersect(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0, a.p());
  Matrix k = Matrix::hcat(a, b.scaled(a.p() - 1)).kernel();
  Matrix xs = k.block(0, 0, a.cols(), k.cols());
  return col_basis(a * xs);
}

Matrix complement_basis(const Matrix& basis, int dim) {
  Matrix cur = basis;
  std::vector<int> added;
  for (int i = 0; i < dim && cur.cols() < dim; ++i) {
    Matrix e(dim, 1, basis.p());
    e.set(i, 0, 1);
    if (!in_col_span(col_basis(cur), e)) {
      cur = Matrix::hcat(cur, e);
      added.push_back(i);
    }
  }
  Matrix out(dim, int(added.size()), basis.p());
  for (int j = 0; j < int(added.size()); ++j) out.set(added[j], j, 1);
  return out;
}

std::optional<Matrix> coords_in_basis(const Matrix& basis, const Matrix& v) { return basis.solve(v); }

}  // namespace tauexc
