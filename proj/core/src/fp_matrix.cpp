#include "jhall/fp_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace jhall {

int fp_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("zero has no inverse");
  for (int b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  throw std::domain_error("modulus is not prime");
}

int fp_rank_inplace(std::uint8_t* m, int rows, int cols, int p) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (int k = c; k < cols; ++k) std::swap(m[piv * cols + k], m[rank * cols + k]);
    const int inv = fp_inverse(m[rank * cols + c], p);
    for (int k = c; k < cols; ++k) m[rank * cols + k] = static_cast<std::uint8_t>(m[rank * cols + k] * inv % p);
    for (int r = rank + 1; r < rows; ++r) {
      const int f = m[r * cols + c];
      if (!f) continue;
      for (int k = c; k < cols; ++k)
        m[r * cols + k] = static_cast<std::uint8_t>((m[r * cols + k] + (p - f) * m[rank * cols + k]) % p);
    }
    ++rank;
  }
  return rank;
}

FpMatrix::FpMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (p < 2) throw std::invalid_argument("modulus must be a prime");
}

FpMatrix FpMatrix::identity(int n, int p) {
  FpMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.cols_ || a.p_ != b.p_) throw std::invalid_argument("vstack: shape mismatch");
  FpMatrix m(a.rows_ + b.rows_, a.cols_, a.p_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return m;
}

void FpMatrix::set(int r, int c, int value) {
  value %= p_;
  if (value < 0) value += p_;
  data_[static_cast<std::size_t>(r * cols_ + c)] = static_cast<std::uint8_t>(value);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product: shape mismatch");
  FpMatrix m(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int a = at(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j) m.set(i, j, m.at(i, j) + a * o.at(k, j));
    }
  return m;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix sum: shape mismatch");
  FpMatrix m(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = static_cast<std::uint8_t>((data_[i] + o.data_[i]) % p_);
  return m;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix m(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

FpMatrix FpMatrix::pow(int k) const {
  if (rows_ != cols_) throw std::invalid_argument("pow: matrix is not square");
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  FpMatrix r = identity(rows_, p_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

int FpMatrix::rank() const {
  std::vector<std::uint8_t> buf = data_;
  return fp_rank_inplace(buf.data(), rows_, cols_, p_);
}

FpMatrix FpMatrix::rref() const {
  FpMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int piv = rank;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (int k = 0; k < cols_; ++k) {
      const int t = m.at(piv, k);
      m.set(piv, k, m.at(rank, k));
      m.set(rank, k, t);
    }
    const int inv = fp_inverse(m.at(rank, c), p_);
    for (int k = 0; k < cols_; ++k) m.set(rank, k, m.at(rank, k) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      const int f = m.at(r, c);
      if (!f) continue;
      for (int k = 0; k < cols_; ++k) m.set(r, k, m.at(r, k) - f * m.at(rank, k));
    }
    ++rank;
  }
  FpMatrix out(rank, cols_, p_);
  std::copy(m.data_.begin(), m.data_.begin() + rank * cols_, out.data_.begin());
  return out;
}

FpMatrix FpMatrix::nullspace() const {
  const FpMatrix r = rref();
  std::vector<int> pivot_of_col(static_cast<std::size_t>(cols_), -1);
  for (int i = 0; i < r.rows(); ++i)
    for (int c = 0; c < cols_; ++c)
      if (r.at(i, c)) {
        pivot_of_col[static_cast<std::size_t>(c)] = i;
        break;
      }
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (pivot_of_col[static_cast<std::size_t>(c)] < 0) free_cols.push_back(c);
  FpMatrix basis(static_cast<int>(free_cols.size()), cols_, p_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int f = free_cols[k];
    basis.set(static_cast<int>(k), f, 1);
    for (int c = 0; c < cols_; ++c) {
      const int row = pivot_of_col[static_cast<std::size_t>(c)];
      if (row >= 0) basis.set(static_cast<int>(k), c, -r.at(row, f));
    }
  }
  return basis;
}

bool FpMatrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

}  // namespace jhall
