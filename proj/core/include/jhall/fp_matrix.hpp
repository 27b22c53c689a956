#pragma once

#include <cstdint>
#include <vector>

namespace jhall {

/// Dense matrix over a small prime field F_p. Entries are kept reduced in
/// [0, p). Vectors are stored as rows.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, int p);

  static FpMatrix identity(int n, int p);
  /// Stacks the rows of a over the rows of b.
  static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] int prime() const { return p_; }

  [[nodiscard]] int at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  void set(int r, int c, int value);

  [[nodiscard]] FpMatrix operator*(const FpMatrix& o) const;
  [[nodiscard]] FpMatrix operator+(const FpMatrix& o) const;
  [[nodiscard]] FpMatrix transpose() const;
  [[nodiscard]] FpMatrix pow(int k) const;

  [[nodiscard]] int rank() const;
  /// Reduced row-echelon form with zero rows removed.
  [[nodiscard]] FpMatrix rref() const;
  /// Basis of {x : A x = 0}, one vector per row.
  [[nodiscard]] FpMatrix nullspace() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<std::uint8_t> data_;
};

int fp_inverse(int a, int p);

/// Rank of a row-major rows x cols buffer, destroyed in the process.
int fp_rank_inplace(std::uint8_t* data, int rows, int cols, int p);

}  // namespace jhall
