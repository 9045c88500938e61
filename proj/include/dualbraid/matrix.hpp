#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace dualbraid {

using Int = mpz_class;
using Rat = mpq_class;

/// "3/4", or just "3" when the denominator is 1.
std::string rat_to_string(const Rat& x);

/// Dense matrix over exact rationals. All rank/solve/kernel computations are
/// plain Gaussian elimination over Q; nothing here ever touches floating
/// point.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& o) const = default;

  int rank() const;
  Rat det() const;
  /// Reduced row echelon form; pivot count reported through `rank`.
  QMatrix rref(int* rank = nullptr) const;
  /// Basis of the right kernel {x : Ax = 0}.
  std::vector<std::vector<Rat>> kernel_basis() const;
  /// Unique solution of Ax = b when the columns are independent; nullopt if b
  /// is outside the column span. Requires rank == cols.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  QMatrix inverse() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Incremental row reducer: feed sparse rows, read off the rank. Used for the
/// spans that live in huge ambient spaces (tensor words, flags) where a dense
/// matrix would be wasteful.
class SparseRank {
 public:
  /// Row entries must be sorted by column and nonzero.
  /// Returns true when the row was independent of those seen so far.
  bool add_row(std::vector<std::pair<long, Rat>> row);
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::vector<std::vector<std::pair<long, Rat>>> pivots_;  // leading col ascending
};

}  // namespace dualbraid
