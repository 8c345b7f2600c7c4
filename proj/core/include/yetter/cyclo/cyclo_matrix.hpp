#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "yetter/cyclo/cyclo_number.hpp"

namespace yetter::cyclo {

/// Sparse vector: row index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, CycloNumber>;

/// Sparse matrix over a cyclotomic field, stored column by column.
/// Zero entries are never stored.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols);

  static CycloMatrix identity(std::size_t n);
  static CycloMatrix from_columns(std::size_t rows, std::vector<SparseVector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  /// lcm of the conductors of all stored entries (1 for the zero matrix).
  int conductor() const;
  std::size_t nonzeros() const;

  CycloNumber at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, CycloNumber value);
  void add(std::size_t row, std::size_t col, const CycloNumber& value);

  const SparseVector& column(std::size_t col) const { return cols_[col]; }
  const std::vector<SparseVector>& columns() const { return cols_; }

  CycloMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> cols_;
};

/// Exact rank. The matrix is split into the connected components of its
/// row/column incidence graph and each block is row reduced with
/// sparsity-guided pivot choice.
std::size_t matrix_rank(const CycloMatrix& m);

/// Rank of the span of the given sparse vectors.
std::size_t rank_of_columns(const std::vector<SparseVector>& cols);

}  // namespace yetter::cyclo
