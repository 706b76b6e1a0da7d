#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace hsred {

// Row-compressed real symmetric matrix. Both triangles are stored and column
// indices are sorted within each row, which fixes the summation order of a
// matrix-vector product.
class SparseSymmetricMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    double value;
  };

  SparseSymmetricMatrix() : row_ptr_{0} {}
  explicit SparseSymmetricMatrix(std::size_t dim) : dim_(dim), row_ptr_(dim + 1, 0) {}

  // Rows are given as unsorted (col, value) lists; duplicates are summed and
  // explicit zeros are dropped.
  static SparseSymmetricMatrix from_rows(std::vector<std::vector<Entry>> rows);
  static SparseSymmetricMatrix from_dense(std::size_t dim, std::span<const double> row_major);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return vals_.size(); }
  bool is_zero() const noexcept { return vals_.empty(); }

  std::span<const std::uint32_t> row_cols(std::size_t row) const noexcept {
    return {cols_.data() + row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]};
  }
  std::span<const double> row_values(std::size_t row) const noexcept {
    return {vals_.data() + row_ptr_[row], row_ptr_[row + 1] - row_ptr_[row]};
  }

  double at(std::size_t row, std::size_t col) const noexcept;

  // y += alpha * A x
  void multiply_add(double alpha, std::span<const double> x, std::span<double> y) const noexcept;

  std::vector<double> diagonal() const;

  // Principal submatrix on `keep` (strictly increasing positions).
  SparseSymmetricMatrix principal_submatrix(std::span<const std::size_t> keep) const;

  // Largest |A(a,b) - A(b,a)| over stored entries.
  double max_asymmetry() const;

  // Coordinate text format: "dim nnz" header, then one "row col value" line per
  // stored entry (0-based, row-major order).
  void write_coordinate(std::ostream& os) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<double> vals_;
};

}  // namespace hsred
