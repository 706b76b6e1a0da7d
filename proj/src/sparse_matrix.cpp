#include "hsred/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "hsred/error.hpp"

namespace hsred {

SparseSymmetricMatrix SparseSymmetricMatrix::from_rows(std::vector<std::vector<Entry>> rows) {
  SparseSymmetricMatrix m(rows.size());
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  m.cols_.reserve(total);
  m.vals_.reserve(total);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& r = rows[i];
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    for (std::size_t j = 0; j < r.size();) {
      const std::uint32_t col = r[j].col;
      if (col >= rows.size()) {
        throw Error(ErrorCode::out_of_range, "column index outside matrix dimension");
      }
      double v = 0.0;
      for (; j < r.size() && r[j].col == col; ++j) v += r[j].value;
      if (v != 0.0) {
        m.cols_.push_back(col);
        m.vals_.push_back(v);
      }
    }
    m.row_ptr_[i + 1] = m.cols_.size();
    r = {};
  }
  return m;
}

SparseSymmetricMatrix SparseSymmetricMatrix::from_dense(std::size_t dim,
                                                        std::span<const double> row_major) {
  if (row_major.size() != dim * dim) {
    throw Error(ErrorCode::length_mismatch, "dense input must hold dim*dim entries");
  }
  std::vector<std::vector<Entry>> rows(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (row_major[i * dim + j] != 0.0)
        rows[i].push_back({static_cast<std::uint32_t>(j), row_major[i * dim + j]});
  return from_rows(std::move(rows));
}

double SparseSymmetricMatrix::at(std::size_t row, std::size_t col) const noexcept {
  const auto cols = row_cols(row);
  const auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<std::uint32_t>(col));
  if (it == cols.end() || *it != col) return 0.0;
  return vals_[row_ptr_[row] + static_cast<std::size_t>(it - cols.begin())];
}

void SparseSymmetricMatrix::multiply_add(double alpha, std::span<const double> x,
                                         std::span<double> y) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) acc += vals_[p] * x[cols_[p]];
    y[i] += alpha * acc;
  }
}

std::vector<double> SparseSymmetricMatrix::diagonal() const {
  std::vector<double> d(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = at(i, i);
  return d;
}

SparseSymmetricMatrix SparseSymmetricMatrix::principal_submatrix(
    std::span<const std::size_t> keep) const {
  constexpr std::uint32_t dropped = ~std::uint32_t{0};
  std::vector<std::uint32_t> remap(dim_, dropped);
  for (std::size_t k = 0; k < keep.size(); ++k) remap[keep[k]] = static_cast<std::uint32_t>(k);

  SparseSymmetricMatrix m(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t i = keep[k];
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      const std::uint32_t c = remap[cols_[p]];
      if (c == dropped) continue;
      // keep is increasing, so remapped columns stay sorted
      m.cols_.push_back(c);
      m.vals_.push_back(vals_[p]);
    }
    m.row_ptr_[k + 1] = m.cols_.size();
  }
  return m;
}

double SparseSymmetricMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      worst = std::max(worst, std::abs(vals_[p] - at(cols_[p], i)));
    }
  }
  return worst;
}

void SparseSymmetricMatrix::write_coordinate(std::ostream& os) const {
  os << dim_ << ' ' << nnz() << '\n';
  char buf[64];
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      std::snprintf(buf, sizeof buf, "%.17g", vals_[p]);
      os << i << ' ' << cols_[p] << ' ' << buf << '\n';
    }
  }
}

}  // namespace hsred
