// Copyright 2026 The Strategem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STRATEGEM_MATRIX_H_
#define STRATEGEM_MATRIX_H_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "strategem/error.h"
#include "strategem/interval.h"

namespace strategem {

// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Throws DimensionError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) {
        throw Error(ErrorKind::kDimension, "ragged matrix rows");
      }
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  // Copy keeping only the listed rows and columns, in the given order.
  Matrix select(const std::vector<std::size_t>& keep_rows,
                const std::vector<std::size_t>& keep_cols) const {
    Matrix out(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
      for (std::size_t j = 0; j < keep_cols.size(); ++j)
        out(i, j) = (*this)(keep_rows[i], keep_cols[j]);
    return out;
  }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Game board: rows are assets (maximizer), columns are threats (minimizer).
template <typename T>
struct LabeledMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Matrix<T> entries;

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }

  std::optional<std::size_t> row_index(const std::string& label) const {
    return index_of(row_labels, label);
  }
  std::optional<std::size_t> col_index(const std::string& label) const {
    return index_of(col_labels, label);
  }

  const T& at(std::size_t r, std::size_t c) const { return entries(r, c); }

  // Throws DimensionError / LabelError when labels and entries disagree.
  void check_shape() const {
    if (entries.rows() != row_labels.size() ||
        entries.cols() != col_labels.size()) {
      throw Error(ErrorKind::kDimension,
                  "payoff matrix shape does not match its labels");
    }
    for (const auto* labels : {&row_labels, &col_labels}) {
      std::unordered_set<std::string> seen;
      for (const auto& l : *labels) {
        if (!seen.insert(l).second) {
          throw Error(ErrorKind::kLabel, "duplicate label '" + l + "'", l);
        }
      }
    }
  }

  LabeledMatrix select(const std::vector<std::size_t>& keep_rows,
                       const std::vector<std::size_t>& keep_cols) const {
    LabeledMatrix out;
    for (auto r : keep_rows) out.row_labels.push_back(row_labels[r]);
    for (auto c : keep_cols) out.col_labels.push_back(col_labels[c]);
    out.entries = entries.select(keep_rows, keep_cols);
    return out;
  }

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

 private:
  static std::optional<std::size_t> index_of(const std::vector<std::string>& v,
                                             const std::string& label) {
    auto it = std::find(v.begin(), v.end(), label);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }
};

using PayoffMatrix = LabeledMatrix<double>;
using IntervalPayoffMatrix = LabeledMatrix<Interval>;

inline PayoffMatrix make_payoff_matrix(std::vector<std::string> rows,
                                       std::vector<std::string> cols,
                                       const std::vector<std::vector<double>>& entries) {
  PayoffMatrix m{std::move(rows), std::move(cols),
                 Matrix<double>::from_rows(entries)};
  m.check_shape();
  return m;
}

}  // namespace strategem

#endif  // STRATEGEM_MATRIX_H_
