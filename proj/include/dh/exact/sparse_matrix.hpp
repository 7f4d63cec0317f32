#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dh/exact/polynomial.hpp"

namespace dh::exact {

/// Sparse rows x cols matrix; zero entries are never stored.
template <class T>
class SparseMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Dense row-major initializer; zeros are dropped.
  static SparseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }
  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, T(1));
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] const std::map<Index, T>& entries() const { return entries_; }

  void set(std::size_t r, std::size_t c, T v) {
    check(r, c);
    if (coeff_is_zero(v))
      entries_.erase({r, c});
    else
      entries_[{r, c}] = std::move(v);
  }
  void add(std::size_t r, std::size_t c, const T& v) {
    check(r, c);
    if (coeff_is_zero(v)) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (coeff_is_zero(it->second)) entries_.erase(it);
    }
  }
  [[nodiscard]] T at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? T{} : it->second;
  }

  [[nodiscard]] std::vector<std::vector<T>> dense() const {
    std::vector<std::vector<T>> out(rows_, std::vector<T>(cols_));
    for (const auto& [rc, v] : entries_) out[rc.first][rc.second] = v;
    return out;
  }

  [[nodiscard]] std::vector<T> multiply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<T> y(rows_);
    for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
    return y;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Index, T> entries_;
};

}  // namespace dh::exact
