#include "dh/exact/linalg.hpp"

#include <algorithm>
#include <limits>

namespace dh::exact {

namespace {

// r - f * p, both sorted by column.
SparseRow axpy(const SparseRow& r, const Rational& f, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  auto i = r.begin();
  auto j = p.begin();
  while (i != r.end() || j != p.end()) {
    if (j == p.end() || (i != r.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == r.end() || j->first < i->first) {
      out.emplace_back(j->first, -(f * j->second));
      ++j;
    } else {
      Rational v = i->second - f * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational entry(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : Rational{};
}

std::vector<SparseRow> to_rows(const SparseMatrix<Rational>& m) {
  std::vector<SparseRow> rows(m.rows());
  for (const auto& [rc, v] : m.entries()) rows[rc.first].emplace_back(rc.second, v);
  return rows;  // std::map iteration keeps each row sorted by column
}

}  // namespace

EchelonForm row_reduce(std::vector<SparseRow> rows, std::size_t cols) {
  struct Pending {
    std::size_t index;
    SparseRow row;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) pending.push_back({i, std::move(rows[i])});

  EchelonForm ef;
  ef.cols = cols;
  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pending.size(); ++i) {
      const auto& a = pending[i];
      const auto& b = pending[best];
      std::size_t la = a.row.front().first, lb = b.row.front().first;
      if (la != lb) {
        if (la < lb) best = i;
      } else if (a.row.size() != b.row.size()) {
        if (a.row.size() < b.row.size()) best = i;
      } else if (a.index < b.index) {
        best = i;
      }
    }
    SparseRow pivot = std::move(pending[best].row);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const std::size_t col = pivot.front().first;
    Rational inv = pivot.front().second.inverse();
    for (auto& [c, v] : pivot) v *= inv;

    std::vector<Pending> next;
    next.reserve(pending.size());
    for (auto& p : pending) {
      if (p.row.front().first == col) {
        Rational f = p.row.front().second;
        p.row = axpy(p.row, f, pivot);
      }
      if (!p.row.empty()) next.push_back(std::move(p));
    }
    pending = std::move(next);

    for (auto& done : ef.rows) {
      Rational f = entry(done, col);
      if (!f.is_zero()) done = axpy(done, f, pivot);
    }
    ef.rows.push_back(std::move(pivot));
    ef.pivot_cols.push_back(col);
  }
  // Pivot columns are discovered in increasing order; keep rows aligned.
  return ef;
}

EchelonForm row_reduce(const SparseMatrix<Rational>& m) { return row_reduce(to_rows(m), m.cols()); }

std::size_t rank(const SparseMatrix<Rational>& m) { return row_reduce(m).rows.size(); }

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t cols) {
  return row_reduce(rows, cols).rows.size();
}

std::vector<Vector> nullspace_basis(const std::vector<SparseRow>& rows, std::size_t cols) {
  EchelonForm ef = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ef.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < ef.rows.size(); ++r) v[ef.pivot_cols[r]] = -entry(ef.rows[r], f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> nullspace_basis(const SparseMatrix<Rational>& m) {
  return nullspace_basis(to_rows(m), m.cols());
}

std::optional<Vector> solve(const SparseMatrix<Rational>& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  auto rows = to_rows(m);
  const std::size_t aug = m.cols();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!b[r].is_zero()) rows[r].emplace_back(aug, b[r]);
  EchelonForm ef = row_reduce(std::move(rows), aug + 1);
  Vector x(m.cols());
  for (std::size_t r = 0; r < ef.rows.size(); ++r) {
    if (ef.pivot_cols[r] == aug) return std::nullopt;
    x[ef.pivot_cols[r]] = entry(ef.rows[r], aug);
  }
  return x;
}

std::size_t intersection_dim(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b,
                             std::size_t cols) {
  std::vector<SparseRow> both(a);
  both.insert(both.end(), b.begin(), b.end());
  return rank(a, cols) + rank(b, cols) - rank(both, cols);
}

ParamPoly det(const SparseMatrix<ParamPoly>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return det_bareiss(m.dense());
}

}  // namespace dh::exact
