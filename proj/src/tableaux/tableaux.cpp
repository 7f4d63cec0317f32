#include "dh/tableaux/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dh::tableaux {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::conjugate() const {
  std::vector<unsigned> cols(parts_.empty() ? 0 : parts_[0], 0);
  for (unsigned p : parts_)
    for (unsigned c = 0; c < p; ++c) ++cols[c];
  return Partition(cols);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

namespace {

void partitions_rec(unsigned remaining, unsigned cap, std::optional<unsigned> max_parts, std::vector<unsigned>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_parts && cur.size() == *max_parts) return;
  for (unsigned p = std::min(cap, remaining); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned d, std::optional<unsigned> max_parts) {
  if (d == 0) throw std::invalid_argument("partitions_of needs d >= 1");
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  partitions_rec(d, d, max_parts, cur, out);
  return out;
}

Tableau::Tableau(Partition s, std::vector<unsigned> f) : shape(std::move(s)), filling(std::move(f)) {
  if (filling.size() != shape.size()) throw std::invalid_argument("filling length differs from the shape size");
}

Tableau Tableau::from_rows(const std::vector<std::vector<unsigned>>& rows) {
  std::vector<unsigned> parts, filling;
  for (const auto& r : rows) {
    parts.push_back(static_cast<unsigned>(r.size()));
    filling.insert(filling.end(), r.begin(), r.end());
  }
  return Tableau(Partition(parts), filling);
}

unsigned Tableau::at(std::size_t row, std::size_t col) const {
  if (row >= shape.length() || col >= shape[row]) throw std::out_of_range("cell outside the diagram");
  std::size_t offset = 0;
  for (std::size_t r = 0; r < row; ++r) offset += shape[r];
  return filling[offset + col];
}

std::vector<std::vector<unsigned>> Tableau::rows() const {
  std::vector<std::vector<unsigned>> out;
  std::size_t offset = 0;
  for (unsigned p : shape.parts()) {
    out.emplace_back(filling.begin() + static_cast<long>(offset), filling.begin() + static_cast<long>(offset + p));
    offset += p;
  }
  return out;
}

std::vector<std::vector<unsigned>> Tableau::columns() const {
  auto r = rows();
  std::vector<std::vector<unsigned>> out(r.empty() ? 0 : r[0].size());
  for (const auto& row : r)
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  return out;
}

bool Tableau::is_semistandard() const {
  auto r = rows();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t c = 0; c < r[i].size(); ++c) {
      if (c > 0 && r[i][c] < r[i][c - 1]) return false;
      if (i > 0 && r[i][c] <= r[i - 1][c]) return false;
    }
  return true;
}

bool Tableau::is_standard() const {
  std::vector<unsigned> sorted = filling;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i + 1) return false;
  return is_semistandard();
}

std::string Tableau::to_string() const {
  std::ostringstream out;
  out << '[';
  auto r = rows();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out << ';';
    for (std::size_t c = 0; c < r[i].size(); ++c) out << (c ? " " : "") << r[i][c];
  }
  out << ']';
  return out.str();
}

Tableau canonical_tableau(const Partition& lambda) {
  std::vector<unsigned> f(lambda.size());
  std::iota(f.begin(), f.end(), 1u);
  return Tableau(lambda, f);
}

namespace {

// Row-major cell positions with the row-start offsets.
std::vector<std::size_t> row_offsets(const Partition& lambda) {
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (unsigned p : lambda.parts()) {
    off.push_back(o);
    o += p;
  }
  return off;
}

struct SemistandardFill {
  const Partition& shape;
  std::vector<std::size_t> offsets;
  unsigned lo, hi;
  std::vector<unsigned>* remaining;  // content still to place, indexed by value - lo
  const std::function<void(const Tableau&)>& visit;
  std::vector<unsigned> filling;

  void run(std::size_t row, std::size_t col) {
    if (row == shape.length()) {
      visit(Tableau(shape, filling));
      return;
    }
    if (col == shape[row]) {
      run(row + 1, 0);
      return;
    }
    unsigned min = lo;
    if (col > 0) min = std::max(min, filling[offsets[row] + col - 1]);
    if (row > 0) min = std::max(min, filling[offsets[row - 1] + col] + 1);
    // the rest of this column needs distinct larger values
    unsigned below = 0;
    for (std::size_t r = row + 1; r < shape.length() && shape[r] > col; ++r) ++below;
    for (unsigned v = min; v + below <= hi; ++v) {
      if (remaining) {
        if ((*remaining)[v - lo] == 0) continue;
        --(*remaining)[v - lo];
      }
      filling[offsets[row] + col] = v;
      run(row, col + 1);
      if (remaining) ++(*remaining)[v - lo];
    }
  }
};

}  // namespace

void for_each_semistandard(const Partition& lambda, unsigned lo, unsigned hi,
                           const std::function<void(const Tableau&)>& visit) {
  if (hi < lo) {
    if (lambda.size() == 0) visit(Tableau(lambda, {}));
    return;
  }
  SemistandardFill fill{lambda, row_offsets(lambda), lo, hi, nullptr, visit, std::vector<unsigned>(lambda.size())};
  fill.run(0, 0);
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, unsigned lo, unsigned hi) {
  std::vector<Tableau> out;
  for_each_semistandard(lambda, lo, hi, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const unsigned d = lambda.size();
  std::vector<unsigned> ones(d, 1);
  std::vector<Tableau> out;
  std::function<void(const Tableau&)> visit = [&](const Tableau& t) { out.push_back(t); };
  SemistandardFill fill{lambda, row_offsets(lambda), 1, d, &ones, visit, std::vector<unsigned>(d)};
  fill.run(0, 0);
  return out;
}

mpz_class count_standard(const Partition& lambda) {
  // Removing the cell holding the largest entry leaves a standard tableau of
  // a smaller shape; count along these chains with a memo on shapes.
  std::map<std::vector<unsigned>, mpz_class> memo;
  std::function<mpz_class(const std::vector<unsigned>&)> count = [&](const std::vector<unsigned>& parts) -> mpz_class {
    if (parts.empty()) return 1;
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
    mpz_class total = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
      bool corner = r + 1 == parts.size() || parts[r + 1] < parts[r];
      if (!corner) continue;
      std::vector<unsigned> smaller = parts;
      if (--smaller[r] == 0) smaller.pop_back();
      total += count(smaller);
    }
    return memo[parts] = total;
  };
  return count(lambda.parts());
}

mpz_class count_semistandard(const Partition& lambda, unsigned n) {
  if (n == 0) throw std::invalid_argument("count_semistandard needs n >= 1");
  mpz_class total = 0;
  for_each_semistandard(lambda, 1, n, [&](const Tableau&) { ++total; });
  return total;
}

mpz_class kostka(const Partition& lambda, const std::vector<unsigned>& content) {
  if (std::accumulate(content.begin(), content.end(), 0u) != lambda.size())
    throw std::invalid_argument("content size differs from |lambda|");
  if (content.empty()) return 1;
  mpz_class total = 0;
  std::vector<unsigned> remaining = content;
  std::function<void(const Tableau&)> visit = [&](const Tableau&) { ++total; };
  SemistandardFill fill{lambda, row_offsets(lambda), 1, static_cast<unsigned>(content.size()), &remaining, visit,
                        std::vector<unsigned>(lambda.size())};
  fill.run(0, 0);
  return total;
}

Rational schur_poly_eval(const Partition& lambda, const std::vector<Rational>& x) {
  Rational total;
  if (x.empty()) return lambda.size() == 0 ? Rational(1) : Rational(0);
  for_each_semistandard(lambda, 1, static_cast<unsigned>(x.size()), [&](const Tableau& t) {
    Rational term(1);
    for (unsigned v : t.filling) term *= x[v - 1];
    total += term;
  });
  return total;
}

mpz_class hook_length_count(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  mpz_class hooks = 1;
  for (std::size_t r = 0; r < lambda.length(); ++r)
    for (std::size_t c = 0; c < lambda[r]; ++c) hooks *= (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
  return exact::factorial(lambda.size()) / hooks;
}

}  // namespace dh::tableaux
