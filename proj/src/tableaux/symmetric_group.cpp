#include "dh/tableaux/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dh::tableaux {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("images do not form a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<unsigned> im(d);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(im);
}

Permutation Permutation::from_one_based(const std::vector<unsigned>& images) {
  std::vector<unsigned> im;
  for (unsigned v : images) {
    if (v == 0) throw std::invalid_argument("one-based image 0");
    im.push_back(v - 1);
  }
  return Permutation(im);
}

Permutation Permutation::from_cycles(std::size_t d, const std::vector<std::vector<unsigned>>& cycles) {
  Permutation out = identity(d);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<unsigned> im(d);
    std::iota(im.begin(), im.end(), 0u);
    for (std::size_t k = 0; k < it->size(); ++k) {
      unsigned from = (*it)[k], to = (*it)[(k + 1) % it->size()];
      if (from == 0 || from > d || to == 0 || to > d) throw std::invalid_argument("cycle entry out of range");
      im[from - 1] = to - 1;
    }
    out = Permutation(im) * out;
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(inv);
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) out << (i ? " " : "") << images_[i] + 1;
  out << ']';
  return out.str();
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("permutations of different degree");
  std::vector<unsigned> im(s.degree());
  for (unsigned i = 0; i < im.size(); ++i) im[i] = s(t(i));
  return Permutation(im);
}

std::vector<Permutation> all_permutations(std::size_t d) {
  std::vector<unsigned> im(d);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<Permutation> out;
  do out.emplace_back(im);
  while (std::next_permutation(im.begin(), im.end()));
  return out;
}

GroupAlgebraElem GroupAlgebraElem::of(const Permutation& p, const Rational& c) {
  GroupAlgebraElem e(p.degree());
  e.add(p, c);
  return e;
}

void GroupAlgebraElem::check(const Permutation& p) const {
  if (p.degree() != d_) throw std::invalid_argument("permutation degree differs from the group algebra");
}

Rational GroupAlgebraElem::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElem::add(const Permutation& p, const Rational& c) {
  check(p);
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElem GroupAlgebraElem::scaled(const Rational& c) const {
  GroupAlgebraElem out(d_);
  if (c.is_zero()) return out;
  for (const auto& [p, v] : terms_) out.terms_.emplace(p, v * c);
  return out;
}

GroupAlgebraElem operator+(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("group algebra elements of different degree");
  GroupAlgebraElem out = a;
  for (const auto& [p, c] : b.terms_) out.add(p, c);
  return out;
}

GroupAlgebraElem operator-(const GroupAlgebraElem& a, const GroupAlgebraElem& b) { return a + b.scaled(Rational(-1)); }

GroupAlgebraElem group_algebra_mul(const GroupAlgebraElem& u, const GroupAlgebraElem& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("group algebra elements of different degree");
  GroupAlgebraElem out(u.degree());
  for (const auto& [s, a] : u.terms())
    for (const auto& [t, b] : v.terms()) out.add(s * t, a * b);
  return out;
}

namespace {

void require_standard(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("tableau is not standard: " + t.to_string());
}

// All permutations of 1..d that map each block into itself.
std::vector<Permutation> block_group(std::size_t d, const std::vector<std::vector<unsigned>>& blocks) {
  std::vector<std::vector<unsigned>> partial{std::vector<unsigned>(d)};
  std::iota(partial[0].begin(), partial[0].end(), 0u);
  for (const auto& block : blocks) {
    std::vector<unsigned> targets = block;
    std::sort(targets.begin(), targets.end());
    std::vector<std::vector<unsigned>> next;
    for (const auto& im : partial) {
      std::vector<unsigned> perm = targets;
      do {
        std::vector<unsigned> ext = im;
        for (std::size_t k = 0; k < targets.size(); ++k) ext[targets[k] - 1] = perm[k] - 1;
        next.push_back(std::move(ext));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    partial = std::move(next);
  }
  std::vector<Permutation> out;
  for (auto& im : partial) out.emplace_back(std::move(im));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Permutation> row_group(const Tableau& t) { return block_group(t.filling.size(), t.rows()); }
std::vector<Permutation> column_group(const Tableau& t) { return block_group(t.filling.size(), t.columns()); }

GroupAlgebraElem row_symmetrizer(const Tableau& t) {
  require_standard(t);
  GroupAlgebraElem a(t.filling.size());
  for (const auto& p : row_group(t)) a.add(p, Rational(1));
  return a;
}

GroupAlgebraElem column_antisymmetrizer(const Tableau& t) {
  require_standard(t);
  GroupAlgebraElem b(t.filling.size());
  for (const auto& q : column_group(t)) b.add(q, Rational(q.sign()));
  return b;
}

GroupAlgebraElem young_symmetrizer(const Tableau& t) { return column_antisymmetrizer(t) * row_symmetrizer(t); }

Tableau relabel(const Permutation& sigma, const Tableau& t) {
  Tableau out = t;
  for (auto& v : out.filling) {
    if (v == 0 || v > sigma.degree()) throw std::invalid_argument("tableau entry outside 1..d");
    v = sigma(v - 1) + 1;
  }
  return out;
}

}  // namespace dh::tableaux
