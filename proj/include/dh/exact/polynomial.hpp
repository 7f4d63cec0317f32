#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dh/exact/rational.hpp"

namespace dh::exact {

/// Sparse monomial over an ordered variable type. Factors are kept sorted by
/// `Var::operator<`, which ranks variables from most to least significant.
/// Monomials are compared lexicographically on exponent vectors taken in that
/// variable order, which is a monomial order (compatible with products).
template <class Var>
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(Var v, unsigned e = 1) {
    if (e) factors_.emplace_back(std::move(v), e);
  }
  /// Factors may come in any order and with repeats; zero exponents dropped.
  explicit Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& f : factors) {
      if (f.second == 0) continue;
      if (!factors_.empty() && !(factors_.back().first < f.first))
        factors_.back().second += f.second;
      else
        factors_.push_back(std::move(f));
    }
  }

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }
  [[nodiscard]] unsigned exponent(const Var& v) const {
    for (const auto& f : factors_)
      if (!(f.first < v) && !(v < f.first)) return f.second;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first < j->first) {
        r.factors_.push_back(*i++);
      } else if (j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
  }

  /// a / b when b divides a.
  friend std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors_.begin();
    for (const auto& f : b.factors_) {
      while (i != a.factors_.end() && i->first < f.first) r.factors_.push_back(*i++);
      if (i == a.factors_.end() || f.first < i->first || i->second < f.second)
        return std::nullopt;
      if (i->second > f.second) r.factors_.emplace_back(i->first, i->second - f.second);
      ++i;
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    return r;
  }

  /// Strictly greater in the lex monomial order.
  friend bool lex_greater(const Monomial& a, const Monomial& b) {
    std::size_t n = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t p = 0; p < n; ++p) {
      const auto& fa = a.factors_[p];
      const auto& fb = b.factors_[p];
      if (fa.first < fb.first) return true;
      if (fb.first < fa.first) return false;
      if (fa.second != fb.second) return fa.second > fb.second;
    }
    return a.factors_.size() > b.factors_.size();
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Map comparator: larger monomials first.
  struct Descending {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_greater(a, b); }
  };

 private:
  std::vector<Factor> factors_;
};

template <class C>
bool coeff_is_zero(const C& c) {
  return c.is_zero();
}

/// Sparse multivariate polynomial: terms keyed by monomial, leading
/// (lex-largest) term first. No zero coefficients are stored.
template <class Mono, class Coeff>
class Polynomial {
 public:
  using monomial_type = Mono;
  using coeff_type = Coeff;
  using Terms = std::map<Mono, Coeff, typename Mono::Descending>;

  Polynomial() = default;
  Polynomial(Coeff c) {  // NOLINT(google-explicit-constructor)
    if (!coeff_is_zero(c)) terms_.emplace(Mono{}, std::move(c));
  }
  Polynomial(Mono m, Coeff c) {
    if (!coeff_is_zero(c)) terms_.emplace(std::move(m), std::move(c));
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  [[nodiscard]] Coeff constant_term() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Coeff{} : it->second;
  }
  [[nodiscard]] Coeff coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{} : it->second;
  }
  [[nodiscard]] const std::pair<const Mono, Coeff>& leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.begin();
  }

  void add_term(const Mono& m, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (coeff_is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  [[nodiscard]] Polynomial scaled(const Coeff& s) const {
    Polynomial r = *this;
    r *= s;
    return r;
  }
  [[nodiscard]] Polynomial times_monomial(const Mono& m) const {
    Polynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }
  [[nodiscard]] Polynomial pow(unsigned e) const {
    Polynomial r(Coeff(1));
    Polynomial base = *this;
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

  /// Exact quotient a / b; throws std::domain_error if b does not divide a.
  /// Requires a coefficient field.
  friend Polynomial divide_exact(Polynomial a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial q;
    const auto& [lm, lc] = b.leading();
    while (!a.is_zero()) {
      const auto& [am, ac] = a.leading();
      auto m = divide(am, lm);
      if (!m) throw std::domain_error("inexact polynomial division");
      Coeff c = ac / lc;
      Polynomial t(*m, c);
      q += t;
      a -= b * t;
    }
    return q;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_.size() == b.terms_.size() && std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Terms terms_;
};

}  // namespace dh::exact
