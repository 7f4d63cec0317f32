#include "dh/dpoly/text.hpp"

#include <cctype>
#include <sstream>

namespace dh::dpoly {

namespace {

class Parser {
 public:
  Parser(std::string_view text, unsigned n) : text_(text), n_(n) {}

  DiffPoly run() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    DiffPoly::Poly result;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      auto [m, c] = term();
      if (sign < 0) c = -c;
      result.add_term(m, c);
      skip();
      if (pos_ >= text_.size()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
    }
    skip();
    if (pos_ < text_.size()) throw ParseError("unexpected character", pos_);
    return DiffPoly(n_, std::move(result));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  unsigned long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    auto s = std::string(text_.substr(start, pos_ - start));
    if (s.size() > 9) throw ParseError("index or exponent too large", start);
    return std::stoul(s);
  }

  std::pair<DiffMonomial, Rational> term() {
    DiffMonomial m;
    Rational c(1);
    while (true) {
      skip();
      std::size_t start = pos_;
      if (peek() == 'x') {
        ++pos_;
        unsigned long i = number();
        if (i > n_) throw ParseError("variable index " + std::to_string(i) + " exceeds N=" + std::to_string(n_), start);
        unsigned long k = 0, e = 1;
        skip();
        if (peek() == '[') {
          ++pos_;
          k = number();
          skip();
          if (peek() != ']') throw ParseError("expected ']'", pos_);
          ++pos_;
        }
        skip();
        if (peek() == '^') {
          ++pos_;
          e = number();
        }
        m = m * DiffMonomial(VarRef{static_cast<unsigned>(i), static_cast<unsigned>(k)}, static_cast<unsigned>(e));
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t s0 = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        mpz_class num(std::string(text_.substr(s0, pos_ - s0)));
        mpz_class den = 1;
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          std::size_t s1 = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (s1 == pos_) throw ParseError("expected a denominator", s1);
          den = mpz_class(std::string(text_.substr(s1, pos_ - s1)));
          if (den == 0) throw ParseError("zero denominator", s1);
        }
        c *= Rational(mpq_class(num, den));
      } else {
        throw ParseError("expected a variable or a number", start);
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  std::string_view text_;
  unsigned n_;
  std::size_t pos_ = 0;
};

template <class C, class CoeffFmt>
std::string render(const BasicDiffPoly<C>& p, CoeffFmt fmt) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    auto [negative, text] = fmt(c);  // text empty means unit magnitude
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << (text.empty() ? "1" : text);
    } else {
      if (!text.empty()) os << text << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

}  // namespace

DiffPoly parse(std::string_view text, unsigned n) { return Parser(text, n).run(); }

std::string to_string(const DiffMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << 'x' << v.var;
    if (v.order) os << '[' << v.order << ']';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string to_string(const DiffPoly& p) {
  return render(p, [](const Rational& c) {
    Rational mag = c.sign() < 0 ? -c : c;
    return std::pair<bool, std::string>{c.sign() < 0, mag.is_one() ? "" : mag.to_string()};
  });
}

std::string to_string(const ParamDiffPoly& p) {
  return render(p, [](const ParamPoly& c) {
    if (c.is_constant()) {
      Rational v = c.constant_term();
      Rational mag = v.sign() < 0 ? -v : v;
      return std::pair<bool, std::string>{v.sign() < 0, mag.is_one() ? "" : mag.to_string()};
    }
    return std::pair<bool, std::string>{false, "(" + exact::to_string(c) + ")"};
  });
}

nlohmann::json to_json(const DiffPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [v, e] : m.factors()) mono.push_back({v.var, v.order, e});
    terms.push_back({{"coeff", c.to_string()}, {"monomial", mono}});
  }
  return {{"N", p.ambient()}, {"terms", terms}};
}

DiffPoly diff_poly_from_json(const nlohmann::json& j) {
  unsigned n = j.at("N").get<unsigned>();
  DiffPoly::Poly poly;
  for (const auto& t : j.at("terms")) {
    std::vector<DiffMonomial::Factor> factors;
    for (const auto& f : t.at("monomial")) {
      if (!f.is_array() || f.size() != 3) throw std::invalid_argument("monomial factor must be [i,k,e]");
      factors.emplace_back(VarRef{f[0].get<unsigned>(), f[1].get<unsigned>()}, f[2].get<unsigned>());
    }
    poly.add_term(DiffMonomial(std::move(factors)), Rational::parse(t.at("coeff").get<std::string>()));
  }
  return DiffPoly(n, std::move(poly));
}

}  // namespace dh::dpoly
