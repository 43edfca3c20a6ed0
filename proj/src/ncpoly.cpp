#include "liegrowth/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "liegrowth/lyndon.hpp"

namespace liegrowth {

namespace {
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return compare_words(a, b) == Ordering::Greater; }
};
}  // namespace

NcPoly NcPoly::letter(const Alphabet* alpha, std::uint32_t id) {
  return from_word(Word(alpha, {id}));
}

NcPoly NcPoly::from_word(Word w, Rat coeff) {
  NcPoly p(w.alphabet());
  if (coeff != 0) p.terms_.push_back({std::move(w), std::move(coeff)});
  return p;
}

NcPoly NcPoly::from_terms(const Alphabet* alpha, std::vector<Term> terms) {
  std::map<Word, Rat, WordGreater> acc;
  for (auto& [w, c] : terms) {
    if (w.alphabet() != alpha) throw std::invalid_argument("term over a different alphabet");
    acc[w] += c;
  }
  NcPoly p(alpha);
  for (auto& [w, c] : acc)
    if (c != 0) p.terms_.push_back({w, c});
  return p;
}

long NcPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero element");
  long d = terms_.front().first.degree();
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw std::domain_error("leading word of the zero element");
  return terms_.front().first;
}

Rat NcPoly::coefficient(const Word& w) const {
  for (const auto& [v, c] : terms_)
    if (v == w) return c;
  return Rat(0);
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.front().first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != d) return false;
  return true;
}

NcPoly NcPoly::homogeneous_component(long n) const {
  NcPoly p(alpha_);
  for (const auto& t : terms_)
    if (t.first.degree() == n) p.terms_.push_back(t);
  return p;
}

NcPoly NcPoly::leading_part() const {
  if (terms_.empty()) return *this;
  return homogeneous_component(degree());
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  if (alpha_ != o.alpha_) throw std::invalid_argument("mixing alphabets in addition");
  NcPoly out(alpha_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Ordering ord = compare_words(terms_[i].first, o.terms_[j].first);
    if (ord == Ordering::Greater) {
      out.terms_.push_back(terms_[i++]);
    } else if (ord == Ordering::Less) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Rat c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.terms_.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator-() const {
  NcPoly out(alpha_);
  out.terms_ = terms_;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NcPoly NcPoly::operator*(const Rat& c) const {
  if (c == 0) return NcPoly(alpha_);
  NcPoly out(alpha_);
  out.terms_ = terms_;
  for (auto& [w, k] : out.terms_) k *= c;
  return out;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (w.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += w.to_string();
    } else {
      out += rat_to_string(mag) + "*" + w.to_string();
    }
  }
  return out;
}

NcPoly multiply(const NcPoly& a, const NcPoly& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("mixing alphabets in multiplication");
  std::map<Word, Rat, WordGreater> acc;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) acc[u.concat(v)] += cu * cv;
  NcPoly out(a.alphabet());
  std::vector<NcPoly::Term> terms;
  for (auto& [w, c] : acc)
    if (c != 0) terms.push_back({w, c});
  return NcPoly::from_terms(a.alphabet(), std::move(terms));
}

NcPoly bracket(const NcPoly& a, const NcPoly& b) { return multiply(a, b) - multiply(b, a); }

NcPoly expand(const BracketTree& tree) {
  if (tree.is_leaf()) return NcPoly::from_word(tree.support());
  return bracket(expand(tree.left()), expand(tree.right()));
}

std::vector<std::pair<Word, Rat>> ls_decompose(const NcPoly& e) {
  std::vector<std::pair<Word, Rat>> combo;
  if (e.is_zero()) return combo;
  // peel homogeneous components independently, top degree first
  std::vector<long> degrees;
  for (const auto& [w, c] : e.terms()) degrees.push_back(w.degree());
  std::sort(degrees.begin(), degrees.end(), std::greater<long>());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (long n : degrees) {
    NcPoly comp = e.homogeneous_component(n);
    while (!comp.is_zero()) {
      const Word w = comp.leading_word();
      if (!is_ls_word(w)) throw not_lie_error(w);
      NcPoly basis = expand(standard_bracketing(w));
      // leading coefficient of an LS expansion is 1 on every case we have
      // checked; divide anyway so a non-unit would still decompose correctly
      Rat c = comp.coefficient(w) / basis.coefficient(w);
      combo.push_back({w, c});
      comp -= basis * c;
    }
  }
  std::sort(combo.begin(), combo.end(),
            [](const auto& a, const auto& b) { return compare_words(a.first, b.first) == Ordering::Greater; });
  return combo;
}

LieElement LieElement::from_letter(const Alphabet* alpha, std::uint32_t id) {
  return LieElement(NcPoly::letter(alpha, id));
}

LieElement LieElement::from_tree(const BracketTree& t, const Rat& coeff) {
  return LieElement(expand(t) * coeff);
}

LieElement LieElement::from_ls_combination(const Alphabet* alpha,
                                           const std::vector<std::pair<Word, Rat>>& combo) {
  NcPoly acc(alpha);
  for (const auto& [w, c] : combo) acc += expand(standard_bracketing(w)) * c;
  return LieElement(acc);
}

std::string LieElement::to_lie_text() const {
  if (poly_.is_zero()) return "0";
  auto combo = ls_decompose(poly_);
  std::string out;
  bool first = true;
  for (const auto& [w, c] : combo) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string atom = w.length() == 1 ? w.to_string() : standard_bracketing(w).to_string();
    out += mag == 1 ? atom : rat_to_string(mag) + "*" + atom;
  }
  return out;
}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const Alphabet& alpha) : text_(text), alpha_(alpha) {}

  NcPoly parse() {
    NcPoly e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  NcPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    }
    NcPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  NcPoly term() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Rat c = rational();
      expect('*');
      return atom() * c;
    }
    return atom();
  }

  Rat rational() {
    std::size_t start = pos_;
    std::string num = digits();
    if (peek('/')) {
      ++pos_;
      std::string den = digits();
      if (den == "0") throw parse_error("zero denominator", start);
      return Rat(Int(num)) / Rat(Int(den));
    }
    return Rat(Int(num));
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error("expected a number", pos_);
    return text_.substr(start, pos_ - start);
  }

  NcPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    if (text_[pos_] == '[') {
      ++pos_;
      NcPoly a = expr();
      expect(',');
      NcPoly b = expr();
      expect(']');
      return bracket(a, b);
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto id = alpha_.find(name);
      if (!id) throw parse_error("unknown letter '" + name + "'", start);
      return NcPoly::letter(&alpha_, *id);
    }
    throw parse_error("expected a letter or '['", pos_);
  }

  const std::string& text_;
  const Alphabet& alpha_;
  std::size_t pos_ = 0;
};

}  // namespace

LieElement parse_expression(const std::string& text, const Alphabet& alpha) {
  return LieElement(ExprParser(text, alpha).parse());
}

}  // namespace liegrowth
