#ifndef LIEGROWTH_NCPOLY_HPP
#define LIEGROWTH_NCPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liegrowth/rational.hpp"
#include "liegrowth/word.hpp"

namespace liegrowth {

// Free-associative-algebra element: exact rational combination of words,
// terms kept in descending word order so the leading word is the first term.
class NcPoly {
 public:
  using Term = std::pair<Word, Rat>;

  explicit NcPoly(const Alphabet* alpha) : alpha_(alpha) {}
  static NcPoly zero(const Alphabet* alpha) { return NcPoly(alpha); }
  static NcPoly letter(const Alphabet* alpha, std::uint32_t id);
  static NcPoly from_word(Word w, Rat coeff = Rat(1));
  static NcPoly from_terms(const Alphabet* alpha, std::vector<Term> terms);  // normalizes

  const Alphabet* alphabet() const { return alpha_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  long degree() const;               // throws on zero
  const Word& leading_word() const;  // greatest word; throws on zero
  Rat coefficient(const Word& w) const;
  bool is_homogeneous() const;
  NcPoly homogeneous_component(long n) const;
  NcPoly leading_part() const;  // top-degree homogeneous component

  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator-() const;
  NcPoly operator*(const Rat& c) const;
  NcPoly& operator+=(const NcPoly& o) { return *this = *this + o; }
  NcPoly& operator-=(const NcPoly& o) { return *this = *this - o; }
  bool operator==(const NcPoly& o) const { return alpha_ == o.alpha_ && terms_ == o.terms_; }

  std::string to_string() const;  // canonical: descending words, explicit coefficients

 private:
  const Alphabet* alpha_;
  std::vector<Term> terms_;
};

NcPoly multiply(const NcPoly& a, const NcPoly& b);
NcPoly bracket(const NcPoly& a, const NcPoly& b);  // ab - ba

// Recursive bracket expansion of a commutator tree into A(X).
NcPoly expand(const BracketTree& tree);

struct not_lie_error : std::runtime_error {
  explicit not_lie_error(const Word& w)
      : std::runtime_error("element is not in the Lie subalgebra: leading word '" + w.to_string() +
                           "' is not an LS-word"),
        word(w.to_string()) {}
  std::string word;
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

// Coefficients c_w with e = sum c_w * expand([w]), LS-words descending.
// Triangular elimination against leading words; throws not_lie_error when a
// leading word fails the LS test (certifying e is not a Lie element).
std::vector<std::pair<Word, Rat>> ls_decompose(const NcPoly& e);

// An element of the free Lie algebra, stored expanded; elements built through
// this type (parser, bracket trees, LS combinations) are Lie by construction.
class LieElement {
 public:
  explicit LieElement(NcPoly p) : poly_(std::move(p)) {}
  static LieElement from_letter(const Alphabet* alpha, std::uint32_t id);
  static LieElement from_tree(const BracketTree& t, const Rat& coeff = Rat(1));
  static LieElement from_ls_combination(const Alphabet* alpha,
                                        const std::vector<std::pair<Word, Rat>>& combo);

  const NcPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  long degree() const { return poly_.degree(); }
  LieElement leading_part() const { return LieElement(poly_.leading_part()); }

  LieElement operator+(const LieElement& o) const { return LieElement(poly_ + o.poly_); }
  LieElement operator-(const LieElement& o) const { return LieElement(poly_ - o.poly_); }
  LieElement operator*(const Rat& c) const { return LieElement(poly_ * c); }

  // The bracket-basis view: "2*[x,[x,y]] + [[x,y],y]"; re-parseable.
  std::string to_lie_text() const;

 private:
  NcPoly poly_;
};

inline LieElement bracket(const LieElement& a, const LieElement& b) {
  return LieElement(bracket(a.poly(), b.poly()));
}

// Grammar: expr := ['-'] term (('+'|'-') term)*; term := [rational '*'] atom;
// atom := letter | '[' expr ',' expr ']'. Whitespace-insensitive.
LieElement parse_expression(const std::string& text, const Alphabet& alpha);

}  // namespace liegrowth

#endif
