#include <doctest.h>

#include <algorithm>
#include <set>

#include "liegrowth/counting.hpp"
#include "liegrowth/lyndon.hpp"

using namespace liegrowth;

namespace {

const GradedAlphabet& binary() {
  static GradedAlphabet a({{"y", 1}, {"x", 1}});  // x > y
  return a;
}

Word W(const std::string& text) { return Word::parse(binary(), text); }

std::vector<Word> all_words(const GradedAlphabet& alpha, long degree) {
  std::vector<Word> out;
  std::vector<std::uint32_t> stack;
  std::function<void(long)> rec = [&](long remaining) {
    if (remaining == 0) {
      out.push_back(Word(&alpha, stack));
      return;
    }
    for (std::uint32_t id = 0; id < alpha.size(); ++id) {
      long d = alpha.degree_of(id);
      if (d <= remaining) {
        stack.push_back(id);
        rec(remaining - d);
        stack.pop_back();
      }
    }
  };
  rec(degree);
  return out;
}

// all ways to write w as a concatenation of nondecreasing LS factors
int count_nondecreasing_ls_factorizations(const Word& w) {
  int count = 0;
  std::vector<Word> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (from == w.length()) {
      ++count;
      return;
    }
    for (std::size_t len = 1; from + len <= w.length(); ++len) {
      Word factor = w.subword(from, len);
      if (!is_ls_word(factor)) continue;
      if (!current.empty() && word_greater(current.back(), factor)) continue;
      current.push_back(factor);
      rec(from + len);
      current.pop_back();
    }
  };
  rec(0);
  return count;
}

// conditions (a) and (b) of the LS-commutator definition
bool is_ls_commutator(const BracketTree& t) {
  if (t.is_leaf()) return true;
  if (!is_ls_word(t.support())) return false;
  const BracketTree& c1 = t.left();
  const BracketTree& c2 = t.right();
  if (!is_ls_commutator(c1) || !is_ls_commutator(c2)) return false;
  if (!word_greater(c1.support(), c2.support())) return false;  // (a)
  if (!c1.is_leaf()) {
    if (word_greater(c1.right().support(), c2.support())) return false;  // (b)
  }
  return true;
}

}  // namespace

TEST_CASE("prefix-greater lexicographic order") {
  CHECK(compare_words(W("x"), W("xy")) == Ordering::Greater);  // prefix wins
  CHECK(compare_words(W("xy"), W("x")) == Ordering::Less);
  CHECK(compare_words(W("xy"), W("yx")) == Ordering::Greater);
  CHECK(compare_words(W("xxy"), W("xyx")) == Ordering::Greater);
  CHECK(compare_words(W("xy"), W("xy")) == Ordering::Equal);

  GradedAlphabet other({{"y", 1}, {"x", 1}});
  CHECK_THROWS_AS(compare_words(W("x"), Word::parse(other, "x")), std::invalid_argument);
}

TEST_CASE("LS recognition") {
  CHECK(is_ls_word(W("xy")));
  CHECK_FALSE(is_ls_word(W("xx")));   // rotation equals the word
  CHECK_FALSE(is_ls_word(W("xyx")));  // rotation xxy is larger
  CHECK(is_ls_word(W("x")));
  CHECK_THROWS_AS(is_ls_word(Word(&binary(), {})), std::invalid_argument);
}

TEST_CASE("LS generation, binary") {
  auto deg3 = generate_ls_words(binary(), 3);
  REQUIRE(deg3.size() == 2);
  CHECK(deg3[0].to_string() == "xxy");
  CHECK(deg3[1].to_string() == "xyy");

  auto deg1 = generate_ls_words(binary(), 1);
  REQUIRE(deg1.size() == 2);
  CHECK(deg1[0].to_string() == "x");
  CHECK(deg1[1].to_string() == "y");
}

TEST_CASE("LS generation, graded alphabet") {
  GradedAlphabet alpha({{"u", 2}, {"x", 1}});  // x > u
  auto words = generate_ls_words(alpha, 5);
  REQUIRE(words.size() == 2);
  CHECK(words[0].to_string() == "xxxu");
  CHECK(words[1].to_string() == "xuu");
}

TEST_CASE("filter and streaming generators agree on overlap") {
  for (long n = 12; n <= 16; ++n) {
    auto filtered = detail::ls_words_by_filter(binary(), n);
    auto streamed = detail::ls_words_by_duval(binary(), n);
    REQUIRE(filtered.size() == streamed.size());
    for (std::size_t i = 0; i < filtered.size(); ++i) CHECK(filtered[i] == streamed[i]);
  }
}

TEST_CASE("generation is descending and matches Witt dimensions") {
  for (long n = 1; n <= 14; ++n) {
    auto words = generate_ls_words(binary(), n);
    CHECK(Int(static_cast<long>(words.size())) == witt_dimension(2, n));
    for (std::size_t i = 0; i + 1 < words.size(); ++i) CHECK(word_greater(words[i], words[i + 1]));
  }
  GradedAlphabet ternary({{"z", 1}, {"y", 1}, {"x", 1}});
  for (long n = 1; n <= 11; ++n)
    CHECK(Int(static_cast<long>(generate_ls_words(ternary, n).size())) == witt_dimension(3, n));
}

TEST_CASE("CFL factorization") {
  auto f1 = cfl_factorize(W("xy"));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].to_string() == "xy");

  auto f2 = cfl_factorize(W("yx"));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].to_string() == "y");
  CHECK(f2[1].to_string() == "x");

  auto f3 = cfl_factorize(W("xyxxy"));
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].to_string() == "xy");
  CHECK(f3[1].to_string() == "xxy");

  CHECK_THROWS_AS(cfl_factorize(Word(&binary(), {})), std::invalid_argument);
}

TEST_CASE("CFL properties on all short binary words") {
  for (long n = 1; n <= 10; ++n) {
    for (const Word& w : all_words(binary(), n)) {
      auto factors = cfl_factorize(w);
      Word glued(&binary(), {});
      for (const auto& f : factors) {
        CHECK(is_ls_word(f));
        glued = glued.concat(f);
      }
      CHECK(glued == w);
      for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        CHECK_FALSE(word_greater(factors[i], factors[i + 1]));  // nondecreasing
    }
  }
  // uniqueness by exhaustive search
  for (long n = 1; n <= 7; ++n)
    for (const Word& w : all_words(binary(), n))
      CHECK(count_nondecreasing_ls_factorizations(w) == 1);
}

TEST_CASE("rotation classes contain exactly one LS word when aperiodic") {
  for (long n = 1; n <= 10; ++n) {
    std::set<std::string> seen;
    for (const Word& w : all_words(binary(), n)) {
      if (seen.count(w.to_string())) continue;
      std::set<std::string> cls;
      int ls_count = 0;
      for (std::size_t r = 0; r < w.length(); ++r) {
        Word rot = w.subword(r, w.length() - r).concat(w.subword(0, r));
        cls.insert(rot.to_string());
        if (is_ls_word(rot)) ++ls_count;
      }
      bool aperiodic = cls.size() == w.length();
      CHECK(ls_count == (aperiodic ? 1 : 0));
      for (const auto& s : cls) seen.insert(s);
    }
  }
}

TEST_CASE("standard bracketing") {
  CHECK(standard_bracketing(W("xy")).to_string() == "[x,y]");
  CHECK(standard_bracketing(W("xxy")).to_string() == "[x,[x,y]]");
  CHECK(standard_bracketing(W("xyy")).to_string() == "[[x,y],y]");
  CHECK_THROWS_AS(standard_bracketing(W("yx")), std::invalid_argument);
}

TEST_CASE("bracketing satisfies the LS-commutator conditions") {
  for (long n = 1; n <= 8; ++n) {
    for (const Word& w : generate_ls_words(binary(), n)) {
      BracketTree t = standard_bracketing(w);
      CHECK(t.support() == w);
      CHECK(is_ls_commutator(t));
    }
  }
}

TEST_CASE("word parsing and serialization") {
  CHECK(W("xxy").to_string() == "xxy");
  GradedAlphabet named({{"aa", 1}, {"bb", 2}});
  Word w = Word::parse(named, "bb.aa.bb");
  CHECK(w.degree() == 5);
  CHECK(w.to_string() == "bb.aa.bb");
  CHECK_THROWS_AS(Word::parse(named, "cc"), std::invalid_argument);
}
