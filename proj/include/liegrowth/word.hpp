#ifndef LIEGROWTH_WORD_HPP
#define LIEGROWTH_WORD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "liegrowth/alphabet.hpp"

namespace liegrowth {

// Immutable word over a fixed alphabet; degree is cached at construction.
class Word {
 public:
  Word(const Alphabet* alpha, std::vector<std::uint32_t> letters);

  static Word parse(const Alphabet& alpha, const std::string& text);

  const Alphabet* alphabet() const { return alpha_; }
  const std::vector<std::uint32_t>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  long degree() const { return degree_; }

  Word concat(const Word& other) const;
  Word subword(std::size_t from, std::size_t len) const;

  // Letter names, '.'-separated when the alphabet has multi-character names.
  std::string to_string() const;

  bool operator==(const Word& o) const { return alpha_ == o.alpha_ && letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  const Alphabet* alpha_;
  std::vector<std::uint32_t> letters_;
  long degree_;
};

enum class Ordering { Less, Equal, Greater };

// The lexicographic order used throughout: a proper prefix is GREATER than
// its extensions ("x" > "xy"); otherwise the first differing letter decides,
// letters compared by their position in the alphabet (later = greater).
Ordering compare_words(const Word& u, const Word& v);

inline bool word_less(const Word& u, const Word& v) { return compare_words(u, v) == Ordering::Less; }
inline bool word_greater(const Word& u, const Word& v) { return compare_words(u, v) == Ordering::Greater; }

// Binary commutator tree. Leaves are letters; the support of a pair is the
// concatenation of the supports, and degrees add.
class BracketTree {
 public:
  static BracketTree leaf(const Alphabet* alpha, std::uint32_t letter);
  static BracketTree pair(BracketTree left, BracketTree right);

  bool is_leaf() const { return !left_; }
  std::uint32_t letter() const;
  const BracketTree& left() const { return *left_; }
  const BracketTree& right() const { return *right_; }
  const Word& support() const { return support_; }
  long degree() const { return support_.degree(); }

  std::string to_string() const;  // "[x,[x,y]]"

 private:
  BracketTree(Word support, std::uint32_t letter) : support_(std::move(support)), letter_(letter) {}
  BracketTree(Word support, std::shared_ptr<const BracketTree> l, std::shared_ptr<const BracketTree> r)
      : support_(std::move(support)), left_(std::move(l)), right_(std::move(r)) {}

  Word support_;
  std::uint32_t letter_ = 0;
  std::shared_ptr<const BracketTree> left_, right_;
};

}  // namespace liegrowth

#endif
