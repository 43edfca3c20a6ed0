#include "liegrowth/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace liegrowth {

Word::Word(const Alphabet* alpha, std::vector<std::uint32_t> letters)
    : alpha_(alpha), letters_(std::move(letters)), degree_(0) {
  for (auto l : letters_) degree_ += alpha_->degree_of(l);
}

Word Word::parse(const Alphabet& alpha, const std::string& text) {
  std::vector<std::uint32_t> ids;
  if (alpha.single_char_names()) {
    for (char c : text) {
      auto id = alpha.find(std::string(1, c));
      if (!id) throw std::invalid_argument(std::string("unknown letter '") + c + "' in word: " + text);
      ids.push_back(*id);
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t dot = text.find('.', pos);
      std::string name = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
      auto id = alpha.find(name);
      if (!id) throw std::invalid_argument("unknown letter '" + name + "' in word: " + text);
      ids.push_back(*id);
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
  }
  return Word(&alpha, std::move(ids));
}

Word Word::concat(const Word& other) const {
  if (alpha_ != other.alpha_) throw std::invalid_argument("concat across different alphabets");
  std::vector<std::uint32_t> ids = letters_;
  ids.insert(ids.end(), other.letters_.begin(), other.letters_.end());
  return Word(alpha_, std::move(ids));
}

Word Word::subword(std::size_t from, std::size_t len) const {
  if (from + len > letters_.size()) throw std::out_of_range("subword out of range");
  return Word(alpha_, std::vector<std::uint32_t>(letters_.begin() + from, letters_.begin() + from + len));
}

std::string Word::to_string() const {
  std::string out;
  bool dots = !alpha_->single_char_names();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (dots && i) out += '.';
    out += alpha_->name_of(letters_[i]);
  }
  return out;
}

Ordering compare_words(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) throw std::invalid_argument("comparing words over different alphabets");
  const auto& a = u.letters();
  const auto& b = v.letters();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
  }
  if (a.size() == b.size()) return Ordering::Equal;
  // the prefix is the greater word
  return a.size() < b.size() ? Ordering::Greater : Ordering::Less;
}

BracketTree BracketTree::leaf(const Alphabet* alpha, std::uint32_t letter) {
  return BracketTree(Word(alpha, {letter}), letter);
}

BracketTree BracketTree::pair(BracketTree left, BracketTree right) {
  Word support = left.support().concat(right.support());
  return BracketTree(std::move(support), std::make_shared<BracketTree>(std::move(left)),
                     std::make_shared<BracketTree>(std::move(right)));
}

std::uint32_t BracketTree::letter() const {
  if (!is_leaf()) throw std::logic_error("letter() on a non-leaf bracket tree");
  return letter_;
}

std::string BracketTree::to_string() const {
  if (is_leaf()) return support_.alphabet()->name_of(letter_);
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

}  // namespace liegrowth
