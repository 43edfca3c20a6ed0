#include "liegrowth/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace liegrowth {

bool is_ls_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_ls_word on the empty word");
  const auto& s = w.letters();
  const std::size_t n = s.size();
  // w must beat the rotation starting at i, for every split point i.
  for (std::size_t i = 1; i < n; ++i) {
    bool greater = false;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t a = s[j];
      std::uint32_t b = s[(i + j) % n];
      if (a != b) {
        greater = a > b;
        break;
      }
    }
    if (!greater) return false;  // rotation equal or larger
  }
  return true;
}

namespace detail {

std::vector<Word> ls_words_by_filter(const GradedAlphabet& alpha, long degree) {
  std::vector<Word> out;
  std::vector<std::uint32_t> stack;
  const long nletters = static_cast<long>(alpha.size());
  // Descending DFS emits words in descending order (within one degree the
  // order is decided by the first differing letter).
  std::function<void(long)> rec = [&](long remaining) {
    if (remaining == 0) {
      Word w(&alpha, stack);
      if (is_ls_word(w)) out.push_back(std::move(w));
      return;
    }
    for (long id = nletters - 1; id >= 0; --id) {
      long d = alpha.degree_of(static_cast<std::uint32_t>(id));
      if (d <= remaining) {
        stack.push_back(static_cast<std::uint32_t>(id));
        rec(remaining - d);
        stack.pop_back();
      }
    }
  };
  rec(degree);
  return out;
}

// Duval's generation, mirrored for the prefix-greater convention: starts at
// the greatest letter, strips trailing minimal letters, steps the last letter
// down. Visits every LS-word of length <= max_len in descending order.
static void duval_stream(const GradedAlphabet& alpha, long max_len, long max_degree,
                         const std::function<void(const Word&)>& fn) {
  const std::uint32_t top = static_cast<std::uint32_t>(alpha.size() - 1);
  std::vector<std::uint32_t> w{top};
  while (true) {
    long deg = 0;
    for (auto l : w) deg += alpha.degree_of(l);
    if (deg <= max_degree) fn(Word(&alpha, w));
    std::size_t m = w.size();
    w.resize(static_cast<std::size_t>(max_len));
    for (std::size_t i = m; i < w.size(); ++i) w[i] = w[i % m];
    while (!w.empty() && w.back() == 0) w.pop_back();
    if (w.empty()) break;
    --w.back();
  }
}

std::vector<Word> ls_words_by_duval(const GradedAlphabet& alpha, long degree) {
  std::vector<Word> out;
  duval_stream(alpha, degree, degree, [&](const Word& w) {
    if (w.degree() == degree) out.push_back(w);
  });
  return out;
}

}  // namespace detail

std::vector<Word> generate_ls_words(const GradedAlphabet& alpha, long degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (degree <= 14) return detail::ls_words_by_filter(alpha, degree);
  return detail::ls_words_by_duval(alpha, degree);
}

void for_each_ls_word(const GradedAlphabet& alpha, long max_degree,
                      const std::function<void(const Word&)>& fn) {
  if (max_degree < 1) return;
  detail::duval_stream(alpha, max_degree, max_degree, fn);
}

std::vector<Word> cfl_factorize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cfl_factorize on the empty word");
  const auto& s = w.letters();
  const std::size_t n = s.size();
  std::vector<Word> factors;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && s[k] >= s[j]) {
      if (s[k] > s[j])
        k = i;
      else
        ++k;
      ++j;
    }
    while (i <= k) {
      factors.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return factors;
}

BracketTree left_normed(const std::vector<BracketTree>& parts) {
  if (parts.empty()) throw std::invalid_argument("left_normed of nothing");
  BracketTree acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = BracketTree::pair(acc, parts[i]);
  return acc;
}

static BracketTree bracketing_unchecked(const Word& w) {
  if (w.length() == 1) return BracketTree::leaf(w.alphabet(), w.letters()[0]);
  std::vector<BracketTree> parts;
  parts.push_back(BracketTree::leaf(w.alphabet(), w.letters()[0]));
  for (const Word& factor : cfl_factorize(w.subword(1, w.length() - 1)))
    parts.push_back(bracketing_unchecked(factor));
  return left_normed(parts);
}

BracketTree standard_bracketing(const Word& w) {
  if (w.empty() || !is_ls_word(w))
    throw std::invalid_argument("standard_bracketing requires an LS-word, got: " + w.to_string());
  return bracketing_unchecked(w);
}

}  // namespace liegrowth
