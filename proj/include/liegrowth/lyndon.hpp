#ifndef LIEGROWTH_LYNDON_HPP
#define LIEGROWTH_LYNDON_HPP

#include <functional>
#include <vector>

#include "liegrowth/word.hpp"

namespace liegrowth {

// True iff w > vu for every split w = uv with u, v nonempty.
// Throws on the empty word.
bool is_ls_word(const Word& w);

// All LS-words of exactly the given degree, in descending word order.
// Filtered enumeration up to degree 14, streaming generation above.
std::vector<Word> generate_ls_words(const GradedAlphabet& alpha, long degree);

// Visits every LS-word of degree <= max_degree, in descending word order.
void for_each_ls_word(const GradedAlphabet& alpha, long max_degree,
                      const std::function<void(const Word&)>& fn);

// The unique factorization w = u1 u2 ... us into LS-words with u1 <= ... <= us.
std::vector<Word> cfl_factorize(const Word& w);

// The unique LS-commutator with associative support w: strip the leading
// (maximal) letter, CFL-factorize the tail, bracket the factors left-normed.
// Throws on non-LS input.
BracketTree standard_bracketing(const Word& w);

BracketTree left_normed(const std::vector<BracketTree>& parts);

namespace detail {
std::vector<Word> ls_words_by_filter(const GradedAlphabet& alpha, long degree);
std::vector<Word> ls_words_by_duval(const GradedAlphabet& alpha, long degree);
}  // namespace detail

}  // namespace liegrowth

#endif
