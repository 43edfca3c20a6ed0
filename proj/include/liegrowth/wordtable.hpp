#ifndef LIEGROWTH_WORDTABLE_HPP
#define LIEGROWTH_WORDTABLE_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "liegrowth/alphabet.hpp"
#include "liegrowth/word.hpp"

namespace liegrowth {

// Per-degree enumeration of all words of a fixed alphabet up to a degree cap,
// with dense ids, O(1)-ish concatenation, and the LS-word column frame used
// by the linear-algebra engine. Ids are only meaningful within one degree.
//
// Alphabets whose letters all have degree 1 get the packed positional
// encoding (id = base-a value of the letter string); everything else falls
// back to explicit per-degree enumeration with hashed concatenation.
class WordTable {
 public:
  WordTable(const GradedAlphabet& alpha, long max_degree);

  const GradedAlphabet& alphabet() const { return *alpha_; }
  long max_degree() const { return max_degree_; }

  std::size_t count(long degree) const;  // number of words of that degree
  Word word(long degree, std::uint32_t id) const;
  std::uint32_t id_of(const Word& w) const;
  std::uint32_t concat(long dl, std::uint32_t l, long dr, std::uint32_t r) const;

  // LS columns at each degree: column c corresponds to the c-th LS word in
  // descending order. ls_column() is -1 for non-LS word ids.
  std::size_t ls_count(long degree) const;
  std::uint32_t ls_word_id(long degree, std::size_t column) const;
  long ls_column(long degree, std::uint32_t word_id) const;
  Word ls_word(long degree, std::size_t column) const;

 private:
  void check_degree(long degree) const;

  const GradedAlphabet* alpha_;
  long max_degree_;
  bool packed_;
  std::size_t nletters_;

  // packed: counts are a^n; generic: explicit tables
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> pow_;  // packed: a^n

  // generic storage: per degree, concatenated letter strings + lookup
  std::vector<std::vector<std::uint8_t>> flat_;     // [degree] -> letters, fixed stride? varying lengths
  std::vector<std::vector<std::uint32_t>> starts_;  // [degree][id] -> offset into flat_, with sentinel
  std::vector<std::unordered_map<std::string, std::uint32_t>> index_;

  std::vector<std::vector<std::uint32_t>> ls_ids_;  // [degree][column] -> word id (descending order)
  std::vector<std::vector<long>> ls_col_;           // [degree][word id] -> column or -1
};

}  // namespace liegrowth

#endif
