#ifndef LIEGROWTH_ALPHABET_HPP
#define LIEGROWTH_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liegrowth {

// A letter set with positive integer degrees and a total order given by the
// letter id. Alphabets outlive the words and polynomials built over them.
class Alphabet {
 public:
  virtual ~Alphabet() = default;
  virtual long degree_of(std::uint32_t letter) const = 0;
  virtual std::string name_of(std::uint32_t letter) const = 0;
  virtual std::optional<std::uint32_t> find(const std::string& name) const = 0;
  // True when every letter name is a single character (affects word syntax).
  virtual bool single_char_names() const = 0;
};

// Finite ordered alphabet. Letters are listed in ascending order: the last
// listed letter is the greatest.
class GradedAlphabet final : public Alphabet {
 public:
  struct Letter {
    std::string name;
    long degree;
  };

  explicit GradedAlphabet(std::vector<Letter> letters);

  // Parses "y:1,x:1" (ascending order, so x > y).
  static GradedAlphabet parse(const std::string& spec);

  std::size_t size() const { return letters_.size(); }
  long degree_of(std::uint32_t letter) const override;
  std::string name_of(std::uint32_t letter) const override;
  std::optional<std::uint32_t> find(const std::string& name) const override;
  bool single_char_names() const override { return single_char_; }

  // k[i] = number of letters of degree i, for i = 1..maxDegree (k[0] unused).
  std::vector<long> histogram(long max_degree) const;
  long min_letter_degree() const;
  long max_letter_degree() const;

  std::string to_spec() const;

 private:
  std::vector<Letter> letters_;
  bool single_char_ = true;
};

}  // namespace liegrowth

#endif
