#include "liegrowth/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace liegrowth {

GradedAlphabet::GradedAlphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must have at least one letter");
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (l.name.empty()) throw std::invalid_argument("empty letter name");
    if (l.degree < 1) throw std::invalid_argument("letter degree must be >= 1: " + l.name);
    if (!seen.insert(l.name).second) throw std::invalid_argument("duplicate letter name: " + l.name);
    if (l.name.size() > 1) single_char_ = false;
  }
}

GradedAlphabet GradedAlphabet::parse(const std::string& spec) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // trim spaces
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(item.begin());
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
    if (item.empty()) throw std::invalid_argument("empty entry in alphabet spec: " + spec);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= item.size())
      throw std::invalid_argument("alphabet entry must be name:degree, got: " + item);
    std::string name = item.substr(0, colon);
    std::string deg = item.substr(colon + 1);
    long d = 0;
    for (char c : deg) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad degree in: " + item);
      d = d * 10 + (c - '0');
      if (d > 1000000) throw std::invalid_argument("degree out of range in: " + item);
    }
    letters.push_back({name, d});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return GradedAlphabet(std::move(letters));
}

long GradedAlphabet::degree_of(std::uint32_t letter) const {
  if (letter >= letters_.size()) throw std::out_of_range("letter id out of range");
  return letters_[letter].degree;
}

std::string GradedAlphabet::name_of(std::uint32_t letter) const {
  if (letter >= letters_.size()) throw std::out_of_range("letter id out of range");
  return letters_[letter].name;
}

std::optional<std::uint32_t> GradedAlphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::vector<long> GradedAlphabet::histogram(long max_degree) const {
  std::vector<long> k(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& l : letters_)
    if (l.degree <= max_degree) ++k[static_cast<std::size_t>(l.degree)];
  return k;
}

long GradedAlphabet::min_letter_degree() const {
  long m = letters_.front().degree;
  for (const auto& l : letters_) m = std::min(m, l.degree);
  return m;
}

long GradedAlphabet::max_letter_degree() const {
  long m = letters_.front().degree;
  for (const auto& l : letters_) m = std::max(m, l.degree);
  return m;
}

std::string GradedAlphabet::to_spec() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += letters_[i].name + ':' + std::to_string(letters_[i].degree);
  }
  return out;
}

}  // namespace liegrowth
