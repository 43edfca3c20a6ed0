#include "liegrowth/derivations.hpp"

#include <cctype>
#include <stdexcept>

namespace liegrowth {

std::uint32_t ShiftAlphabet::encode(std::uint32_t family, std::uint32_t index) {
  if (family < 1 || index < 1) throw std::invalid_argument("family and index start at 1");
  if (index > kStride) throw std::invalid_argument("letter index out of range");
  return (family - 1) * kStride + (index - 1);
}

std::string ShiftAlphabet::name_of(std::uint32_t id) const {
  std::uint32_t f = family_of(id), i = index_of(id);
  if (f == 1) return "x" + std::to_string(i);
  return "x" + std::to_string(f) + "_" + std::to_string(i);
}

std::optional<std::uint32_t> ShiftAlphabet::find(const std::string& name) const {
  if (name.size() < 2 || name[0] != 'x') return std::nullopt;
  std::uint32_t first = 0, second = 0;
  bool has_second = false;
  std::size_t p = 1;
  if (!std::isdigit(static_cast<unsigned char>(name[p]))) return std::nullopt;
  for (; p < name.size() && std::isdigit(static_cast<unsigned char>(name[p])); ++p)
    first = first * 10 + static_cast<std::uint32_t>(name[p] - '0');
  if (p < name.size()) {
    if (name[p] != '_') return std::nullopt;
    ++p;
    if (p >= name.size()) return std::nullopt;
    for (; p < name.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(name[p]))) return std::nullopt;
      second = second * 10 + static_cast<std::uint32_t>(name[p] - '0');
    }
    has_second = true;
  }
  if (first == 0 || (has_second && second == 0)) return std::nullopt;
  return has_second ? encode(first, second) : encode(1, first);
}

NcPoly apply_shift(const NcPoly& p, long n) {
  if (n < 0) throw std::invalid_argument("negative shift power");
  NcPoly cur = p;
  for (long step = 0; step < n; ++step) {
    std::vector<NcPoly::Term> terms;
    for (const auto& [w, c] : cur.terms()) {
      for (std::size_t pos = 0; pos < w.length(); ++pos) {
        std::vector<std::uint32_t> letters = w.letters();
        letters[pos] += 1;  // same family, next index
        terms.push_back({Word(w.alphabet(), std::move(letters)), c});
      }
    }
    cur = NcPoly::from_terms(p.alphabet(), std::move(terms));
  }
  return cur;
}

bool in_monomial_ideal_if(const NcPoly& p, const std::function<bool(std::uint32_t)>& generator) {
  for (const auto& [w, c] : p.terms()) {
    bool hit = false;
    for (auto l : w.letters())
      if (generator(l)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;  // zero lies in every ideal
}

bool in_monomial_ideal(const NcPoly& p, long k) {
  if (k < 1) throw std::invalid_argument("cutoff must be >= 1");
  return in_monomial_ideal_if(
      p, [k](std::uint32_t id) { return ShiftAlphabet::index_of(id) <= static_cast<std::uint32_t>(k); });
}

EscapeResult escape_exponent_if(const NcPoly& a, const std::function<bool(std::uint32_t)>& generator,
                                long cap) {
  if (a.is_zero()) throw std::invalid_argument("escape exponent of the zero element");
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  NcPoly cur = a;
  for (long n = 0; n <= cap; ++n) {
    if (!in_monomial_ideal_if(cur, generator)) {
      EscapeResult res;
      res.found = true;
      res.n = n;
      for (const auto& [w, c] : cur.terms()) {
        bool hit = false;
        for (auto l : w.letters())
          if (generator(l)) {
            hit = true;
            break;
          }
        if (!hit) {
          res.witness = w.to_string();
          break;
        }
      }
      return res;
    }
    if (n < cap) cur = apply_shift(cur);
  }
  return {};
}

EscapeResult escape_exponent(const NcPoly& a, long k, long cap) {
  if (k < 1) throw std::invalid_argument("cutoff must be >= 1");
  return escape_exponent_if(
      a, [k](std::uint32_t id) { return ShiftAlphabet::index_of(id) <= static_cast<std::uint32_t>(k); },
      cap);
}

Int claim_bound(long c, long k, long d) {
  if (!(1 <= d && d <= c)) throw std::invalid_argument("claim bound needs 1 <= d <= c");
  if (k < 1) throw std::invalid_argument("cutoff must be >= 1");
  if (c - d > 24) throw std::invalid_argument("bound is astronomically large; refusing to materialize");
  Int base = 2 * k + 2;
  Int value = int_pow(base, 1ul << static_cast<unsigned long>(c - d));
  if (value % 2 != 0) throw std::logic_error("claim bound should be even before halving");
  return value / 2;
}

}  // namespace liegrowth
