#ifndef LIEGROWTH_DERIVATIONS_HPP
#define LIEGROWTH_DERIVATIONS_HPP

#include <functional>
#include <optional>

#include "liegrowth/ncpoly.hpp"

namespace liegrowth {

// Countable alphabet x_1, x_2, ... (family 1) plus optional extra families
// x<j>_<i>; all letters have degree 1 and are materialized lazily. Letter ids
// order by (family, index).
class ShiftAlphabet final : public Alphabet {
 public:
  static constexpr std::uint32_t kStride = 1u << 20;

  static std::uint32_t encode(std::uint32_t family, std::uint32_t index);
  static std::uint32_t family_of(std::uint32_t id) { return id / kStride + 1; }
  static std::uint32_t index_of(std::uint32_t id) { return id % kStride + 1; }

  long degree_of(std::uint32_t) const override { return 1; }
  std::string name_of(std::uint32_t id) const override;
  std::optional<std::uint32_t> find(const std::string& name) const override;
  bool single_char_names() const override { return false; }
};

// D with D x_i^(j) = x_{i+1}^(j), extended by the Leibniz rule; n-fold power.
NcPoly apply_shift(const NcPoly& p, long n = 1);

// Membership in the monomial ideal generated by the letters satisfying the
// predicate: every monomial must contain such a letter. Zero is a member.
bool in_monomial_ideal_if(const NcPoly& p, const std::function<bool(std::uint32_t)>& generator);

// I_k = ideal generated by {x_1, ..., x_k} (any family, index <= k).
bool in_monomial_ideal(const NcPoly& p, long k);

struct EscapeResult {
  bool found = false;
  long n = -1;
  std::string witness;  // a monomial of D^n(a) outside the ideal
};

// Least n <= cap with D^n(a) outside I_k; NotFound is reported, not thrown.
EscapeResult escape_exponent(const NcPoly& a, long k, long cap);
EscapeResult escape_exponent_if(const NcPoly& a, const std::function<bool(std::uint32_t)>& generator,
                                long cap);

// K_d = (1/2) (2k+2)^(2^(c-d)); K_c = k+1 and K_d = 2 K_{d+1}^2.
Int claim_bound(long c, long k, long d);

}  // namespace liegrowth

#endif
