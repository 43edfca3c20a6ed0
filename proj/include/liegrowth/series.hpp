#ifndef LIEGROWTH_SERIES_HPP
#define LIEGROWTH_SERIES_HPP

#include <vector>

#include "liegrowth/alphabet.hpp"
#include "liegrowth/rational.hpp"

namespace liegrowth {

// Degree histogram with either finite support or a constant tail
// (k_i = tail for all i >= head.size()+1), together with the parameter z of
// F(zeta) = sum_i k_i / (z - zeta)^i.
struct SeriesSpec {
  std::vector<long> head;  // head[i] = k_i for 1 <= i <= max head index; head[0] unused
  long tail = 0;
  Rat z;

  static SeriesSpec finite(std::vector<long> histogram, Rat z);
  static SeriesSpec constant_tail(std::vector<long> head, long tail, Rat z);

  long k(long i) const;
  bool finite_support() const { return tail == 0; }
  long max_head_index() const { return static_cast<long>(head.size()) - 1; }
};

// Exact evaluation of F at a rational zeta. Throws when the series diverges
// there (constant tail with z - zeta <= 1) or a term blows up (zeta == z).
Rat eval_F(const SeriesSpec& spec, const Rat& zeta);

struct Conditions {
  bool G;
  bool Wz;
};

// Condition G: k_2 = k_3 = ... = 0, or k_{i+1} > 0 whenever k_i > 0.
// Condition W_z: F defined in a neighborhood of 0 and F(0) <= 1.
Conditions check_conditions(const SeriesSpec& spec);

struct BaseResult {
  double z0;              // canonicalized to 12 significant digits
  Rat lo, hi;             // exact bracket: F(0) > 1 at lo, <= 1 at hi
  std::vector<Int> poly;  // z^d - k_1 z^(d-1) - ... - k_d, leading first
  bool exact;             // true when hi is the root itself
};

// The unique positive root of z^d = k_1 z^(d-1) + ... + k_d, bisected with
// exact rational sign certificates until hi - lo <= tolerance.
BaseResult exponential_base(const std::vector<long>& histogram, const Rat& tolerance);

struct GreedyResult {
  std::vector<int> bits;        // k_1..k_N, each 0 or 1
  std::vector<Rat> remainders;  // a_0..a_N with a_j = 1 - sum_{i<=j} k_i/m0^i
};

// The paper's two-generator realization sequence: k_{j+1} = 0 when
// a_j < m0^-(j+1), else 1. Requires 1 < m0 <= 2.
GreedyResult greedy_base_sequence(const Rat& m0, int N);

// Lazard elimination of the minimal letter x (smallest degree, first listed
// on ties): the new letters are the commutators [y,x,...,x] with y != x,
// truncated to degree <= max_degree.
GradedAlphabet lazard_transform(const GradedAlphabet& alpha, long max_degree);

// The exact histogram of the eliminated-letter basis as a constant-tail
// series (possible exactly when the minimal degree is 1).
SeriesSpec lazard_series(const GradedAlphabet& alpha, const Rat& z);

}  // namespace liegrowth

#endif
