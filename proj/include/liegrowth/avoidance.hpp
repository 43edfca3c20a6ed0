#ifndef LIEGROWTH_AVOIDANCE_HPP
#define LIEGROWTH_AVOIDANCE_HPP

#include <vector>

#include "liegrowth/counting.hpp"
#include "liegrowth/word.hpp"

namespace liegrowth {

// Prefix-match automaton of a forbidden word (failure-function construction).
// States 0..|u|-1 track the longest suffix of the input matching a prefix of
// u; state |u| is the absorbing dead state, kept for bookkeeping but excluded
// from counts.
class AvoidanceAutomaton {
 public:
  AvoidanceAutomaton(const GradedAlphabet& alpha, const Word& forbidden);

  int live_states() const { return static_cast<int>(match_len_); }
  int dead_state() const { return static_cast<int>(match_len_); }
  long max_step() const { return max_step_; }

  // step(i)[s][t] = number of letters of degree i taking state s to state t,
  // including the dead row/column (full (m+1) x (m+1) matrices).
  const std::vector<std::vector<long>>& step(long degree) const;

  // f_u(n) for n = 0..max_degree: degree-indexed dynamic programming.
  GrowthTable count_table(long max_degree) const;

  // Perron root of the degree-1-step companion system over the live states,
  // by power iteration to relative tolerance 1e-9. Throws after 1e5
  // iterations without convergence.
  double growth_rate() const;

 private:
  std::size_t match_len_;
  long max_step_;
  std::vector<std::vector<std::vector<long>>> steps_;  // [degree][from][to]
};

GrowthTable count_avoiding(const GradedAlphabet& alpha, const Word& forbidden, long max_degree);
double avoidance_growth_rate(const GradedAlphabet& alpha, const Word& forbidden);

}  // namespace liegrowth

#endif
