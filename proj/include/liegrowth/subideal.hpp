#ifndef LIEGROWTH_SUBIDEAL_HPP
#define LIEGROWTH_SUBIDEAL_HPP

#include <memory>
#include <vector>

#include "liegrowth/subalgebra.hpp"
#include "liegrowth/subspace.hpp"

namespace liegrowth {

// The chain id^1 S >= id^2 S >= ... >= id^level S, each stage truncated to
// its scheduled degree (all equal unless the tight schedule was requested).
template <class F>
struct SubidealChainT {
  std::shared_ptr<const WordTable> table;
  int level = 0;
  std::vector<GradedSubspaceT<F>> stages;  // stages[j-1] = id^j S

  const GradedSubspaceT<F>& stage(int j) const { return stages.at(static_cast<std::size_t>(j - 1)); }
};

using SubidealChain = SubidealChainT<QField>;

// Ideal of <ambient> generated by S, per-degree spans via left-normed
// bracketing against a minimal generating set of the ambient. ambient ==
// nullptr means the whole free Lie algebra. Checks S inside the ambient.
GradedSubspace ideal_closure(const GradedAlphabet& alpha, const GradedSubspace* ambient,
                             const GeneratorSet& s, long max_degree);

// Iterated ideal closure; every stage truncated to max_degree.
SubidealChain subideal_closure(const GradedAlphabet& alpha, const GeneratorSet& s, int level,
                               long max_degree, const EngineOptions& opts = {});

// d(n) = dim L_n - rank of H at n, g cumulative.
template <class F>
GrowthTable cogrowth_table(const GradedSubspaceT<F>& h, long max_degree);

// Cogrowth of id^level S computed with the requested field, intermediate
// stages truncated to the degrees the final stage actually consumes.
GrowthTable subideal_cogrowth(const GradedAlphabet& alpha, const GeneratorSet& s, int level,
                              long max_degree, const EngineOptions& opts = {});

// Closed form for the 2-subideal generated by x in rank 2:
// d(n) = (1/n) sum_{d|n} mu(d) (Fib(n/d - 1) + Fib(n/d + 1)).
GrowthTable fibonacci_cogrowth(long max_degree);

// Cogrowth of id^level x in rank 2 by counting LS-words (other than "x")
// whose support avoids x^level; an independent path from both the closed form
// and the linear algebra.
GrowthTable ls_avoidance_cogrowth(int level, long max_degree);

Int fibonacci(long n);  // Fib(0) = 0, Fib(1) = 1

}  // namespace liegrowth

#endif
