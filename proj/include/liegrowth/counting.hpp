#ifndef LIEGROWTH_COUNTING_HPP
#define LIEGROWTH_COUNTING_HPP

#include <vector>

#include "liegrowth/alphabet.hpp"
#include "liegrowth/rational.hpp"

namespace liegrowth {

// (n, d(n), g(n)) rows with g cumulative. Word-monoid tables start at n = 0
// with g(0) = 1; Lie tables start at n = 1 with g(0) = 0.
struct GrowthTable {
  struct Row {
    long n;
    Int d;
    Int g;
  };
  std::vector<Row> rows;

  const Row& at_degree(long n) const;
  // Builds the cumulative column from graded values d[first_n..].
  static GrowthTable cumulative(long first_n, std::vector<Int> d, const Int& g0);
};

int mobius(long d);  // throws on d < 1

// (1/n) sum_{d|n} mu(d) m^(n/d), exact.
Int witt_dimension(long rank, long n);

GrowthTable witt_table(long rank, long max_degree);

// d(0)=1, d(n) = sum_i k_i d(n-i); k[i] = #letters of degree i.
GrowthTable word_count(const std::vector<long>& histogram, long max_degree);
GrowthTable word_count(const GradedAlphabet& alpha, long max_degree);

// Homogeneous dimensions of the free Lie algebra on a graded set with the
// given histogram, via the series logarithm of 1/(1 - sum k_i t^i) and Mobius
// inversion. Throws if any dimension fails to come out a nonnegative integer.
GrowthTable graded_lie_dimension(const std::vector<long>& histogram, long max_degree);

// gcd of the degrees carrying letters (0 for the empty histogram).
long histogram_period(const std::vector<long>& histogram);

}  // namespace liegrowth

#endif
