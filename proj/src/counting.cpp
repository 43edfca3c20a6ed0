#include "liegrowth/counting.hpp"

#include <numeric>
#include <stdexcept>

namespace liegrowth {

const GrowthTable::Row& GrowthTable::at_degree(long n) const {
  for (const auto& r : rows)
    if (r.n == n) return r;
  throw std::out_of_range("no row for degree " + std::to_string(n));
}

GrowthTable GrowthTable::cumulative(long first_n, std::vector<Int> d, const Int& g0) {
  GrowthTable t;
  Int g = g0;
  long n = first_n;
  for (auto& dn : d) {
    g += dn;
    t.rows.push_back({n++, std::move(dn), g});
  }
  return t;
}

int mobius(long d) {
  if (d < 1) throw std::invalid_argument("mobius requires d >= 1");
  int result = 1;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      result = -result;
    }
  }
  if (d > 1) result = -result;
  return result;
}

Int witt_dimension(long rank, long n) {
  if (rank < 1 || n < 1) throw std::invalid_argument("witt_dimension requires rank, n >= 1");
  Int sum = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    long e = n / d;
    int mu = mobius(d);
    if (mu != 0) sum += mu * int_pow(Int(rank), static_cast<unsigned long>(e));
    if (d != e) {
      int mu2 = mobius(e);
      if (mu2 != 0) sum += mu2 * int_pow(Int(rank), static_cast<unsigned long>(d));
    }
  }
  if (sum % n != 0) throw std::logic_error("Witt sum not divisible by n");
  return sum / n;
}

GrowthTable witt_table(long rank, long max_degree) {
  std::vector<Int> d;
  for (long n = 1; n <= max_degree; ++n) d.push_back(witt_dimension(rank, n));
  return GrowthTable::cumulative(1, std::move(d), Int(0));
}

GrowthTable word_count(const std::vector<long>& histogram, long max_degree) {
  std::vector<Int> d(static_cast<std::size_t>(max_degree) + 1);
  d[0] = 1;
  for (long n = 1; n <= max_degree; ++n) {
    Int s = 0;
    for (long i = 1; i <= n && i < static_cast<long>(histogram.size()); ++i)
      if (histogram[static_cast<std::size_t>(i)] != 0)
        s += Int(histogram[static_cast<std::size_t>(i)]) * d[static_cast<std::size_t>(n - i)];
    d[static_cast<std::size_t>(n)] = s;
  }
  return GrowthTable::cumulative(0, std::move(d), Int(0));
}

GrowthTable word_count(const GradedAlphabet& alpha, long max_degree) {
  return word_count(alpha.histogram(max_degree), max_degree);
}

GrowthTable graded_lie_dimension(const std::vector<long>& histogram, long max_degree) {
  const std::size_t N = static_cast<std::size_t>(max_degree);
  // a = coefficients of A(t) = 1/(1 - sum k_i t^i), the graded word counts
  std::vector<Rat> a(N + 1);
  {
    GrowthTable words = word_count(histogram, max_degree);
    for (long n = 0; n <= max_degree; ++n) a[static_cast<std::size_t>(n)] = Rat(words.at_degree(n).d);
  }
  // b = log A: n*a_n = sum_{j=1..n} j*b_j*a_{n-j}
  std::vector<Rat> b(N + 1);
  for (std::size_t n = 1; n <= N; ++n) {
    Rat s = Rat(static_cast<long>(n)) * a[n];
    for (std::size_t j = 1; j < n; ++j) s -= Rat(static_cast<long>(j)) * b[j] * a[n - j];
    b[n] = s / Rat(static_cast<long>(n));
  }
  std::vector<Int> ell(N + 1);
  for (long n = 1; n <= max_degree; ++n) {
    Rat s = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      int mu = mobius(n / d);
      if (mu != 0) s += Rat(mu * d) * b[static_cast<std::size_t>(d)];
    }
    s /= Rat(n);
    s.canonicalize();
    if (s.get_den() != 1 || s < 0)
      throw std::logic_error("graded Lie dimension is not a nonnegative integer at degree " +
                             std::to_string(n));
    ell[static_cast<std::size_t>(n)] = s.get_num();
  }
  return GrowthTable::cumulative(1, std::vector<Int>(ell.begin() + 1, ell.end()), Int(0));
}

long histogram_period(const std::vector<long>& histogram) {
  long g = 0;
  for (std::size_t i = 1; i < histogram.size(); ++i)
    if (histogram[i] > 0) g = std::gcd(g, static_cast<long>(i));
  return g;
}

}  // namespace liegrowth
