#include "liegrowth/avoidance.hpp"

#include <cmath>
#include <stdexcept>

namespace liegrowth {

AvoidanceAutomaton::AvoidanceAutomaton(const GradedAlphabet& alpha, const Word& forbidden) {
  if (forbidden.empty()) throw std::invalid_argument("forbidden word must be nonempty");
  const auto& u = forbidden.letters();
  match_len_ = u.size();
  const std::size_t m = match_len_;

  // failure function: fail[s] = length of the longest proper suffix of
  // u[0..s) that is also a prefix
  std::vector<std::size_t> fail(m + 1, 0);
  for (std::size_t s = 1; s < m; ++s) {
    std::size_t t = fail[s];
    while (t > 0 && u[s] != u[t]) t = fail[t];
    fail[s + 1] = (u[s] == u[t]) ? t + 1 : 0;
  }
  auto delta = [&](std::size_t s, std::uint32_t c) -> std::size_t {
    while (true) {
      if (s < m && u[s] == c) return s + 1;
      if (s == 0) return 0;
      s = fail[s];
    }
  };

  max_step_ = alpha.max_letter_degree();
  steps_.assign(static_cast<std::size_t>(max_step_) + 1,
                std::vector<std::vector<long>>(m + 1, std::vector<long>(m + 1, 0)));
  for (std::uint32_t c = 0; c < alpha.size(); ++c) {
    long d = alpha.degree_of(c);
    for (std::size_t s = 0; s <= m; ++s) {
      std::size_t t = (s == m) ? m : delta(s, c);  // dead state absorbs
      ++steps_[static_cast<std::size_t>(d)][s][t];
    }
  }
}

const std::vector<std::vector<long>>& AvoidanceAutomaton::step(long degree) const {
  if (degree < 1 || degree > max_step_) throw std::out_of_range("no transfer matrix for that degree");
  return steps_[static_cast<std::size_t>(degree)];
}

GrowthTable AvoidanceAutomaton::count_table(long max_degree) const {
  const std::size_t m = match_len_;
  std::vector<std::vector<Int>> v(static_cast<std::size_t>(max_degree) + 1, std::vector<Int>(m, 0));
  v[0][0] = 1;
  std::vector<Int> d(static_cast<std::size_t>(max_degree) + 1);
  d[0] = 1;
  for (long n = 1; n <= max_degree; ++n) {
    auto& vn = v[static_cast<std::size_t>(n)];
    for (long i = 1; i <= std::min<long>(n, max_step_); ++i) {
      const auto& C = steps_[static_cast<std::size_t>(i)];
      const auto& prev = v[static_cast<std::size_t>(n - i)];
      for (std::size_t s = 0; s < m; ++s) {
        if (prev[s] == 0) continue;
        for (std::size_t t = 0; t < m; ++t)
          if (C[s][t] != 0) vn[t] += prev[s] * C[s][t];
      }
    }
    Int total = 0;
    for (std::size_t s = 0; s < m; ++s) total += vn[s];
    d[static_cast<std::size_t>(n)] = total;
  }
  return GrowthTable::cumulative(0, std::move(d), Int(0));
}

double AvoidanceAutomaton::growth_rate() const {
  const std::size_t m = match_len_;
  const std::size_t D = static_cast<std::size_t>(max_step_);
  const std::size_t dim = m * D;
  // companion system over live states; iterate on (I + B) so that mixed-period
  // degree histograms still converge, then shift the eigenvalue back
  std::vector<double> x(dim, 1.0 / static_cast<double>(dim)), y(dim);
  double lambda = 0.0;
  int stable = 0;
  for (long it = 0; it < 100000; ++it) {
    for (std::size_t j = 0; j < dim; ++j) y[j] = x[j];  // the I part
    for (std::size_t blk = 0; blk < D; ++blk) {
      const auto& C = steps_[blk + 1];
      for (std::size_t s = 0; s < m; ++s) {
        double xs = x[blk * m + s];
        if (xs == 0.0) continue;
        for (std::size_t t = 0; t < m; ++t)
          if (C[s][t] != 0) y[t] += xs * C[s][t];
      }
      if (blk + 1 < D)
        for (std::size_t s = 0; s < m; ++s) y[(blk + 1) * m + s] += x[blk * m + s];
    }
    double norm = 0.0;
    for (double v : y) norm += v;
    if (norm == 0.0) return 0.0;  // nothing survives at all
    double next = norm;  // ||y||_1 with ||x||_1 == 1 after normalization
    for (std::size_t j = 0; j < dim; ++j) x[j] = y[j] / norm;
    if (it > 0 && std::fabs(next - lambda) <= 1e-9 * next) {
      if (++stable >= 4) return next - 1.0;
    } else {
      stable = 0;
    }
    lambda = next;
  }
  throw std::runtime_error("growth-rate power iteration did not converge in 1e5 iterations");
}

GrowthTable count_avoiding(const GradedAlphabet& alpha, const Word& forbidden, long max_degree) {
  return AvoidanceAutomaton(alpha, forbidden).count_table(max_degree);
}

double avoidance_growth_rate(const GradedAlphabet& alpha, const Word& forbidden) {
  if (alpha.size() < 2) throw std::invalid_argument("growth rate needs an alphabet with >= 2 letters");
  return AvoidanceAutomaton(alpha, forbidden).growth_rate();
}

}  // namespace liegrowth
