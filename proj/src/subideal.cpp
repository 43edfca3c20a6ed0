#include "liegrowth/subideal.hpp"

#include <algorithm>

#include "liegrowth/lyndon.hpp"

namespace liegrowth {

namespace {

// Generators are taken at their leading parts; the chain machinery is graded.
template <class F>
std::vector<DensePoly<F>> seed_polys(const WordTable& table, const GeneratorSet& s, long max_degree) {
  std::vector<DensePoly<F>> seeds;
  for (const auto& e : s.elements) {
    if (e.is_zero()) throw std::invalid_argument("zero generator");
    NcPoly lp = e.poly().leading_part();
    if (lp.degree() > max_degree)
      throw std::invalid_argument("generator degree exceeds the requested truncation");
    seeds.push_back(to_dense<F>(table, lp, lp.degree()));
  }
  return seeds;
}

template <class F>
std::vector<DensePoly<F>> letter_gens(const WordTable& table) {
  const GradedAlphabet& alpha = table.alphabet();
  std::vector<DensePoly<F>> gens;
  for (std::uint32_t c = 0; c < alpha.size(); ++c) {
    long d = alpha.degree_of(c);
    if (d > table.max_degree()) continue;
    NcPoly p = NcPoly::letter(&alpha, c);
    gens.push_back(to_dense<F>(table, p, d));
  }
  return gens;
}

template <class F>
void check_inside(const WordTable& table, const Components<F>& ambient,
                  const std::vector<DensePoly<F>>& seeds) {
  for (const auto& s : seeds) {
    auto v = project_ls(table, s);
    if (!ambient.space[static_cast<std::size_t>(s.degree)].contains(std::move(v)))
      throw std::invalid_argument("generators are not inside the ambient subalgebra");
  }
}

// One chain of iterated closures; schedule[j-1] = truncation degree of stage j.
template <class F>
std::vector<Components<F>> chain_core(const WordTable& table, const GeneratorSet& s,
                                      const std::vector<long>& schedule) {
  std::vector<Components<F>> stages;
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    long nj = schedule[j];
    auto seeds = seed_polys<F>(table, s, nj);
    std::vector<DensePoly<F>> gens;
    if (j == 0) {
      gens = letter_gens<F>(table);
    } else {
      check_inside(table, stages.back(), seeds);
      gens = minimal_generators(table, stages.back(), nj - 1);
    }
    stages.push_back(closure_components(table, seeds, gens, nj));
  }
  return stages;
}

std::vector<long> full_schedule(int level, long max_degree) {
  return std::vector<long>(static_cast<std::size_t>(level), max_degree);
}

// Earlier stages only feed generators to later ones, so stage j can stop at
// N - (level - j) without changing the final stage (never below the largest
// generator degree, which the containment checks need).
std::vector<long> tight_schedule(int level, long max_degree, long min_needed) {
  std::vector<long> sched;
  for (int j = 1; j <= level; ++j)
    sched.push_back(std::max(max_degree - (level - j), std::min(max_degree, min_needed)));
  return sched;
}

}  // namespace

GradedSubspace ideal_closure(const GradedAlphabet& alpha, const GradedSubspace* ambient,
                             const GeneratorSet& s, long max_degree) {
  auto table = ambient ? ambient->table_ptr() : std::make_shared<const WordTable>(alpha, max_degree);
  if (ambient && ambient->max_degree() < max_degree)
    throw std::invalid_argument("ambient subspace truncated below the requested degree");
  auto seeds = seed_polys<QField>(*table, s, max_degree);
  std::vector<DensePoly<QField>> gens;
  if (ambient) {
    check_inside(*table, ambient->components(), seeds);
    gens = minimal_generators(*table, ambient->components(), max_degree - 1);
  } else {
    gens = letter_gens<QField>(*table);
  }
  return GradedSubspace(table, closure_components(*table, seeds, gens, max_degree), max_degree);
}

SubidealChain subideal_closure(const GradedAlphabet& alpha, const GeneratorSet& s, int level,
                               long max_degree, const EngineOptions& opts) {
  if (level < 1) throw std::invalid_argument("subideal level must be >= 1");
  enforce_degree_cap(max_degree, opts);
  auto table = std::make_shared<const WordTable>(alpha, max_degree);
  auto stages = chain_core<QField>(*table, s, full_schedule(level, max_degree));
  SubidealChain chain;
  chain.table = table;
  chain.level = level;
  for (auto& comp : stages) chain.stages.emplace_back(table, std::move(comp), max_degree);
  return chain;
}

template <class F>
GrowthTable cogrowth_table(const GradedSubspaceT<F>& h, long max_degree) {
  if (h.max_degree() < max_degree)
    throw std::invalid_argument("subspace truncated below the requested degree");
  std::vector<Int> d;
  for (long n = 1; n <= max_degree; ++n)
    d.push_back(Int(static_cast<long>(h.table().ls_count(n)) - h.rank(n)));
  return GrowthTable::cumulative(1, std::move(d), Int(0));
}

template GrowthTable cogrowth_table<Fp61>(const GradedSubspaceT<Fp61>&, long);
template GrowthTable cogrowth_table<QField>(const GradedSubspaceT<QField>&, long);

namespace {

template <class F>
GrowthTable cogrowth_core(const GradedAlphabet& alpha, const GeneratorSet& s, int level,
                          long max_degree) {
  WordTable table(alpha, max_degree);
  long min_needed = std::max<long>(1, s.max_degree());
  auto stages = chain_core<F>(table, s, tight_schedule(level, max_degree, min_needed));
  const Components<F>& last = stages.back();
  std::vector<Int> d;
  for (long n = 1; n <= max_degree; ++n)
    d.push_back(Int(static_cast<long>(table.ls_count(n)) - last.rank(n)));
  return GrowthTable::cumulative(1, std::move(d), Int(0));
}

}  // namespace

GrowthTable subideal_cogrowth(const GradedAlphabet& alpha, const GeneratorSet& s, int level,
                              long max_degree, const EngineOptions& opts) {
  if (level < 1) throw std::invalid_argument("subideal level must be >= 1");
  enforce_degree_cap(max_degree, opts);
  if (opts.mode == FieldMode::Prime) return cogrowth_core<Fp61>(alpha, s, level, max_degree);
  return cogrowth_core<QField>(alpha, s, level, max_degree);
}

Int fibonacci(long n) {
  if (n < 0) throw std::invalid_argument("negative Fibonacci index");
  Int a = 0, b = 1;
  for (long i = 0; i < n; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

GrowthTable fibonacci_cogrowth(long max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  std::vector<Int> d;
  for (long n = 1; n <= max_degree; ++n) {
    Int sum = 0;
    for (long div = 1; div <= n; ++div) {
      if (n % div != 0) continue;
      int mu = mobius(div);
      if (mu == 0) continue;
      long m = n / div;
      sum += mu * (fibonacci(m - 1) + fibonacci(m + 1));
    }
    if (sum % n != 0) throw std::logic_error("cogrowth formula sum not divisible by n");
    d.push_back(sum / n);
  }
  return GrowthTable::cumulative(1, std::move(d), Int(0));
}

GrowthTable ls_avoidance_cogrowth(int level, long max_degree) {
  if (level < 1) throw std::invalid_argument("subideal level must be >= 1");
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  GradedAlphabet alpha({{"y", 1}, {"x", 1}});  // x is the maximal letter
  const std::uint32_t x = 1;
  std::vector<Int> d(static_cast<std::size_t>(max_degree) + 1, 0);
  for_each_ls_word(alpha, max_degree, [&](const Word& w) {
    if (w.length() == 1 && w.letters()[0] == x) return;  // "x" itself generates the subideal
    int run = 0;
    for (auto l : w.letters()) {
      run = (l == x) ? run + 1 : 0;
      if (run >= level) return;
    }
    ++d[static_cast<std::size_t>(w.degree())];
  });
  return GrowthTable::cumulative(1, std::vector<Int>(d.begin() + 1, d.end()), Int(0));
}

}  // namespace liegrowth
