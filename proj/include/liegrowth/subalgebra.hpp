#ifndef LIEGROWTH_SUBALGEBRA_HPP
#define LIEGROWTH_SUBALGEBRA_HPP

#include <string>
#include <vector>

#include "liegrowth/counting.hpp"
#include "liegrowth/ncpoly.hpp"
#include "liegrowth/subspace.hpp"

namespace liegrowth {

struct GeneratorSet {
  std::vector<LieElement> elements;

  bool homogeneous() const;
  long max_degree() const;  // 0 when empty

  // One expression per line, '#' starts a comment, blank lines skipped.
  static GeneratorSet parse_lines(const std::vector<std::string>& lines, const Alphabet& alpha);
};

enum class FieldMode { Exact, Prime };

struct EngineOptions {
  FieldMode mode = FieldMode::Exact;
  long degree_cap = 0;  // 0 = the mode default (12 exact, 20 prime)
};

long effective_degree_cap(const EngineOptions& opts);
void enforce_degree_cap(long max_degree, const EngineOptions& opts);

// Top homogeneous component of each element; errors on zero elements.
GeneratorSet leading_parts(const GeneratorSet& s);

// Shirshov reduction: while some element's leading part lies in the
// subalgebra generated by the others' leading parts, subtract the witnessing
// combination (built from the full elements) and retry; zeros are dropped.
// The result generates the same subalgebra and has irreducible leading parts.
GeneratorSet irreducible_reduce(const GeneratorSet& s, long max_degree);

bool is_irreducible(const GeneratorSet& s);

// d(n) = dim(gr H intersect L_n) for H generated by S, computed on the
// graded side after irreducible reduction.
GrowthTable subalgebra_growth(const GradedAlphabet& alpha, const GeneratorSet& s, long max_degree,
                              const EngineOptions& opts = {});

// The exact-field subspace itself (for cogrowth cross-checks).
GradedSubspace subalgebra_subspace(const GradedAlphabet& alpha, const GeneratorSet& s, long max_degree);

struct ComplementResult {
  std::vector<std::pair<long, LieElement>> added;  // (degree, adjoined generator)
  GrowthTable codim;                               // per-degree codimension of the result in L
};

// Degree-by-degree free complement of a homogeneous irreducible generating
// set: from the top generator degree on, adjoin an LS-commutator basis of a
// complement of the subalgebra built so far. The result has codimension 0 in
// every degree >= that top degree.
ComplementResult free_complement(const GradedAlphabet& alpha, const GeneratorSet& b0, long max_degree);

}  // namespace liegrowth

#endif
