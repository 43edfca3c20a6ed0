#include <doctest.h>

#include <random>

#include "liegrowth/counting.hpp"
#include "liegrowth/lyndon.hpp"
#include "liegrowth/subalgebra.hpp"
#include "liegrowth/subideal.hpp"

using namespace liegrowth;

namespace {

const GradedAlphabet& binary() {
  static GradedAlphabet a({{"y", 1}, {"x", 1}});
  return a;
}

GeneratorSet gens(const std::vector<std::string>& exprs) {
  GeneratorSet s;
  for (const auto& e : exprs) s.elements.push_back(parse_expression(e, binary()));
  return s;
}

std::vector<Int> graded(const GrowthTable& t, long upto) {
  std::vector<Int> d;
  for (long n = 1; n <= upto; ++n) d.push_back(t.at_degree(n).d);
  return d;
}

}  // namespace

TEST_CASE("leading parts") {
  GeneratorSet s = gens({"[x,y] + x"});
  GeneratorSet lp = leading_parts(s);
  CHECK(lp.elements[0].poly().to_string() == "xy - yx");

  GeneratorSet hom = gens({"[x,y]", "x"});
  GeneratorSet same = leading_parts(hom);
  for (std::size_t i = 0; i < hom.elements.size(); ++i)
    CHECK(same.elements[i].poly() == hom.elements[i].poly());

  GeneratorSet mixed_degree_1 = gens({"x + y"});
  CHECK(leading_parts(mixed_degree_1).elements[0].poly().to_string() == "x + y");

  GeneratorSet zero;
  zero.elements.push_back(LieElement(NcPoly::zero(&binary())));
  CHECK_THROWS_AS(leading_parts(zero), std::invalid_argument);
}

TEST_CASE("irreducible reduction") {
  GeneratorSet red = irreducible_reduce(gens({"x", "y", "[x,y]"}), 6);
  CHECK(red.elements.size() == 2);

  GeneratorSet keep = irreducible_reduce(gens({"x", "[x,y]"}), 6);
  CHECK(keep.elements.size() == 2);

  GeneratorSet single = irreducible_reduce(gens({"x"}), 3);
  CHECK(single.elements.size() == 1);

  // the replaced element keeps generating the same subalgebra
  GeneratorSet shifted = irreducible_reduce(gens({"x", "y", "[x,y] + x"}), 6);
  CHECK(shifted.elements.size() == 2);

  CHECK(is_irreducible(gens({"x", "[x,y]"})));
  CHECK_FALSE(is_irreducible(gens({"x", "y", "[x,y]"})));
}

TEST_CASE("subalgebra growth tables") {
  GrowthTable fib = subalgebra_growth(binary(), gens({"x", "[x,y]"}), 5);
  CHECK(graded(fib, 5) == std::vector<Int>{1, 1, 1, 1, 2});
  CHECK(fib.at_degree(5).g == 6);

  GrowthTable one = subalgebra_growth(binary(), gens({"[x,y]"}), 5);
  CHECK(graded(one, 5) == std::vector<Int>{0, 1, 0, 0, 0});

  GrowthTable full = subalgebra_growth(binary(), gens({"x", "y"}), 8);
  for (long n = 1; n <= 8; ++n) CHECK(full.at_degree(n).d == witt_dimension(2, n));
}

TEST_CASE("prime-field growth agrees with the exact field") {
  EngineOptions prime;
  prime.mode = FieldMode::Prime;
  for (const auto& exprs : {std::vector<std::string>{"x", "[x,y]"},
                            std::vector<std::string>{"[x,y]", "[x,[x,y]]"}}) {
    GrowthTable exact = subalgebra_growth(binary(), gens(exprs), 10);
    GrowthTable modp = subalgebra_growth(binary(), gens(exprs), 10, prime);
    for (long n = 1; n <= 10; ++n) CHECK(exact.at_degree(n).d == modp.at_degree(n).d);
  }
}

TEST_CASE("degree caps") {
  CHECK_THROWS_AS(subalgebra_growth(binary(), gens({"x"}), 13), std::domain_error);
  EngineOptions raised;
  raised.degree_cap = 14;
  CHECK_NOTHROW(subalgebra_growth(binary(), gens({"x"}), 13, raised));
}

TEST_CASE("growth of free generators matches the graded Witt dimensions") {
  // irreducible homogeneous sets generate free subalgebras: the growth is the
  // free-Lie-algebra dimension table of the generator-degree histogram
  struct Case {
    std::vector<std::string> exprs;
    std::vector<long> hist;
  };
  std::vector<Case> cases = {
      {{"x", "[x,y]"}, {0, 1, 1}},
      {{"[x,y]", "[x,[x,y]]"}, {0, 0, 1, 1}},
      {{"x", "[x,y]", "[[x,y],y]"}, {0, 1, 1, 1}},
  };
  for (const auto& c : cases) {
    REQUIRE(is_irreducible(gens(c.exprs)));
    GrowthTable got = subalgebra_growth(binary(), gens(c.exprs), 8);
    GrowthTable expected = graded_lie_dimension(c.hist, 8);
    for (long n = 1; n <= 8; ++n) CHECK(got.at_degree(n).d == expected.at_degree(n).d);
  }
}

TEST_CASE("growth is invariant under passing to reduced leading parts") {
  std::vector<std::vector<std::string>> sets = {
      {"x + [x,y]"},
      {"x", "y", "[x,y] + x"},
      {"[x,y] + y", "[x,[x,y]]"},
  };
  for (const auto& exprs : sets) {
    GeneratorSet s = gens(exprs);
    GrowthTable direct = subalgebra_growth(binary(), s, 8);
    GeneratorSet normalized = leading_parts(irreducible_reduce(s, 8));
    GrowthTable again = subalgebra_growth(binary(), normalized, 8);
    for (long n = 1; n <= 8; ++n) CHECK(direct.at_degree(n).d == again.at_degree(n).d);
  }
}

TEST_CASE("sum rule: growth plus cogrowth is the Witt table") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> deg(1, 4);
  std::uniform_int_distribution<int> coeff(-2, 2);
  GrowthTable witt = witt_table(2, 8);
  for (int trial = 0; trial < 6; ++trial) {
    GeneratorSet s;
    int count = 1 + trial % 3;
    for (int i = 0; i < count; ++i) {
      long n = deg(rng);
      NcPoly acc(&binary());
      for (const Word& w : generate_ls_words(binary(), n))
        acc += expand(standard_bracketing(w)) * Rat(coeff(rng));
      if (!acc.is_zero()) s.elements.push_back(LieElement(acc));
    }
    if (s.elements.empty()) continue;
    GradedSubspace h = subalgebra_subspace(binary(), s, 8);
    GrowthTable growth = subalgebra_growth(binary(), s, 8);
    GrowthTable cog = cogrowth_table(h, 8);
    for (long n = 1; n <= 8; ++n)
      CHECK(growth.at_degree(n).g + cog.at_degree(n).g == witt.at_degree(n).g);
  }
}

TEST_CASE("negligibility slope of the golden-ratio subalgebra") {
  // formula tables: free on degrees (1,2) against the full rank-2 algebra
  GrowthTable h = graded_lie_dimension({0, 1, 1}, 31);
  GrowthTable l = witt_table(2, 31);
  for (long n = 10; n < 30; ++n) {
    Rat before = Rat(h.at_degree(n).g) / Rat(l.at_degree(n).g);
    Rat after = Rat(h.at_degree(n + 1).g) / Rat(l.at_degree(n + 1).g);
    CHECK(after <= Rat(9, 10) * before);
  }
}

TEST_CASE("free complement of {x}") {
  ComplementResult res = free_complement(binary(), gens({"x"}), 4);
  REQUIRE(res.added.size() == 1);
  CHECK(res.added[0].first == 1);
  CHECK(res.added[0].second.poly().to_string() == "y");
  for (long n = 1; n <= 4; ++n) CHECK(res.codim.at_degree(n).d == 0);
}

TEST_CASE("free complement of {[x,y]}") {
  ComplementResult res = free_complement(binary(), gens({"[x,y]"}), 4);
  CHECK(res.codim.at_degree(1).d == 2);
  for (long n = 2; n <= 4; ++n) CHECK(res.codim.at_degree(n).d == 0);
  long deg3 = 0, deg4 = 0;
  for (const auto& [deg, elem] : res.added) {
    if (deg == 3) ++deg3;
    if (deg == 4) ++deg4;
  }
  CHECK(deg3 == 2);
  CHECK(deg4 == 3);
}

TEST_CASE("free complement of {x,y} adds nothing") {
  ComplementResult res = free_complement(binary(), gens({"x", "y"}), 4);
  CHECK(res.added.empty());
  for (long n = 1; n <= 4; ++n) CHECK(res.codim.at_degree(n).d == 0);
}

TEST_CASE("free complement rejects bad input") {
  CHECK_THROWS_AS(free_complement(binary(), gens({"x", "y", "[x,y]"}), 4), std::invalid_argument);
  CHECK_THROWS_AS(free_complement(binary(), gens({"x + [x,y]"}), 4), std::invalid_argument);
}

TEST_CASE("complement contains the whole lower central slice") {
  // every LS commutator of degree >= t lies in the completed subalgebra
  GeneratorSet b0 = gens({"[x,[x,y]]"});
  long t = 3;
  ComplementResult res = free_complement(binary(), b0, 6);
  GeneratorSet all = b0;
  for (const auto& [deg, elem] : res.added) all.elements.push_back(elem);
  GradedSubspace c = subalgebra_subspace(binary(), all, 6);
  for (long n = t; n <= 6; ++n) {
    for (const Word& w : generate_ls_words(binary(), n))
      CHECK(c.contains(expand(standard_bracketing(w))));
  }
}

TEST_CASE("generator files") {
  GeneratorSet s = GeneratorSet::parse_lines({"# comment", "", "x", "[x,y] # inline note"}, binary());
  REQUIRE(s.elements.size() == 2);
  CHECK(s.elements[1].poly().to_string() == "xy - yx");
}
