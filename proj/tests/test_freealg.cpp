#include <doctest.h>

#include <random>

#include "liegrowth/counting.hpp"
#include "liegrowth/engine.hpp"
#include "liegrowth/lyndon.hpp"
#include "liegrowth/ncpoly.hpp"

using namespace liegrowth;

namespace {

const GradedAlphabet& binary() {
  static GradedAlphabet a({{"y", 1}, {"x", 1}});
  return a;
}

NcPoly P(const std::string& expr) { return parse_expression(expr, binary()).poly(); }

// random homogeneous Lie element as a combination of LS commutators
NcPoly random_lie(std::mt19937& rng, long degree) {
  auto words = generate_ls_words(binary(), degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  NcPoly acc(&binary());
  for (const Word& w : words) acc += expand(standard_bracketing(w)) * Rat(coeff(rng));
  return acc;
}

}  // namespace

TEST_CASE("parser") {
  CHECK(P("[x,y]").to_string() == "xy - yx");
  CHECK(P("2*[x,[x,y]] - [y,x]").term_count() == 5);
  CHECK(P(" [ x , y ] ").to_string() == "xy - yx");
  CHECK(P("1/2*x + 1/2*x").to_string() == "x");
  CHECK(P("x - x").to_string() == "0");
  CHECK(P("-x + y").to_string() == "-x + y");

  CHECK_THROWS_AS(P("[x,"), parse_error);
  CHECK_THROWS_AS(P("[x"), parse_error);
  CHECK_THROWS_AS(P("q"), parse_error);
  CHECK_THROWS_AS(P("2*"), parse_error);
  CHECK_THROWS_AS(P("x y"), parse_error);
  try {
    P("[x,");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.offset == 3);
  }
}

TEST_CASE("multiplication and bracket") {
  NcPoly x = P("x"), y = P("y");
  CHECK(multiply(x, y).to_string() == "xy");
  CHECK(bracket(x, y).to_string() == "xy - yx");
  CHECK(bracket(bracket(x, y), y).to_string() == "xyy - 2*yxy + yyx");
  CHECK(bracket(x, x).is_zero());
  NcPoly mixed = P("x + [x,y]");
  CHECK(bracket(mixed, mixed).is_zero());

  GradedAlphabet other({{"y", 1}, {"x", 1}});
  CHECK_THROWS_AS(multiply(x, NcPoly::letter(&other, 0)), std::invalid_argument);
}

TEST_CASE("leading data") {
  NcPoly p = P("[x,y] + x");
  CHECK(p.degree() == 2);
  // a prefix beats its extensions, so the short word leads here
  CHECK(p.leading_word().to_string() == "x");
  CHECK(p.leading_part().to_string() == "xy - yx");
  CHECK(P("[x,y]").leading_word().to_string() == "xy");
  CHECK(P("x + y").leading_part().to_string() == "x + y");
  CHECK_THROWS_AS(NcPoly::zero(&binary()).degree(), std::domain_error);
}

TEST_CASE("expansion") {
  CHECK(expand(standard_bracketing(Word::parse(binary(), "xy"))).to_string() == "xy - yx");
  CHECK(expand(standard_bracketing(Word::parse(binary(), "xxy"))).to_string() == "xxy - 2*xyx + yxx");
}

TEST_CASE("LS expansions are triangular with unit leading coefficient") {
  for (long n = 1; n <= 8; ++n) {
    for (const Word& w : generate_ls_words(binary(), n)) {
      NcPoly e = expand(standard_bracketing(w));
      CHECK(e.leading_word() == w);
      CHECK(e.coefficient(w) == 1);
    }
  }
}

TEST_CASE("Jacobi and antisymmetry on random triples") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> deg(1, 2);
  for (int trial = 0; trial < 60; ++trial) {
    NcPoly a = random_lie(rng, deg(rng));
    NcPoly b = random_lie(rng, deg(rng));
    NcPoly c = random_lie(rng, deg(rng));
    CHECK((bracket(a, b) + bracket(b, a)).is_zero());
    NcPoly jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("LS decomposition") {
  auto d1 = ls_decompose(P("[x,y]"));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].first.to_string() == "xy");
  CHECK(d1[0].second == 1);

  auto d2 = ls_decompose(P("[[x,y],y]"));
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].first.to_string() == "xyy");

  CHECK_THROWS_AS(ls_decompose(multiply(P("x"), P("y")) + multiply(P("y"), P("x"))), not_lie_error);
  // the symmetric square x*x is not Lie either
  CHECK_THROWS_AS(ls_decompose(multiply(P("x"), P("x"))), not_lie_error);
}

TEST_CASE("LS decomposition round-trips random elements") {
  std::mt19937 rng(7);
  for (long degree = 1; degree <= 8; ++degree) {
    auto words = generate_ls_words(binary(), degree);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<std::pair<Word, Rat>> combo;
    NcPoly acc(&binary());
    for (const Word& w : words) {
      Rat c(coeff(rng));
      if (c == 0) continue;
      combo.push_back({w, c});
      acc += expand(standard_bracketing(w)) * c;
    }
    auto back = ls_decompose(acc);
    CHECK(back == combo);
  }
}

TEST_CASE("decomposition handles nonhomogeneous input per component") {
  NcPoly p = P("[x,y] + x + 3*[[x,y],y]");
  auto combo = ls_decompose(p);
  REQUIRE(combo.size() == 3);
  LieElement rebuilt = LieElement::from_ls_combination(&binary(), combo);
  CHECK(rebuilt.poly() == p);
}

TEST_CASE("expanded LS commutators have full rank") {
  for (long n = 1; n <= 10; ++n) {
    WordTable table(binary(), n);
    RowSpace<QField> space(table.count(n));
    long rank = 0;
    for (const Word& w : generate_ls_words(binary(), n)) {
      NcPoly e = expand(standard_bracketing(w));
      std::vector<Rat> v(table.count(n), Rat(0));
      for (const auto& [word, c] : e.terms()) v[table.id_of(word)] = c;
      if (space.insert(std::move(v))) ++rank;
    }
    CHECK(Int(rank) == witt_dimension(2, n));
  }
}

TEST_CASE("Lie text round-trips through the grammar") {
  for (const char* expr : {"[x,y]", "2*[x,[x,y]] - [y,x]", "x + y", "1/3*[x,y] - 2*y"}) {
    LieElement e = parse_expression(expr, binary());
    LieElement back = parse_expression(e.to_lie_text(), binary());
    CHECK(back.poly() == e.poly());
  }
}
