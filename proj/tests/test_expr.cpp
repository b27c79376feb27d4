#include <catch2/catch_amalgamated.hpp>

#include "cfinj/expr.hpp"
#include "test_support.hpp"

using namespace cfinj;
using namespace cfinj::test;

TEST_CASE("parse builds the expected trees", "[expr]") {
  CHECK(parse("shift(1) * shift(1)'") ==
        Expr::compose(Expr::literal(kShift1),
                      Expr::invert(Expr::literal(kShift1))));
  CHECK(parse("idem{0}") == Expr::literal(kEps0));
  CHECK(parse("perm(0 1) * idem{0,1}") ==
        Expr::compose(Expr::literal(kTrans01),
                      Expr::literal(idempotent_on_complement(
                          FiniteSet({0, 1})))));
  CHECK(parse("shift(2)^-3") ==
        Expr::power(Expr::literal(CofiniteInjection::shift_map(2)), -3));
  CHECK(parse("id") == Expr::literal(kId));
  CHECK(parse("idem{}") == Expr::literal(kId));
}

TEST_CASE("whitespace never matters between tokens", "[expr]") {
  auto const tight = parse("(perm(0 1)*shift(2))^2*idem{0,3}'");
  auto const airy =
      parse("  ( perm ( 0 1 ) * shift ( 2 ) ) ^ 2 * idem { 0 , 3 } '  ");
  CHECK(tight == airy);
  CHECK(eval(tight) == eval(airy));
  CHECK(parse("cfinj{k=1; N=2; t=[0->_, 1->0]}") ==
        parse(" cfinj { k = 1 ; N = 2 ; t = [ 0 -> _ , 1 -> 0 ] } "));
}

TEST_CASE("composition chains are left-associative", "[expr]") {
  auto const e = parse("id * shift(1) * idem{0}");
  REQUIRE(e.kind() == Expr::Kind::compose);
  CHECK(e.lhs() == Expr::compose(Expr::literal(kId),
                                 Expr::literal(kShift1)));
  CHECK(e.rhs() == Expr::literal(kEps0));
}

TEST_CASE("postfix operators bind tighter than composition", "[expr]") {
  CHECK(eval(parse("shift(1)*shift(1)^2")) ==
        CofiniteInjection::shift_map(3));
  CHECK(eval(parse("(shift(1)*shift(1))^2")) ==
        CofiniteInjection::shift_map(4));
  CHECK(eval(parse("shift(1)''")) == kShift1);
  CHECK(eval(parse("shift(1)'^2")) == pow(kBack1, 2));
}

TEST_CASE("evaluation folds to normal forms", "[expr]") {
  CHECK(eval(parse("shift(1) * shift(1)'")) == kId);
  CHECK(eval(parse("shift(1)^3")) == CofiniteInjection::shift_map(3));
  CHECK(eval(parse("idem{0} * perm(0 1)")) ==
        CofiniteInjection({CofiniteInjection::kUndef, 0}, 0));
  CHECK(eval(parse("shift(1)^0")) == kId);
  CHECK(eval(parse("shift(3)^-2")) == pow(CofiniteInjection::shift_map(3),
                                          -2));
  CHECK(eval(parse("perm(0 1)(2 3)")).apply(2) == 3);
  CHECK(eval(parse("cfinj{k=1; N=2; t=[0->_, 1->0]}")) ==
        CofiniteInjection({CofiniteInjection::kUndef, 0}, 1));
}

TEST_CASE("syntax errors carry a position", "[expr]") {
  for (auto const& [text, where] :
       {std::pair<char const*, std::size_t>{"", 0},
        {"shift(", 6},
        {"(id", 3},
        {"id id", 3},
        {"shift(1) *", 10},
        {"^2", 0},
        {"cfinj{k=1}", 9}}) {
    try {
      parse(text);
      FAIL("expected ParseError for: " << text);
    } catch (ParseError const& e) {
      CHECK(e.position == where);
    }
  }
  CHECK_THROWS_AS(parse("shift(99999999999999999999)"), ParseError);
  CHECK_THROWS_AS(parse("shift(1)^'"), ParseError);
}

TEST_CASE("literals that denote no element are invalid input", "[expr]") {
  CHECK_THROWS_AS(parse("perm(0 1)(1 2)"), ValidationError);
  CHECK_THROWS_AS(parse("idem{-1}"), ValidationError);
  CHECK_THROWS_AS(parse("cfinj{k=0; N=2; t=[0->1, 1->1]}"),
                  ValidationError);
  CHECK_THROWS_AS(parse("cfinj{k=0; N=1; t=[0->1]}"), ValidationError);
  CHECK_THROWS_AS(parse("cfinj{k=-3; N=2; t=[0->_, 1->_]}"),
                  ValidationError);
  CHECK_THROWS_AS(parse("cfinj{k=0; N=2; t=[1->0, 0->1]}"),
                  ValidationError);
  CHECK_THROWS_AS(parse("cfinj{k=0; N=3; t=[0->0]}"), ValidationError);
  CHECK(eval(parse("shift(-1)")) == kBack1);
}

TEST_CASE("canonical text output", "[expr]") {
  CHECK(format(kEps0) == "cfinj{k=0; N=1; t=[0->_]}");
  CHECK(format(kId) == "cfinj{k=0; N=0; t=[]}");
  CHECK(format(kShift1) == "cfinj{k=1; N=0; t=[]}");
}

TEST_CASE("format round-trips through parse and eval",
          "[expr][property]") {
  std::mt19937_64 rng(0x2071);
  for (int i = 0; i < 1000; ++i) {
    CofiniteInjection const a = random_element(rng);
    CHECK(eval(parse(format(a))) == a);
    CHECK(format(eval(parse(format(a)))) == format(a));
  }
}
