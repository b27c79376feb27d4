#include <catch2/catch_amalgamated.hpp>

#include "cfinj/green.hpp"
#include "test_support.hpp"

using namespace cfinj;
using namespace cfinj::test;

TEST_CASE("relation tests compare complements", "[green]") {
  CHECK(related(GreenRelation::R, kShift1, kId));
  CHECK_FALSE(related(GreenRelation::L, kShift1, kId));
  CHECK_FALSE(related(GreenRelation::H, kShift1, kId));
  CHECK(related(GreenRelation::D, kShift1, kEps0));
  CHECK(related(GreenRelation::J, kShift1, kEps0));
  CHECK(related(GreenRelation::L, kEps0, kShift1));
  CHECK(related(GreenRelation::H, kTrans01, kId));
}

TEST_CASE("relations agree with the idempotent definitions",
          "[green][property]") {
  std::mt19937_64 rng(0x93ee);
  for (int i = 0; i < 2000; ++i) {
    CofiniteInjection const a = random_element(rng);
    CofiniteInjection const b = random_element(rng);
    bool const r = related(GreenRelation::R, a, b);
    bool const l = related(GreenRelation::L, a, b);
    CHECK(r == (a * a.inverse() == b * b.inverse()));
    CHECK(l == (a.inverse() * a == b.inverse() * b));
    CHECK(related(GreenRelation::H, a, b) == (r && l));
    CHECK(related(GreenRelation::D, a, b));
    CHECK(related(GreenRelation::J, a, b));
  }
}

TEST_CASE("order-preserving matching between complements", "[green]") {
  CHECK(h_class_element(FiniteSet(), FiniteSet()) == kId);
  CHECK(h_class_element(FiniteSet(), FiniteSet({0})) == kShift1);
  CHECK(h_class_element(FiniteSet({0}), FiniteSet({1})) ==
        CofiniteInjection({CofiniteInjection::kUndef, 0}, 0));
  CHECK(h_class_element(FiniteSet({0}), FiniteSet()) == kBack1);
  CHECK(h_class_element(FiniteSet({1, 3}), FiniteSet({1, 3})) ==
        idempotent_on_complement(FiniteSet({1, 3})));
}

TEST_CASE("matching has the prescribed complements and is increasing",
          "[green][property]") {
  std::mt19937_64 rng(0x9c1a);
  std::bernoulli_distribution pick(0.3);
  auto random_set = [&] {
    std::vector<integer> points;
    for (integer x = 0; x < 10; ++x) {
      if (pick(rng)) {
        points.push_back(x);
      }
    }
    return FiniteSet(std::move(points));
  };
  for (int i = 0; i < 2000; ++i) {
    FiniteSet const dom_c = random_set();
    FiniteSet const ran_c = random_set();
    CofiniteInjection const h = h_class_element(dom_c, ran_c);
    CHECK(h.domain_complement() == dom_c);
    CHECK(h.range_complement() == ran_c);
    std::optional<integer> last;
    for (integer n = 0; n < h.threshold() + 3; ++n) {
      auto const v = h.apply(n);
      if (!v) {
        continue;
      }
      if (last) {
        CHECK(*v > *last);
      }
      last = v;
    }
  }
}

TEST_CASE("the D witness joins the R class of one side to the L class of "
          "the other",
          "[green]") {
  CHECK(d_witness(kId, kId) == kId);
  CHECK(d_witness(kId, kEps0) == kShift1);
  CHECK(d_witness(kEps0, kShift1) == kEps0);
  std::mt19937_64 rng(0xd217);
  for (int i = 0; i < 2000; ++i) {
    CofiniteInjection const a = random_element(rng);
    CofiniteInjection const b = random_element(rng);
    CofiniteInjection const g = d_witness(a, b);
    CHECK(related(GreenRelation::R, a, g));
    CHECK(related(GreenRelation::L, b, g));
  }
}

TEST_CASE("factorization through any element", "[green]") {
  {
    auto const [g, d] = simple_factorization(kId, kShift1);
    CHECK(g == kId);
    CHECK(d == kShift1);
    CHECK(g * kId * d == kShift1);
  }
  {
    auto const [g, d] = simple_factorization(kShift1, kId);
    CHECK(g == kId);
    CHECK(d == kBack1);
    CHECK(g * kShift1 * d == kId);
  }
  {
    auto const [g, d] = simple_factorization(kEps0, kTrans01);
    CHECK(g * kEps0 * d == kTrans01);
  }
  std::mt19937_64 rng(0xfac2);
  for (int i = 0; i < 2000; ++i) {
    CofiniteInjection const a = random_element(rng);
    CofiniteInjection const b = random_element(rng);
    auto const [g, d] = simple_factorization(a, b);
    CHECK(g * a * d == b);
    CHECK(g.domain_complement() == b.domain_complement());
    CHECK(g.range_complement() == a.domain_complement());
  }
}

TEST_CASE("separating a unit from the identity", "[green]") {
  {
    auto const [eps, x0] = separating_idempotent(kTrans01);
    CHECK(eps == kEps0);
    CHECK(x0 == 0);
    CHECK_FALSE(related(GreenRelation::H, eps, eps * kTrans01));
    CHECK((eps * kTrans01).domain_complement() == FiniteSet({0}));
    CHECK((eps * kTrans01).range_complement() == FiniteSet({1}));
  }
  {
    CofiniteInjection const swap12({0, 2, 1}, 0);
    auto const [eps, x0] = separating_idempotent(swap12);
    CHECK(eps == idempotent_on_complement(FiniteSet({1})));
    CHECK(x0 == 1);
  }
  CHECK_THROWS_AS(separating_idempotent(kId), IsIdentity);
  CHECK_THROWS_AS(separating_idempotent(kShift1), NotAUnit);
  CHECK_THROWS_AS(separating_idempotent(kEps0), NotAUnit);
  std::mt19937_64 rng(0x5e9a);
  for (int i = 0; i < 2000; ++i) {
    CofiniteInjection const u = random_nonidentity_unit(rng);
    auto const [eps, x0] = separating_idempotent(u);
    CHECK(u.apply(x0) != x0);
    for (integer n = 0; n < x0; ++n) {
      CHECK(u.apply(n) == n);
    }
    CHECK_FALSE(related(GreenRelation::H, eps, eps * u));
  }
}
