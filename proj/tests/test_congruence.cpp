#include <catch2/catch_amalgamated.hpp>

#include "cfinj/congruence.hpp"
#include "test_support.hpp"

using namespace cfinj;
using namespace cfinj::test;

TEST_CASE("index values", "[congruence]") {
  CHECK(index_hom(kShift1) == -1);
  CHECK(index_hom(kBack1) == 1);
  CHECK(index_hom(kShift1 * kBack1) == 0);
  CHECK(index_hom(kId) == 0);
  CHECK(index_hom(kEps0) == 0);
}

TEST_CASE("index is additive on every containment branch",
          "[congruence][property]") {
  std::mt19937_64 rng(0xadd1);
  for (Branch branch : {Branch::forward, Branch::backward, Branch::overlap,
                        Branch::disjoint}) {
    for (int i = 0; i < 500; ++i) {
      auto const [a, b] = random_branch_pair(rng, branch);
      REQUIRE(in_branch(branch, a, b));
      CHECK(index_hom(a * b) == index_hom(a) + index_hom(b));
    }
  }
  for (int i = 0; i < 2000; ++i) {
    CofiniteInjection const a = random_element(rng);
    CofiniteInjection const b = random_element(rng);
    CHECK(index_hom(a * b) == index_hom(a) + index_hom(b));
  }
}

TEST_CASE("every integer in [-20, 20] is an index", "[congruence]") {
  for (integer n = -20; n <= 20; ++n) {
    CHECK(index_hom(pow(kShift1, -n)) == n);
  }
}

TEST_CASE("equal-index congruence", "[congruence]") {
  CHECK(d_equiv(kEps0, kTrans01));
  CHECK_FALSE(d_equiv(kShift1, kBack1));
  CHECK(d_equiv(kShift1, kShift1 * kEps0));
}

TEST_CASE("least group congruence witnesses", "[congruence]") {
  CHECK(sigma_related(kEps0, kId) == kEps0);
  CHECK(sigma_related(kTrans01, kId) ==
        idempotent_on_complement(FiniteSet({0, 1})));
  CHECK(sigma_related(kShift1, kId) == std::nullopt);
  CHECK(sigma_related(kId, kId) == kId);
}

TEST_CASE("witness route matches the index route", "[congruence][property]") {
  std::mt19937_64 rng(0x51f3);
  for (int i = 0; i < 2000; ++i) {
    CofiniteInjection const a = random_element(rng);
    CofiniteInjection const b = random_element(rng);
    auto const witness = sigma_related(a, b);
    CHECK(witness.has_value() == d_equiv(a, b));
    if (witness) {
      CHECK(witness->is_idempotent());
      CHECK(a * *witness == b * *witness);
    }
  }
}

TEST_CASE("unit representative construction", "[congruence]") {
  {
    auto const [alpha, eps] = unit_representative(kEps0);
    CHECK(alpha == kId);
    CHECK(eps == kEps0);
  }
  {
    CofiniteInjection const b({CofiniteInjection::kUndef, 0}, 0);
    auto const [alpha, eps] = unit_representative(b);
    CHECK(alpha == kTrans01);
    CHECK(eps == idempotent_on_complement(FiniteSet({1})));
    CHECK(alpha * eps == b * eps);
  }
  CHECK_THROWS_AS(unit_representative(kShift1), IndexNonzero);
  CHECK_THROWS_AS(unit_representative(kBack1), IndexNonzero);
}

TEST_CASE("unit representative properties", "[congruence][property]") {
  std::mt19937_64 rng(0x0347);
  for (int i = 0; i < 2000; ++i) {
    CofiniteInjection a = random_element(rng);
    if (index_hom(a) != 0) {
      CHECK_THROWS_AS(unit_representative(a), IndexNonzero);
      continue;
    }
    auto const [alpha, eps] = unit_representative(a);
    CHECK(alpha.classify().unit);
    CHECK(eps.is_idempotent());
    CHECK(alpha * eps == a * eps);
    CHECK(sigma_related(alpha, a).has_value());
  }
}

TEST_CASE("any hole matching gives a congruent unit", "[congruence]") {
  // The ascending matching is a canonical choice, not a necessity: filling
  // the domain holes against the descending range holes works as well.
  CofiniteInjection const b(
      {CofiniteInjection::kUndef, CofiniteInjection::kUndef, 0}, 0);
  FiniteSet const holes = b.domain_complement();
  FiniteSet const targets = b.range_complement();
  REQUIRE(holes.size() == 2);
  std::vector<integer> table = b.table();
  for (std::size_t i = 0; i < 2; ++i) {
    table[static_cast<std::size_t>(holes.elements()[i])] =
        targets.elements()[1 - i];
  }
  CofiniteInjection const alt(std::move(table), 0);
  CHECK(alt.classify().unit);
  CofiniteInjection const eps = idempotent_on_complement(targets);
  CHECK(alt * eps == b * eps);
  CHECK(alt != unit_representative(b).first);
}

TEST_CASE("translation equations", "[congruence]") {
  using List = std::vector<CofiniteInjection>;
  CHECK(solve_translation(Side::right, kEps0, kEps0) == List{kId, kEps0});
  CHECK(solve_translation(Side::right, kId, kTrans01) == List{kTrans01});
  CHECK(solve_translation(Side::right, kShift1, kShift1) ==
        List{kId, kEps0});
  CHECK(solve_translation(Side::right, kShift1, kId) == List{kBack1});
  // dom(b) must fit inside dom(a).
  CHECK(solve_translation(Side::right, kEps0, kId).empty());
  CHECK(solve_translation(Side::left, kShift1, kShift1) == List{kId});
  CHECK(solve_translation(Side::left, kBack1, kBack1) == List{kId, kEps0});
  // ran(b) must fit inside ran(a) on the left.
  CHECK(solve_translation(Side::left, kShift1, kId).empty());
  CHECK(solve_translation(Side::left, kBack1, kId) == List{kShift1});
}

TEST_CASE("solution sets verify and match the counting formula",
          "[congruence][property]") {
  // Solution sets grow like sum C(a,j)C(b,j)j!, so the inputs are drawn
  // from a pool with small complements to keep the sets enumerable.
  auto const pool = enumerate_normal_forms(4, 2, 3);
  std::mt19937_64 rng(0x2413);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 300; ++i) {
    CofiniteInjection const& a = pool[pick(rng)];
    CofiniteInjection const& b = pool[pick(rng)];
    for (Side side : {Side::right, Side::left}) {
      auto const solutions = solve_translation(side, a, b);
      for (auto const& s : solutions) {
        if (side == Side::right) {
          CHECK(a * s == b);
        } else {
          CHECK(s * a == b);
        }
      }
      for (std::size_t j = 1; j < solutions.size(); ++j) {
        CHECK(canonical_less(solutions[j - 1], solutions[j]));
      }
      if (!solutions.empty() && side == Side::right) {
        CHECK(static_cast<integer>(solutions.size()) ==
              partial_injection_count(
                  a.range_complement().size(),
                  (a.inverse() * b).range_complement().size()));
      }
    }
  }
}
