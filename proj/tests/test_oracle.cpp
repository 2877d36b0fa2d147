#include <doctest.h>

#include "heisid/oracle.hpp"
#include "support.hpp"

using namespace heisid;
using test::triple3;

TEST_CASE("shortest identity product, lexicographically first") {
  GeneratorSet const gens({triple3(0, 0, 5), triple3(0, 0, -3)});
  auto const         r = bfs_identity(gens, {8, true, 0});
  REQUIRE(r.status == SearchStatus::found);
  CHECK(*r.sequence == ProductSequence{0, 0, 0, 1, 1, 1, 1, 1});

  auto const capped = bfs_identity(gens, {7, true, 0});
  CHECK(capped.status == SearchStatus::not_found);
}

TEST_CASE("a generator equal to the identity is found at length one") {
  GeneratorSet const gens({triple3(1, 1, 1), HeisTriple::identity(3)});
  auto const         r = bfs_identity(gens, {3, true, 0});
  REQUIRE(r.status == SearchStatus::found);
  CHECK(*r.sequence == ProductSequence{1});
}

TEST_CASE("state budget") {
  GeneratorSet const gens({triple3(1, 0, 0), triple3(0, 1, 0)});
  auto const         r = bfs_identity(gens, {10, true, 5});
  CHECK(r.status == SearchStatus::budget_exhausted);
  CHECK(r.states == 5);
  CHECK_THROWS(bfs_identity(gens, {0, true, 0}));
}

TEST_CASE("dedup does not change the answer") {
  test::Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorSet const gens = test::random_set(rng, 3, test::uniform(rng, 1, 3), -2, 2);
    auto const         with    = bfs_identity(gens, {5, true, 0});
    auto const         without = bfs_identity(gens, {5, false, 0});
    CHECK(with.status == without.status);
    CHECK(with.sequence == without.sequence);
    CHECK((with.status == SearchStatus::found) == test::brute_identity(gens, 5));
    if (with.sequence) {
      CHECK(fold_product(gens, *with.sequence).is_identity());
    }
  }
}

TEST_CASE("found sequences are shortest") {
  test::Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorSet const gens = test::random_set(rng, 3, test::uniform(rng, 2, 3), -2, 2);
    auto const         r    = bfs_identity(gens, {5, true, 0});
    if (r.sequence) {
      std::size_t const len = r.sequence->size();
      bool const shorter = len > 1 && test::brute_identity(gens, len - 1);
      CHECK_FALSE(shorter);
    }
  }
}
