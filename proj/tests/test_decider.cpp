#include <doctest.h>

#include <algorithm>

#include "heisid/decider.hpp"
#include "support.hpp"

using namespace heisid;
using test::triple3;

namespace {

  GeneratorSet example() {
    return GeneratorSet({triple3(2, 7, 20), triple3(3, -2, 20), triple3(-4, -6, 20),
                         triple3(-1, 1, 20)});
  }

  //! m^e by repeated squaring on plain matrices.
  QMatrix reference_pow(QMatrix m, Integer e) {
    QMatrix acc = QMatrix::identity(m.rows());
    while (e > 0) {
      if (e % 2 == 1) {
        acc = test::reference_mul(acc, m);
      }
      m = test::reference_mul(m, m);
      e /= 2;
    }
    return acc;
  }

  //! Witness product computed on matrices, block by block.
  QMatrix reference_witness(GeneratorSet const& gens, Witness const& w) {
    QMatrix acc = QMatrix::identity(gens.n());
    for (auto const& block : w.blocks) {
      acc = test::reference_mul(acc, reference_pow(test::reference_runs(gens, block.runs),
                                                   block.repeat));
    }
    return acc;
  }

  //! Maximal cliques by checking every subset.
  std::vector<std::vector<std::size_t>> reference_cliques(GeneratorSet const& gens) {
    std::size_t const                     r = gens.size();
    std::vector<std::vector<std::size_t>> cliques;
    auto is_clique = [&](unsigned mask) {
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
          if ((mask >> i & 1) && (mask >> j & 1) && !commutes(gens[i], gens[j])) {
            return false;
          }
        }
      }
      return true;
    };
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      if (!is_clique(mask)) {
        continue;
      }
      bool maximal = true;
      for (std::size_t k = 0; k < r && maximal; ++k) {
        if (!(mask >> k & 1) && is_clique(mask | 1u << k)) {
          maximal = false;
        }
      }
      if (maximal) {
        std::vector<std::size_t> c;
        for (std::size_t k = 0; k < r; ++k) {
          if (mask >> k & 1) {
            c.push_back(k);
          }
        }
        cliques.push_back(c);
      }
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
  }

}  // namespace

TEST_CASE("example instance: corners of the two fragments") {
  GeneratorSet const gens = example();
  // g0 g1 g2 g3: corner 20*4 + 2*(-2) + 5*(-6) + 1*1 = 47.
  CHECK(product_corner(gens, {0, 1, 2, 3}) == triple3(0, 0, 47));
  RunSequence const grouped{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(evaluate_runs(gens, grouped) == triple3(0, 0, -22));
  Witness const w{{{{{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 22}, {grouped, 47}}};
  CHECK(verify_witness(gens, w));
  CHECK(reference_witness(gens, w).is_identity());
}

TEST_CASE("example instance: decide") {
  GeneratorSet const gens = example();
  Verdict const      v    = decide(gens);
  REQUIRE(v.yes());
  REQUIRE(v.witness.has_value());
  CHECK(v.route == Route::noncommuting);
  CHECK(verify_witness(gens, *v.witness));
  CHECK(reference_witness(gens, *v.witness).is_identity());
}

TEST_CASE("sign fragments and their combination on the example") {
  GeneratorSet const gens = example();
  RunSequence const  seq{{0, 1}, {1, 1}, {2, 1}, {3, 1}};
  SignFragment const pos = build_sign_witness(gens, seq, 0, 1, +1);
  CHECK(pos.steps == 0);
  CHECK(pos.corner == Rational(47));
  SignFragment const neg = build_sign_witness(gens, seq, 0, 1, -1);
  CHECK(neg.corner == Rational(-22));
  CHECK(neg.scale == 4);
  CHECK(evaluate_runs(gens, neg.runs) == triple3(0, 0, -22));
  Witness const w = combine_signs(pos, neg);
  REQUIRE(w.blocks.size() == 2);
  CHECK(w.blocks[0].repeat == 22);
  CHECK(w.blocks[1].repeat == 47);
  CHECK(verify_witness(gens, w));
  CHECK(w.length() == Integer(22 * 4 + 47 * 16));
}

TEST_CASE("commuting route") {
  GeneratorSet const gens({triple3(0, 0, 5), triple3(0, 0, -3)});
  auto const         w = decide_commuting(gens, {0, 1});
  REQUIRE(w.has_value());
  CHECK(*w == Witness::flat({{0, 3}, {1, 5}}));
  Verdict const v = decide(gens);
  CHECK(v.yes());
  CHECK(v.route == Route::commuting);
  CHECK(v.via == std::vector<std::size_t>{0, 1});

  CHECK_THROWS(decide_commuting(example(), {0, 1}));
}

TEST_CASE("cliques on a small graph") {
  GeneratorSet const gens({triple3(1, 2, 0), triple3(2, 4, 1), triple3(1, 0, 0)});
  auto const         cliques = commuting_cliques(gens);
  CHECK(cliques == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
}

TEST_CASE("cliques agree with subset enumeration") {
  test::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const r = test::uniform(rng, 1, 7);
    // Few distinct directions so that commuting pairs are common.
    std::vector<HeisTriple> gs;
    for (std::size_t k = 0; k < r; ++k) {
      long const s = test::uniform(rng, -2, 2), t = test::uniform(rng, -2, 2);
      long const dir = test::uniform(rng, 0, 2);
      gs.push_back(dir == 0   ? triple3(s, s, t)
                   : dir == 1 ? triple3(s, 2 * s, t)
                              : triple3(s, -s, t));
    }
    GeneratorSet const gens(gs);
    CHECK(commuting_cliques(gens) == reference_cliques(gens));
  }
}

TEST_CASE("trivial verdicts") {
  CHECK_FALSE(decide(GeneratorSet({triple3(1, 0, 0)})).yes());
  CHECK(decide(GeneratorSet({HeisTriple::identity(3)})).yes());
  CHECK_FALSE(decide(GeneratorSet({triple3(0, 0, 1)})).yes());
  CHECK(decide(GeneratorSet({triple3(1, 0, 0), triple3(-1, 0, 0)})).yes());
  // Non-commuting pair with zero-sum support: (1,0,0)(0,1,0)(-1,0,0)(0,-1,0)
  // yields corners of both signs.
  GeneratorSet const gens({triple3(1, 0, 0), triple3(0, 1, 0), triple3(-1, 0, 0),
                           triple3(0, -1, 0)});
  Verdict const      v = decide(gens);
  REQUIRE(v.yes());
  CHECK(reference_witness(gens, *v.witness).is_identity());
}

TEST_CASE("noncommuting pair") {
  GeneratorSet const gens = example();
  auto const         runs = decide_noncommuting_pair(gens, 0, 1);
  REQUIRE(runs.has_value());
  HeisTriple const p = evaluate_runs(gens, *runs);
  CHECK(p.is_central());
  CHECK_THROWS(decide_noncommuting_pair(GeneratorSet({triple3(1, 1, 0), triple3(2, 2, 0)}),
                                        0, 1));
  CHECK_FALSE(decide_noncommuting_pair(
      GeneratorSet({triple3(1, 0, 0), triple3(0, 1, 0)}), 0, 1));
}

TEST_CASE("witness verification rejects tampering") {
  GeneratorSet const gens({triple3(0, 0, 5), triple3(0, 0, -3)});
  CHECK(verify_witness(gens, Witness::flat({{0, 3}, {1, 5}})));
  CHECK_FALSE(verify_witness(gens, Witness::flat({{0, 3}, {1, 4}})));
  CHECK_FALSE(verify_witness(gens, Witness::flat({{0, 0}, {1, 0}})));
  CHECK_FALSE(verify_witness(gens, Witness::flat({{2, 1}})));
  CHECK_FALSE(verify_witness(gens, Witness{}));
}

TEST_CASE("sign fragments on random instances") {
  test::Rng rng(42);
  int       built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    GeneratorSet const gens = test::random_set(rng, test::uniform(rng, 3, 4),
                                               test::uniform(rng, 2, 4), -3, 3, 2);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (commutes(gens[i], gens[j])) {
          continue;
        }
        auto const runs = decide_noncommuting_pair(gens, i, j);
        if (!runs) {
          continue;
        }
        for (int sign : {+1, -1}) {
          SignFragment const f = build_sign_witness(gens, *runs, i, j, sign);
          QMatrix const      m = test::reference_runs(gens, f.runs);
          HeisTriple const   t = to_triple(m);
          CHECK(t.is_central());
          CHECK(t.c() == f.corner);
          CHECK((f.corner.is_zero() || f.corner.sign() == sign));
          ++built;
        }
      }
    }
  }
  CHECK(built > 20);
}

TEST_CASE("decide against exhaustive search") {
  test::Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    GeneratorSet const gens =
        test::random_set(rng, 3, test::uniform(rng, 1, 3), -2, 2);
    Verdict const v = decide(gens);
    if (test::brute_identity(gens, 5)) {
      CHECK(v.yes());
    }
    if (v.yes()) {
      REQUIRE(v.witness.has_value());
      CHECK(reference_witness(gens, *v.witness).is_identity());
    }
  }
}

TEST_CASE("verdict does not depend on the number of jobs") {
  test::Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorSet const gens = test::random_set(rng, 3, test::uniform(rng, 2, 8), -3, 3, 2);
    Verdict const      a    = decide(gens, {1});
    Verdict const      b    = decide(gens, {4});
    CHECK(a.answer == b.answer);
    CHECK(a.route == b.route);
    CHECK(a.via == b.via);
    CHECK(a.witness == b.witness);
  }
}
