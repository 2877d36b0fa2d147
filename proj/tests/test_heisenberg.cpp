#include <doctest.h>

#include "heisid/heisenberg.hpp"
#include "support.hpp"

using namespace heisid;
using test::triple3;

TEST_CASE("group law on a small case") {
  HeisTriple const x = triple3(2, 7, 20), y = triple3(3, -2, 20);
  CHECK(x * y == triple3(5, 5, 36));   // 20 + 20 + 2 * (-2)
  CHECK(y * x == triple3(5, 5, 61));   // 20 + 20 + 3 * 7
  CHECK(commutator_form(x, y) == Rational(-25));
  CHECK_FALSE(commutes(x, y));
  CHECK((x * inverse(x)).is_identity());
  CHECK((inverse(x) * x).is_identity());
  CHECK(HeisTriple::identity(5).n() == 5);
}

TEST_CASE("construction rejects bad dimensions") {
  CHECK_THROWS(HeisTriple(QVector(1), QVector(2), Rational(0)));
  CHECK_THROWS(HeisTriple(QVector(), QVector(), Rational(0)));
  CHECK_THROWS(GeneratorSet({}));
  CHECK_THROWS(GeneratorSet({triple3(1, 1, 1), HeisTriple::identity(4)}));
  GeneratorSet const g({triple3(1, 1, 1)});
  CHECK_THROWS_AS(g.at(1), std::out_of_range);
  CHECK_THROWS(power(triple3(1, 1, 1), Integer(0)));
}

TEST_CASE("matrix round trip and shape validation") {
  test::Rng rng(21);
  for (std::size_t n : {3, 4, 6}) {
    HeisTriple const x = test::random_triple(rng, n, -9, 9, 4);
    CHECK(to_matrix(x) == test::reference_matrix(x));
    CHECK(to_triple(to_matrix(x)) == x);
  }
  QMatrix bad = QMatrix::identity(3);
  bad(1, 0)   = Rational(1);
  CHECK_THROWS(to_triple(bad));
  bad       = QMatrix::identity(3);
  bad(1, 1) = Rational(2);
  CHECK_THROWS(to_triple(bad));
  CHECK_THROWS(to_triple(QMatrix::identity(2)));
}

TEST_CASE("compose agrees with matrix multiplication") {
  test::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = test::uniform(rng, 3, 6);
    HeisTriple const  x = test::random_triple(rng, n, -6, 6, 3);
    HeisTriple const  y = test::random_triple(rng, n, -6, 6, 3);
    CHECK(test::reference_matrix(x * y)
          == test::reference_mul(test::reference_matrix(x), test::reference_matrix(y)));
    // Commuting in the group is exactly a vanishing commutator form.
    bool const matrices_commute =
        test::reference_mul(test::reference_matrix(x), test::reference_matrix(y))
        == test::reference_mul(test::reference_matrix(y), test::reference_matrix(x));
    CHECK(commutes(x, y) == matrices_commute);
    CHECK(commutator_form(x, y).is_zero() == matrices_commute);
  }
}

TEST_CASE("closed-form power equals repeated composition") {
  test::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const n = test::uniform(rng, 3, 6);
    HeisTriple const  x = test::random_triple(rng, n, -5, 5, 3);
    long const        m = test::uniform(rng, 1, 40);
    HeisTriple        acc = x;
    for (long k = 1; k < m; ++k) {
      acc = compose(acc, x);
    }
    CHECK(power(x, Integer(m)) == acc);
  }
  // Large exponents stay exact.
  HeisTriple const x = triple3(1, 1, 0);
  Integer const    m("1000000000000000000000");
  CHECK(power(x, m).c() == Rational(Integer(m * (m - 1) / 2)));
}

TEST_CASE("product_corner, fold_product and the matrix product agree") {
  test::Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const  n    = test::uniform(rng, 3, 5);
    std::size_t const  r    = test::uniform(rng, 1, 5);
    GeneratorSet const gens = test::random_set(rng, n, r, -4, 4, 2);
    ProductSequence    seq(test::uniform(rng, 1, 8));
    RunSequence        runs;
    for (auto& s : seq) {
      s = test::uniform(rng, 0, r - 1);
      runs.push_back({s, 1});
    }
    HeisTriple const folded = fold_product(gens, seq);
    CHECK(product_corner(gens, seq) == folded);
    CHECK(evaluate_runs(gens, runs) == folded);
    CHECK(test::reference_matrix(folded) == test::reference_runs(gens, runs));
  }
}

TEST_CASE("evaluate_runs uses powers") {
  test::Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorSet const gens = test::random_set(rng, 4, 3, -3, 3, 2);
    RunSequence        runs;
    for (int k = test::uniform(rng, 1, 4); k > 0; --k) {
      runs.push_back({static_cast<std::size_t>(test::uniform(rng, 0, 2)),
                      Integer(test::uniform(rng, 1, 6))});
    }
    CHECK(test::reference_matrix(evaluate_runs(gens, runs))
          == test::reference_runs(gens, runs));
  }
  GeneratorSet const gens({triple3(1, 2, 3)});
  CHECK(evaluate_runs(gens, {}).is_identity());
  CHECK_THROWS(product_corner(gens, {}));
}
