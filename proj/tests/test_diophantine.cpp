#include <doctest.h>

#include <functional>

#include "heisid/diophantine.hpp"
#include "support.hpp"

using namespace heisid;

namespace {

  std::vector<Rational> ints(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) {
      out.emplace_back(x);
    }
    return out;
  }

  //! Any y in {0..bound}^n, not all zero, with A y = 0 and forced entries
  //! positive. Plain odometer enumeration.
  bool box_has_solution(DiophantineSystem const& sys, long bound) {
    std::size_t const n = sys.num_vars();
    std::vector<long> y(n, 0);
    while (true) {
      std::size_t k = 0;
      while (k < n && y[k] == bound) {
        y[k++] = 0;
      }
      if (k == n) {
        return false;
      }
      ++y[k];
      bool ok = true;
      for (auto i : sys.forced) {
        ok = ok && y[i] >= 1;
      }
      for (std::size_t r = 0; ok && r < sys.A.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < n; ++c) {
          s += sys.A(r, c) * Rational(y[c]);
        }
        ok = s.is_zero();
      }
      if (ok) {
        return true;
      }
    }
  }

}  // namespace

TEST_CASE("lp_solve finds a known optimum") {
  // min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6  -> (8/5, 6/5)
  std::vector<LinearConstraint> cons{{ints({1, 2}), Rational(4)},
                                     {ints({3, 1}), Rational(6)}};
  auto const r = lp_solve(2, cons, ints({-1, -1}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.point[0] == Rational(Integer(8), Integer(5)));
  CHECK(r.point[1] == Rational(Integer(6), Integer(5)));
}

TEST_CASE("lp_solve reports infeasible and unbounded problems") {
  // x >= 3 and x <= 1
  std::vector<LinearConstraint> infeasible{{ints({-1}), Rational(-3)},
                                           {ints({1}), Rational(1)}};
  CHECK(lp_solve(1, infeasible).status == LpStatus::infeasible);
  CHECK_FALSE(lp_feasible(1, infeasible).has_value());

  std::vector<LinearConstraint> open{{ints({1, -1}), Rational(1)}};
  CHECK(lp_solve(2, open, ints({-1, 0})).status == LpStatus::unbounded);

  CHECK_THROWS(lp_solve(2, {{ints({1}), Rational(0)}}));
}

TEST_CASE("lp_feasible handles equalities and redundant rows") {
  // x + y = 2 written twice, x - y = 0
  std::vector<LinearConstraint> cons{
      {ints({1, 1}), Rational(2)},  {ints({-1, -1}), Rational(-2)},
      {ints({2, 2}), Rational(4)},  {ints({-2, -2}), Rational(-4)},
      {ints({1, -1}), Rational(0)}, {ints({-1, 1}), Rational(0)}};
  auto const p = lp_feasible(2, cons);
  REQUIRE(p.has_value());
  CHECK((*p)[0] == Rational(1));
  CHECK((*p)[1] == Rational(1));
}

TEST_CASE("relaxation rows") {
  DiophantineSystem const sys(QMatrix{{Rational(1), Rational(-1), Rational(0)}}, {2});
  auto const              rows = relaxation(sys);
  // Two for A y = 0, one for the sum, one for the forced index.
  REQUIRE(rows.size() == 4);
  CHECK(rows[2].coeffs == ints({-1, -1, -1}));
  CHECK(rows[2].rhs == Rational(-1));
  CHECK(rows[3].coeffs == ints({0, 0, -1}));
  CHECK_THROWS(DiophantineSystem(QMatrix{{Rational(1)}}, {1}));
}

TEST_CASE("small systems") {
  // 2 y0 - 3 y1 = 0  ->  (3, 2)
  DiophantineSystem const sys(QMatrix{{Rational(2), Rational(-3)}});
  auto const              y = solve_homogeneous(sys);
  REQUIRE(y.has_value());
  CHECK(*y == IntSolution{3, 2});

  // All coefficients positive: only y = 0.
  CHECK_FALSE(solve_homogeneous(DiophantineSystem(QMatrix{{Rational(1), Rational(2)}})));

  // A zero column is a solution by itself.
  auto const z = solve_homogeneous(DiophantineSystem(QMatrix{{Rational(1), Rational(0)}}));
  REQUIRE(z.has_value());
  CHECK(*z == IntSolution{0, 1});

  // Rational coefficients: y0/2 - y1/3 = 0  ->  (2, 3).
  auto const q = solve_homogeneous(DiophantineSystem(
      QMatrix{{Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(3))}}));
  REQUIRE(q.has_value());
  CHECK(*q == IntSolution{2, 3});

  // Forcing an index that cannot take part.
  DiophantineSystem const forced(
      QMatrix{{Rational(1), Rational(0), Rational(1)}}, {2});
  auto const f = solve_homogeneous(forced);
  CHECK_FALSE(f.has_value());
}

TEST_CASE("solver agrees with box enumeration") {
  test::Rng rng(31);
  int       yes = 0, no = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const m = test::uniform(rng, 1, 2), n = test::uniform(rng, 1, 4);
    QMatrix           A(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        A(r, c) = test::random_rational(rng, -2, 2, 2);
      }
    }
    std::set<std::size_t> forced;
    if (test::uniform(rng, 0, 2) == 0) {
      forced.insert(test::uniform(rng, 0, n - 1));
    }
    DiophantineSystem const sys(A, forced);
    auto const              y = solve_homogeneous(sys);
    if (y) {
      ++yes;
      CHECK(is_solution(sys, *y));
      // Independent recheck of the equations.
      for (std::size_t r = 0; r < m; ++r) {
        Rational s;
        for (std::size_t c = 0; c < n; ++c) {
          s += A(r, c) * Rational((*y)[c]);
        }
        CHECK(s.is_zero());
      }
    } else {
      ++no;
      CHECK_FALSE(box_has_solution(sys, 6));
    }
  }
  CHECK(yes > 20);
  CHECK(no > 20);
}

TEST_CASE("solutions are primitive") {
  test::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    QMatrix A(1, 3);
    for (std::size_t c = 0; c < 3; ++c) {
      A(0, c) = Rational(test::uniform(rng, -4, 4));
    }
    auto const y = solve_homogeneous(DiophantineSystem(A));
    if (y) {
      Integer g = 0;
      for (auto const& v : *y) {
        g = gcd(g, v);
      }
      CHECK(g == 1);
    }
  }
}
