#ifndef HEISID_DIOPHANTINE_HPP_
#define HEISID_DIOPHANTINE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <set>       // for set
#include <vector>    // for vector

#include "exactmath.hpp"

namespace heisid {

  //! coeffs . y <= rhs
  struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational              rhs;
  };

  enum class LpStatus { optimal, infeasible, unbounded };

  struct LpResult {
    LpStatus              status = LpStatus::infeasible;
    std::vector<Rational> point;  // empty unless status == optimal
  };

  //! Minimizes objective . y subject to the constraints and y >= 0 with an
  //! exact two-phase tableau simplex using Bland's rule. An empty objective
  //! only asks for feasibility (the phase one vertex is returned).
  //!
  //! Every constraint must have exactly `num_vars` coefficients.
  LpResult lp_solve(std::size_t                          num_vars,
                    std::vector<LinearConstraint> const& constraints,
                    std::vector<Rational> const&         objective = {});

  //! A feasible point of {constraints, y >= 0}, or nullopt.
  std::optional<std::vector<Rational>>
  lp_feasible(std::size_t                          num_vars,
              std::vector<LinearConstraint> const& constraints);

  //! A y = 0 over non-negative integers y, where y[i] >= 1 for i in forced.
  struct DiophantineSystem {
    QMatrix               A;
    std::set<std::size_t> forced;

    DiophantineSystem(QMatrix coefficients, std::set<std::size_t> forced = {});

    std::size_t num_vars() const {
      return A.cols();
    }
  };

  using IntSolution = std::vector<Integer>;

  //! True iff y satisfies A y = 0, y >= 0, sum(y) >= 1 and the forced bounds.
  bool is_solution(DiophantineSystem const& sys, IntSolution const& y);

  //! The rows of the rational relaxation: A y <= 0, -A y <= 0,
  //! -sum(y) <= -1 and -y_i <= -1 for every forced i.
  std::vector<LinearConstraint> relaxation(DiophantineSystem const& sys);

  //! A non-trivial non-negative integer solution of the system, or nullopt
  //! when none exists. The rational vertex minimizing sum(y) is scaled by
  //! the lcm of its denominators and divided by the gcd of its entries.
  std::optional<IntSolution> solve_homogeneous(DiophantineSystem const& sys);

}  // namespace heisid

#endif  // HEISID_DIOPHANTINE_HPP_
