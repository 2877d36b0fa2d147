#include "heisid/diophantine.hpp"

#include <numeric>  // for iota
#include <string>   // for to_string

namespace heisid {

  namespace {

    // Dense simplex tableau over mpq_class. Row i reads
    //   sum_j rows[i][j] x_j = rhs[i],   x_{basis[i]} basic.
    // cost[j] holds the reduced cost of column j and `value` the objective.
    class Tableau {
     public:
      Tableau(std::size_t                          num_vars,
              std::vector<LinearConstraint> const& constraints)
          : _num_vars(num_vars) {
        std::size_t const m = constraints.size();
        std::size_t       num_art = 0;
        for (auto const& con : constraints) {
          if (con.coeffs.size() != num_vars) {
            throw DimensionError("constraint has "
                                 + std::to_string(con.coeffs.size())
                                 + " coefficients, expected "
                                 + std::to_string(num_vars));
          }
          num_art += con.rhs.sign() < 0 ? 1 : 0;
        }
        _first_art = num_vars + m;
        _cols      = _first_art + num_art;
        _rows.assign(m, std::vector<mpq_class>(_cols));
        _rhs.resize(m);
        _basis.resize(m);
        std::size_t art = _first_art;
        for (std::size_t i = 0; i < m; ++i) {
          auto const& con = constraints[i];
          bool const  neg = con.rhs.sign() < 0;
          for (std::size_t j = 0; j < num_vars; ++j) {
            _rows[i][j] = neg ? mpq_class(-con.coeffs[j].raw())
                              : con.coeffs[j].raw();
          }
          _rows[i][num_vars + i] = neg ? -1 : 1;
          _rhs[i]                = neg ? mpq_class(-con.rhs.raw()) : con.rhs.raw();
          if (neg) {
            _rows[i][art] = 1;
            _basis[i]     = art++;
          } else {
            _basis[i] = num_vars + i;
          }
        }
        _allowed.assign(_cols, true);
      }

      // Phase one: minimize the sum of artificials. Returns false if the
      // constraints are infeasible.
      bool phase_one() {
        std::vector<mpq_class> cost(_cols);
        for (std::size_t j = _first_art; j < _cols; ++j) {
          cost[j] = 1;
        }
        set_objective(cost);
        run();  // bounded below by 0
        if (sgn(_value) != 0) {
          return false;
        }
        drive_out_artificials();
        for (std::size_t j = _first_art; j < _cols; ++j) {
          _allowed[j] = false;
        }
        return true;
      }

      // Phase two; returns false if unbounded.
      bool phase_two(std::vector<Rational> const& objective) {
        std::vector<mpq_class> cost(_cols);
        for (std::size_t j = 0; j < objective.size(); ++j) {
          cost[j] = objective[j].raw();
        }
        set_objective(cost);
        return run();
      }

      std::vector<Rational> point() const {
        std::vector<Rational> x(_num_vars);
        for (std::size_t i = 0; i < _basis.size(); ++i) {
          if (_basis[i] < _num_vars) {
            x[_basis[i]] = Rational::from_raw(_rhs[i]);
          }
        }
        return x;
      }

     private:
      void set_objective(std::vector<mpq_class> const& cost) {
        _cost  = cost;
        _value = 0;
        for (std::size_t i = 0; i < _rows.size(); ++i) {
          mpq_class const& cb = cost[_basis[i]];
          if (sgn(cb) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < _cols; ++j) {
            _cost[j] -= cb * _rows[i][j];
          }
          _value += cb * _rhs[i];
        }
      }

      // Bland's rule: lowest-index improving column, lowest-index leaving
      // basic variable among ratio ties. Returns false if unbounded.
      bool run() {
        while (true) {
          std::size_t enter = _cols;
          for (std::size_t j = 0; j < _cols; ++j) {
            if (_allowed[j] && sgn(_cost[j]) < 0) {
              enter = j;
              break;
            }
          }
          if (enter == _cols) {
            return true;
          }
          std::size_t leave = _rows.size();
          mpq_class   best, ratio;
          for (std::size_t i = 0; i < _rows.size(); ++i) {
            if (sgn(_rows[i][enter]) <= 0) {
              continue;
            }
            ratio = _rhs[i] / _rows[i][enter];
            if (leave == _rows.size() || ratio < best
                || (ratio == best && _basis[i] < _basis[leave])) {
              leave = i;
              best  = ratio;
            }
          }
          if (leave == _rows.size()) {
            return false;
          }
          pivot(leave, enter);
        }
      }

      void pivot(std::size_t r, std::size_t c) {
        mpq_class const inv = 1 / _rows[r][c];
        for (auto& x : _rows[r]) {
          x *= inv;
        }
        _rhs[r] *= inv;
        mpq_class factor;
        for (std::size_t i = 0; i < _rows.size(); ++i) {
          if (i == r || sgn(_rows[i][c]) == 0) {
            continue;
          }
          factor = _rows[i][c];
          for (std::size_t j = 0; j < _cols; ++j) {
            if (sgn(_rows[r][j]) != 0) {
              _rows[i][j] -= factor * _rows[r][j];
            }
          }
          _rhs[i] -= factor * _rhs[r];
        }
        if (sgn(_cost[c]) != 0) {
          factor = _cost[c];
          for (std::size_t j = 0; j < _cols; ++j) {
            if (sgn(_rows[r][j]) != 0) {
              _cost[j] -= factor * _rows[r][j];
            }
          }
          _value += factor * _rhs[r];
        }
        _basis[r] = c;
      }

      // After a zero-valued phase one, artificials still basic sit at zero.
      // Swap each for any structural column with a non-zero entry in its
      // row; rows with none are redundant and dropped.
      void drive_out_artificials() {
        for (std::size_t i = 0; i < _rows.size();) {
          if (_basis[i] < _first_art) {
            ++i;
            continue;
          }
          std::size_t col = _first_art;
          for (std::size_t j = 0; j < _first_art; ++j) {
            if (sgn(_rows[i][j]) != 0) {
              col = j;
              break;
            }
          }
          if (col < _first_art) {
            pivot(i, col);
            ++i;
          } else {
            _rows.erase(_rows.begin() + static_cast<std::ptrdiff_t>(i));
            _rhs.erase(_rhs.begin() + static_cast<std::ptrdiff_t>(i));
            _basis.erase(_basis.begin() + static_cast<std::ptrdiff_t>(i));
          }
        }
      }

      std::size_t                         _num_vars;
      std::size_t                         _first_art = 0;
      std::size_t                         _cols      = 0;
      std::vector<std::vector<mpq_class>> _rows;
      std::vector<mpq_class>              _rhs;
      std::vector<std::size_t>            _basis;
      std::vector<mpq_class>              _cost;
      std::vector<bool>                   _allowed;
      mpq_class                           _value;
    };

  }  // namespace

  LpResult lp_solve(std::size_t                          num_vars,
                    std::vector<LinearConstraint> const& constraints,
                    std::vector<Rational> const&         objective) {
    if (!objective.empty() && objective.size() != num_vars) {
      throw DimensionError("objective has " + std::to_string(objective.size())
                           + " coefficients, expected "
                           + std::to_string(num_vars));
    }
    Tableau tab(num_vars, constraints);
    if (!tab.phase_one()) {
      return {LpStatus::infeasible, {}};
    }
    if (!objective.empty() && !tab.phase_two(objective)) {
      return {LpStatus::unbounded, {}};
    }
    return {LpStatus::optimal, tab.point()};
  }

  std::optional<std::vector<Rational>>
  lp_feasible(std::size_t                          num_vars,
              std::vector<LinearConstraint> const& constraints) {
    auto res = lp_solve(num_vars, constraints);
    if (res.status != LpStatus::optimal) {
      return std::nullopt;
    }
    return std::move(res.point);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homogeneous systems
  ////////////////////////////////////////////////////////////////////////

  DiophantineSystem::DiophantineSystem(QMatrix coefficients,
                                       std::set<std::size_t> forced_vars)
      : A(std::move(coefficients)), forced(std::move(forced_vars)) {
    if (A.cols() == 0) {
      throw std::invalid_argument("Diophantine system needs >= 1 variable");
    }
    if (!forced.empty() && *forced.rbegin() >= A.cols()) {
      throw std::out_of_range("forced index " + std::to_string(*forced.rbegin())
                              + " out of range (have "
                              + std::to_string(A.cols()) + " variables)");
    }
  }

  bool is_solution(DiophantineSystem const& sys, IntSolution const& y) {
    if (y.size() != sys.num_vars()) {
      return false;
    }
    Integer total = 0;
    for (auto const& v : y) {
      if (v < 0) {
        return false;
      }
      total += v;
    }
    if (total < 1) {
      return false;
    }
    for (std::size_t i : sys.forced) {
      if (y[i] < 1) {
        return false;
      }
    }
    for (std::size_t r = 0; r < sys.A.rows(); ++r) {
      mpq_class acc;
      for (std::size_t c = 0; c < sys.A.cols(); ++c) {
        acc += sys.A(r, c).raw() * mpq_class(y[c]);
      }
      if (sgn(acc) != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<LinearConstraint> relaxation(DiophantineSystem const& sys) {
    std::size_t const             n = sys.num_vars();
    std::vector<LinearConstraint> cons;
    cons.reserve(2 * sys.A.rows() + 1 + sys.forced.size());
    for (std::size_t r = 0; r < sys.A.rows(); ++r) {
      LinearConstraint up{std::vector<Rational>(n), Rational(0)};
      LinearConstraint down{std::vector<Rational>(n), Rational(0)};
      for (std::size_t c = 0; c < n; ++c) {
        up.coeffs[c]   = sys.A(r, c);
        down.coeffs[c] = -sys.A(r, c);
      }
      cons.push_back(std::move(up));
      cons.push_back(std::move(down));
    }
    cons.push_back({std::vector<Rational>(n, Rational(-1)), Rational(-1)});
    for (std::size_t i : sys.forced) {
      LinearConstraint lower{std::vector<Rational>(n), Rational(-1)};
      lower.coeffs[i] = -1;
      cons.push_back(std::move(lower));
    }
    return cons;
  }

  std::optional<IntSolution> solve_homogeneous(DiophantineSystem const& sys) {
    std::size_t const n = sys.num_vars();
    auto res = lp_solve(n, relaxation(sys), std::vector<Rational>(n, Rational(1)));
    if (res.status != LpStatus::optimal) {
      return std::nullopt;
    }
    Integer scale = 1;
    for (auto const& x : res.point) {
      scale = lcm(scale, x.denominator());
    }
    IntSolution y(n);
    Integer     g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = (res.point[i] * Rational(scale)).numerator();
      g    = gcd(g, y[i]);
    }
    for (auto& v : y) {
      v /= g;
    }
    if (!is_solution(sys, y)) {
      throw std::logic_error("solve_homogeneous produced an invalid solution");
    }
    return y;
  }

}  // namespace heisid
