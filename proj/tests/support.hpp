// Random generators and independent reference computations shared by the
// tests. Nothing here calls into the code paths it is used to check.
#ifndef HEISID_TESTS_SUPPORT_HPP_
#define HEISID_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "heisid/heisenberg.hpp"

namespace heisid::test {

  using Rng = std::mt19937_64;

  inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  //! p/q with p in [lo, hi] and q in [1, max_den].
  inline Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
    return Rational(Integer(uniform(rng, lo, hi)), Integer(uniform(rng, 1, max_den)));
  }

  inline HeisTriple random_triple(Rng& rng, std::size_t n, long lo, long hi,
                                  long max_den = 1) {
    QVector a(n - 2), b(n - 2);
    for (std::size_t i = 0; i < n - 2; ++i) {
      a[i] = random_rational(rng, lo, hi, max_den);
      b[i] = random_rational(rng, lo, hi, max_den);
    }
    return HeisTriple(a, b, random_rational(rng, lo, hi, max_den));
  }

  inline GeneratorSet random_set(Rng& rng, std::size_t n, std::size_t r, long lo,
                                 long hi, long max_den = 1) {
    std::vector<HeisTriple> gens;
    for (std::size_t k = 0; k < r; ++k) {
      gens.push_back(random_triple(rng, n, lo, hi, max_den));
    }
    return GeneratorSet(gens);
  }

  inline HeisTriple triple3(long a, long b, long c) {
    return HeisTriple(QVector{Rational(a)}, QVector{Rational(b)}, Rational(c));
  }

  //! Plain n x n matrix for a triple, built entry by entry.
  inline QMatrix reference_matrix(HeisTriple const& x) {
    std::size_t const n = x.n();
    QMatrix           m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = Rational(1);
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
      m(0, i + 1)     = x.a()[i];
      m(i + 1, n - 1) = x.b()[i];
    }
    m(0, n - 1) = x.c();
    return m;
  }

  //! Schoolbook triple-loop product.
  inline QMatrix reference_mul(QMatrix const& x, QMatrix const& y) {
    QMatrix z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < y.cols(); ++j) {
        Rational s;
        for (std::size_t k = 0; k < x.cols(); ++k) {
          s += x(i, k) * y(k, j);
        }
        z(i, j) = s;
      }
    }
    return z;
  }

  //! Product of generator matrices along a run list, one factor at a time.
  inline QMatrix reference_runs(GeneratorSet const& gens, RunSequence const& runs) {
    QMatrix m = QMatrix::identity(gens.n());
    for (auto const& run : runs) {
      QMatrix const g = reference_matrix(gens[run.generator]);
      for (Integer e = 0; e < run.exponent; ++e) {
        m = reference_mul(m, g);
      }
    }
    return m;
  }

  //! Exhaustive search over all words of length 1..max_len, without any
  //! pruning. True iff some word multiplies to the identity matrix.
  inline bool brute_identity(GeneratorSet const& gens, std::size_t max_len) {
    std::vector<QMatrix> mats;
    for (auto const& g : gens) {
      mats.push_back(reference_matrix(g));
    }
    std::vector<QMatrix> level{QMatrix::identity(gens.n())};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<QMatrix> next;
      for (auto const& m : level) {
        for (auto const& g : mats) {
          QMatrix p = reference_mul(m, g);
          if (p.is_identity()) {
            return true;
          }
          next.push_back(std::move(p));
        }
      }
      level = std::move(next);
    }
    return false;
  }

}  // namespace heisid::test

#endif  // HEISID_TESTS_SUPPORT_HPP_
