#ifndef HEISID_HEISENBERG_HPP_
#define HEISID_HEISENBERG_HPP_

#include <cstddef>  // for size_t
#include <iosfwd>   // for ostream
#include <span>     // for span
#include <vector>   // for vector

#include "exactmath.hpp"

namespace heisid {

  //! An element of H(n, Q) in coordinates (a, b, c): the matrix
  //!
  //!   [ 1  a^T      c ]
  //!   [ 0  I_{n-2}  b ]
  //!   [ 0  0        1 ]
  //!
  //! with a, b of dimension n - 2 >= 1. Multiplication is
  //! (a1, b1, c1)(a2, b2, c2) = (a1 + a2, b1 + b2, c1 + c2 + a1 . b2).
  class HeisTriple {
   public:
    HeisTriple(QVector a, QVector b, Rational c);

    static HeisTriple identity(std::size_t n);

    //! Matrix dimension n.
    std::size_t n() const {
      return _a.dim() + 2;
    }
    QVector const& a() const {
      return _a;
    }
    QVector const& b() const {
      return _b;
    }
    Rational const& c() const {
      return _c;
    }

    bool is_identity() const {
      return _c.is_zero() && _a.is_zero() && _b.is_zero();
    }
    //! True iff a and b vanish, i.e. the element is central.
    bool is_central() const {
      return _a.is_zero() && _b.is_zero();
    }

    friend bool operator==(HeisTriple const&, HeisTriple const&) = default;

   private:
    QVector  _a;
    QVector  _b;
    Rational _c;
  };

  std::ostream& operator<<(std::ostream& os, HeisTriple const& x);

  //! The group law. Throws DimensionError if x.n() != y.n().
  HeisTriple compose(HeisTriple const& x, HeisTriple const& y);
  HeisTriple operator*(HeisTriple const& x, HeisTriple const& y);

  HeisTriple inverse(HeisTriple const& x);

  //! x and y commute iff a_x . b_y == a_y . b_x.
  bool commutes(HeisTriple const& x, HeisTriple const& y);

  //! a_x . b_y - a_y . b_x; zero iff x and y commute.
  Rational commutator_form(HeisTriple const& x, HeisTriple const& y);

  //! x^m for m >= 1 in closed form:
  //! (m a, m b, m c + (a . b) m (m - 1) / 2).
  //! Throws std::invalid_argument if m < 1.
  HeisTriple power(HeisTriple const& x, Integer const& m);

  HeisTriple to_triple(QMatrix const& m);
  QMatrix    to_matrix(HeisTriple const& x);
  //! Alias of to_triple, throws std::invalid_argument on a matrix that is
  //! not in H(n, Q).
  HeisTriple from_matrix(QMatrix const& m);

  //! An ordered, non-empty list of generators of uniform dimension n >= 3.
  class GeneratorSet {
   public:
    explicit GeneratorSet(std::vector<HeisTriple> gens);

    std::size_t n() const {
      return _gens.front().n();
    }
    std::size_t size() const {
      return _gens.size();
    }
    HeisTriple const& operator[](std::size_t i) const {
      return _gens[i];
    }
    HeisTriple const& at(std::size_t i) const;
    std::span<HeisTriple const> generators() const {
      return _gens;
    }
    auto begin() const {
      return _gens.begin();
    }
    auto end() const {
      return _gens.end();
    }

   private:
    std::vector<HeisTriple> _gens;
  };

  //! Generator indices, multiplied left to right.
  using ProductSequence = std::vector<std::size_t>;

  //! A generator raised to a positive power.
  struct Run {
    std::size_t generator;
    Integer     exponent;

    friend bool operator==(Run const&, Run const&) = default;
  };

  using RunSequence = std::vector<Run>;

  //! Product of gens[seq[0]] ... gens[seq[k-1]] computed by accumulating
  //! the cross terms (sum of a over the prefix) . b_next directly, rather
  //! than by folding compose. Throws on an empty sequence or a bad index.
  HeisTriple product_corner(GeneratorSet const& gens, ProductSequence const& seq);

  //! Left-to-right fold of compose over the sequence.
  HeisTriple fold_product(GeneratorSet const& gens, ProductSequence const& seq);

  //! Product of gens[g]^e over the runs, via closed-form powers. An empty
  //! run list yields the identity.
  HeisTriple evaluate_runs(GeneratorSet const& gens, RunSequence const& runs);

}  // namespace heisid

#endif  // HEISID_HEISENBERG_HPP_
