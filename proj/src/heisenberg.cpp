#include "heisid/heisenberg.hpp"

#include <ostream>  // for ostream
#include <string>   // for to_string

namespace heisid {

  namespace {
    void check_same_n(HeisTriple const& x, HeisTriple const& y) {
      if (x.n() != y.n()) {
        throw DimensionError("Heisenberg elements of different dimension: "
                             + std::to_string(x.n()) + " vs "
                             + std::to_string(y.n()));
      }
    }
  }  // namespace

  HeisTriple::HeisTriple(QVector a, QVector b, Rational c)
      : _a(std::move(a)), _b(std::move(b)), _c(std::move(c)) {
    if (_a.dim() != _b.dim()) {
      throw DimensionError("a and b must have the same dimension");
    }
    if (_a.dim() == 0) {
      throw DimensionError("a and b must have dimension n - 2 >= 1");
    }
  }

  HeisTriple HeisTriple::identity(std::size_t n) {
    if (n < 3) {
      throw DimensionError("H(n) requires n >= 3");
    }
    return HeisTriple(QVector(n - 2), QVector(n - 2), Rational(0));
  }

  std::ostream& operator<<(std::ostream& os, HeisTriple const& x) {
    auto vec = [&os](QVector const& v) {
      if (v.dim() == 1) {
        os << v[0];
        return;
      }
      os << '[';
      for (std::size_t i = 0; i < v.dim(); ++i) {
        os << (i == 0 ? "" : ", ") << v[i];
      }
      os << ']';
    };
    os << '(';
    vec(x.a());
    os << ", ";
    vec(x.b());
    return os << ", " << x.c() << ')';
  }

  HeisTriple compose(HeisTriple const& x, HeisTriple const& y) {
    check_same_n(x, y);
    return HeisTriple(x.a() + y.a(), x.b() + y.b(), x.c() + y.c() + dot(x.a(), y.b()));
  }

  HeisTriple operator*(HeisTriple const& x, HeisTriple const& y) {
    return compose(x, y);
  }

  HeisTriple inverse(HeisTriple const& x) {
    return HeisTriple(-x.a(), -x.b(), dot(x.a(), x.b()) - x.c());
  }

  Rational commutator_form(HeisTriple const& x, HeisTriple const& y) {
    check_same_n(x, y);
    return dot(x.a(), y.b()) - dot(y.a(), x.b());
  }

  bool commutes(HeisTriple const& x, HeisTriple const& y) {
    return commutator_form(x, y).is_zero();
  }

  HeisTriple power(HeisTriple const& x, Integer const& m) {
    if (m < 1) {
      throw std::invalid_argument("power: exponent must be >= 1, got "
                                  + to_string(m));
    }
    Rational const mm(m);
    Integer const  tri = m * (m - 1) / 2;
    return HeisTriple(x.a() * mm, x.b() * mm, x.c() * mm + dot(x.a(), x.b()) * Rational(tri));
  }

  QMatrix to_matrix(HeisTriple const& x) {
    std::size_t const n = x.n();
    QMatrix           m = QMatrix::identity(n);
    for (std::size_t i = 0; i < n - 2; ++i) {
      m(0, i + 1)     = x.a()[i];
      m(i + 1, n - 1) = x.b()[i];
    }
    m(0, n - 1) = x.c();
    return m;
  }

  HeisTriple to_triple(QMatrix const& m) {
    if (!m.is_square() || m.rows() < 3) {
      throw std::invalid_argument("not a Heisenberg matrix: must be square "
                                  "of size >= 3");
    }
    std::size_t const n = m.rows();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        bool free_entry = (r == 0 && c > 0) || (c == n - 1 && r < n - 1);
        if (free_entry) {
          continue;
        }
        if (m(r, c) != Rational(r == c ? 1 : 0)) {
          throw std::invalid_argument(
              "not a Heisenberg matrix: entry (" + std::to_string(r) + ", "
              + std::to_string(c) + ") is " + m(r, c).str());
        }
      }
    }
    QVector a(n - 2), b(n - 2);
    for (std::size_t i = 0; i < n - 2; ++i) {
      a[i] = m(0, i + 1);
      b[i] = m(i + 1, n - 1);
    }
    return HeisTriple(std::move(a), std::move(b), m(0, n - 1));
  }

  HeisTriple from_matrix(QMatrix const& m) {
    return to_triple(m);
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorSet and products
  ////////////////////////////////////////////////////////////////////////

  GeneratorSet::GeneratorSet(std::vector<HeisTriple> gens)
      : _gens(std::move(gens)) {
    if (_gens.empty()) {
      throw std::invalid_argument("generator set must be non-empty");
    }
    for (auto const& g : _gens) {
      check_same_n(_gens.front(), g);
    }
  }

  HeisTriple const& GeneratorSet::at(std::size_t i) const {
    if (i >= _gens.size()) {
      throw std::out_of_range("generator index " + std::to_string(i)
                              + " out of range (have "
                              + std::to_string(_gens.size()) + ")");
    }
    return _gens[i];
  }

  HeisTriple product_corner(GeneratorSet const& gens,
                            ProductSequence const& seq) {
    if (seq.empty()) {
      throw std::invalid_argument("product of an empty sequence");
    }
    std::size_t const dim = gens.n() - 2;
    QVector           a_prefix(dim);
    QVector           b_sum(dim);
    Rational          corner;
    for (std::size_t idx : seq) {
      HeisTriple const& g = gens.at(idx);
      // cross term: (a_{i_1} + ... + a_{i_l}) . b_{i_{l+1}}
      corner += dot(a_prefix, g.b()) + g.c();
      a_prefix += g.a();
      b_sum += g.b();
    }
    return HeisTriple(std::move(a_prefix), std::move(b_sum), std::move(corner));
  }

  HeisTriple fold_product(GeneratorSet const& gens, ProductSequence const& seq) {
    if (seq.empty()) {
      throw std::invalid_argument("product of an empty sequence");
    }
    HeisTriple acc = gens.at(seq.front());
    for (std::size_t k = 1; k < seq.size(); ++k) {
      acc = compose(acc, gens.at(seq[k]));
    }
    return acc;
  }

  HeisTriple evaluate_runs(GeneratorSet const& gens, RunSequence const& runs) {
    HeisTriple acc = HeisTriple::identity(gens.n());
    for (auto const& run : runs) {
      acc = compose(acc, power(gens.at(run.generator), run.exponent));
    }
    return acc;
  }

}  // namespace heisid
