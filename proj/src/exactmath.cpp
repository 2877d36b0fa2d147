#include "heisid/exactmath.hpp"

#include <algorithm>  // for all_of
#include <ostream>    // for ostream

namespace heisid {

  namespace {
    bool is_digits(std::string_view s) {
      return !s.empty()
             && std::all_of(s.begin(), s.end(), [](char ch) {
                  return ch >= '0' && ch <= '9';
                });
    }
  }  // namespace

  Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      body.remove_prefix(1);
    }
    if (!is_digits(body)) {
      throw std::invalid_argument("invalid integer '" + std::string(text)
                                  + "'");
    }
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
  }

  std::string to_string(Integer const& x) {
    return x.get_str(10);
  }

  ////////////////////////////////////////////////////////////////////////
  // Rational
  ////////////////////////////////////////////////////////////////////////

  Rational::Rational(Integer const& num, Integer const& den) {
    if (den == 0) {
      throw DivisionByZero();
    }
    _value = mpq_class(num, den);
    _value.canonicalize();
  }

  Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text));
    }
    auto den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) {
      throw std::invalid_argument("invalid rational '" + std::string(text)
                                  + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)),
                    parse_integer(den_text));
  }

  Rational Rational::abs() const {
    return Rational(mpq_class(::abs(_value)));
  }

  Rational Rational::operator-() const {
    return Rational(mpq_class(-_value));
  }

  Rational& Rational::operator+=(Rational const& y) {
    _value += y._value;
    return *this;
  }

  Rational& Rational::operator-=(Rational const& y) {
    _value -= y._value;
    return *this;
  }

  Rational& Rational::operator*=(Rational const& y) {
    _value *= y._value;
    return *this;
  }

  Rational& Rational::operator/=(Rational const& y) {
    if (y.is_zero()) {
      throw DivisionByZero();
    }
    _value /= y._value;
    return *this;
  }

  std::string Rational::str() const {
    if (is_integer()) {
      return _value.get_num().get_str(10);
    }
    return _value.get_num().get_str(10) + "/" + _value.get_den().get_str(10);
  }

  std::ostream& operator<<(std::ostream& os, Rational const& x) {
    return os << x.str();
  }

  Integer floor(Rational const& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(),
               x.raw().get_num_mpz_t(),
               x.raw().get_den_mpz_t());
    return q;
  }

  Integer ceil(Rational const& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(),
               x.raw().get_num_mpz_t(),
               x.raw().get_den_mpz_t());
    return q;
  }

  Integer lcm(Integer const& x, Integer const& y) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
  }

  Integer gcd(Integer const& x, Integer const& y) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // QVector
  ////////////////////////////////////////////////////////////////////////

  bool QVector::is_zero() const {
    return std::all_of(_entries.begin(), _entries.end(), [](auto const& x) {
      return x.is_zero();
    });
  }

  QVector& QVector::operator+=(QVector const& y) {
    if (dim() != y.dim()) {
      throw DimensionError("vector dimensions differ: "
                           + std::to_string(dim()) + " vs "
                           + std::to_string(y.dim()));
    }
    for (std::size_t i = 0; i < dim(); ++i) {
      _entries[i] += y._entries[i];
    }
    return *this;
  }

  QVector& QVector::operator-=(QVector const& y) {
    if (dim() != y.dim()) {
      throw DimensionError("vector dimensions differ: "
                           + std::to_string(dim()) + " vs "
                           + std::to_string(y.dim()));
    }
    for (std::size_t i = 0; i < dim(); ++i) {
      _entries[i] -= y._entries[i];
    }
    return *this;
  }

  QVector& QVector::operator*=(Rational const& s) {
    for (auto& x : _entries) {
      x *= s;
    }
    return *this;
  }

  Rational dot(QVector const& u, QVector const& v) {
    if (u.dim() != v.dim()) {
      throw DimensionError("dot: vector dimensions differ: "
                           + std::to_string(u.dim()) + " vs "
                           + std::to_string(v.dim()));
    }
    mpq_class acc;
    for (std::size_t i = 0; i < u.dim(); ++i) {
      acc += u[i].raw() * v[i].raw();
    }
    return Rational::from_raw(acc);
  }

  ////////////////////////////////////////////////////////////////////////
  // QMatrix
  ////////////////////////////////////////////////////////////////////////

  QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _entries.reserve(_rows * _cols);
    for (auto const& row : rows) {
      if (row.size() != _cols) {
        throw DimensionError("ragged matrix literal");
      }
      _entries.insert(_entries.end(), row.begin(), row.end());
    }
  }

  QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  bool QMatrix::is_identity() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        if ((*this)(r, c) != Rational(r == c ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  bool QMatrix::is_integral() const {
    return std::all_of(_entries.begin(), _entries.end(), [](auto const& x) {
      return x.is_integer();
    });
  }

  void QMatrix::set_block(std::size_t r, std::size_t c, QMatrix const& block) {
    if (r + block.rows() > _rows || c + block.cols() > _cols) {
      throw DimensionError("block does not fit");
    }
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        (*this)(r + i, c + j) = block(i, j);
      }
    }
  }

  QMatrix mat_mul(QMatrix const& x, QMatrix const& y) {
    if (x.cols() != y.rows()) {
      throw DimensionError("mat_mul: " + std::to_string(x.rows()) + "x"
                           + std::to_string(x.cols()) + " times "
                           + std::to_string(y.rows()) + "x"
                           + std::to_string(y.cols()));
    }
    QMatrix   out(x.rows(), y.cols());
    mpq_class acc;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < y.cols(); ++j) {
        acc = 0;
        for (std::size_t k = 0; k < x.cols(); ++k) {
          if (!x(i, k).is_zero() && !y(k, j).is_zero()) {
            acc += x(i, k).raw() * y(k, j).raw();
          }
        }
        out(i, j) = Rational::from_raw(acc);
      }
    }
    return out;
  }

  QMatrix operator*(QMatrix const& x, QMatrix const& y) {
    return mat_mul(x, y);
  }

  Rational determinant(QMatrix const& m) {
    if (!m.is_square()) {
      throw DimensionError("determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    QMatrix           a = m;
    Rational          det(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && a(pivot, col).is_zero()) {
        ++pivot;
      }
      if (pivot == n) {
        return Rational(0);
      }
      if (pivot != col) {
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(pivot, c), a(col, c));
        }
        det = -det;
      }
      det *= a(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a(r, col).is_zero()) {
          continue;
        }
        Rational factor = a(r, col) / a(col, col);
        for (std::size_t c = col; c < n; ++c) {
          a(r, c) -= factor * a(col, c);
        }
      }
    }
    return det;
  }

  std::ostream& operator<<(std::ostream& os, QMatrix const& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << (r == 0 ? "[" : " [");
      for (std::size_t c = 0; c < m.cols(); ++c) {
        os << (c == 0 ? "" : " ") << m(r, c);
      }
      os << ']';
    }
    return os << ']';
  }

}  // namespace heisid

std::size_t std::hash<heisid::Rational>::operator()(
    heisid::Rational const& x) const noexcept {
  auto const& q = x.raw();
  std::size_t h = mpz_get_ui(q.get_num_mpz_t())
                  ^ (mpz_get_ui(q.get_den_mpz_t()) * 0x9e3779b97f4a7c15ULL);
  return h ^ static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 1);
}
