#ifndef HEISID_EXACTMATH_HPP_
#define HEISID_EXACTMATH_HPP_

#include <gmpxx.h>

#include <compare>           // for strong_ordering
#include <concepts>          // for integral
#include <cstddef>           // for size_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <iosfwd>            // for ostream
#include <span>              // for span
#include <stdexcept>         // for invalid_argument, domain_error
#include <string>            // for string
#include <string_view>       // for string_view
#include <vector>            // for vector

namespace heisid {

  //! Arbitrary-precision integer used for exponents and multiplicities.
  using Integer = mpz_class;

  //! Raised when operands of a vector/matrix/group operation disagree in size.
  class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class DivisionByZero : public std::domain_error {
   public:
    DivisionByZero() : std::domain_error("division by zero") {}
  };

  Integer     parse_integer(std::string_view text);
  std::string to_string(Integer const& x);

  //! Exact rational number, always in lowest terms with a positive
  //! denominator. Equality is structural.
  class Rational {
   public:
    Rational() = default;
    template <std::signed_integral T>
    Rational(T v) : _value(static_cast<long>(v)) {}  // NOLINT
    template <std::unsigned_integral T>
    Rational(T v) : _value(static_cast<unsigned long>(v)) {}  // NOLINT
    Rational(Integer const& v) : _value(v) {}  // NOLINT(runtime/explicit)
    Rational(Integer const& num, Integer const& den);

    //! Accepts "p", "-p", "p/q" (q != 0); the result is normalized.
    static Rational parse(std::string_view text);

    Integer numerator() const {
      return _value.get_num();
    }
    Integer denominator() const {
      return _value.get_den();
    }

    bool is_zero() const {
      return sgn(_value) == 0;
    }
    bool is_integer() const {
      return _value.get_den() == 1;
    }
    int sign() const {
      return sgn(_value);
    }

    Rational abs() const;
    Rational operator-() const;

    Rational& operator+=(Rational const& y);
    Rational& operator-=(Rational const& y);
    Rational& operator*=(Rational const& y);
    Rational& operator/=(Rational const& y);

    friend Rational operator+(Rational x, Rational const& y) {
      return x += y;
    }
    friend Rational operator-(Rational x, Rational const& y) {
      return x -= y;
    }
    friend Rational operator*(Rational x, Rational const& y) {
      return x *= y;
    }
    friend Rational operator/(Rational x, Rational const& y) {
      return x /= y;
    }

    friend bool operator==(Rational const& x, Rational const& y) {
      return x._value == y._value;
    }
    friend std::strong_ordering operator<=>(Rational const& x,
                                            Rational const& y) {
      int c = cmp(x._value, y._value);
      return c < 0   ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    //! "p" for integers, "p/q" otherwise.
    std::string str() const;

    //! Wraps a GMP rational, canonicalizing it.
    static Rational from_raw(mpq_class v) {
      v.canonicalize();
      return Rational(std::move(v));
    }

    mpq_class const& raw() const {
      return _value;
    }

   private:
    explicit Rational(mpq_class v) : _value(std::move(v)) {}
    mpq_class _value;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& x);

  //! Floor of a rational, towards minus infinity.
  Integer floor(Rational const& x);
  //! Ceiling of a rational, towards plus infinity.
  Integer ceil(Rational const& x);

  Integer lcm(Integer const& x, Integer const& y);
  Integer gcd(Integer const& x, Integer const& y);

  class QVector {
   public:
    QVector() = default;
    explicit QVector(std::size_t dim) : _entries(dim) {}
    QVector(std::initializer_list<Rational> xs) : _entries(xs) {}
    explicit QVector(std::vector<Rational> xs) : _entries(std::move(xs)) {}

    static QVector zero(std::size_t dim) {
      return QVector(dim);
    }

    std::size_t dim() const {
      return _entries.size();
    }
    Rational const& operator[](std::size_t i) const {
      return _entries[i];
    }
    Rational& operator[](std::size_t i) {
      return _entries[i];
    }
    std::span<Rational const> entries() const {
      return _entries;
    }
    auto begin() const {
      return _entries.begin();
    }
    auto end() const {
      return _entries.end();
    }

    bool is_zero() const;

    QVector& operator+=(QVector const& y);
    QVector& operator-=(QVector const& y);
    QVector& operator*=(Rational const& s);

    friend QVector operator+(QVector x, QVector const& y) {
      return x += y;
    }
    friend QVector operator-(QVector x, QVector const& y) {
      return x -= y;
    }
    friend QVector operator*(QVector x, Rational const& s) {
      return x *= s;
    }
    friend QVector operator-(QVector x) {
      return x *= Rational(-1);
    }
    friend bool operator==(QVector const&, QVector const&) = default;

   private:
    std::vector<Rational> _entries;
  };

  //! Sum of u[i] * v[i]. Throws DimensionError if dims differ.
  Rational dot(QVector const& u, QVector const& v);

  //! Dense row-major rational matrix.
  class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) {
      return QMatrix(rows, cols);
    }

    std::size_t rows() const {
      return _rows;
    }
    std::size_t cols() const {
      return _cols;
    }
    bool is_square() const {
      return _rows == _cols;
    }

    Rational const& operator()(std::size_t r, std::size_t c) const {
      return _entries[r * _cols + c];
    }
    Rational& operator()(std::size_t r, std::size_t c) {
      return _entries[r * _cols + c];
    }
    std::span<Rational const> entries() const {
      return _entries;
    }

    bool is_identity() const;
    bool is_integral() const;

    //! Copies `block` into this matrix with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, QMatrix const& block);

    friend bool operator==(QMatrix const&, QMatrix const&) = default;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _entries;
  };

  //! Exact product; throws DimensionError unless x.cols() == y.rows().
  QMatrix mat_mul(QMatrix const& x, QMatrix const& y);
  QMatrix operator*(QMatrix const& x, QMatrix const& y);

  //! Exact determinant by Gaussian elimination over Q.
  Rational determinant(QMatrix const& m);

  std::ostream& operator<<(std::ostream& os, QMatrix const& m);

}  // namespace heisid

template <>
struct std::hash<heisid::Rational> {
  std::size_t operator()(heisid::Rational const& x) const noexcept;
};

#endif  // HEISID_EXACTMATH_HPP_
