#pragma once

// Exact arithmetic over the Eisenstein integers Z[w] and the field Q(w),
// w = exp(2 pi i / 3), plus reduced rational exponents.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace hermk3 {

using Integer = mpz_class;
using Rational = mpq_class;
using cplx = std::complex<double>;

/// Complex value of w = (-1 + sqrt(-3)) / 2.
cplx omega_complex();

Rational make_rational(const Integer& num, const Integer& den);
std::size_t hash_integer(const Integer& v);

/// a + b*w with arbitrary-precision components.
class EisensteinInt {
public:
  EisensteinInt() = default;
  EisensteinInt(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  EisensteinInt(long a, long b = 0) : a_(a), b_(b) {}

  static EisensteinInt omega() { return {0L, 1L}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  /// a^2 - ab + b^2
  Integer norm() const;
  /// Complex conjugate: a + b*w^2 = (a - b) - b*w.
  EisensteinInt conj() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  cplx to_complex() const;
  std::string str() const;
  std::size_t hash() const;

  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }
  friend EisensteinInt operator-(const EisensteinInt& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

private:
  Integer a_{0};
  Integer b_{0};
};

EisensteinInt eis_mul(const EisensteinInt& u, const EisensteinInt& v);
Integer eis_norm(const EisensteinInt& u);

/// x + y*w with exact rational components, always kept in canonical form.
/// Text form: "x+y*w" / "x-y*w" where x, y are "p" or "p/q".
class CycloRational {
public:
  CycloRational() = default;
  CycloRational(Rational x, Rational y = 0);
  CycloRational(long x, long y = 0) : x_(x), y_(y) {}
  CycloRational(const EisensteinInt& e) : x_(e.a()), y_(e.b()) {}

  static CycloRational omega() { return {0L, 1L}; }
  static CycloRational parse(std::string_view text);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  Rational norm() const;
  CycloRational conj() const;
  /// Throws DivisionByZero on zero.
  CycloRational inv() const;
  cplx to_complex() const;
  std::string str() const;
  std::size_t hash() const;

  CycloRational& operator+=(const CycloRational& o);
  CycloRational& operator-=(const CycloRational& o);
  CycloRational& operator*=(const CycloRational& o);
  CycloRational& operator/=(const CycloRational& o) { return *this *= o.inv(); }

  friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
  friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
  friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
  friend CycloRational operator/(CycloRational a, const CycloRational& b) { return a /= b; }
  friend CycloRational operator-(const CycloRational& a) { return {-a.x_, -a.y_}; }
  friend bool operator==(const CycloRational& a, const CycloRational& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

private:
  Rational x_{0};
  Rational y_{0};
};

CycloRational cyclo_inv(const CycloRational& v);

/// Reduced fraction num/den with den > 0. Used for q-exponents.
class RationalExponent {
public:
  constexpr RationalExponent() = default;
  RationalExponent(std::int64_t num, std::int64_t den = 1);

  static RationalExponent parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// Numerator over a fixed denominator; throws InvalidArgument if den does not divide it.
  std::int64_t scaled_to(std::int64_t denominator) const;
  std::string str() const;

  friend RationalExponent operator+(const RationalExponent& a, const RationalExponent& b);
  friend RationalExponent operator-(const RationalExponent& a, const RationalExponent& b);
  friend bool operator==(const RationalExponent& a, const RationalExponent& b) = default;
  friend std::strong_ordering operator<=>(const RationalExponent& a, const RationalExponent& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace hermk3
