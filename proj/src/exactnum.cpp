#include "hermk3/exactnum.hpp"

#include <cmath>
#include <numeric>

#include "hermk3/error.hpp"

namespace hermk3 {

cplx omega_complex() { return {-0.5, std::sqrt(3.0) / 2.0}; }

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::size_t hash_integer(const Integer& v) {
  const auto* raw = v.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(raw->_mp_size) * 0x9e3779b97f4a7c15ULL;
  const int limbs = std::abs(raw->_mp_size);
  for (int i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(raw, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---- EisensteinInt ----

Integer EisensteinInt::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

EisensteinInt EisensteinInt::conj() const { return {a_ - b_, -b_}; }

cplx EisensteinInt::to_complex() const {
  return a_.get_d() + b_.get_d() * omega_complex();
}

std::string EisensteinInt::str() const { return CycloRational(*this).str(); }

std::size_t EisensteinInt::hash() const {
  return hash_integer(a_) * 31 + hash_integer(b_);
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
  Integer bd = b_ * o.b_;
  Integer na = a_ * o.a_ - bd;
  Integer nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

EisensteinInt eis_mul(const EisensteinInt& u, const EisensteinInt& v) { return u * v; }

Integer eis_norm(const EisensteinInt& u) { return u.norm(); }

// ---- CycloRational ----

CycloRational::CycloRational(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

Rational CycloRational::norm() const { return x_ * x_ - x_ * y_ + y_ * y_; }

CycloRational CycloRational::conj() const { return {x_ - y_, -y_}; }

CycloRational CycloRational::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
  Rational n = norm();
  CycloRational c = conj();
  return {c.x_ / n, c.y_ / n};
}

cplx CycloRational::to_complex() const {
  return x_.get_d() + y_.get_d() * omega_complex();
}

std::string CycloRational::str() const {
  std::string out = x_.get_str();
  if (sgn(y_) < 0) {
    out += "-";
    out += Rational(-y_).get_str();
  } else {
    out += "+";
    out += y_.get_str();
  }
  out += "*w";
  return out;
}

std::size_t CycloRational::hash() const {
  std::size_t h = hash_integer(x_.get_num());
  h = h * 31 + hash_integer(x_.get_den());
  h = h * 31 + hash_integer(y_.get_num());
  return h * 31 + hash_integer(y_.get_den());
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) {
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

CycloRational& CycloRational::operator*=(const CycloRational& o) {
  Rational yy = y_ * o.y_;
  Rational nx = x_ * o.x_ - yy;
  Rational ny = x_ * o.y_ + y_ * o.x_ - yy;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

CycloRational cyclo_inv(const CycloRational& v) { return v.inv(); }

namespace {

bool is_rational_char(char c) { return (c >= '0' && c <= '9') || c == '/'; }

Rational parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InvalidArgument("malformed Q(w) literal: " + std::string(whole));
  std::string_view digits = text;
  if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
  if (digits.empty() || digits.front() == '/' || digits.back() == '/')
    throw InvalidArgument("malformed Q(w) literal: " + std::string(whole));
  int slashes = 0;
  for (char c : digits) {
    if (!is_rational_char(c)) throw InvalidArgument("malformed Q(w) literal: " + std::string(whole));
    slashes += (c == '/');
  }
  if (slashes > 1) throw InvalidArgument("malformed Q(w) literal: " + std::string(whole));
  Rational r;
  if (r.set_str(std::string(text.front() == '+' ? text.substr(1) : text), 10) != 0)
    throw InvalidArgument("malformed Q(w) literal: " + std::string(whole));
  if (r.get_den() == 0) throw DivisionByZero("zero denominator in " + std::string(whole));
  r.canonicalize();
  return r;
}

}  // namespace

CycloRational CycloRational::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ') compact += c;
  std::string_view s = compact;
  if (s.empty()) throw InvalidArgument("empty Q(w) literal");

  // Split at the last sign that is not at position 0 and not preceded by '/'.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') split = i;

  auto parse_w_term = [&](std::string_view t) -> Rational {
    // "y*w", "w", "-w", "+w"
    std::string_view coeff = t.substr(0, t.size() - 1);
    if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
    if (coeff.empty() || coeff == "+") return Rational(1);
    if (coeff == "-") return Rational(-1);
    return parse_rational(coeff, text);
  };

  const bool ends_with_w = s.back() == 'w';
  if (split == std::string_view::npos) {
    if (ends_with_w) return {Rational(0), parse_w_term(s)};
    return {parse_rational(s, text), Rational(0)};
  }
  std::string_view head = s.substr(0, split);
  std::string_view tail = s.substr(split);
  if (!ends_with_w || head.find('w') != std::string_view::npos)
    throw InvalidArgument("malformed Q(w) literal: " + std::string(text));
  return {parse_rational(head, text), parse_w_term(tail)};
}

// ---- RationalExponent ----

RationalExponent::RationalExponent(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("exponent with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

RationalExponent RationalExponent::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return {std::stoll(std::string(text)), 1};
    return {std::stoll(std::string(text.substr(0, slash))),
            std::stoll(std::string(text.substr(slash + 1)))};
  } catch (const std::logic_error&) {
    throw InvalidArgument("malformed exponent: " + std::string(text));
  }
}

std::int64_t RationalExponent::scaled_to(std::int64_t denominator) const {
  if (denominator % den_ != 0)
    throw InvalidArgument("exponent " + str() + " not representable over denominator " +
                          std::to_string(denominator));
  return num_ * (denominator / den_);
}

std::string RationalExponent::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalExponent operator+(const RationalExponent& a, const RationalExponent& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalExponent operator-(const RationalExponent& a, const RationalExponent& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

std::strong_ordering operator<=>(const RationalExponent& a, const RationalExponent& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

}  // namespace hermk3
