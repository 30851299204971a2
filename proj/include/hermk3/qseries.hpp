#pragma once

// Truncated Fourier expansions in q1, q2 with exact rational coefficients and a
// Laurent variable u: zeta^{1/12} on the Siegel and z=w loci, xi on z=-w.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hermk3/exactnum.hpp"
#include "hermk3/invariants.hpp"
#include "hermk3/theta.hpp"

namespace hermk3 {

enum class SeriesLocus { siegel, zw, zmw };

std::string series_locus_name(SeriesLocus l);
SeriesLocus parse_series_locus(const std::string& s);

/// q-exponents are stored over the common denominator 24.
constexpr std::int64_t kExpDen = 24;

struct SeriesKey {
  std::int64_t e1;  // 24 * exponent of q1
  std::int64_t e2;  // 24 * exponent of q2
  std::int64_t u;

  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

class FourierSeries {
public:
  /// Throws InvalidArgument unless order > 0 and its denominator divides 24.
  FourierSeries(SeriesLocus locus, RationalExponent order);

  static FourierSeries constant(SeriesLocus locus, RationalExponent order, const Rational& c);
  static FourierSeries monomial(SeriesLocus locus, RationalExponent order, RationalExponent e1,
                                RationalExponent e2, std::int64_t u, const Rational& c);

  SeriesLocus locus() const { return locus_; }
  const RationalExponent& order() const { return order_; }
  const std::map<SeriesKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c at the key; dropped when beyond the truncation order; zero results are pruned.
  void add_term(const SeriesKey& k, const Rational& c);
  Rational coeff(const SeriesKey& k) const;

  /// Numerical value at q1 = e(tau), q2 = e(tau'), u = e(z/12) (Siegel, z=w) or exp(pi z / sqrt 3) (z=-w).
  cplx evaluate(cplx tau, cplx tau_prime, cplx z) const;

  /// [{"e1":"p/q","e2":"p/q","u":n,"c":"p/q"}, ...] sorted by (e1, e2, u).
  std::string to_json() const;

  friend bool operator==(const FourierSeries& a, const FourierSeries& b) {
    return a.locus_ == b.locus_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

private:
  SeriesLocus locus_;
  RationalExponent order_;
  std::int64_t order24_;
  std::map<SeriesKey, Rational> terms_;
};

FourierSeries series_add(const FourierSeries& a, const FourierSeries& b);
FourierSeries series_sub(const FourierSeries& a, const FourierSeries& b);
FourierSeries series_mul(const FourierSeries& a, const FourierSeries& b);
FourierSeries series_scale(const FourierSeries& a, const Rational& c);
FourierSeries series_pow(const FourierSeries& a, unsigned n);

struct LeadingTerm {
  RationalExponent e1, e2;
  std::map<std::int64_t, Rational> coeff;  // u-exponent -> coefficient
  std::string str() const;
};

/// Terms of minimal e1 + e2. Throws InvalidArgument on the zero series and when
/// several exponent pairs share the minimal total.
LeadingTerm leading_term(const FourierSeries& s);

/// Maximum supported truncation orders.
constexpr int kMaxThetaOrder = 3;
constexpr int kMaxIgusaOrder = 2;
constexpr int kMaxBurkhardtOrder = 3;

FourierSeries qexp_siegel_theta(int j, RationalExponent order);
FourierSeries qexp_dk_theta(int k, SeriesLocus locus, RationalExponent order);
FourierSeries qexp_igusa(IgusaName name, RationalExponent order);
FourierSeries qexp_burkhardt(int j, SeriesLocus locus, RationalExponent order);

/// Lattice points attaining both minimal q-exponents, with those minima.
struct ZeroExponentSet {
  RationalExponent alpha1, alpha2;
  std::vector<std::vector<int>> points;  // (a, b) or (a, b, c, d), sorted
};
ZeroExponentSet siegel_zero_exponent_set(int j);
ZeroExponentSet dk_zero_exponent_set(int k);

}  // namespace hermk3
