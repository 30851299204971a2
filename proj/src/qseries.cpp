#include "hermk3/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "hermk3/error.hpp"
#include "json.hpp"

namespace hermk3 {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---- integer series engine ----
// Theta expansions have integer coefficients, so the big products run over
// checked 128-bit integers and are redone over GMP only on overflow.

struct Overflow {};

struct I128 {
  __int128 v = 0;
  I128() = default;
  I128(long x) : v(x) {}
  I128& operator+=(const I128& o) {
    if (__builtin_add_overflow(v, o.v, &v)) throw Overflow{};
    return *this;
  }
  friend I128 operator*(const I128& a, const I128& b) {
    I128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
};

bool is_zero(const I128& c) { return c.v == 0; }
bool is_zero(const Integer& c) { return c == 0; }

Rational to_rational(const I128& c) {
  const bool neg = c.v < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(c.v) : static_cast<unsigned __int128>(c.v);
  Integer hi(static_cast<unsigned long>(m >> 64)), lo(static_cast<unsigned long>(m & ~0ULL));
  Integer z = (hi << 64) + lo;
  return Rational(neg ? Integer(-z) : z);
}
Rational to_rational(const Integer& c) { return Rational(c); }

template <class C>
using Terms = std::vector<std::pair<SeriesKey, C>>;

std::uint64_t pack(const SeriesKey& k) {
  return (static_cast<std::uint64_t>(k.e1) << 48) | (static_cast<std::uint64_t>(k.e2) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.u + (1LL << 30)));
}

SeriesKey unpack(std::uint64_t p) {
  return {static_cast<std::int64_t>(p >> 48), static_cast<std::int64_t>((p >> 32) & 0xffff),
          static_cast<std::int64_t>(p & 0xffffffffULL) - (1LL << 30)};
}

template <class C>
Terms<C> from_accumulator(const std::unordered_map<std::uint64_t, C>& acc) {
  Terms<C> out;
  out.reserve(acc.size());
  for (const auto& [k, c] : acc)
    if (!is_zero(c)) out.emplace_back(unpack(k), c);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

template <class C>
Terms<C> mul(const Terms<C>& a, const Terms<C>& b, std::int64_t ord) {
  std::unordered_map<std::uint64_t, C> acc;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka.e1 + kb.e1 >= ord) break;  // b sorted by e1
      if (ka.e2 + kb.e2 >= ord) continue;
      acc[pack({ka.e1 + kb.e1, ka.e2 + kb.e2, ka.u + kb.u})] += ca * cb;
    }
  }
  return from_accumulator(acc);
}

template <class C>
Terms<C> one_series() {
  return {{SeriesKey{0, 0, 0}, C(1L)}};
}

template <class C>
void add_into(std::unordered_map<std::uint64_t, C>& acc, const Terms<C>& t, const C& scale) {
  for (const auto& [k, c] : t) acc[pack(k)] += scale * c;
}

std::pair<std::int64_t, std::int64_t> min_exponents(const std::vector<std::pair<SeriesKey, long>>& raw) {
  std::int64_t m1 = std::numeric_limits<std::int64_t>::max(), m2 = m1;
  for (const auto& [k, c] : raw) {
    m1 = std::min(m1, k.e1);
    m2 = std::min(m2, k.e2);
  }
  return {m1, m2};
}

template <class C>
Terms<C> convert(const std::vector<std::pair<SeriesKey, long>>& raw) {
  std::unordered_map<std::uint64_t, C> acc;
  for (const auto& [k, c] : raw) acc[pack(k)] += C(c);
  return from_accumulator(acc);
}

// Evaluates sum_m coeff_m prod_i X_i^{e_i} over truncated series, with cached powers,
// cached prefix products and pruning by minimal exponents.
template <class C, std::size_t N>
Terms<C> polynomial_in_series(const std::vector<Monomial>& monos,
                              const std::array<std::vector<std::pair<SeriesKey, long>>, N>& raw, std::int64_t ord) {
  std::array<Terms<C>, N> base;
  std::array<std::pair<std::int64_t, std::int64_t>, N> mins;
  for (std::size_t i = 0; i < N; ++i) {
    base[i] = convert<C>(raw[i]);
    mins[i] = raw[i].empty() ? std::pair<std::int64_t, std::int64_t>{ord, ord} : min_exponents(raw[i]);
  }
  std::array<std::vector<Terms<C>>, N> powers;
  auto power = [&](std::size_t i, int e) -> const Terms<C>& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(one_series<C>());
    while (static_cast<int>(p.size()) <= e) p.push_back(mul(p.back(), base[i], ord));
    return p[e];
  };
  std::map<std::vector<int>, Terms<C>> prefix;
  std::unordered_map<std::uint64_t, C> acc;
  for (const auto& m : monos) {
    std::int64_t lo1 = 0, lo2 = 0;
    for (std::size_t i = 0; i < N; ++i) {
      lo1 += m.e[i] * mins[i].first;
      lo2 += m.e[i] * mins[i].second;
    }
    if (lo1 >= ord || lo2 >= ord) continue;
    // prefix products over the first N - 1 variables are shared between monomials
    std::vector<int> key(m.e.begin(), m.e.begin() + (N - 1));
    auto it = prefix.find(key);
    if (it == prefix.end()) {
      Terms<C> p = power(0, m.e[0]);
      for (std::size_t i = 1; i + 1 < N; ++i)
        if (m.e[i] > 0) p = mul(p, power(i, m.e[i]), ord);
      it = prefix.emplace(key, std::move(p)).first;
    }
    const Terms<C>& last = power(N - 1, m.e[N - 1]);
    add_into(acc, mul(it->second, last, ord), C(static_cast<long>(m.coeff)));
  }
  return from_accumulator(acc);
}

template <std::size_t N>
FourierSeries polynomial_series(const std::vector<Monomial>& monos,
                                const std::array<std::vector<std::pair<SeriesKey, long>>, N>& raw,
                                SeriesLocus locus, RationalExponent order, const Rational& scale) {
  FourierSeries out(locus, order);
  const std::int64_t ord = order.scaled_to(kExpDen);
  auto emit = [&](const auto& terms) {
    for (const auto& [k, c] : terms) out.add_term(k, scale * to_rational(c));
  };
  try {
    emit(polynomial_in_series<I128, N>(monos, raw, ord));
  } catch (const Overflow&) {
    out = FourierSeries(locus, order);
    emit(polynomial_in_series<Integer, N>(monos, raw, ord));
  }
  return out;
}

// ---- theta enumerations ----

struct RawTheta {
  std::vector<std::pair<SeriesKey, long>> terms;  // one entry per lattice point
  std::vector<std::vector<int>> points;
};

RawTheta siegel_raw(int j, std::int64_t ord) {
  const auto ch = siegel_characteristic(j);
  const int s = ch.m[0], t = ch.m[1], uu = ch.n[0], vv = ch.n[1];
  RawTheta out;
  const int r = static_cast<int>(std::sqrt(static_cast<double>(ord) / 3.0)) + 2;
  for (int a = -r; a <= r; ++a)
    for (int b = -r; b <= r; ++b) {
      const std::int64_t x2 = 2 * a + s, y2 = 2 * b + t;
      const SeriesKey k{3 * x2 * x2, 3 * y2 * y2, 3 * x2 * y2};
      if (k.e1 >= ord || k.e2 >= ord) continue;
      // phase exp(pi i (x u + y v)) = i^{x2 u + y2 v}, an even power for even characteristics
      const std::int64_t ph = x2 * uu + y2 * vv;
      const long sign = ((ph / 2) % 2 == 0) ? 1 : -1;
      out.terms.emplace_back(k, sign);
      out.points.push_back({a, b});
    }
  return out;
}

RawTheta dk_raw(int k, SeriesLocus locus, std::int64_t ord) {
  const auto ch = hermitian_characteristic(k);
  const int s = ch.m[0], t = ch.m[1];
  RawTheta out;
  const int r = static_cast<int>(std::sqrt(2.0 * ord / kExpDen)) + 2;
  for (int a = -r; a <= r; ++a)
    for (int c = -r; c <= r; ++c) {
      const std::int64_t e1 = 24 * (a * a - a * c + c * c + s * c) + 8 * s * s;
      if (e1 >= ord) continue;
      for (int b = -r; b <= r; ++b)
        for (int d = -r; d <= r; ++d) {
          const std::int64_t e2 = 24 * (b * b - b * d + d * d + t * d) + 8 * t * t;
          if (e2 >= ord) continue;
          std::int64_t u;
          if (locus == SeriesLocus::zw) {
            u = 24 * a * b + 24 * c * d - 12 * a * d - 12 * b * c + 12 * t * c + 12 * s * d + 8 * s * t;
          } else {
            const std::int64_t K = 3 * (a * d - b * c) + 2 * (a * t - b * s) - (c * t - d * s);
            u = -2 * K;
          }
          out.terms.emplace_back(SeriesKey{e1, e2, u}, 1L);
          out.points.push_back({a, b, c, d});
        }
    }
  return out;
}

FourierSeries from_raw(const RawTheta& raw, SeriesLocus locus, RationalExponent order) {
  FourierSeries out(locus, order);
  for (const auto& [k, c] : raw.terms) out.add_term(k, Rational(c));
  return out;
}

void check_order(RationalExponent order, int max_order, const char* what) {
  if (order > RationalExponent(max_order))
    throw BoundsError(std::string(what) + ": order above the supported bound " + std::to_string(max_order));
}

ZeroExponentSet zero_set(const RawTheta& raw) {
  ZeroExponentSet z;
  std::int64_t m1 = std::numeric_limits<std::int64_t>::max(), m2 = m1;
  for (const auto& [k, c] : raw.terms) {
    m1 = std::min(m1, k.e1);
    m2 = std::min(m2, k.e2);
  }
  for (std::size_t i = 0; i < raw.terms.size(); ++i)
    if (raw.terms[i].first.e1 == m1 && raw.terms[i].first.e2 == m2) z.points.push_back(raw.points[i]);
  std::sort(z.points.begin(), z.points.end());
  z.alpha1 = RationalExponent(m1, kExpDen);
  z.alpha2 = RationalExponent(m2, kExpDen);
  return z;
}

std::string exp_str(std::int64_t e24) { return RationalExponent(e24, kExpDen).str(); }

}  // namespace

// ---- loci ----

std::string series_locus_name(SeriesLocus l) {
  switch (l) {
    case SeriesLocus::siegel: return "siegel";
    case SeriesLocus::zw: return "z=w";
    default: return "z=-w";
  }
}

SeriesLocus parse_series_locus(const std::string& s) {
  if (s == "siegel") return SeriesLocus::siegel;
  if (s == "z=w" || s == "zw") return SeriesLocus::zw;
  if (s == "z=-w" || s == "zmw") return SeriesLocus::zmw;
  throw InvalidArgument("unknown series locus: " + s);
}

// ---- FourierSeries ----

FourierSeries::FourierSeries(SeriesLocus locus, RationalExponent order) : locus_(locus), order_(order) {
  if (order.num() <= 0) throw InvalidArgument("series order must be positive");
  order24_ = order.scaled_to(kExpDen);
}

FourierSeries FourierSeries::constant(SeriesLocus locus, RationalExponent order, const Rational& c) {
  FourierSeries s(locus, order);
  s.add_term({0, 0, 0}, c);
  return s;
}

FourierSeries FourierSeries::monomial(SeriesLocus locus, RationalExponent order, RationalExponent e1,
                                      RationalExponent e2, std::int64_t u, const Rational& c) {
  FourierSeries s(locus, order);
  s.add_term({e1.scaled_to(kExpDen), e2.scaled_to(kExpDen), u}, c);
  return s;
}

void FourierSeries::add_term(const SeriesKey& k, const Rational& c) {
  if (k.e1 < 0 || k.e2 < 0) throw InvalidArgument("negative q-exponent");
  if (k.e1 >= order24_ || k.e2 >= order24_ || c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational FourierSeries::coeff(const SeriesKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

cplx FourierSeries::evaluate(cplx tau, cplx tau_prime, cplx z) const {
  const cplx i2pi(0.0, 2.0 * kPi);
  const cplx ustep = (locus_ == SeriesLocus::zmw) ? z * (kPi / std::sqrt(3.0)) : i2pi * z / 12.0;
  cplx s = 0.0;
  for (const auto& [k, c] : terms_)
    s += c.get_d() * std::exp(i2pi * (tau * (double(k.e1) / kExpDen) + tau_prime * (double(k.e2) / kExpDen)) +
                              ustep * double(k.u));
  return s;
}

std::string FourierSeries::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : terms_)
    arr.push_back({{"e1", exp_str(k.e1)}, {"e2", exp_str(k.e2)}, {"u", k.u}, {"c", c.get_str()}});
  return arr.dump();
}

namespace {

void require_compatible(const FourierSeries& a, const FourierSeries& b) {
  if (a.locus() != b.locus())
    throw LocusMismatch("series on " + series_locus_name(a.locus()) + " and " + series_locus_name(b.locus()));
}

}  // namespace

FourierSeries series_add(const FourierSeries& a, const FourierSeries& b) {
  require_compatible(a, b);
  FourierSeries out(a.locus(), std::min(a.order(), b.order()));
  for (const auto& [k, c] : a.terms()) out.add_term(k, c);
  for (const auto& [k, c] : b.terms()) out.add_term(k, c);
  return out;
}

FourierSeries series_sub(const FourierSeries& a, const FourierSeries& b) {
  return series_add(a, series_scale(b, Rational(-1)));
}

FourierSeries series_scale(const FourierSeries& a, const Rational& c) {
  FourierSeries out(a.locus(), a.order());
  for (const auto& [k, v] : a.terms()) out.add_term(k, v * c);
  return out;
}

FourierSeries series_mul(const FourierSeries& a, const FourierSeries& b) {
  require_compatible(a, b);
  FourierSeries out(a.locus(), std::min(a.order(), b.order()));
  const std::int64_t ord = out.order().scaled_to(kExpDen);
  for (const auto& [ka, ca] : a.terms()) {
    if (ka.e1 >= ord) break;
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.e1 + kb.e1 >= ord) break;
      if (ka.e2 + kb.e2 >= ord) continue;
      out.add_term({ka.e1 + kb.e1, ka.e2 + kb.e2, ka.u + kb.u}, ca * cb);
    }
  }
  return out;
}

FourierSeries series_pow(const FourierSeries& a, unsigned n) {
  FourierSeries result = FourierSeries::constant(a.locus(), a.order(), Rational(1));
  FourierSeries base = a;
  while (n > 0) {
    if (n & 1u) result = series_mul(result, base);
    n >>= 1u;
    if (n) base = series_mul(base, base);
  }
  return result;
}

std::string LeadingTerm::str() const {
  std::string poly;
  for (const auto& [u, c] : coeff) {
    if (!poly.empty()) poly += " + ";
    poly += "(" + c.get_str() + ")*u^" + std::to_string(u);
  }
  return "q1^(" + e1.str() + ") q2^(" + e2.str() + ") [" + poly + "]";
}

LeadingTerm leading_term(const FourierSeries& s) {
  if (s.is_zero()) throw InvalidArgument("leading term of the zero series");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [k, c] : s.terms()) best = std::min(best, k.e1 + k.e2);
  LeadingTerm lt;
  bool first = true;
  std::int64_t e1 = 0, e2 = 0;
  for (const auto& [k, c] : s.terms()) {
    if (k.e1 + k.e2 != best) continue;
    if (first) {
      e1 = k.e1;
      e2 = k.e2;
      first = false;
    } else if (k.e1 != e1 || k.e2 != e2) {
      throw InvalidArgument("leading term is not unique: several exponent pairs share the minimal degree");
    }
    lt.coeff[k.u] = c;
  }
  lt.e1 = RationalExponent(e1, kExpDen);
  lt.e2 = RationalExponent(e2, kExpDen);
  return lt;
}

// ---- expansions ----

FourierSeries qexp_siegel_theta(int j, RationalExponent order) {
  check_order(order, kMaxThetaOrder, "qexp_siegel_theta");
  return from_raw(siegel_raw(j, order.scaled_to(kExpDen)), SeriesLocus::siegel, order);
}

FourierSeries qexp_dk_theta(int k, SeriesLocus locus, RationalExponent order) {
  check_order(order, kMaxThetaOrder, "qexp_dk_theta");
  if (locus == SeriesLocus::siegel) throw InvalidArgument("Hermitian theta expansions live on z=w or z=-w");
  return from_raw(dk_raw(k, locus, order.scaled_to(kExpDen)), locus, order);
}

FourierSeries qexp_igusa(IgusaName name, RationalExponent order) {
  check_order(order, kMaxIgusaOrder, "qexp_igusa");
  const std::int64_t ord = order.scaled_to(kExpDen);
  std::array<std::vector<std::pair<SeriesKey, long>>, 10> raw;
  for (int j = 0; j < 10; ++j) raw[j] = siegel_raw(j, ord).terms;
  std::vector<Monomial> monos;
  Rational scale;
  // Monomials in ten variables are packed as two five-variable halves.
  auto mono10 = [](const std::array<int, 10>& e) { return e; };
  std::vector<std::pair<std::int64_t, std::array<int, 10>>> m10;
  switch (name) {
    case IgusaName::psi4:
      for (int j = 0; j < 10; ++j) {
        std::array<int, 10> e{};
        e[j] = 8;
        m10.emplace_back(1, mono10(e));
      }
      scale = Rational(1, 4);
      break;
    case IgusaName::psi6:
      for (const auto& t : syzygous_triples()) {
        std::array<int, 10> e{};
        for (int i : t.idx) e[i] = 4;
        m10.emplace_back(t.sign, e);
      }
      scale = Rational(1, 4);
      break;
    case IgusaName::chi10: {
      std::array<int, 10> e;
      e.fill(2);
      m10.emplace_back(-1, e);
      scale = Rational(1, 16384);
      break;
    }
    default:
      for (const auto& g : goepel_complements()) {
        std::array<int, 10> e{};
        for (int i : g) e[i] = 4;
        m10.emplace_back(1, e);
      }
      scale = Rational(1, 131072 * 3);
      break;
  }
  // Evaluate each ten-variable monomial as a product of two five-variable ones.
  FourierSeries out(SeriesLocus::siegel, order);
  std::array<std::vector<std::pair<SeriesKey, long>>, 5> lo, hi;
  for (int i = 0; i < 5; ++i) {
    lo[i] = raw[i];
    hi[i] = raw[5 + i];
  }
  for (const auto& [c, e] : m10) {
    Monomial a{1, {e[0], e[1], e[2], e[3], e[4]}}, b{1, {e[5], e[6], e[7], e[8], e[9]}};
    auto sa = polynomial_series<5>({a}, lo, SeriesLocus::siegel, order, Rational(1));
    auto sb = polynomial_series<5>({b}, hi, SeriesLocus::siegel, order, Rational(1));
    out = series_add(out, series_scale(series_mul(sa, sb), scale * c));
  }
  return out;
}

FourierSeries qexp_burkhardt(int j, SeriesLocus locus, RationalExponent order) {
  check_order(order, kMaxBurkhardtOrder, "qexp_burkhardt");
  if (locus == SeriesLocus::siegel) throw InvalidArgument("Burkhardt expansions live on z=w or z=-w");
  const auto& monos = burkhardt_monomials(j);
  const std::int64_t ord = order.scaled_to(kExpDen);
  std::array<std::vector<std::pair<SeriesKey, long>>, 5> raw;
  for (int k = 0; k < 5; ++k) raw[k] = dk_raw(k, locus, ord).terms;
  return polynomial_series<5>(monos, raw, locus, order, Rational(1));
}

ZeroExponentSet siegel_zero_exponent_set(int j) { return zero_set(siegel_raw(j, 2 * kExpDen)); }

ZeroExponentSet dk_zero_exponent_set(int k) { return zero_set(dk_raw(k, SeriesLocus::zw, 2 * kExpDen)); }

}  // namespace hermk3
