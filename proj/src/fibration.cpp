#include "hermk3/fibration.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hermk3/error.hpp"

namespace hermk3 {

FibrationData fibration_from_t(const WeightedPoint& t) {
  if (t.is_zero()) throw InvalidArgument("zero parameter point");
  const auto& v = t.t;
  return {{0.0, 0.0, 0.0, 0.0, v[0], v[2]}, {0.0, 0.0, 0.0, 0.0, 0.0, 1.0, v[1], v[3], v[4]}};
}

cplx poly_eval(const Poly& f, cplx x) {
  cplx s = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) s = s * x + *it;
  return s;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_derivative(const Poly& f) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<double>(i);
  return d;
}

Poly poly_trim(Poly f, double tol) {
  double m = 0;
  for (auto c : f) m = std::max(m, std::abs(c));
  while (!f.empty() && std::abs(f.back()) <= tol * m) f.pop_back();
  return f;
}

int poly_order_at_zero(const Poly& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0.0) return static_cast<int>(i);
  return -1;
}

std::vector<cplx> poly_roots(const Poly& f0) {
  const Poly f = poly_trim(f0);
  if (f.empty()) throw InvalidArgument("roots of the zero polynomial");
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 0) return {};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -f[i] / f[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  const Poly df = poly_derivative(f);
  std::vector<cplx> roots;
  for (int i = 0; i < n; ++i) {
    cplx r = es.eigenvalues()[i];
    // one Newton step, kept only if it improves the residual
    const cplx d = poly_eval(df, r);
    if (std::abs(d) > 0) {
      const cplx r2 = r - poly_eval(f, r) / d;
      if (std::abs(poly_eval(f, r2)) < std::abs(poly_eval(f, r))) r = r2;
    }
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

Poly discriminant_poly(const FibrationData& f) {
  Poly p3 = poly_mul(f.p, poly_mul(f.p, f.p)), q2 = poly_mul(f.q, f.q);
  for (auto& c : p3) c *= 4.0;
  for (auto& c : q2) c *= 27.0;
  return poly_add(p3, q2);
}

FibrationData chart_at_infinity(const FibrationData& f) {
  auto flip = [](const Poly& a, std::size_t w) {
    if (a.size() > w + 1) throw InvalidArgument("coefficient degree exceeds the weight");
    Poly r(w + 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[w - i] = a[i];
    return r;
  };
  return {flip(f.p, 8), flip(f.q, 12)};
}

std::string kodaira_type(int op, int oq, int od) {
  if (op < 0 || oq < 0 || od < 0) throw InvalidArgument("negative vanishing order");
  if (od < std::min({3 * op, 2 * oq, kOrderInfinite}))
    throw InvalidArgument("discriminant order below min(3 ord p, 2 ord q)");
  if (od == 0) return "I0";
  if (op == 0 && oq == 0) return "I" + std::to_string(od);
  if (op >= 1 && oq == 1 && od == 2) return "II";
  if (op == 1 && oq >= 2 && od == 3) return "III";
  if (op >= 2 && oq == 2 && od == 4) return "IV";
  if (op >= 2 && oq >= 3 && od == 6) return "I0*";
  if (op == 2 && oq == 3 && od > 6) return "I" + std::to_string(od - 6) + "*";
  if (op >= 3 && oq == 4 && od == 8) return "IV*";
  if (op == 3 && oq >= 5 && od == 9) return "III*";
  if (op >= 4 && oq == 5 && od == 10) return "II*";
  throw InvalidArgument("vanishing orders (" + std::to_string(op) + "," + std::to_string(oq) + "," +
                        std::to_string(od) + ") outside the Kodaira table");
}

namespace {

int order_or_inf(const Poly& f) {
  const int o = poly_order_at_zero(f);
  return o < 0 ? kOrderInfinite : o;
}

// Vanishing order at r by successive derivatives, relative to the coefficient scale.
int order_at(const Poly& f, cplx r, double tol) {
  if (poly_trim(f).empty()) return kOrderInfinite;
  const double s = std::max(1.0, std::abs(r));
  Poly d = f;
  int k = 0;
  while (!d.empty()) {
    double scale = 0;
    for (std::size_t i = 0; i < d.size(); ++i) scale += std::abs(d[i]) * std::pow(s, double(i));
    if (std::abs(poly_eval(d, r)) > tol * scale) return k;
    d = poly_derivative(d);
    ++k;
  }
  return k;
}

}  // namespace

CriticalPointReport critical_points(const FibrationData& f, double cluster_tol) {
  const Poly delta = discriminant_poly(f);
  if (poly_trim(delta).empty()) throw InvalidArgument("discriminant vanishes identically");
  CriticalPointReport rep;
  const int o0 = order_or_inf(delta);
  const int op0 = order_or_inf(f.p), oq0 = order_or_inf(f.q);
  rep.points.push_back({false, 0.0, kodaira_type(op0, oq0, o0), {op0, oq0, o0}});

  const Poly reduced(delta.begin() + o0, delta.end());
  const auto roots = poly_roots(reduced);
  rep.min_root_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      rep.min_root_separation = std::min(
          rep.min_root_separation,
          std::abs(roots[i] - roots[j]) / std::max({1.0, std::abs(roots[i]), std::abs(roots[j])}));

  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    int mult = 1;
    cplx c = roots[i];
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - roots[i]) <= cluster_tol * std::max(1.0, std::abs(roots[i]))) {
        used[j] = true;
        c += roots[j];
        ++mult;
      }
    c /= double(mult);
    if (mult > 1) rep.degenerate = true;
    const int op = order_at(f.p, c, 1e-8), oq = order_at(f.q, c, 1e-8);
    std::string k;
    try {
      k = kodaira_type(op, oq, mult);
    } catch (const InvalidArgument&) {
      k = "?";
    }
    rep.points.push_back({false, c, k, {op, oq, mult}});
  }

  const FibrationData inf = chart_at_infinity(f);
  const int opi = order_or_inf(inf.p), oqi = order_or_inf(inf.q), odi = order_or_inf(discriminant_poly(inf));
  std::string ki;
  try {
    ki = kodaira_type(opi, oqi, odi);
  } catch (const InvalidArgument&) {
    ki = "?";
  }
  rep.points.push_back({true, 0.0, ki, {opi, oqi, odi}});
  return rep;
}

std::array<cplx, 3> fiber_branch_points(const FibrationData& f, cplx x1) {
  const cplx p = poly_eval(f.p, x1), q = poly_eval(f.q, x1);
  const cplx d = 4.0 * p * p * p + 27.0 * q * q;
  const double scale = 4.0 * std::pow(std::abs(p), 3) + 27.0 * std::norm(q);
  if (std::abs(d) <= 1e-12 * scale) throw InvalidArgument("singular fiber");
  const auto r = poly_roots({q, p, 0.0, 1.0});
  return {r[0], r[1], r[2]};
}

WeightedPoint reference_t0() { return {{-12.0, -3.0, -5.0, 21.0, 13.0}}; }

FibrationData reference_fibration(cplx q6) {
  FibrationData f = fibration_from_t(reference_t0());
  f.q[6] = q6;
  return f;
}

const std::array<double, 6>& reference_printed_critical_points() {
  static const std::array<double, 6> v = {-1.84, -1.65, -0.43, -0.10, 0.05, 0.84};
  return v;
}

std::array<ReferenceVariant, 2> reference_variants() {
  std::array<ReferenceVariant, 2> out;
  const double q6s[2] = {-3.0, -4.0};
  for (int i = 0; i < 2; ++i) {
    const Poly delta = discriminant_poly(reference_fibration(q6s[i]));
    const Poly reduced(delta.begin() + poly_order_at_zero(delta), delta.end());
    ReferenceVariant v{q6s[i], poly_roots(reduced), std::numeric_limits<double>::infinity(), false};
    bool real = v.roots.size() == 6;
    for (auto r : v.roots) real = real && std::abs(r.imag()) < 1e-9;
    if (real) {
      v.max_deviation = 0;
      for (int k = 0; k < 6; ++k)
        v.max_deviation = std::max(v.max_deviation, std::abs(v.roots[k].real() - reference_printed_critical_points()[k]));
    }
    v.matches = v.max_deviation < 0.01;
    out[i] = v;
  }
  return out;
}

double min_discriminant_root_gap(const WeightedPoint& t) {
  return critical_points(fibration_from_t(t)).min_root_separation;
}

std::vector<cplx> d90_roots_in_t18(const WeightedPoint& t) {
  // Coefficients in long double; the double root of the discriminant is very
  // sensitive to errors in t18, so every root gets extra Newton steps.
  using lcplx = std::complex<long double>;
  std::map<int, lcplx> by_power;
  for (const auto& m : d90_monomials()) {
    lcplx c = static_cast<long double>(m.coeff);
    for (int k = 0; k < 4; ++k)
      for (int e = 0; e < m.e[k]; ++e) c *= lcplx(t.t[k].real(), t.t[k].imag());
    by_power[m.e[4]] += c;
  }
  const int deg = by_power.rbegin()->first;
  std::vector<lcplx> lf(deg + 1, 0.0L);
  for (const auto& [e, c] : by_power) lf[e] = c;
  Poly f(deg + 1);
  for (int i = 0; i <= deg; ++i) f[i] = cplx(static_cast<double>(lf[i].real()), static_cast<double>(lf[i].imag()));
  auto roots = poly_roots(poly_trim(f, 1e-14));
  for (auto& r : roots) {
    lcplx x(r.real(), r.imag());
    for (int it = 0; it < 20; ++it) {
      lcplx v = 0, d = 0;
      for (int i = deg; i >= 0; --i) {
        d = d * x + v;
        v = v * x + lf[i];
      }
      if (std::abs(d) == 0) break;
      const lcplx step = v / d;
      x -= step;
      if (std::abs(step) <= 1e-18L * std::abs(x)) break;
    }
    r = cplx(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }
  return roots;
}

}  // namespace hermk3
