#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <set>

#include "hermk3/error.hpp"
#include "hermk3/qseries.hpp"

using namespace hermk3;

namespace {

RationalExponent R(long n, long d = 1) { return RationalExponent(n, d); }

std::map<std::int64_t, Rational> poly(std::initializer_list<std::pair<std::int64_t, long>> xs, Rational scale = 1) {
  std::map<std::int64_t, Rational> m;
  for (auto [u, c] : xs) m[u] = scale * c;
  return m;
}

void check_lead(const FourierSeries& s, RationalExponent e1, RationalExponent e2,
                const std::map<std::int64_t, Rational>& c) {
  auto lt = leading_term(s);
  CHECK(lt.e1 == e1);
  CHECK(lt.e2 == e2);
  CHECK(lt.coeff == c);
}

// Laurent polynomial helpers in xi for the z=-w checks
using LP = std::map<std::int64_t, Rational>;
LP lp_mul(const LP& a, const LP& b) {
  LP r;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b) r[i + j] += x * y;
  for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto q = FourierSeries::monomial(SeriesLocus::siegel, R(2), R(1, 8), R(0), 0, 2);
  auto p = series_pow(q, 8);
  CHECK(p.size() == 1);
  CHECK(p.coeff({24, 0, 0}) == 256);
  // truncation
  CHECK(series_pow(q, 16).is_zero());
  auto a = qexp_siegel_theta(3, R(2));
  auto b = qexp_siegel_theta(1, R(2));
  auto c = qexp_siegel_theta(9, R(2));
  CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  CHECK(series_mul(a, b) == series_mul(b, a));
  CHECK(series_sub(a, a).is_zero());
  CHECK_THROWS_AS(series_add(a, qexp_dk_theta(0, SeriesLocus::zw, R(2))), LocusMismatch);
  CHECK_THROWS_AS(FourierSeries(SeriesLocus::zw, R(1, 5)), InvalidArgument);
  CHECK_THROWS_AS(FourierSeries(SeriesLocus::zw, R(0)), InvalidArgument);
  CHECK_THROWS_AS(leading_term(FourierSeries(SeriesLocus::zw, R(1))), InvalidArgument);
  // q1 + q2 has no unique leading pair
  auto amb = series_add(FourierSeries::monomial(SeriesLocus::zw, R(2), R(1), R(0), 0, 1),
                        FourierSeries::monomial(SeriesLocus::zw, R(2), R(0), R(1), 0, 1));
  CHECK_THROWS_AS(leading_term(amb), InvalidArgument);
}

TEST_CASE("order bounds") {
  CHECK_THROWS_AS(qexp_siegel_theta(0, R(4)), BoundsError);
  CHECK_THROWS_AS(qexp_igusa(IgusaName::psi4, R(3)), BoundsError);
  CHECK_THROWS_AS(qexp_burkhardt(4, SeriesLocus::zw, R(4)), BoundsError);
  CHECK_THROWS_AS(qexp_burkhardt(4, SeriesLocus::siegel, R(1)), InvalidArgument);
}

TEST_CASE("siegel theta leading terms") {
  for (int j : {0, 4, 5, 6}) check_lead(qexp_siegel_theta(j, R(2)), R(0), R(0), poly({{0, 1}}));
  for (int j : {1, 7}) check_lead(qexp_siegel_theta(j, R(2)), R(1, 8), R(0), poly({{0, 2}}));
  for (int j : {2, 8}) check_lead(qexp_siegel_theta(j, R(2)), R(0), R(1, 8), poly({{0, 2}}));
  check_lead(qexp_siegel_theta(3, R(2)), R(1, 8), R(1, 8), poly({{3, 2}, {-3, 2}}));
  check_lead(qexp_siegel_theta(9, R(2)), R(1, 8), R(1, 8), poly({{3, -2}, {-3, 2}}));
}

TEST_CASE("hermitian theta leading terms") {
  check_lead(qexp_dk_theta(0, SeriesLocus::zw, R(2)), R(0), R(0), poly({{0, 1}}));
  check_lead(qexp_dk_theta(1, SeriesLocus::zw, R(2)), R(1, 3), R(0), poly({{0, 3}}));
  check_lead(qexp_dk_theta(2, SeriesLocus::zw, R(2)), R(0), R(1, 3), poly({{0, 3}}));
  check_lead(qexp_dk_theta(3, SeriesLocus::zw, R(2)), R(1, 3), R(1, 3), poly({{-8, 3}, {4, 6}}));
  check_lead(qexp_dk_theta(4, SeriesLocus::zw, R(2)), R(1, 3), R(1, 3), poly({{8, 3}, {-4, 6}}));
  for (int k : {3, 4})
    check_lead(qexp_dk_theta(k, SeriesLocus::zmw, R(2)), R(1, 3), R(1, 3), poly({{0, 3}, {2, 3}, {-2, 3}}));
}

TEST_CASE("zero exponent sets") {
  using P = std::vector<std::vector<int>>;
  auto sorted = [](P p) {
    std::sort(p.begin(), p.end());
    return p;
  };
  for (int j : {0, 4, 5, 6}) CHECK(siegel_zero_exponent_set(j).points == P{{0, 0}});
  for (int j : {1, 7}) {
    auto z = siegel_zero_exponent_set(j);
    CHECK(z.alpha1 == R(1, 8));
    CHECK(z.alpha2 == R(0));
    CHECK(z.points == sorted({{0, 0}, {-1, 0}}));
  }
  for (int j : {2, 8}) CHECK(siegel_zero_exponent_set(j).points == sorted({{0, 0}, {0, -1}}));
  for (int j : {3, 9}) {
    auto z = siegel_zero_exponent_set(j);
    CHECK(z.alpha1 == R(1, 8));
    CHECK(z.alpha2 == R(1, 8));
    CHECK(z.points == sorted({{0, 0}, {-1, 0}, {0, -1}, {-1, -1}}));
  }
  CHECK(dk_zero_exponent_set(0).points == P{{0, 0, 0, 0}});
  auto z1 = dk_zero_exponent_set(1);
  CHECK(z1.alpha1 == R(1, 3));
  CHECK(z1.points == sorted({{0, 0, 0, 0}, {0, 0, -1, 0}, {-1, 0, -1, 0}}));
  CHECK(dk_zero_exponent_set(2).points == sorted({{0, 0, 0, 0}, {0, 0, 0, -1}, {0, -1, 0, -1}}));
  CHECK(dk_zero_exponent_set(3).points ==
        sorted({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, -1, 0}, {0, 0, -1, 1}, {0, 1, -1, 1},
                {-1, 0, -1, 0}, {-1, 0, -1, 1}, {-1, 1, -1, 1}}));
  CHECK(dk_zero_exponent_set(4).points ==
        sorted({{0, 0, 0, 0}, {0, 0, 0, -1}, {0, -1, 0, -1}, {0, 0, -1, 0}, {0, 0, -1, -1}, {0, -1, -1, -1},
                {-1, 0, -1, 0}, {-1, 0, -1, -1}, {-1, -1, -1, -1}}));
}

TEST_CASE("series agree with direct theta sums") {
  const cplx tau(0.13, 2.6), tp(-0.21, 2.9), z(0.07, 0.05);
  TruncationSpec tr;
  for (int j = 0; j < 10; ++j) {
    auto s = qexp_siegel_theta(j, R(3));
    cplx direct = siegel_theta(siegel_characteristic(j), SiegelPoint{tau, z, tp}, tr);
    CHECK(std::abs(s.evaluate(tau, tp, z) - direct) < 1e-12);
  }
  for (int k = 0; k < 5; ++k) {
    auto s = qexp_dk_theta(k, SeriesLocus::zw, R(3));
    CHECK(std::abs(s.evaluate(tau, tp, z) - restricted_theta_zw(hermitian_characteristic(k), tau, tp, z, tr)) < 1e-12);
    auto m = qexp_dk_theta(k, SeriesLocus::zmw, R(3));
    CHECK(std::abs(m.evaluate(tau, tp, z) - restricted_theta_zmw(hermitian_characteristic(k), tau, tp, z, tr)) <
          1e-12);
  }
}

TEST_CASE("modular form series match numerics") {
  const cplx tau(0.11, 3.2), tp(-0.3, 3.4), z(0.05, 0.02);
  TruncationSpec tr;
  auto th = siegel_theta_all(SiegelPoint{tau, z, tp}, tr);
  for (auto n : {IgusaName::psi4, IgusaName::psi6, IgusaName::chi10, IgusaName::chi12}) {
    auto s = qexp_igusa(n, R(2));
    cplx v = igusa(n, th);
    CHECK(std::abs(s.evaluate(tau, tp, z) - v) < 1e-9 * std::max(1.0, std::abs(v)) + 1e-14);
  }
  std::array<cplx, 5> tzw, tzmw;
  for (int k = 0; k < 5; ++k) {
    tzw[k] = restricted_theta_zw(hermitian_characteristic(k), tau, tp, z, tr);
    tzmw[k] = restricted_theta_zmw(hermitian_characteristic(k), tau, tp, z, tr);
  }
  for (int j : {4, 6, 10, 12, 18}) {
    auto a = qexp_burkhardt(j, SeriesLocus::zw, R(3));
    auto b = qexp_burkhardt(j, SeriesLocus::zmw, R(3));
    cplx va = burkhardt_B(j, tzw), vb = burkhardt_B(j, tzmw);
    CHECK(std::abs(a.evaluate(tau, tp, z) - va) < 1e-9 * std::max(1.0, std::abs(va)) + 1e-12);
    CHECK(std::abs(b.evaluate(tau, tp, z) - vb) < 1e-9 * std::max(1.0, std::abs(vb)) + 1e-12);
  }
}

TEST_CASE("igusa leading terms") {
  check_lead(qexp_igusa(IgusaName::psi4, R(2)), R(0), R(0), poly({{0, 1}}));
  check_lead(qexp_igusa(IgusaName::psi6, R(2)), R(0), R(0), poly({{0, 1}}));
  // zeta = u^12
  check_lead(qexp_igusa(IgusaName::chi10, R(2)), R(1), R(1), poly({{12, 1}, {-12, 1}, {0, -2}}, Rational(-1, 4)));
  check_lead(qexp_igusa(IgusaName::chi12, R(2)), R(1), R(1), poly({{12, 1}, {-12, 1}, {0, 10}}, Rational(1, 12)));
}

TEST_CASE("burkhardt leading terms") {
  for (int j : {4, 6}) check_lead(qexp_burkhardt(j, SeriesLocus::zw, R(2)), R(0), R(0), poly({{0, 1}}));
  check_lead(qexp_burkhardt(10, SeriesLocus::zw, R(2)), R(1), R(1), poly({{12, 1}, {-12, 1}, {0, -2}}, 2 * 81));
  check_lead(qexp_burkhardt(12, SeriesLocus::zw, R(2)), R(1), R(1), poly({{12, 1}, {-12, 1}, {0, 10}}, 2 * 243));
  CHECK(qexp_burkhardt(18, SeriesLocus::zw, R(3)).is_zero());

  check_lead(qexp_burkhardt(10, SeriesLocus::zmw, R(2)), R(1), R(1),
             poly({{4, 1}, {-4, 1}, {2, 2}, {-2, 2}, {0, -6}}, 81));
  check_lead(qexp_burkhardt(12, SeriesLocus::zmw, R(2)), R(1), R(1),
             poly({{4, 1}, {-4, 1}, {2, 2}, {-2, 2}, {0, 18}}, 243));
  // 3^9 (xi - 1/xi)^6 (xi + 1/xi)^2
  LP m = {{1, 1}, {-1, -1}}, p = {{1, 1}, {-1, 1}}, e = {{0, 1}};
  for (int i = 0; i < 6; ++i) e = lp_mul(e, m);
  e = lp_mul(lp_mul(e, p), p);
  for (auto& [k, v] : e) v *= 19683;
  auto t0 = std::chrono::steady_clock::now();
  auto b18 = qexp_burkhardt(18, SeriesLocus::zmw, R(3));
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  check_lead(b18, R(2), R(2), e);
  MESSAGE("B18 on z=-w to order 3: " << ms << " ms");
}

TEST_CASE("json output") {
  auto s = qexp_siegel_theta(1, R(1, 2));
  CHECK(s.to_json() == R"([{"c":"2","e1":"1/8","e2":"0","u":0}])");
}
