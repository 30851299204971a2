#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "hermk3/error.hpp"
#include "hermk3/invariants.hpp"
#include "hermk3/lattices.hpp"

using namespace hermk3;

namespace {

using Vec5 = std::array<cplx, 5>;
using Mat5 = std::array<std::array<cplx, 5>, 5>;
const double kPi = 3.14159265358979323846;

Vec5 mat_apply(const Mat5& m, const Vec5& v) {
  Vec5 out{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Mat5 diag(std::array<cplx, 5> d) {
  Mat5 m{};
  for (int i = 0; i < 5; ++i) m[i][i] = d[i];
  return m;
}

// The four generator images, written out independently of the modgroup module.
std::vector<Mat5> psi_matrices() {
  const cplx w = std::polar(1.0, 2 * kPi / 3);
  const int j[5][5] = {{-1, -2, -2, -2, -2}, {-1, 1, -2, 1, 1}, {-1, -2, 1, 1, 1}, {-1, 1, 1, 1, -2}, {-1, 1, 1, -2, 1}};
  Mat5 pj{};
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) pj[a][b] = j[a][b] / 3.0;
  return {diag({1, w, 1, w, w}), diag({1, 1, w, w, w}), diag({1, 1, 1, w, w * w}), pj};
}

Vec5 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  Vec5 v;
  for (auto& x : v) x = cplx(n(rng), n(rng));
  return v;
}

// Oracle for brackets: all 24 permutations, deduplicated as a set.
cplx bracket_oracle(int n0, std::array<int, 4> ns, const Vec5& T) {
  std::set<std::array<int, 4>> seen;
  std::array<int, 4> idx = {0, 1, 2, 3};
  cplx s = 0;
  do {
    std::array<int, 4> e = {ns[idx[0]], ns[idx[1]], ns[idx[2]], ns[idx[3]]};
    if (!seen.insert(e).second) continue;
    cplx term = 1;
    for (int i = 0; i < 4; ++i) term *= std::pow(T[i + 1], e[i]);
    s += term;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return std::pow(T[0], n0) * s;
}

Integer d90_exact(const std::array<long, 5>& t) {
  Integer s = 0;
  for (const auto& m : d90_monomials()) {
    Integer term = static_cast<long>(m.coeff);
    for (int k = 0; k < 5; ++k) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(t[k]).get_mpz_t(), m.e[k]);
      term *= p;
    }
    s += term;
  }
  return s;
}

// Sylvester resultant of f and f' for f = 4x(t4 x + t10)^3 + 27(x^3 + t6 x^2 + t12 x + t18)^2.
Integer resultant_f_fprime(const std::array<long, 5>& t) {
  const long t4 = t[0], t6 = t[1], t10 = t[2], t12 = t[3], t18 = t[4];
  std::vector<long> f(7, 0);  // ascending
  const long cub[4] = {t10 * t10 * t10, 3 * t10 * t10 * t4, 3 * t10 * t4 * t4, t4 * t4 * t4};
  for (int i = 0; i < 4; ++i) f[i + 1] += 4 * cub[i];
  const long q[4] = {t18, t12, t6, 1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f[i + j] += 27 * q[i] * q[j];
  std::vector<long> fp(6);
  for (int i = 1; i <= 6; ++i) fp[i - 1] = i * f[i];
  IntMatrix s(11, std::vector<std::int64_t>(11, 0));
  for (int r = 0; r < 5; ++r)
    for (int i = 0; i <= 6; ++i) s[r][r + i] = f[6 - i];
  for (int r = 0; r < 6; ++r)
    for (int i = 0; i <= 5; ++i) s[5 + r][r + i] = fp[5 - i];
  return determinant(s);
}

double b18_abs_scale(const Vec5& T) {
  double s = 0;
  for (const auto& m : burkhardt_monomials(18)) {
    double t = std::abs(static_cast<double>(m.coeff));
    for (int k = 0; k < 5; ++k) t *= std::pow(std::abs(T[k]), m.e[k]);
    s += t;
  }
  return s;
}

}  // namespace

TEST_CASE("bracket evaluation") {
  Vec5 T = {cplx(1.3, 0.2), 1, 1, 1, 1};
  CHECK(std::abs(bracket_eval(BracketSpec(4, {0, 0, 0, 0}), T) - std::pow(T[0], 4)) < 1e-12);
  CHECK(std::abs(bracket_eval(BracketSpec(0, {3, 3, 0, 0}), T) - 6.0) < 1e-12);
  CHECK(std::abs(bracket_eval(BracketSpec(1, {3, 0, 0, 0}), {1, 1, 2, 0, 0}) - 9.0) < 1e-12);
  CHECK(bracket_monomials(BracketSpec(0, {3, 3, 0, 0})).size() == 6);
  CHECK(bracket_monomials(BracketSpec(0, {4, 1, 1, 1})).size() == 4);
  CHECK(bracket_monomials(BracketSpec(0, {1, 1, 1, 1})).size() == 1);
  CHECK(bracket_monomials(BracketSpec(0, {5, 2, 2, 2})).size() == 4);
  CHECK(bracket_monomials(BracketSpec(0, {7, 4, 1, 1})).size() == 12);
  CHECK_THROWS_AS(BracketSpec(0, {1, 3, 0, 0}), InvalidArgument);

  std::mt19937_64 rng(2);
  for (int j : {4, 6, 10, 12, 18})
    for (const auto& bt : burkhardt_brackets(j)) {
      auto v = random_vec(rng);
      cplx a = bracket_eval(bt.spec, v), b = bracket_oracle(bt.spec.n0, bt.spec.n, v);
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
      CHECK(bt.spec.degree() == j);
    }
}

TEST_CASE("Burkhardt values at coordinate points") {
  CHECK(std::abs(burkhardt_B(4, {1, 0, 0, 0, 0}) - 1.0) < 1e-14);
  CHECK(std::abs(burkhardt_B(4, {0, 1, 1, 1, 1}) - 48.0) < 1e-12);
  CHECK(std::abs(burkhardt_B(6, {1, 0, 0, 0, 0}) - 1.0) < 1e-14);
  CHECK_THROWS_AS(burkhardt_B(8, {1, 0, 0, 0, 0}), InvalidArgument);
}

TEST_CASE("Burkhardt homogeneity") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    auto T = random_vec(rng);
    cplx c = random_vec(rng)[0];
    Vec5 cT;
    for (int k = 0; k < 5; ++k) cT[k] = c * T[k];
    for (int j : {4, 6, 10, 12, 18}) {
      cplx lhs = burkhardt_B(j, cT), rhs = std::pow(c, j) * burkhardt_B(j, T);
      CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(rhs));
    }
  }
}

TEST_CASE("Burkhardt invariants are fixed by the generator images") {
  std::mt19937_64 rng(8);
  auto gens = psi_matrices();
  for (int i = 0; i < 20; ++i) {
    auto T = random_vec(rng);
    for (const auto& g : gens) {
      auto gT = mat_apply(g, T);
      for (int j : {4, 6, 10, 12, 18}) {
        cplx a = burkhardt_B(j, gT), b = burkhardt_B(j, T);
        CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
      }
    }
  }
}

TEST_CASE("a corrupted invariant is caught by the generator test") {
  auto ms = burkhardt_monomials(18);
  ms[5].coeff += 1;
  std::mt19937_64 rng(8);
  auto T = random_vec(rng);
  auto gT = mat_apply(psi_matrices()[3], T);
  auto eval = [&](const Vec5& x) {
    cplx s = 0;
    for (const auto& m : ms) {
      cplx t = static_cast<double>(m.coeff);
      for (int k = 0; k < 5; ++k) t *= std::pow(x[k], m.e[k]);
      s += t;
    }
    return s;
  };
  CHECK(std::abs(eval(gT) - eval(T)) > 1e-6 * std::abs(eval(T)));
}

TEST_CASE("Igusa invariants") {
  std::array<cplx, 10> z{};
  z.fill(1.0);
  z[3] = 0.0;
  CHECK(igusa(IgusaName::chi10, z) == 0.0);
  std::array<cplx, 10> e{};
  e[0] = 1.0;
  CHECK(std::abs(igusa(IgusaName::psi4, e) - 0.25) < 1e-15);
  std::array<cplx, 10> ones{};
  ones.fill(1.0);
  CHECK(std::abs(igusa(IgusaName::chi12, ones) - 15.0 / (131072.0 * 3)) < 1e-18);
  CHECK(syzygous_triples().size() == 60);
  CHECK(goepel_complements().size() == 15);
  CHECK_THROWS_AS(parse_igusa("chi8"), InvalidArgument);
}

TEST_CASE("syzygous triples are exactly the triples with even sum") {
  std::set<std::array<int, 3>> want;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c) {
        auto ca = siegel_characteristic(a), cb = siegel_characteristic(b), cc = siegel_characteristic(c);
        int m0 = (ca.m[0] + cb.m[0] + cc.m[0]) % 2, m1 = (ca.m[1] + cb.m[1] + cc.m[1]) % 2;
        int n0 = (ca.n[0] + cb.n[0] + cc.n[0]) % 2, n1 = (ca.n[1] + cb.n[1] + cc.n[1]) % 2;
        if ((m0 * n0 + m1 * n1) % 2 == 0) want.insert({a, b, c});
      }
  std::set<std::array<int, 3>> got;
  for (const auto& t : syzygous_triples()) got.insert(t.idx);
  CHECK(got == want);
}

TEST_CASE("Igusa invariants transform as modular forms") {
  PointSampler smp(13);
  TruncationSpec tr{0, 1e-14};
  for (int i = 0; i < 5; ++i) {
    auto p = smp.siegel();
    auto th = siegel_theta_all(p, tr);
    // W0 -> -W0^{-1}, factor det(W0)^k
    cplx det = p.tau * p.tau_prime - p.z * p.z;
    SiegelPoint q{-p.tau_prime / det, p.z / det, -p.tau / det};
    auto thq = siegel_theta_all(q, tr);
    const std::pair<IgusaName, int> forms[] = {
        {IgusaName::psi4, 4}, {IgusaName::psi6, 6}, {IgusaName::chi10, 10}, {IgusaName::chi12, 12}};
    for (auto [n, k] : forms) {
      cplx a = igusa(n, thq), b = std::pow(det, k) * igusa(n, th);
      CHECK(std::abs(a - b) <= 1e-8 * std::abs(b));
    }
    // W0 -> W0 + [[0,1],[1,0]]
    SiegelPoint s{p.tau, p.z + 1.0, p.tau_prime};
    auto ths = siegel_theta_all(s, tr);
    for (auto [n, k] : forms) {
      (void)k;
      CHECK(std::abs(igusa(n, ths) - igusa(n, th)) <= 1e-9 * std::abs(igusa(n, th)));
    }
  }
}

TEST_CASE("d90 sample values") {
  CHECK(std::abs(d90({{0, 0, 1, 0, 0}}) - 3125.0) < 1e-9);
  CHECK(std::abs(d90({{0, 0, 0, 0, 1}}) - 14348907.0) < 1e-6);
  CHECK(d90({{0, 0, 0, 1, 0}}) == 0.0);
  auto rep = d90_static_check();
  CHECK(rep.monomials == 102);
  CHECK(rep.ok());
}

TEST_CASE("d90 weighted homogeneity") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    auto v = random_vec(rng);
    WeightedPoint t{v};
    cplx lam = std::polar(std::uniform_real_distribution<double>(0.8, 1.2)(rng),
                          std::uniform_real_distribution<double>(0, 6.28)(rng));
    cplx lhs = d90(t.scaled(lam)), rhs = std::pow(lam, 90) * d90(t);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * d90_abs_scale(t.scaled(lam)));
  }
}

TEST_CASE("d90 is the discriminant cofactor of the Weierstrass polynomial") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-4, 4);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    std::array<long, 5> t;
    for (auto& v : t) v = d(rng);
    const long k = -t[2] * t[2] * t[2] + t[2] * t[2] * t[0] * t[1] - t[2] * t[3] * t[0] * t[0] + t[4] * t[0] * t[0] * t[0];
    Integer rhs = Integer(27) * Integer("2176782336") * Integer(k) * Integer(k) * Integer(k) * d90_exact(t);
    CHECK(resultant_f_fprime(t) == rhs);
    Integer approx_check = d90_exact(t);
    WeightedPoint wt{{double(t[0]), double(t[1]), double(t[2]), double(t[3]), double(t[4])}};
    CHECK(std::abs(d90(wt).real() - approx_check.get_d()) <= 1e-12 * d90_abs_scale(wt) + 1e-9);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("weighted projective equality") {
  WeightedPoint t{{cplx(1, 2), cplx(-0.5, 0.3), cplx(0.7, 0.1), cplx(0.2, -1), cplx(0.4, 0.4)}};
  CHECK(weighted_projective_eq(t, t.scaled(2.0), 1e-9));
  CHECK(weighted_projective_eq(t, t.scaled(cplx(0.3, -1.7)), 1e-9));
  CHECK(weighted_projective_eq(t.scaled(cplx(0, 1)), t, 1e-9));
  WeightedPoint s{{1, 0.5, 0.5, 0.5, 0.5}};
  WeightedPoint s2 = s;
  s2.t[2] += 10 * 1e-6;
  CHECK_FALSE(weighted_projective_eq(s, s2, 1e-6));
  CHECK(weighted_projective_eq({{1, 1, 0, 0, 0}}, {{16, 64, 0, 0, 0}}, 1e-9));
  CHECK_FALSE(weighted_projective_eq({{1, 1, 0, 0, 0}}, {{16, 64, 0, 0, 1e-3}}, 1e-9));
  CHECK(weighted_projective_eq({{1, 1, 0, 0, 0}}, {{1, -1, 0, 0, 0}}, 1e-9));
  CHECK_THROWS_AS(weighted_projective_eq({{0, 0, 0, 0, 0}}, t, 1e-9), InvalidArgument);
}

TEST_CASE("Clingher-Doran embedding") {
  auto t = embed_cd({1, 1, 1, 1});
  CHECK(t.t == std::array<cplx, 5>{-3, -2, -1, 1, 0});
  auto u = embed_cd({0, 0, 1, 0});
  CHECK(u.t == std::array<cplx, 5>{0, 0, -1, 0, 0});
  CDPoint p{cplx(0.3, 1), cplx(-1, 0.2), cplx(0.5, 0.5), cplx(2, -1)};
  cplx lam(1.3, 0.4);
  CDPoint q{std::pow(lam, 2) * p.alpha, std::pow(lam, 3) * p.beta, std::pow(lam, 5) * p.gamma, std::pow(lam, 6) * p.delta};
  CHECK(weighted_projective_eq(embed_cd(p), embed_cd(q), 1e-9));
}

TEST_CASE("Burkhardt and Igusa invariants agree on the diagonal locus") {
  PointSampler smp(99);
  TruncationSpec tr{0, 1e-14};
  for (int i = 0; i < 20; ++i) {
    auto p = smp.hermitian(Locus::zw);
    auto T = hermitian_theta_all(p, tr);
    auto th = siegel_theta_all({p.tau, p.z, p.tau_prime}, tr);
    auto relerr = [](cplx a, cplx b) { return std::abs(a - b) / std::abs(b); };
    CHECK(relerr(burkhardt_B(4, T), igusa(IgusaName::psi4, th)) < 1e-8);
    CHECK(relerr(burkhardt_B(6, T), igusa(IgusaName::psi6, th)) < 1e-8);
    CHECK(relerr(burkhardt_B(10, T), -648.0 * igusa(IgusaName::chi10, th)) < 1e-8);
    CHECK(relerr(burkhardt_B(12, T), 5832.0 * igusa(IgusaName::chi12, th)) < 1e-8);
  }
}

TEST_CASE("moduli point vanishing on the two loci") {
  PointSampler smp(123);
  TruncationSpec tr{0, 1e-14};
  for (int i = 0; i < 10; ++i) {
    auto t = inverse_period_map(smp.hermitian(Locus::zw), tr).normalized();
    CHECK(std::abs(t.t[4]) < 1e-8);
    auto u = inverse_period_map(smp.hermitian(Locus::zmw), tr).normalized();
    CHECK(std::abs(d90(u)) < 1e-5);
    // far below the size of the individual monomials
    CHECK(std::abs(d90(u)) < 1e-9 * d90_abs_scale(u));
    // flipping the sign of t18 destroys the vanishing
    auto v = u;
    v.t[4] = -v.t[4];
    CHECK(std::abs(d90(v)) > 1e-6 * d90_abs_scale(v));
    // generic points do not vanish
    auto gp = inverse_period_map_ex(smp.hermitian(Locus::generic), tr);
    auto g = gp.t.normalized();
    CHECK(std::abs(gp.B[4]) > 1e-6 * b18_abs_scale(gp.thetas));
    CHECK(std::abs(d90(g)) > 1e-6 * d90_abs_scale(g));
    auto zp = inverse_period_map_ex(smp.hermitian(Locus::zw), tr);
    CHECK(std::abs(zp.B[4]) < 1e-12 * b18_abs_scale(zp.thetas));
  }
}

TEST_CASE("Clingher-Doran point leading behaviour") {
  const double pi = 3.14159265358979323846;
  SiegelPoint p{cplx(0.1, 4.0), cplx(0.05, 0.02), cplx(-0.2, 4.2)};
  auto cd = clingher_doran_map(p, {0, 1e-30});
  cplx q1q2 = std::exp(cplx(0, 2 * pi) * (p.tau + p.tau_prime));
  cplx zeta = std::exp(cplx(0, 2 * pi) * p.z);
  CHECK(std::abs(cd.alpha - 1.0) < 1e-6);
  CHECK(std::abs(cd.gamma / (-1024.0 * 243.0 * q1q2 * (zeta + 1.0 / zeta - 2.0)) - 1.0) < 1e-4);
  CHECK(std::abs(cd.delta / (1024.0 * 243.0 * q1q2 * (zeta + 1.0 / zeta + 10.0)) - 1.0) < 1e-4);
}
