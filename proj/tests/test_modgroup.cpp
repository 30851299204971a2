#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "hermk3/error.hpp"
#include "hermk3/modgroup.hpp"

using namespace hermk3;

namespace {

// (1 + t^45) / prod (1 - t^d), expanded by repeated geometric-series multiplication
std::vector<long> closed_form(int n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  if (45 <= n) c[45] = 1;
  for (int d : {4, 6, 10, 12, 18})
    for (int i = d; i <= n; ++i) c[i] += c[i - d];
  return c;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double imag_min_eig(const HermitianPoint& w) {
  auto y = w.imag_part();  // y11, y12, y22
  const double tr = y[0].real() + y[2].real();
  const double det = y[0].real() * y[2].real() - std::norm(y[1]);
  return tr / 2 - std::sqrt(std::max(0.0, tr * tr / 4 - det));
}

}  // namespace

TEST_CASE("modular generators") {
  for (const auto& n : modular_generator_names()) CHECK(modular_generator(n).is_symplectic_hermitian());
  ModularMatrix::Entries e = ModularMatrix::identity().entries();
  e[0][2] = EisensteinInt::omega();  // non-Hermitian S
  CHECK_FALSE(ModularMatrix(e).is_symplectic_hermitian());
  CHECK_THROWS_AS(modular_generator("Q"), InvalidArgument);
}

TEST_CASE("action and slash") {
  const HermitianPoint w{cplx(0.1, 1.3), cplx(0.2, 0.1), cplx(-0.1, 0.05), cplx(0.3, 1.1)};
  auto m1 = act(modular_generator("M1"), w);
  CHECK(std::abs(m1.tau - (w.tau + 1.0)) < 1e-14);
  CHECK(std::abs(m1.z - w.z) < 1e-14);
  auto m3 = act(modular_generator("M3"), w);
  CHECK(std::abs(m3.z - (w.z + 1.0)) < 1e-14);
  CHECK(std::abs(m3.w - (w.w + 1.0)) < 1e-14);
  auto j = act(modular_generator("J"), w);
  // -W^{-1} by cofactors
  const cplx d = w.tau * w.tau_prime - w.z * w.w;
  CHECK(std::abs(j.tau + w.tau_prime / d) < 1e-13);
  CHECK(std::abs(j.z - w.z / d) < 1e-13);
  CHECK(std::abs(j.w - w.w / d) < 1e-13);
  CHECK(std::abs(j.tau_prime + w.tau / d) < 1e-13);

  PointSampler ps(3);
  for (int i = 0; i < 10; ++i) {
    auto p = ps.hermitian(Locus::generic);
    for (const auto& n : modular_generator_names()) CHECK(imag_min_eig(act(modular_generator(n), p)) > 0);
  }
  auto f = [](const HermitianPoint& x) { return x.tau * x.tau_prime + x.z; };
  CHECK(slash(f, 0, ModularMatrix::identity(), w) == f(w));
  auto c = [](const HermitianPoint&) { return cplx(2.5, -1); };
  CHECK(std::abs(slash(c, 4, modular_generator("M1"), w) - cplx(2.5, -1)) < 1e-15);
  HermitianPoint zero{0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(act(modular_generator("J"), zero), InvalidArgument);
}

TEST_CASE("psi generators") {
  const auto& g = psi_generators();
  CHECK(g.size() == 4);
  const auto w = CycloRational::omega();
  CHECK(g.at("M2")[2][2] == w);
  CHECK(g.at("M3")[4][4] == w * w);
  CHECK(rep5_mul(g.at("J"), g.at("J")) == rep5_identity());
}

TEST_CASE("theta transformation") {
  TruncationSpec tr;
  PointSampler ps(11);
  for (int i = 0; i < 3; ++i) {
    auto p = ps.hermitian(Locus::generic);
    for (auto n : {"M1", "M2", "M3"}) CHECK(verify_theta_transform(n, p, tr, 1e-9).ok);
  }
  HermitianPoint d{cplx(0, 1.2), 0.0, 0.0, cplx(0, 1.3)};
  auto r = verify_theta_transform("J", d, tr, 1e-8);
  CHECK(r.ok);
  MESSAGE("J residual " << r.residual);
  HermitianPoint g{cplx(0.1, 1.2), cplx(0.1, 0.1), cplx(0.05, -0.1), cplx(-0.2, 1.1)};
  CHECK(verify_theta_transform("J", g, tr, 1e-8).ok);
  // without the phases the identity fails
  auto a = hermitian_theta_all(g, tr), b = hermitian_theta_all(act(modular_generator("M1"), g), tr);
  CHECK(std::abs(a[1] - b[1]) > 1e-3);
}

TEST_CASE("closure and molien") {
  CHECK(group_closure({rep5_identity()}).order() == 1);
  CHECK(group_closure({psi_generators().at("M1")}).order() == 3);
  auto triv = molien_series(group_closure({rep5_identity()}), 6);
  for (int d = 0; d <= 6; ++d) CHECK(triv[d] == binom(d + 4, 4));

  auto t0 = std::chrono::steady_clock::now();
  std::vector<Rep5Matrix> gens;
  for (const auto& [k, v] : psi_generators()) gens.push_back(v);
  auto g = group_closure(gens);
  CHECK(g.order() == 25920);
  CHECK(g.is_closed());
  CHECK_FALSE(g.contains_nontrivial_scalar());
  CHECK(g.contains(rep5_identity()));
  // inverses: g^{-1} = g^{n-1} for finite order
  for (std::size_t i = 0; i < g.order(); i += 997) {
    auto x = g.element(i), p = x;
    while (!(p == rep5_identity())) {
      p = rep5_mul(p, x);
      CHECK(g.contains(p));
    }
  }
  auto m = molien_series(g, 20);
  auto expect = closed_form(20);
  for (int d = 0; d <= 20; ++d) CHECK(m[d] == expect[d]);
  CHECK(m[10] == 2);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("closure + molien: " << ms << " ms");
  CHECK_THROWS_AS(group_closure(gens, 1000), CapacityError);
}

TEST_CASE("modular isomorphism") {
  PointSampler ps(5);
  for (int i = 0; i < 20; ++i) {
    auto w = ps.hermitian(Locus::generic);
    auto xi = modular_iso_finv(w);
    CHECK(std::abs(domain_quadric(xi)) < 1e-12);
    CHECK(domain_positivity(xi) > 0);
    auto back = modular_iso_f(xi);
    CHECK(std::abs(back.tau - w.tau) + std::abs(back.z - w.z) + std::abs(back.w - w.w) +
              std::abs(back.tau_prime - w.tau_prime) <
          1e-13);
    // projective invariance
    DomainPoint scaled = xi;
    for (auto& x : scaled.xi) x *= cplx(0.3, -2.0);
    auto b2 = modular_iso_f(scaled);
    CHECK(std::abs(b2.z - w.z) < 1e-13);
  }
  auto zw = modular_iso_finv(HermitianPoint::on_zw(cplx(0, 1), cplx(0, 1), cplx(0.2, 0.1)));
  CHECK(std::abs(zw.xi[4] - cplx(0.2, 0.1)) < 1e-15);
  CHECK(std::abs(zw.xi[5] - cplx(0.2, 0.1)) < 1e-15);
  DomainPoint boundary{{0.0, 1.0, 0.0, 0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(modular_iso_f(boundary), InvalidArgument);
  DomainPoint flat{{1.0, 0.0, cplx(0, 1), cplx(0, 1), 0.0, 0.0}};
  auto fw = modular_iso_f(flat);
  CHECK(fw.z == cplx(0));
  CHECK(fw.w == cplx(0));
}

TEST_CASE("orthogonal images") {
  const auto& imgs = orth_images();
  CHECK(imgs.size() == 6);
  for (const auto& [n, m] : imgs) {
    CHECK(check_isometry(m, gram_A()));
    CHECK(check_discriminant_trivial(m, gram_A()));
  }
  PointSampler ps(9);
  for (int i = 0; i < 10; ++i) {
    auto xi = modular_iso_finv(ps.hermitian(Locus::generic));
    for (auto& x : xi.xi) x *= cplx(1.5, 0.5);
    for (const auto& [n, m] : imgs) CHECK(equivariance_residual(n, xi) < 1e-9);
  }
}
