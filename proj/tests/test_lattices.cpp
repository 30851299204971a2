#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <numeric>
#include <random>

#include "hermk3/error.hpp"
#include "hermk3/lattices.hpp"

using namespace hermk3;

namespace {

// Cofactor expansion along the first row, selected rows/cols only.
long long cofactor_det(const IntMatrix& a, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() == 1) return a[rows[0]][cols[0]];
  long long s = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (a[rows[0]][cols[j]] == 0) continue;
    std::vector<int> r(rows.begin() + 1, rows.end()), c = cols;
    c.erase(c.begin() + j);
    long long sub = cofactor_det(a, r, c);
    s += (j % 2 ? -1 : 1) * a[rows[0]][cols[j]] * sub;
  }
  return s;
}

long long full_det(const IntMatrix& a) {
  std::vector<int> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  return cofactor_det(a, idx, idx);
}

// Invariant factors from gcds of k-minors.
std::vector<long long> determinantal_factors(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<long long> d(n + 1, 0);
  d[0] = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> pick(k);
    std::function<void(int, int, std::vector<int>&, std::vector<int>&)> rows;
    long long g = 0;
    std::vector<std::vector<int>> subsets;
    std::function<void(int, std::vector<int>&)> gen = [&](int start, std::vector<int>& cur) {
      if (static_cast<int>(cur.size()) == k) {
        subsets.push_back(cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur.push_back(i);
        gen(i + 1, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    gen(0, cur);
    for (auto& r : subsets)
      for (auto& c : subsets) g = std::gcd(g, std::llabs(cofactor_det(a, r, c)));
    d[k] = g;
  }
  std::vector<long long> out;
  for (int k = 1; k <= n; ++k) {
    if (d[k] == 0) break;
    long long f = d[k] / d[k - 1];
    if (f != 1) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("root lattices") {
  CHECK(root_lattice("U", 1).entries() == IntMatrix{{0, 1}, {1, 0}});
  CHECK(root_lattice("A2", -1).entries() == IntMatrix{{-2, 1}, {1, -2}});
  auto e8 = root_lattice("E8", -1);
  CHECK(e8.det() == 1);
  CHECK(full_det(e8.entries()) == 1);
  CHECK(full_det(root_lattice("E7", -1).entries()) == -2);
  CHECK(root_lattice("E7", -1).det() == -2);
  CHECK(full_det(root_lattice("E6", -1).entries()) == 3);
  CHECK(root_lattice("E6", -1).det() == 3);
  CHECK(root_lattice("A1", -1).entries() == IntMatrix{{-2}});
  CHECK_THROWS_AS(root_lattice("D4", 1), InvalidArgument);
  CHECK_THROWS_AS(GramMatrix({{1, 2}, {3, 4}}), InvalidArgument);
}

TEST_CASE("direct sums and discriminant groups") {
  auto u = root_lattice("U", 1);
  CHECK(direct_sum({u}) == u);
  auto a = gram_A();
  CHECK(a.dim() == 6);
  CHECK(a.det() == 3);
  CHECK(discriminant_group(a).invariant_factors == std::vector<Integer>{3});
  CHECK(discriminant_group(u).invariant_factors.empty());
  CHECK(discriminant_group(root_lattice("A2", -1)).invariant_factors == std::vector<Integer>{3});
  auto m = direct_sum({u, root_lattice("E8", -1), root_lattice("E6", -1)});
  CHECK(m.dim() == 16);
  CHECK(abs(m.det()) == 3);
  CHECK_THROWS_AS(discriminant_group(GramMatrix({{1, 1}, {1, 1}})), InvalidArgument);
}

TEST_CASE("discriminant group order equals |det| of sums") {
  const std::vector<std::string> names = {"U", "A1", "A2", "E6", "E7", "E8"};
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<GramMatrix> gs;
    Integer prod = 1;
    int parts = 1 + rng() % 3;
    for (int k = 0; k < parts; ++k) {
      auto g = root_lattice(names[rng() % names.size()], (rng() % 2) ? 1 : -1);
      prod *= abs(g.det());
      gs.push_back(g);
    }
    CHECK(discriminant_group(direct_sum(gs)).order() == prod);
  }
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 3;
    IntMatrix a(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a[i][j] = a[j][i] = d(rng);
    if (full_det(a) == 0) continue;
    auto got = discriminant_group(GramMatrix(a)).invariant_factors;
    auto want = determinantal_factors(a);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == static_cast<long>(want[k]));
    CHECK(determinant(a) == static_cast<long>(full_det(a)));
  }
}

TEST_CASE("isometries of A") {
  auto a = gram_A();
  CHECK(check_isometry(identity_matrix(6), a));
  IntMatrix m1 = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, -1, 0, 0}, {1, 0, 1, 0, 0, 0},
                  {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 1}};
  CHECK(check_isometry(m1, a));
  CHECK(check_discriminant_trivial(m1, a));
  IntMatrix scale = identity_matrix(6);
  scale[0][0] = 2;
  CHECK_FALSE(check_isometry(scale, a));
  CHECK_THROWS_AS(check_discriminant_trivial(scale, a), InvalidArgument);
  CHECK_THROWS_AS(check_isometry(identity_matrix(5), a), InvalidArgument);

  CHECK(check_discriminant_trivial(identity_matrix(6), a));
  IntMatrix t1 = {{-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0},
                  {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, -1, 0}};
  CHECK(check_isometry(t1, a));
  CHECK(check_discriminant_trivial(t1, a));
  IntMatrix swap = identity_matrix(6);
  swap[4] = {0, 0, 0, 0, 0, 1};
  swap[5] = {0, 0, 0, 0, 1, 0};
  CHECK(check_isometry(swap, a));
  CHECK_FALSE(check_discriminant_trivial(swap, a));
}

TEST_CASE("monodromy table") {
  auto t = monodromy_table();
  REQUIRE(t.size() == 8);
  CHECK(t[0].label == "alpha1");
  CHECK(t[0].kodaira == "I1");
  CHECK(t[0].cycle == std::array<std::int64_t, 2>{1, 1});
  CHECK(t[4].kodaira == "II*");
  CHECK(t[7].kodaira == "IV*");
  CHECK(t[7].m[1][1] == -1);

  auto rep = monodromy_consistency(t);
  CHECK(rep.ok);
  CHECK(rep.failures.empty());
  // the table order itself composes to the identity
  bool table_order = false;
  for (const auto& o : rep.identity_orderings)
    if (o.front() == "alpha1" && o.back() == "alpha_inf") table_order = true;
  CHECK(table_order);

  auto broken = t;
  broken[1].cycle = {1, 0};
  CHECK_FALSE(monodromy_consistency(broken).ok);
}

TEST_CASE("intersection matrix and base changes") {
  auto g = gstar_gram();
  CHECK(g(0, 0) == -2);
  CHECK(g(1, 2) == 2);
  CHECK(determinant(base_change_Tn()) == 1);
  CHECK(abs(determinant(base_change_Sn())) == 1);
  auto h = basechange_gram(base_change_Tn(), g);
  auto want = direct_sum({root_lattice("A2", -1), root_lattice("U", 1), root_lattice("U", 1)});
  CHECK(h == want);
  CHECK(h(0, 0) == -2);
  CHECK(basechange_gram(identity_matrix(6), g) == g);
  CHECK_THROWS_AS(basechange_gram(identity_matrix(5), g), InvalidArgument);
  CHECK(matrix_json({{1, -2}, {0, 3}}) == "[[1,-2],[0,3]]");
}
