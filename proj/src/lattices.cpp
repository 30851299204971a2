#include "hermk3/lattices.hpp"

#include <algorithm>
#include <utility>

#include "hermk3/error.hpp"
#include "json.hpp"

namespace hermk3 {

namespace {

using ZMatrix = std::vector<std::vector<Integer>>;
using QMatrix = std::vector<std::vector<Rational>>;

ZMatrix to_z(const IntMatrix& a) {
  ZMatrix z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto v : a[i]) z[i].emplace_back(static_cast<long>(v));
  return z;
}

void require_square(const IntMatrix& a, const char* what) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw InvalidArgument(std::string(what) + ": matrix is not square");
}

// Inverse over Q by Gauss-Jordan. Throws InvalidArgument on a singular matrix.
QMatrix inverse_q(const IntMatrix& a) {
  const std::size_t n = a.size();
  QMatrix m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InvalidArgument("singular matrix");
    std::swap(m[p], m[c]);
    Rational piv = m[c][c];
    for (auto& v : m[c]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  QMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Dynkin edges (1-based, Bourbaki labelling) for the exceptional types.
std::vector<std::pair<int, int>> e_edges(int rank) {
  std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {2, 4}};
  for (int k = 4; k < rank; ++k) edges.emplace_back(k, k + 1);
  return edges;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw InvalidArgument("matmul: dimension mismatch");
  IntMatrix c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Integer determinant(const IntMatrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.size();
  if (n == 0) return 1;
  ZMatrix m = to_z(a);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::string matrix_json(const IntMatrix& a) { return nlohmann::json(a).dump(); }

GramMatrix::GramMatrix(IntMatrix entries) : m_(std::move(entries)) {
  if (m_.empty()) throw InvalidArgument("Gram matrix must have dimension >= 1");
  require_square(m_, "Gram matrix");
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m_[i][j] != m_[j][i]) throw InvalidArgument("Gram matrix is not symmetric");
}

GramMatrix root_lattice(const std::string& name, int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  if (name == "U") return GramMatrix({{0, 1}, {1, 0}});
  int rank = 0;
  std::vector<std::pair<int, int>> edges;
  if (name == "A1") {
    rank = 1;
  } else if (name == "A2") {
    rank = 2;
    edges = {{1, 2}};
  } else if (name == "E6" || name == "E7" || name == "E8") {
    rank = name[1] - '0';
    edges = e_edges(rank);
  } else {
    throw InvalidArgument("unknown root lattice: " + name);
  }
  IntMatrix m(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 2 * sign;
  for (auto [i, j] : edges) m[i - 1][j - 1] = m[j - 1][i - 1] = -sign;
  return GramMatrix(std::move(m));
}

GramMatrix direct_sum(const std::vector<GramMatrix>& gs) {
  if (gs.empty()) throw InvalidArgument("direct_sum of nothing");
  std::size_t n = 0;
  for (const auto& g : gs) n += g.dim();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  std::size_t off = 0;
  for (const auto& g : gs) {
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) m[off + i][off + j] = g(i, j);
    off += g.dim();
  }
  return GramMatrix(std::move(m));
}

Integer DiscriminantGroup::order() const {
  Integer p = 1;
  for (const auto& f : invariant_factors) p *= f;
  return p;
}

std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  ZMatrix m = to_z(a);
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        std::vector<Integer> d;
        for (std::size_t k = 0; k < n; ++k) d.push_back(abs(m[k][k]));
        return d;
      }
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = m[i][t] / m[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = m[t][j] / m[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<Integer> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(abs(m[k][k]));
  return d;
}

DiscriminantGroup discriminant_group(const GramMatrix& g) {
  if (g.det() == 0) throw InvalidArgument("discriminant group of a singular Gram matrix");
  DiscriminantGroup out;
  for (auto& d : smith_diagonal(g.entries()))
    if (d != 1) out.invariant_factors.push_back(d);
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

bool check_isometry(const IntMatrix& m, const GramMatrix& g) {
  require_square(m, "check_isometry");
  if (m.size() != g.dim()) throw InvalidArgument("check_isometry: dimension mismatch");
  return matmul(matmul(transpose(m), g.entries()), m) == g.entries();
}

bool check_discriminant_trivial(const IntMatrix& m, const GramMatrix& g) {
  if (!check_isometry(m, g)) throw InvalidArgument("check_discriminant_trivial: not an isometry");
  const std::size_t n = g.dim();
  QMatrix ginv = inverse_q(g.entries());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t d = m[i][k] - (i == k ? 1 : 0);
        if (d != 0) s += Rational(static_cast<long>(d)) * ginv[k][j];
      }
      if (s.get_den() != 1) return false;
    }
  return true;
}

GramMatrix gram_A() {
  return direct_sum({root_lattice("U", 1), root_lattice("U", 1), root_lattice("A2", -1)});
}

std::vector<MonodromyEntry> monodromy_table() {
  const std::array<std::array<std::int64_t, 2>, 2> m1{{{0, -1}, {1, 2}}}, mu{{{1, -1}, {0, 1}}},
      ml{{{1, 0}, {1, 1}}}, m0{{{0, 1}, {-1, 1}}}, minf{{{0, 1}, {-1, -1}}};
  return {
      {"alpha1", m1, "I1", {1, 1}, true},    {"alpha2", mu, "I1", {0, 1}, true},
      {"alpha3", mu, "I1", {0, 1}, true},    {"alpha4", mu, "I1", {0, 1}, true},
      {"alpha0", m0, "II*", {0, 0}, false},  {"alpha5", ml, "I1", {1, 0}, true},
      {"alpha6", ml, "I1", {1, 0}, true},    {"alpha_inf", minf, "IV*", {0, 0}, false},
  };
}

namespace {

using M2 = std::array<std::array<std::int64_t, 2>, 2>;

M2 mul2(const M2& a, const M2& b) {
  M2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

const M2 kI2{{{1, 0}, {0, 1}}};

int matrix_order(const M2& m, int cap) {
  M2 p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == kI2) return k;
    p = mul2(p, m);
  }
  return 0;
}

}  // namespace

MonodromyReport monodromy_consistency(const std::vector<MonodromyEntry>& entries) {
  MonodromyReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  for (const auto& e : entries) {
    const auto& m = e.m;
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1) fail(e.label + ": determinant != 1");
    if (e.kodaira == "I1") {
      if (m[0][0] + m[1][1] != 2) fail(e.label + ": trace != 2");
      const auto& v = e.cycle;
      const std::int64_t r0 = v[0] * m[0][0] + v[1] * m[1][0];
      const std::int64_t r1 = v[0] * m[0][1] + v[1] * m[1][1];
      if (r0 != v[0] || r1 != v[1]) fail(e.label + ": vanishing cycle not fixed by v*M");
      const std::int64_t c0 = m[0][0] * v[0] + m[0][1] * v[1];
      const std::int64_t c1 = m[1][0] * v[0] + m[1][1] * v[1];
      if (c0 != v[0] || c1 != v[1]) rep.notes.push_back(e.label + ": M*v != v (column convention)");
    } else if (e.kodaira == "II*") {
      if (matrix_order(m, 12) != 6) fail(e.label + ": order != 6");
    } else if (e.kodaira == "IV*") {
      if (matrix_order(m, 12) != 3) fail(e.label + ": order != 3");
    } else {
      fail(e.label + ": unexpected type " + e.kodaira);
    }
  }
  const std::size_t n = entries.size();
  for (int orient = 0; orient < 2; ++orient)
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::size_t> idx(n);
      for (std::size_t k = 0; k < n; ++k) idx[k] = (r + k) % n;
      if (orient == 1) std::reverse(idx.begin(), idx.end());
      M2 p = kI2;
      for (auto k : idx) p = mul2(p, entries[k].m);
      if (p == kI2) {
        std::vector<std::string> labels;
        for (auto k : idx) labels.push_back(entries[k].label);
        rep.identity_orderings.push_back(std::move(labels));
      }
    }
  if (rep.identity_orderings.empty()) fail("no cyclic ordering composes to the identity");
  return rep;
}

GramMatrix gstar_gram() {
  return GramMatrix({{-2, -1, 0, 0, 0, -1},
                     {-1, -2, 2, 0, 0, 0},
                     {0, 2, -2, 1, 0, 0},
                     {0, 0, 1, 0, 0, 0},
                     {0, 0, 0, 0, 0, -1},
                     {-1, 0, 0, 0, -1, -2}});
}

IntMatrix base_change_Tn() {
  return {{-1, 0, 0, 0, 1, 0}, {0, 1, 0, -2, 0, 0}, {0, 0, 1, 1, 0, 0},
          {0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 1, -1}};
}

IntMatrix base_change_Sn() {
  return {{-1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},   {0, 1, -1, 1, 0, 0},
          {0, 1, 1, 0, 0, 0},  {1, 1, -1, 1, -1, 1}, {0, 0, 0, 0, 0, -1}};
}

GramMatrix basechange_gram(const IntMatrix& t, const GramMatrix& g) {
  require_square(t, "basechange_gram");
  if (t.size() != g.dim()) throw InvalidArgument("basechange_gram: dimension mismatch");
  return GramMatrix(matmul(matmul(t, g.entries()), transpose(t)));
}

}  // namespace hermk3
