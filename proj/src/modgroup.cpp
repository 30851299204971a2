#include "hermk3/modgroup.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "hermk3/error.hpp"

namespace hermk3 {

// ---- ModularMatrix ----

ModularMatrix ModularMatrix::identity() {
  Entries e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e[i][j] = EisensteinInt(i == j ? 1L : 0L);
  return ModularMatrix(e);
}

ModularMatrix operator*(const ModularMatrix& a, const ModularMatrix& b) {
  ModularMatrix::Entries e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      EisensteinInt s;
      for (int k = 0; k < 4; ++k) s += a.e_[i][k] * b.e_[k][j];
      e[i][j] = s;
    }
  return ModularMatrix(e);
}

bool ModularMatrix::is_symplectic_hermitian() const {
  const ModularMatrix j = modular_generator("J");
  ModularMatrix::Entries ct;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) ct[i][k] = e_[k][i].conj();
  return (*this) * j * ModularMatrix(ct) == j;
}

std::array<std::array<cplx, 4>, 4> ModularMatrix::to_complex() const {
  std::array<std::array<cplx, 4>, 4> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = e_[i][j].to_complex();
  return out;
}

const std::vector<std::string>& modular_generator_names() {
  static const std::vector<std::string> names = {"M1", "M2", "M3", "J"};
  return names;
}

ModularMatrix modular_generator(const std::string& name) {
  ModularMatrix::Entries e;
  for (auto& row : e) row.fill(EisensteinInt(0L));
  auto eye = [&](int r, int c) {
    e[r][c] = 1L;
    e[r + 1][c + 1] = 1L;
  };
  if (name == "J") {
    e[0][2] = -1L;
    e[1][3] = -1L;
    e[2][0] = 1L;
    e[3][1] = 1L;
    return ModularMatrix(e);
  }
  eye(0, 0);
  eye(2, 2);
  if (name == "M1") {
    e[0][2] = 1L;
  } else if (name == "M2") {
    e[1][3] = 1L;
  } else if (name == "M3") {
    e[0][3] = 1L;
    e[1][2] = 1L;
  } else {
    throw InvalidArgument("unknown modular generator: " + name);
  }
  return ModularMatrix(e);
}

// ---- action ----

namespace {

using C2 = std::array<std::array<cplx, 2>, 2>;

C2 mat(const HermitianPoint& w) { return {{{w.tau, w.z}, {w.w, w.tau_prime}}}; }
HermitianPoint point(const C2& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }

C2 mul2(const C2& a, const C2& b) {
  C2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}
C2 add2(const C2& a, const C2& b) {
  C2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}
cplx det2(const C2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

C2 block(const ModularMatrix& m, int r, int c) {
  C2 b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b[i][j] = m(r + i, c + j).to_complex();
  return b;
}

C2 cw_plus_d(const ModularMatrix& m, const HermitianPoint& w) { return add2(mul2(block(m, 2, 0), mat(w)), block(m, 2, 2)); }

}  // namespace

cplx automorphy_det(const ModularMatrix& m, const HermitianPoint& w) { return det2(cw_plus_d(m, w)); }

HermitianPoint act(const ModularMatrix& m, const HermitianPoint& w) {
  const C2 den = cw_plus_d(m, w);
  const cplx d = det2(den);
  const C2 num = add2(mul2(block(m, 0, 0), mat(w)), block(m, 0, 2));
  double scale = 0;
  for (auto& r : den)
    for (auto& x : r) scale = std::max(scale, std::abs(x));
  if (std::abs(d) <= 1e-14 * scale * scale) throw InvalidArgument("CW + D is singular");
  const C2 inv = {{{den[1][1] / d, -den[0][1] / d}, {-den[1][0] / d, den[0][0] / d}}};
  return point(mul2(num, inv));
}

cplx slash(const std::function<cplx(const HermitianPoint&)>& f, int k, const ModularMatrix& m,
           const HermitianPoint& w) {
  const cplx d = automorphy_det(m, w);
  return std::pow(d, -k) * f(act(m, w));
}

// ---- Rep5 ----

Rep5Matrix rep5_identity() {
  Rep5Matrix m;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[i][j] = CycloRational(i == j ? 1L : 0L);
  return m;
}

Rep5Matrix rep5_mul(const Rep5Matrix& a, const Rep5Matrix& b) {
  Rep5Matrix r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CycloRational s;
      for (int k = 0; k < 5; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

std::string rep5_str(const Rep5Matrix& m) {
  std::string s;
  for (int i = 0; i < 5; ++i) {
    if (i) s += ";";
    for (int j = 0; j < 5; ++j) {
      if (j) s += ",";
      s += m[i][j].str();
    }
  }
  return s;
}

const std::map<std::string, Rep5Matrix>& psi_generators() {
  static const std::map<std::string, Rep5Matrix> gens = [] {
    std::map<std::string, Rep5Matrix> g;
    const CycloRational w = CycloRational::omega(), w2 = w * w;
    auto diag = [](std::array<CycloRational, 5> d) {
      Rep5Matrix m;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m[i][j] = (i == j) ? d[i] : CycloRational(0L);
      return m;
    };
    g["M1"] = diag({1L, w, 1L, w, w});
    g["M2"] = diag({1L, 1L, w, w, w});
    g["M3"] = diag({1L, 1L, 1L, w, w2});
    const int j3[5][5] = {{-1, -2, -2, -2, -2},
                          {-1, 1, -2, 1, 1},
                          {-1, -2, 1, 1, 1},
                          {-1, 1, 1, 1, -2},
                          {-1, 1, 1, -2, 1}};
    Rep5Matrix jm;
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k) jm[i][k] = CycloRational(Rational(j3[i][k], 3));
    g["J"] = jm;
    return g;
  }();
  return gens;
}

ThetaTransformCheck verify_theta_transform(const std::string& gen, const HermitianPoint& w, const TruncationSpec& tr,
                                           double tol) {
  const auto& psi = psi_generators();
  auto it = psi.find(gen);
  if (it == psi.end()) throw InvalidArgument("unknown generator: " + gen);
  const ModularMatrix m = modular_generator(gen);
  const auto th = hermitian_theta_all(w, tr);
  const auto th_m = hermitian_theta_all(act(m, w), tr);
  const cplx d = automorphy_det(m, w);
  double res = 0;
  for (int k = 0; k < 5; ++k) {
    cplx rhs = 0;
    for (int l = 0; l < 5; ++l) rhs += it->second[k][l].to_complex() * th[l];
    res = std::max(res, std::abs(th_m[k] / d - rhs));
  }
  return {res, res < tol};
}

// ---- exact closure ----
// Group elements are stored as Z[w] numerators over a common 3^e, e minimal.

struct Packed {
  std::array<std::int64_t, 50> v{};  // entry (i, j): v[2(5i+j)] + v[2(5i+j)+1] w
  int e = 0;
  bool operator==(const Packed&) const = default;
};

struct PackedHash {
  std::size_t operator()(const Packed& p) const {
    std::size_t h = static_cast<std::size_t>(p.e);
    for (auto x : p.v) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

struct GroupClosure::Impl {
  std::vector<Packed> elems;
  std::unordered_set<Packed, PackedHash> set;
  std::vector<Packed> gens;
};

namespace {

constexpr int kMaxDenExp = 30;

std::int64_t pow3(int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

void normalize(Packed& p) {
  while (p.e > 0 && std::all_of(p.v.begin(), p.v.end(), [](std::int64_t x) { return x % 3 == 0; })) {
    for (auto& x : p.v) x /= 3;
    --p.e;
  }
}

Packed pack(const Rep5Matrix& m) {
  int e = 0;
  for (const auto& row : m)
    for (const auto& c : row)
      for (const Rational* r : {&c.x(), &c.y()}) {
        Integer d = r->get_den();
        int k = 0;
        while (d % 3 == 0) {
          d /= 3;
          ++k;
        }
        if (d != 1) throw InvalidArgument("representation entries must have 3-power denominators");
        e = std::max(e, k);
      }
  if (e > kMaxDenExp) throw CapacityError("denominator exponent too large");
  Packed p;
  p.e = e;
  const Integer s = pow3(e);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Rational x = m[i][j].x() * s, y = m[i][j].y() * s;
      if (!x.get_num().fits_slong_p() || !y.get_num().fits_slong_p()) throw CapacityError("entry too large");
      p.v[2 * (5 * i + j)] = x.get_num().get_si();
      p.v[2 * (5 * i + j) + 1] = y.get_num().get_si();
    }
  return p;
}

Rep5Matrix unpack(const Packed& p) {
  Rep5Matrix m;
  const Integer s = pow3(p.e);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      m[i][j] = CycloRational(make_rational(Integer(static_cast<long>(p.v[2 * (5 * i + j)])), s),
                              make_rational(Integer(static_cast<long>(p.v[2 * (5 * i + j) + 1])), s));
  return m;
}

std::int64_t checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw CapacityError("closure arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

Packed pmul(const Packed& a, const Packed& b) {
  Packed r;
  r.e = a.e + b.e;
  if (r.e > kMaxDenExp) throw CapacityError("denominator exponent too large");
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      __int128 x = 0, y = 0;
      for (int k = 0; k < 5; ++k) {
        const __int128 p = a.v[2 * (5 * i + k)], q = a.v[2 * (5 * i + k) + 1];
        const __int128 s = b.v[2 * (5 * k + j)], t = b.v[2 * (5 * k + j) + 1];
        // (p + q w)(s + t w) = ps - qt + (pt + qs - qt) w
        x += p * s - q * t;
        y += p * t + q * s - q * t;
      }
      r.v[2 * (5 * i + j)] = checked(x);
      r.v[2 * (5 * i + j) + 1] = checked(y);
    }
  normalize(r);
  return r;
}

CycloRational ptrace(const Packed& p) {
  std::int64_t x = 0, y = 0;
  for (int i = 0; i < 5; ++i) {
    x += p.v[2 * (6 * i)];
    y += p.v[2 * (6 * i) + 1];
  }
  const Integer s = pow3(p.e);
  return CycloRational(make_rational(Integer(static_cast<long>(x)), s), make_rational(Integer(static_cast<long>(y)), s));
}

}  // namespace

std::size_t GroupClosure::order() const { return impl_->elems.size(); }

Rep5Matrix GroupClosure::element(std::size_t i) const {
  if (i >= impl_->elems.size()) throw InvalidArgument("element index out of range");
  return unpack(impl_->elems[i]);
}

std::vector<std::string> GroupClosure::element_strings() const {
  std::vector<std::string> out;
  out.reserve(order());
  for (const auto& p : impl_->elems) out.push_back(rep5_str(unpack(p)));
  std::sort(out.begin(), out.end());
  return out;
}

bool GroupClosure::contains(const Rep5Matrix& m) const {
  try {
    return impl_->set.count(pack(m)) > 0;
  } catch (const Error&) {
    return false;
  }
}

bool GroupClosure::contains_nontrivial_scalar() const {
  for (const auto& p : impl_->elems) {
    bool scalar = true;
    for (int i = 0; i < 5 && scalar; ++i)
      for (int j = 0; j < 5 && scalar; ++j) {
        const std::int64_t x = p.v[2 * (5 * i + j)], y = p.v[2 * (5 * i + j) + 1];
        if (i != j ? (x != 0 || y != 0) : (x != p.v[0] || y != p.v[1])) scalar = false;
      }
    if (scalar && !(p.e == 0 && p.v[0] == 1 && p.v[1] == 0)) return true;
  }
  return false;
}

bool GroupClosure::is_closed() const {
  for (const auto& x : impl_->elems)
    for (const auto& g : impl_->gens)
      if (!impl_->set.count(pmul(x, g))) return false;
  return true;
}

GroupClosure group_closure(const std::vector<Rep5Matrix>& gens, std::size_t cap) {
  auto impl = std::make_shared<GroupClosure::Impl>();
  for (const auto& g : gens) impl->gens.push_back(pack(g));
  const Packed id = pack(rep5_identity());
  impl->set.insert(id);
  impl->elems.push_back(id);
  for (std::size_t head = 0; head < impl->elems.size(); ++head) {
    for (const auto& g : impl->gens) {
      Packed y = pmul(impl->elems[head], g);
      if (impl->set.insert(y).second) {
        impl->elems.push_back(y);
        if (impl->elems.size() > cap) throw CapacityError("group closure exceeds the safety cap");
      }
    }
  }
  return GroupClosure(std::move(impl));
}

std::vector<Rational> molien_series(const GroupClosure& g, int max_degree) {
  if (max_degree < 0) throw InvalidArgument("negative degree");
  // det(I - t g) from traces of powers via Newton's identities; grouped by polynomial.
  std::map<std::string, std::pair<std::array<CycloRational, 6>, std::size_t>> classes;
  for (const auto& p : g.impl().elems) {
    std::array<CycloRational, 6> pk;
    Packed pw = p;
    for (int k = 1; k <= 5; ++k) {
      pk[k] = ptrace(pw);
      if (k < 5) pw = pmul(pw, p);
    }
    std::array<CycloRational, 6> e;
    e[0] = CycloRational(1L);
    for (int k = 1; k <= 5; ++k) {
      CycloRational s;
      for (int i = 1; i <= k; ++i) {
        CycloRational term = e[k - i] * pk[i];
        s += (i % 2 == 1) ? term : -term;
      }
      e[k] = s * CycloRational(Rational(1, k));
    }
    // det(I - t g) = sum (-1)^k e_k t^k
    std::array<CycloRational, 6> a;
    std::string key;
    for (int k = 0; k <= 5; ++k) {
      a[k] = (k % 2 == 0) ? e[k] : -e[k];
      key += a[k].str() + "|";
    }
    auto [it, fresh] = classes.try_emplace(key, a, 0);
    it->second.second++;
  }
  std::vector<CycloRational> sum(max_degree + 1);
  for (const auto& [key, entry] : classes) {
    const auto& [a, count] = entry;
    std::vector<CycloRational> b(max_degree + 1);
    b[0] = CycloRational(1L);
    for (int n = 1; n <= max_degree; ++n) {
      CycloRational s;
      for (int k = 1; k <= std::min(n, 5); ++k) s += a[k] * b[n - k];
      b[n] = -s;
    }
    const CycloRational c(Rational(static_cast<long>(count)));
    for (int n = 0; n <= max_degree; ++n) sum[n] += c * b[n];
  }
  std::vector<Rational> out;
  const Rational inv_order(1, static_cast<long>(g.order()));
  for (const auto& s : sum) {
    if (s.y() != 0) throw InvalidArgument("Molien coefficient is not rational");
    out.push_back(s.x() * inv_order);
  }
  return out;
}

// ---- modular isomorphism ----

namespace {

const cplx kSqrtM3(0.0, std::sqrt(3.0));

}  // namespace

cplx domain_quadric(const DomainPoint& p) {
  const GramMatrix ga = gram_A();
  const auto& g = ga.entries();
  cplx s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += static_cast<double>(g[i][j]) * p.xi[i] * p.xi[j];
  return s;
}

double domain_positivity(const DomainPoint& p) {
  const GramMatrix ga = gram_A();
  const auto& g = ga.entries();
  cplx s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += static_cast<double>(g[i][j]) * p.xi[i] * std::conj(p.xi[j]);
  return s.real();
}

HermitianPoint modular_iso_f(const DomainPoint& p) {
  const auto& x = p.xi;
  if (std::abs(x[0]) == 0.0) throw InvalidArgument("xi1 = 0: boundary point");
  const cplx a = (1.0 + kSqrtM3) / 2.0, ab = (1.0 - kSqrtM3) / 2.0;
  return {x[2] / x[0], (a * x[4] + ab * x[5]) / x[0], (ab * x[4] + a * x[5]) / x[0], x[3] / x[0]};
}

DomainPoint modular_iso_finv(const HermitianPoint& w) {
  const cplx s = (w.z + w.w) / 2.0, d = (w.z - w.w) / (2.0 * kSqrtM3);
  return {{1.0, -(w.tau * w.tau_prime - w.z * w.w), w.tau, w.tau_prime, s + d, s - d}};
}

const std::map<std::string, IntMatrix>& orth_images() {
  static const std::map<std::string, IntMatrix> m = {
      {"M1",
       {{1, 0, 0, 0, 0, 0},
        {0, 1, 0, -1, 0, 0},
        {1, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1}}},
      {"M2",
       {{1, 0, 0, 0, 0, 0},
        {0, 1, -1, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {1, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1}}},
      {"M3",
       {{1, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 1, 1},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {1, 0, 0, 0, 1, 0},
        {1, 0, 0, 0, 0, 1}}},
      {"J",
       {{0, -1, 0, 0, 0, 0},
        {-1, 0, 0, 0, 0, 0},
        {0, 0, 0, -1, 0, 0},
        {0, 0, -1, 0, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1}}},
      {"T1",
       {{-1, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0},
        {0, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, -1},
        {0, 0, 0, 0, -1, 0}}},
      {"T2",
       {{1, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, -1},
        {0, 0, 0, 0, -1, 0}}},
  };
  return m;
}

HermitianPoint generator_action(const std::string& name, const HermitianPoint& w) {
  if (name == "T1") return {w.tau, w.w, w.z, w.tau_prime};
  if (name == "T2") return {w.tau, -w.w, -w.z, w.tau_prime};
  return act(modular_generator(name), w);
}

double equivariance_residual(const std::string& name, const DomainPoint& p) {
  auto it = orth_images().find(name);
  if (it == orth_images().end()) throw InvalidArgument("unknown generator: " + name);
  DomainPoint q{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) q.xi[i] += static_cast<double>(it->second[i][j]) * p.xi[j];
  const HermitianPoint lhs = modular_iso_f(q), rhs = generator_action(name, modular_iso_f(p));
  return std::max({std::abs(lhs.tau - rhs.tau), std::abs(lhs.z - rhs.z), std::abs(lhs.w - rhs.w),
                   std::abs(lhs.tau_prime - rhs.tau_prime)});
}

}  // namespace hermk3
