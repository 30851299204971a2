#include "hermk3/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hermk3/error.hpp"

namespace hermk3 {

namespace {

struct RawBracket {
  std::int64_t c;
  int n0;
  std::array<int, 4> n;
};

// clang-format off
const std::map<int, std::vector<RawBracket>> kBurkhardt = {
  {4, {{1, 4, {0, 0, 0, 0}}, {8, 1, {3, 0, 0, 0}}, {48, 0, {1, 1, 1, 1}}}},
  {6, {{1, 6, {0, 0, 0, 0}}, {-20, 3, {3, 0, 0, 0}}, {360, 2, {1, 1, 1, 1}}, {80, 0, {3, 3, 0, 0}},
       {-8, 0, {6, 0, 0, 0}}}},
  {10, {{1, 6, {1, 1, 1, 1}}, {-1, 4, {3, 3, 0, 0}}, {1, 3, {4, 1, 1, 1}}, {9, 2, {2, 2, 2, 2}},
        {1, 1, {6, 3, 0, 0}}, {-6, 1, {3, 3, 3, 0}}, {-2, 0, {7, 1, 1, 1}}, {2, 0, {4, 4, 1, 1}}}},
  {12, {{3, 8, {1, 1, 1, 1}}, {5, 6, {3, 3, 0, 0}}, {-33, 5, {4, 1, 1, 1}}, {243, 4, {2, 2, 2, 2}},
        {-1, 3, {6, 3, 0, 0}}, {-102, 3, {3, 3, 3, 0}}, {30, 2, {7, 1, 1, 1}}, {78, 2, {4, 4, 1, 1}},
        {-108, 1, {5, 2, 2, 2}}, {-4, 0, {9, 3, 0, 0}}, {16, 0, {6, 6, 0, 0}}, {-8, 0, {6, 3, 3, 0}},
        {168, 0, {3, 3, 3, 3}}}},
  {18, {{3, 10, {2, 2, 2, 2}}, {-4, 9, {3, 3, 3, 0}}, {6, 8, {4, 4, 1, 1}}, {-18, 7, {5, 2, 2, 2}},
        {-1, 6, {6, 6, 0, 0}}, {10, 6, {6, 3, 3, 0}}, {96, 6, {3, 3, 3, 3}}, {-12, 5, {7, 4, 1, 1}},
        {-90, 5, {4, 4, 4, 1}}, {27, 4, {8, 2, 2, 2}}, {108, 4, {5, 5, 2, 2}}, {2, 3, {9, 6, 0, 0}},
        {-8, 3, {9, 3, 3, 0}}, {4, 3, {6, 6, 3, 0}}, {-168, 3, {6, 3, 3, 3}}, {6, 2, {10, 4, 1, 1}},
        {-24, 2, {7, 7, 1, 1}}, {12, 2, {7, 4, 4, 1}}, {315, 2, {4, 4, 4, 4}}, {-12, 1, {11, 2, 2, 2}},
        {18, 1, {8, 5, 2, 2}}, {-72, 1, {5, 5, 5, 2}}, {-1, 0, {12, 6, 0, 0}}, {2, 0, {12, 3, 3, 0}},
        {2, 0, {9, 9, 0, 0}}, {-2, 0, {9, 6, 3, 0}}, {-8, 0, {9, 3, 3, 3}}, {6, 0, {6, 6, 6, 0}},
        {8, 0, {6, 6, 3, 3}}}},
};

const std::vector<Monomial> kD90 = {
    {3125, {0, 0, 9, 0, 0}}, {11664, {0, 0, 3, 5, 0}}, {151875, {0, 0, 6, 1, 1}}, {314928, {0, 0, 0, 6, 1}},
    {1968300, {0, 0, 3, 2, 2}}, {4251528, {0, 0, 0, 3, 3}}, {14348907, {0, 0, 0, 0, 5}}, {16200, {1, 0, 5, 3, 0}},
    {472392, {1, 0, 2, 4, 1}}, {-273375, {1, 0, 5, 0, 2}}, {-5314410, {1, 0, 2, 1, 3}}, {4125, {2, 0, 7, 1, 0}},
    {108135, {2, 0, 4, 2, 1}}, {-1259712, {2, 0, 1, 3, 2}}, {4251528, {2, 0, 1, 0, 4}}, {864, {3, 0, 3, 4, 0}},
    {-3525, {3, 0, 6, 0, 1}}, {23328, {3, 0, 0, 5, 1}}, {-378108, {3, 0, 3, 1, 2}}, {1102248, {3, 0, 0, 2, 3}},
    {888, {4, 0, 5, 2, 0}}, {26568, {4, 0, 2, 3, 1}}, {227448, {4, 0, 2, 0, 3}}, {16, {5, 0, 7, 0, 0}},
    {-456, {5, 0, 4, 1, 1}}, {-85536, {5, 0, 1, 2, 2}}, {16, {6, 0, 3, 3, 0}}, {432, {6, 0, 0, 4, 1}},
    {-1056, {6, 0, 3, 0, 2}}, {62208, {6, 0, 0, 1, 3}}, {16, {7, 0, 5, 1, 0}}, {480, {7, 0, 2, 2, 1}},
    {-16, {8, 0, 4, 0, 1}}, {-1536, {8, 0, 1, 1, 2}}, {1024, {9, 0, 0, 0, 3}}, {-13500, {0, 1, 6, 2, 0}},
    {-481140, {0, 1, 3, 3, 1}}, {-2834352, {0, 1, 0, 4, 2}}, {-1476225, {0, 1, 3, 0, 3}}, {-19131876, {0, 1, 0, 1, 4}},
    {-5625, {1, 1, 8, 0, 0}}, {-200475, {1, 1, 5, 1, 1}}, {-236196, {1, 1, 2, 2, 2}}, {-2592, {2, 1, 4, 3, 0}},
    {-69984, {2, 1, 1, 4, 1}}, {422820, {2, 1, 4, 0, 2}}, {944784, {2, 1, 1, 1, 3}}, {-3420, {3, 1, 6, 1, 0}},
    {-107460, {3, 1, 3, 2, 1}}, {-174960, {3, 1, 0, 3, 2}}, {-1889568, {3, 1, 0, 0, 4}}, {2772, {4, 1, 5, 0, 1}},
    {314928, {4, 1, 2, 1, 2}}, {-186624, {5, 1, 1, 0, 3}}, {-16, {6, 1, 6, 0, 0}}, {-576, {6, 1, 3, 1, 1}},
    {-3456, {6, 1, 0, 2, 2}}, {1152, {7, 1, 2, 0, 2}}, {-5832, {0, 2, 3, 4, 0}}, {-10125, {0, 2, 6, 0, 1}},
    {-157464, {0, 2, 0, 5, 1}}, {-295245, {0, 2, 3, 1, 2}}, {5314410, {0, 2, 0, 2, 3}}, {-5670, {1, 2, 5, 2, 0}},
    {-170586, {1, 2, 2, 3, 1}}, {3188646, {1, 2, 2, 0, 3}}, {2700, {2, 2, 7, 0, 0}}, {101898, {2, 2, 4, 1, 1}},
    {1102248, {2, 2, 1, 2, 2}}, {216, {3, 2, 3, 3, 0}}, {5832, {3, 2, 0, 4, 1}}, {-195048, {3, 2, 3, 0, 2}},
    {216, {4, 2, 5, 1, 0}}, {6480, {4, 2, 2, 2, 1}}, {-216, {5, 2, 4, 0, 1}}, {-20736, {5, 2, 1, 1, 2}},
    {20736, {6, 2, 0, 0, 3}}, {6075, {0, 3, 6, 1, 0}}, {219429, {0, 3, 3, 2, 1}}, {1338444, {0, 3, 0, 3, 2}},
    {4251528, {0, 3, 0, 0, 4}}, {1215, {1, 3, 5, 0, 1}}, {-393660, {1, 3, 2, 1, 2}}, {-1259712, {2, 3, 1, 0, 3}},
    {-216, {3, 3, 6, 0, 0}}, {-7776, {3, 3, 3, 1, 1}}, {-46656, {3, 3, 0, 2, 2}}, {15552, {4, 3, 2, 0, 2}},
    {729, {0, 4, 3, 3, 0}}, {19683, {0, 4, 0, 4, 1}}, {-8748, {0, 4, 3, 0, 2}}, {-2834352, {0, 4, 0, 1, 3}},
    {729, {1, 4, 5, 1, 0}}, {21870, {1, 4, 2, 2, 1}}, {-729, {2, 4, 4, 0, 1}}, {-69984, {2, 4, 1, 1, 2}},
    {139968, {3, 4, 0, 0, 3}}, {-729, {0, 5, 6, 0, 0}}, {-26244, {0, 5, 3, 1, 1}}, {-157464, {0, 5, 0, 2, 2}},
    {52488, {1, 5, 2, 0, 2}}, {314928, {0, 6, 0, 0, 3}},
};

const std::vector<SignedTriple> kSyzygous = {
    {{0, 1, 2}, 1}, {{0, 1, 3}, 1}, {{0, 1, 5}, -1}, {{0, 1, 7}, -1}, {{0, 2, 3}, 1},
    {{0, 2, 4}, -1}, {{0, 2, 8}, -1}, {{0, 3, 6}, -1}, {{0, 3, 9}, -1}, {{0, 4, 5}, 1},
    {{0, 4, 6}, 1}, {{0, 4, 8}, -1}, {{0, 5, 6}, 1}, {{0, 5, 7}, -1}, {{0, 6, 9}, -1},
    {{0, 7, 8}, 1}, {{0, 7, 9}, 1}, {{0, 8, 9}, 1}, {{1, 2, 3}, 1}, {{1, 2, 6}, 1},
    {{1, 2, 9}, 1}, {{1, 3, 4}, 1}, {{1, 3, 8}, 1}, {{1, 4, 6}, 1}, {{1, 4, 7}, -1},
    {{1, 4, 8}, -1}, {{1, 5, 7}, -1}, {{1, 5, 8}, -1}, {{1, 5, 9}, -1}, {{1, 6, 7}, -1},
    {{1, 6, 9}, -1}, {{1, 8, 9}, 1}, {{2, 3, 5}, 1}, {{2, 3, 7}, 1}, {{2, 4, 7}, -1},
    {{2, 4, 8}, -1}, {{2, 4, 9}, -1}, {{2, 5, 6}, 1}, {{2, 5, 7}, -1}, {{2, 5, 8}, -1},
    {{2, 6, 8}, -1}, {{2, 6, 9}, -1}, {{2, 7, 9}, 1}, {{3, 4, 5}, 1}, {{3, 4, 8}, -1},
    {{3, 4, 9}, -1}, {{3, 5, 7}, -1}, {{3, 5, 9}, -1}, {{3, 6, 7}, -1}, {{3, 6, 8}, -1},
    {{3, 6, 9}, -1}, {{3, 7, 8}, 1}, {{4, 5, 6}, 1}, {{4, 5, 9}, 1}, {{4, 6, 7}, 1},
    {{4, 7, 9}, 1}, {{5, 6, 8}, 1}, {{5, 8, 9}, 1}, {{6, 7, 8}, 1}, {{7, 8, 9}, 1},
};

const std::vector<std::array<int, 6>> kGoepel = {
    {4, 5, 6, 7, 8, 9}, {1, 2, 3, 7, 8, 9}, {0, 2, 5, 6, 7, 9}, {0, 1, 4, 6, 8, 9}, {2, 3, 4, 6, 8, 9},
    {1, 3, 5, 6, 7, 9}, {1, 2, 3, 4, 5, 6}, {0, 2, 3, 5, 8, 9}, {0, 1, 3, 4, 7, 9}, {0, 3, 4, 5, 7, 8},
    {0, 1, 2, 6, 7, 8}, {0, 2, 3, 4, 6, 7}, {0, 1, 3, 5, 6, 8}, {0, 1, 2, 4, 5, 9}, {1, 2, 4, 5, 7, 8},
};
// clang-format on

cplx ipow(cplx x, int e) {
  cplx r = 1.0;
  cplx b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

cplx eval_monomials(const std::vector<Monomial>& ms, const std::array<cplx, 5>& x) {
  // Powers are cached per variable to keep the large invariants cheap.
  std::array<std::vector<cplx>, 5> pw;
  for (int i = 0; i < 5; ++i) pw[i].push_back(1.0);
  cplx s = 0.0;
  for (const auto& m : ms) {
    cplx term = static_cast<double>(m.coeff);
    for (int i = 0; i < 5; ++i) {
      while (static_cast<int>(pw[i].size()) <= m.e[i]) pw[i].push_back(pw[i].back() * x[i]);
      term *= pw[i][m.e[i]];
    }
    s += term;
  }
  return s;
}

std::vector<Monomial> expand_burkhardt(int j) {
  std::map<std::array<int, 5>, std::int64_t> acc;
  for (const auto& bt : burkhardt_brackets(j))
    for (const auto& m : bracket_monomials(bt.spec)) acc[m.e] += bt.coeff * m.coeff;
  std::vector<Monomial> out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.push_back({c, e});
  return out;
}

}  // namespace

// ---- weighted points ----

bool WeightedPoint::is_zero() const {
  return std::all_of(t.begin(), t.end(), [](cplx v) { return v == 0.0; });
}

WeightedPoint WeightedPoint::scaled(cplx lambda) const {
  WeightedPoint out = *this;
  for (int k = 0; k < 5; ++k) out.t[k] *= ipow(lambda, kWeights[k]);
  return out;
}

double WeightedPoint::scale() const {
  double s = 0.0;
  for (int k = 0; k < 5; ++k) s = std::max(s, std::pow(std::abs(t[k]), 2.0 / kWeights[k]));
  return s;
}

WeightedPoint WeightedPoint::normalized() const {
  if (is_zero()) throw InvalidArgument("zero weighted point");
  const double s = scale();
  WeightedPoint out = *this;
  for (int k = 0; k < 5; ++k) out.t[k] /= std::pow(s, kWeights[k] / 2.0);
  return out;
}

bool weighted_projective_eq(const WeightedPoint& a, const WeightedPoint& b, double tol) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("weighted_projective_eq: zero point");
  const WeightedPoint na = a.normalized(), nb = b.normalized();
  // After normalization |mu| = 1. The component of na attaining the maximum pins
  // mu up to an h-th root of unity, h its half-weight; test every candidate.
  int kmax = 0;
  double best = -1.0;
  for (int k = 0; k < 5; ++k) {
    const double v = std::pow(std::abs(na.t[k]), 2.0 / kWeights[k]);
    if (v > best) {
      best = v;
      kmax = k;
    }
  }
  const int h = kWeights[kmax] / 2;
  const cplx ratio = nb.t[kmax] / na.t[kmax];
  if (std::abs(ratio) == 0.0) return false;
  const double pi = 3.14159265358979323846;
  for (int r = 0; r < h; ++r) {
    const cplx mu = std::polar(std::pow(std::abs(ratio), 1.0 / h), (std::arg(ratio) + 2.0 * pi * r) / h);
    bool ok = true;
    for (int k = 0; k < 5 && ok; ++k) ok = std::abs(nb.t[k] - ipow(mu, kWeights[k] / 2) * na.t[k]) <= tol;
    if (ok) return true;
  }
  return false;
}

// ---- brackets ----

BracketSpec::BracketSpec(int n0_, std::array<int, 4> n_) : n0(n0_), n(n_) {
  if (n0 < 0 || n[3] < 0) throw InvalidArgument("bracket exponents must be non-negative");
  for (int i = 0; i < 3; ++i)
    if (n[i] < n[i + 1]) throw InvalidArgument("bracket exponents must be non-increasing");
}

std::vector<Monomial> bracket_monomials(const BracketSpec& spec) {
  std::array<int, 4> p = spec.n;
  std::sort(p.begin(), p.end());
  std::vector<Monomial> out;
  do {
    out.push_back({1, {spec.n0, p[0], p[1], p[2], p[3]}});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

cplx bracket_eval(const BracketSpec& spec, const std::array<cplx, 5>& T) {
  return eval_monomials(bracket_monomials(spec), T);
}

const std::vector<BurkhardtTerm>& burkhardt_brackets(int j) {
  static const std::map<int, std::vector<BurkhardtTerm>> table = [] {
    std::map<int, std::vector<BurkhardtTerm>> t;
    for (const auto& [w, raws] : kBurkhardt)
      for (const auto& r : raws) t[w].push_back({r.c, BracketSpec(r.n0, r.n)});
    return t;
  }();
  auto it = table.find(j);
  if (it == table.end()) throw InvalidArgument("Burkhardt invariant weight must be one of 4, 6, 10, 12, 18");
  return it->second;
}

const std::vector<Monomial>& burkhardt_monomials(int j) {
  static const std::map<int, std::vector<Monomial>> table = [] {
    std::map<int, std::vector<Monomial>> t;
    for (int w : {4, 6, 10, 12, 18}) t[w] = expand_burkhardt(w);
    return t;
  }();
  auto it = table.find(j);
  if (it == table.end()) throw InvalidArgument("Burkhardt invariant weight must be one of 4, 6, 10, 12, 18");
  return it->second;
}

cplx burkhardt_B(int j, const std::array<cplx, 5>& T) { return eval_monomials(burkhardt_monomials(j), T); }

// ---- Igusa ----

IgusaName parse_igusa(const std::string& s) {
  if (s == "psi4") return IgusaName::psi4;
  if (s == "psi6") return IgusaName::psi6;
  if (s == "chi10") return IgusaName::chi10;
  if (s == "chi12") return IgusaName::chi12;
  throw InvalidArgument("unknown Igusa invariant: " + s);
}

std::string igusa_name(IgusaName n) {
  switch (n) {
    case IgusaName::psi4: return "psi4";
    case IgusaName::psi6: return "psi6";
    case IgusaName::chi10: return "chi10";
    default: return "chi12";
  }
}

const std::vector<SignedTriple>& syzygous_triples() { return kSyzygous; }
const std::vector<std::array<int, 6>>& goepel_complements() { return kGoepel; }

cplx igusa(IgusaName name, const std::array<cplx, 10>& th) {
  switch (name) {
    case IgusaName::psi4: {
      cplx s = 0.0;
      for (auto v : th) s += ipow(v, 8);
      return s / 4.0;
    }
    case IgusaName::psi6: {
      cplx s = 0.0;
      for (const auto& tr : kSyzygous) s += static_cast<double>(tr.sign) * ipow(th[tr.idx[0]] * th[tr.idx[1]] * th[tr.idx[2]], 4);
      return s / 4.0;
    }
    case IgusaName::chi10: {
      cplx p = 1.0;
      for (auto v : th) p *= v * v;
      return -p / 16384.0;
    }
    default: {
      cplx s = 0.0;
      for (const auto& g : kGoepel) {
        cplx p = 1.0;
        for (int i : g) p *= th[i];
        s += ipow(p, 4);
      }
      return s / (131072.0 * 3.0);
    }
  }
}

// ---- d90 ----

const std::vector<Monomial>& d90_monomials() { return kD90; }

cplx d90(const WeightedPoint& t) { return eval_monomials(kD90, t.t); }

double d90_abs_scale(const WeightedPoint& t) {
  std::array<cplx, 5> a;
  for (int k = 0; k < 5; ++k) a[k] = std::abs(t.t[k]);
  std::vector<Monomial> absm = kD90;
  for (auto& m : absm) m.coeff = m.coeff < 0 ? -m.coeff : m.coeff;
  return eval_monomials(absm, a).real();
}

StaticCheckReport d90_static_check() {
  StaticCheckReport rep;
  rep.monomials = kD90.size();
  std::map<std::array<int, 5>, int> seen;
  for (const auto& m : kD90) {
    int deg = 0;
    for (int k = 0; k < 5; ++k) deg += m.e[k] * kWeights[k];
    std::string name = std::to_string(m.coeff);
    for (int k = 0; k < 5; ++k)
      if (m.e[k]) name += "*t" + std::to_string(kWeights[k]) + "^" + std::to_string(m.e[k]);
    if (deg != 90) rep.violations.push_back(name + " has weighted degree " + std::to_string(deg));
    if (m.coeff == 0) rep.violations.push_back(name + " has zero coefficient");
    if (++seen[m.e] > 1) rep.violations.push_back(name + " repeats an exponent vector");
  }
  return rep;
}

// ---- maps ----

WeightedPoint t_from_thetas(const std::array<cplx, 5>& th) {
  return {{-3.0 * burkhardt_B(4, th), -2.0 * burkhardt_B(6, th), 1536.0 * burkhardt_B(10, th),
           512.0 * burkhardt_B(12, th), -65536.0 * burkhardt_B(18, th)}};
}

InversePeriodResult inverse_period_map_ex(const HermitianPoint& w, const TruncationSpec& tr) {
  const int r = resolve_radius(w, tr);
  InversePeriodResult out;
  out.thetas = hermitian_theta_all(w, {r, tr.tail_tol});
  int i = 0;
  for (int j : kWeights) out.B[i++] = burkhardt_B(j, out.thetas);
  out.t = t_from_thetas(out.thetas);
  out.radius = r;
  out.tail_bound = tail_bound(w, r);
  return out;
}

WeightedPoint inverse_period_map(const HermitianPoint& w, const TruncationSpec& tr) {
  return inverse_period_map_ex(w, tr).t;
}

CDPoint clingher_doran_map(const SiegelPoint& w0, const TruncationSpec& tr) {
  const auto th = siegel_theta_all(w0, tr);
  return {igusa(IgusaName::psi4, th), igusa(IgusaName::psi6, th), 4096.0 * 243.0 * igusa(IgusaName::chi10, th),
          4096.0 * 729.0 * igusa(IgusaName::chi12, th)};
}

WeightedPoint embed_cd(const CDPoint& p) { return {{-3.0 * p.alpha, -2.0 * p.beta, -p.gamma, p.delta, 0.0}}; }

}  // namespace hermk3
