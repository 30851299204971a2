#pragma once

// Igusa invariants, Burkhardt invariants, the weight-90 discriminant d90, the
// Clingher-Doran correspondence and the inverse period map.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hermk3/exactnum.hpp"
#include "hermk3/theta.hpp"

namespace hermk3 {

constexpr std::array<int, 5> kWeights = {4, 6, 10, 12, 18};

/// (t4, t6, t10, t12, t18) in P(4, 6, 10, 12, 18).
struct WeightedPoint {
  std::array<cplx, 5> t;

  bool is_zero() const;
  /// lambda . t = (lambda^4 t4, ..., lambda^18 t18)
  WeightedPoint scaled(cplx lambda) const;
  /// Rescaled so that max_k |t_k|^{2/k} = 1. Throws InvalidArgument on zero.
  WeightedPoint normalized() const;
  /// max_k |t_k|^{2/k}
  double scale() const;
};

/// (alpha, beta, gamma, delta) in P(2, 3, 5, 6).
struct CDPoint {
  cplx alpha, beta, gamma, delta;
};

/// (n0; n1, n2, n3, n4) with n1 >= n2 >= n3 >= n4 >= 0.
struct BracketSpec {
  int n0;
  std::array<int, 4> n;

  BracketSpec(int n0_, std::array<int, 4> n_);
  int degree() const { return n0 + n[0] + n[1] + n[2] + n[3]; }
};

/// Monomial c * T0^e0 ... T4^e4.
struct Monomial {
  std::int64_t coeff;
  std::array<int, 5> e;
};

/// Distinct monomials of the bracket with coefficient 1.
std::vector<Monomial> bracket_monomials(const BracketSpec& spec);
cplx bracket_eval(const BracketSpec& spec, const std::array<cplx, 5>& T);

/// Expanded Burkhardt invariant of weight j in {4, 6, 10, 12, 18}; like terms merged.
const std::vector<Monomial>& burkhardt_monomials(int j);
cplx burkhardt_B(int j, const std::array<cplx, 5>& T);

struct BurkhardtTerm {
  std::int64_t coeff;
  BracketSpec spec;
};
/// Bracket form of B_j as printed.
const std::vector<BurkhardtTerm>& burkhardt_brackets(int j);

enum class IgusaName { psi4, psi6, chi10, chi12 };
IgusaName parse_igusa(const std::string& s);
std::string igusa_name(IgusaName n);

/// The 60 syzygous triples of even characteristics with their signs in psi6.
struct SignedTriple {
  std::array<int, 3> idx;
  int sign;
};
const std::vector<SignedTriple>& syzygous_triples();
/// The 15 complements of Goepel quadruples used in chi12.
const std::vector<std::array<int, 6>>& goepel_complements();

cplx igusa(IgusaName name, const std::array<cplx, 10>& thetas);

/// The 102 monomials of d90 in (t4, t6, t10, t12, t18).
const std::vector<Monomial>& d90_monomials();
cplx d90(const WeightedPoint& t);
/// Sum of |monomial| values; scale reference for vanishing checks.
double d90_abs_scale(const WeightedPoint& t);

struct StaticCheckReport {
  std::size_t monomials = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
StaticCheckReport d90_static_check();

struct InversePeriodResult {
  WeightedPoint t;
  std::array<cplx, 5> thetas;
  std::array<cplx, 5> B;
  int radius;
  double tail_bound;
};

/// (-3 B4 : -2 B6 : 2^9 3 B10 : 2^9 B12 : -2^16 B18) of the five theta values.
WeightedPoint t_from_thetas(const std::array<cplx, 5>& thetas);
InversePeriodResult inverse_period_map_ex(const HermitianPoint& w, const TruncationSpec& tr);
WeightedPoint inverse_period_map(const HermitianPoint& w, const TruncationSpec& tr);

/// (psi4 : psi6 : 2^12 3^5 chi10 : 2^12 3^6 chi12)
CDPoint clingher_doran_map(const SiegelPoint& w0, const TruncationSpec& tr);
/// t4 = -3 alpha, t6 = -2 beta, t10 = -gamma, t12 = delta, t18 = 0
WeightedPoint embed_cd(const CDPoint& p);

/// b = mu^{k/2} a for some mu, within tol after normalization of both points.
bool weighted_projective_eq(const WeightedPoint& a, const WeightedPoint& b, double tol);

}  // namespace hermk3
