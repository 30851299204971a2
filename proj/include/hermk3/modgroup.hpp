#pragma once

// The Hermitian modular group over Z[w], its action on H_I, the five-dimensional
// representation Psi on the theta vector with exact closure and Molien series,
// and the modular isomorphism between the type IV domain and H_I.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hermk3/exactnum.hpp"
#include "hermk3/lattices.hpp"
#include "hermk3/theta.hpp"

namespace hermk3 {

/// 4x4 over Z[w], blocks [[A, B], [C, D]].
class ModularMatrix {
public:
  using Entries = std::array<std::array<EisensteinInt, 4>, 4>;

  explicit ModularMatrix(Entries e) : e_(std::move(e)) {}
  static ModularMatrix identity();

  const Entries& entries() const { return e_; }
  const EisensteinInt& operator()(int i, int j) const { return e_[i][j]; }
  /// M J conj(M)^T == J with J = [[0, -I], [I, 0]].
  bool is_symplectic_hermitian() const;
  std::array<std::array<cplx, 4>, 4> to_complex() const;

  friend ModularMatrix operator*(const ModularMatrix& a, const ModularMatrix& b);
  friend bool operator==(const ModularMatrix& a, const ModularMatrix& b) = default;

private:
  Entries e_;
};

/// "M1", "M2", "M3", "J".
ModularMatrix modular_generator(const std::string& name);
const std::vector<std::string>& modular_generator_names();

/// (AW + B)(CW + D)^{-1}. Throws InvalidArgument when CW + D is singular.
HermitianPoint act(const ModularMatrix& m, const HermitianPoint& w);
/// det(CW + D)
cplx automorphy_det(const ModularMatrix& m, const HermitianPoint& w);
/// det(CW + D)^{-k} f(M W)
cplx slash(const std::function<cplx(const HermitianPoint&)>& f, int k, const ModularMatrix& m,
           const HermitianPoint& w);

using Rep5Matrix = std::array<std::array<CycloRational, 5>, 5>;

Rep5Matrix rep5_identity();
Rep5Matrix rep5_mul(const Rep5Matrix& a, const Rep5Matrix& b);
/// Rows separated by ';', entries by ','.
std::string rep5_str(const Rep5Matrix& m);

/// Psi on the generators M1, M2, M3, J.
const std::map<std::string, Rep5Matrix>& psi_generators();

struct ThetaTransformCheck {
  double residual;
  bool ok;
};
/// max_k |det(CW+D)^{-1} Theta_k(M W) - (Psi(M) Theta(W))_k|
ThetaTransformCheck verify_theta_transform(const std::string& gen, const HermitianPoint& w, const TruncationSpec& tr,
                                           double tol);

class GroupClosure {
public:
  struct Impl;
  explicit GroupClosure(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::size_t order() const;
  /// Elements in canonical text form, sorted.
  std::vector<std::string> element_strings() const;
  Rep5Matrix element(std::size_t i) const;
  bool contains(const Rep5Matrix& m) const;
  /// Some c*I with c != 1 in the group.
  bool contains_nontrivial_scalar() const;
  /// Every product of an element with a generator lies in the set.
  bool is_closed() const;
  const Impl& impl() const { return *impl_; }

private:
  std::shared_ptr<const Impl> impl_;
};

constexpr std::size_t kClosureCap = 1000000;

/// Breadth-first closure under right multiplication by the generators. Throws
/// CapacityError past `cap` elements.
GroupClosure group_closure(const std::vector<Rep5Matrix>& gens, std::size_t cap = kClosureCap);

/// (1/|G|) sum_g 1/det(I - t g) through max_degree, exactly.
std::vector<Rational> molien_series(const GroupClosure& g, int max_degree);

struct DomainPoint {
  std::array<cplx, 6> xi;
};

/// (xi, xi) and (xi, conj xi) under Gram(A).
cplx domain_quadric(const DomainPoint& p);
double domain_positivity(const DomainPoint& p);

/// Throws InvalidArgument when xi1 = 0.
HermitianPoint modular_iso_f(const DomainPoint& p);
DomainPoint modular_iso_finv(const HermitianPoint& w);

/// Images in O(A) of M1, M2, M3, J, T1, T2, acting on column vectors xi.
const std::map<std::string, IntMatrix>& orth_images();
/// Action on H_I of the six names above; T1: W -> W^T, T2: W -> [[tau, -w], [-z, tau']].
HermitianPoint generator_action(const std::string& name, const HermitianPoint& w);
/// max entry difference between f(O xi) and the generator action on f(xi).
double equivariance_residual(const std::string& name, const DomainPoint& p);

}  // namespace hermk3
