#pragma once

// Integer lattices: Gram matrices, discriminant groups, isometry checks and the
// monodromy / intersection data of the reference fibration.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hermk3/exactnum.hpp"

namespace hermk3 {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);
/// Row-major JSON array of integer rows.
std::string matrix_json(const IntMatrix& a);

class GramMatrix {
public:
  /// Throws InvalidArgument unless square, symmetric and non-empty.
  explicit GramMatrix(IntMatrix entries);

  const IntMatrix& entries() const { return m_; }
  std::size_t dim() const { return m_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  Integer det() const { return determinant(m_); }

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }

private:
  IntMatrix m_;
};

/// name in {U, A1, A2, E6, E7, E8}; sign is +1 or -1. U ignores sign.
GramMatrix root_lattice(const std::string& name, int sign);
GramMatrix direct_sum(const std::vector<GramMatrix>& gs);

struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;  // nontrivial elementary divisors, each divides the next
  Integer order() const;
};

/// Smith normal form of the Gram matrix. Throws InvalidArgument when singular.
DiscriminantGroup discriminant_group(const GramMatrix& g);
/// Diagonal of the Smith normal form (all elementary divisors, including 1s).
std::vector<Integer> smith_diagonal(const IntMatrix& a);

/// m^T g m == g.
bool check_isometry(const IntMatrix& m, const GramMatrix& g);
/// The induced action of m on the dual quotient is trivial, i.e. (m - I) g^{-1} is integral.
/// Throws InvalidArgument if m is not an isometry of g.
bool check_discriminant_trivial(const IntMatrix& m, const GramMatrix& g);

/// A = U + U + A2(-1) in the basis (first U pair, second U pair, A2 pair).
GramMatrix gram_A();

struct MonodromyEntry {
  std::string label;  // "alpha1", ..., "alpha0", ..., "alpha_inf"
  std::array<std::array<std::int64_t, 2>, 2> m;
  std::string kodaira;
  std::array<std::int64_t, 2> cycle;  // coordinates in (gamma1, gamma2); zero when not applicable
  bool has_cycle;
};

/// The eight local monodromies, in column order alpha1..alpha4, alpha0, alpha5, alpha6, alpha_inf.
std::vector<MonodromyEntry> monodromy_table();

struct MonodromyReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  /// Each successful ordering as a list of labels whose product (left to right) is I.
  std::vector<std::vector<std::string>> identity_orderings;
};

/// Picard-Lefschetz consistency: I1 entries have trace 2 and fix their vanishing cycle
/// (row vector convention v*M = v), II* has order 6, IV* has order 3, and at least one
/// cyclic ordering (either orientation) multiplies to the identity.
MonodromyReport monodromy_consistency(const std::vector<MonodromyEntry>& entries);

GramMatrix gstar_gram();
IntMatrix base_change_Tn();
IntMatrix base_change_Sn();
/// t * g * t^T. Throws InvalidArgument on dimension mismatch.
GramMatrix basechange_gram(const IntMatrix& t, const GramMatrix& g);

}  // namespace hermk3
