#pragma once

// Siegel theta constants (ten even characteristics) and the five Hermitian theta
// functions over the Eisenstein integers, evaluated as truncated lattice sums.

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "hermk3/exactnum.hpp"

namespace hermk3 {

/// W = [[tau, z], [w, tau_prime]].
struct HermitianPoint {
  cplx tau, z, w, tau_prime;

  /// Y = (W - W^*) / 2i as (y11, y12, y22); y11, y22 real.
  std::array<cplx, 3> imag_part() const;
  /// Smallest eigenvalue of Y.
  double lambda_min() const;
  /// Throws InadmissiblePoint unless Y is positive definite and all entries are finite.
  void validate() const;
  bool admissible() const;

  static HermitianPoint on_zw(cplx tau, cplx tau_prime, cplx z) { return {tau, z, z, tau_prime}; }
  static HermitianPoint on_zmw(cplx tau, cplx tau_prime, cplx z) { return {tau, z, -z, tau_prime}; }
};

/// Symmetric W0 = [[tau, z], [z, tau_prime]].
struct SiegelPoint {
  cplx tau, z, tau_prime;

  double lambda_min() const;
  void validate() const;
  bool admissible() const;
};

/// Siegel: index 0..9 with (s, t | u, v); Hermitian: index 0..4 with p = (s, t).
struct ThetaCharacteristic {
  int index;
  std::array<int, 2> m;  // (s, t)
  std::array<int, 2> n;  // (u, v); zero in the Hermitian case
};

ThetaCharacteristic siegel_characteristic(int j);
ThetaCharacteristic hermitian_characteristic(int k);

/// radius 0 selects the smallest radius whose tail bound is below tail_tol.
struct TruncationSpec {
  int radius = 0;
  double tail_tol = 1e-12;
};

constexpr int kMaxRadius = 64;

struct ThetaResult {
  cplx value;
  int radius;
  double tail_bound;
};

/// Rigorous bound on the omitted part of the box sum |coords| <= radius.
double tail_bound(const HermitianPoint& w, int radius);
double tail_bound(const SiegelPoint& w, int radius);

/// Radius chosen for tr at w; throws ConvergenceError beyond kMaxRadius.
int resolve_radius(const HermitianPoint& w, const TruncationSpec& tr);
int resolve_radius(const SiegelPoint& w, const TruncationSpec& tr);

ThetaResult siegel_theta_ex(const ThetaCharacteristic& j, const SiegelPoint& w0, const TruncationSpec& tr);
cplx siegel_theta(const ThetaCharacteristic& j, const SiegelPoint& w0, const TruncationSpec& tr);
std::array<cplx, 10> siegel_theta_all(const SiegelPoint& w0, const TruncationSpec& tr);

ThetaResult hermitian_theta_ex(const ThetaCharacteristic& k, const HermitianPoint& w, const TruncationSpec& tr);
cplx hermitian_theta(const ThetaCharacteristic& k, const HermitianPoint& w, const TruncationSpec& tr);
std::array<cplx, 5> hermitian_theta_all(const HermitianPoint& w, const TruncationSpec& tr);

/// Closed 4-fold sums on the two loci. The truncation radius is that of the
/// corresponding Hermitian point.
ThetaResult restricted_theta_zw_ex(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z,
                                   const TruncationSpec& tr);
cplx restricted_theta_zw(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z,
                         const TruncationSpec& tr);
ThetaResult restricted_theta_zmw_ex(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z,
                                    const TruncationSpec& tr);
cplx restricted_theta_zmw(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z,
                          const TruncationSpec& tr);

enum class Locus { generic, zw, zmw };

std::string locus_name(Locus l);
Locus parse_locus(const std::string& s);

/// Seeded random admissible points: Re tau, Re tau' in [-0.5, 0.5], Im in [1, 2],
/// |z| <= 0.3, rejected unless Y >= 0.4 I.
class PointSampler {
public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  HermitianPoint hermitian(Locus locus);
  SiegelPoint siegel();

private:
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  cplx small_z();
  std::mt19937_64 rng_;
};

}  // namespace hermk3
