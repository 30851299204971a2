#pragma once

// Weierstrass data of the elliptic fibration in the chart x1 = 1/x, its
// discriminant, critical points and Kodaira types.

#include <array>
#include <string>
#include <vector>

#include "hermk3/invariants.hpp"

namespace hermk3 {

/// Coefficients, lowest degree first.
using Poly = std::vector<cplx>;

/// z1^2 = y1^3 + p(x1) y1 + q(x1)
struct FibrationData {
  Poly p;  // degree <= 5
  Poly q;  // degree <= 8
};

/// p = t4 x^4 + t10 x^5, q = x^5 + t6 x^6 + t12 x^7 + t18 x^8.
FibrationData fibration_from_t(const WeightedPoint& t);

cplx poly_eval(const Poly& f, cplx x);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& f);
/// Trailing coefficients dropped when |c| <= tol * max|c|.
Poly poly_trim(Poly f, double tol = 0.0);
/// Roots by companion-matrix eigenvalues with Newton polishing. Throws InvalidArgument on the zero polynomial.
std::vector<cplx> poly_roots(const Poly& f);
/// Index of the first nonzero coefficient; -1 for the zero polynomial.
int poly_order_at_zero(const Poly& f);

/// 4 p^3 + 27 q^2
Poly discriminant_poly(const FibrationData& f);

/// Same fibration seen from the chart x = 1/x1: p^(x) = x^8 p(1/x), q^(x) = x^12 q(1/x).
FibrationData chart_at_infinity(const FibrationData& f);

/// Vanishing orders; kOrderInfinite stands for the zero polynomial.
constexpr int kOrderInfinite = 1 << 20;

/// "I0", "In", "II", "III", "IV", "I0*", "In*", "IV*", "III*", "II*".
/// Throws InvalidArgument when the orders are outside the table.
std::string kodaira_type(int ord_p, int ord_q, int ord_delta);

struct CriticalPoint {
  bool at_infinity = false;
  cplx location;
  std::string kodaira;
  std::array<int, 3> orders;  // ord p, ord q, ord delta
};

struct CriticalPointReport {
  std::vector<CriticalPoint> points;  // 0 first, then finite nonzero, infinity last
  bool degenerate = false;             // some finite nonzero root has multiplicity > 1
  double min_root_separation = 0;     // |r_i - r_j| / max(1, |r_i|, |r_j|)
};

/// Finite roots are clustered when closer than cluster_tol (relative).
CriticalPointReport critical_points(const FibrationData& f, double cluster_tol = 1e-6);

/// Roots of y^3 + p(x1) y + q(x1); the fourth branch point is infinity.
/// Throws InvalidArgument when the fiber is singular.
std::array<cplx, 3> fiber_branch_points(const FibrationData& f, cplx x1);

/// The reference parameter point (-12 : -3 : -5 : 21 : 13).
WeightedPoint reference_t0();
/// Reference fibration with the x1^6 coefficient of q replaced.
FibrationData reference_fibration(cplx q6);
/// Approximate printed critical points.
const std::array<double, 6>& reference_printed_critical_points();

struct ReferenceVariant {
  double q6;
  std::vector<cplx> roots;  // finite nonzero critical points, sorted by real part
  double max_deviation;     // against the printed list; infinite unless six real roots
  bool matches;             // max_deviation < 0.01
};
/// Both variants q6 = t6 = -3 and q6 = -4.
std::array<ReferenceVariant, 2> reference_variants();

/// Smallest relative pairwise distance among the finite nonzero roots of the discriminant.
double min_discriminant_root_gap(const WeightedPoint& t);
/// Roots in t18 of d90(t4, t6, t10, t12, t18) = 0.
std::vector<cplx> d90_roots_in_t18(const WeightedPoint& t);

}  // namespace hermk3
