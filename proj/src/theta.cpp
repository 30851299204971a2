#include "hermk3/theta.hpp"

#include <cmath>
#include <vector>

#include "hermk3/error.hpp"

namespace hermk3 {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

double lambda_min_hermitian(double y11, cplx y12, double y22) {
  const double mean = 0.5 * (y11 + y22);
  const double half = 0.5 * (y11 - y22);
  return mean - std::sqrt(half * half + std::norm(y12));
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// G(N) = sum_{n >= N} exp(-c (n - h0)^2), for N - h0 > 0.
double gauss_tail(double c, double n0, double h0) {
  const double x = n0 - h0;
  return std::exp(-c * x * x) / (1.0 - std::exp(-c * (2.0 * x + 1.0)));
}

// Bound on the omitted part of a dim-fold box sum of exp(-c |x|^2), x = n + h, |h| <= h0 <= 2/3.
double box_tail(double c, int dims, double h0, int radius) {
  const double full1 = 1.0 + 2.0 * gauss_tail(c, 1.0, h0);
  const double tail1 = 2.0 * gauss_tail(c, radius + 1.0, h0);
  return dims * tail1 * std::pow(full1, dims - 1);
}

template <class Point>
int resolve_radius_impl(const Point& w, const TruncationSpec& tr) {
  w.validate();
  if (tr.radius < 0) throw InvalidArgument("negative truncation radius");
  if (tr.radius > 0) return tr.radius;
  if (!(tr.tail_tol > 0.0)) throw InvalidArgument("tail tolerance must be positive");
  for (int r = 1; r <= kMaxRadius; ++r)
    if (tail_bound(w, r) <= tr.tail_tol) return r;
  throw ConvergenceError("tail bound above tolerance at the maximal radius " + std::to_string(kMaxRadius));
}

const std::array<std::array<int, 4>, 10> kSiegelChars = {{
    {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0},
    {0, 0, 0, 1}, {0, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 1, 1},
}};

const std::array<std::array<int, 2>, 5> kHermChars = {{{0, 0}, {1, 0}, {0, 1}, {1, -1}, {1, 1}}};

// Eisenstein coordinates of a + c w + s i/sqrt(3), using i/sqrt(3) = (1 + 2w)/3.
struct Coord {
  cplx g;
  double re_a, re_c;
};

std::vector<Coord> eisenstein_box(int s, int radius) {
  const cplx om = omega_complex();
  std::vector<Coord> out;
  out.reserve((2 * radius + 1) * (2 * radius + 1));
  for (int a = -radius; a <= radius; ++a)
    for (int c = -radius; c <= radius; ++c) {
      const double ap = a + s / 3.0, cp = c + 2.0 * s / 3.0;
      out.push_back({ap + cp * om, ap, cp});
    }
  return out;
}

cplx hermitian_sum(const HermitianPoint& w, int s, int t, int radius) {
  const auto g1s = eisenstein_box(s, radius);
  const auto g2s = eisenstein_box(t, radius);
  const cplx tpi = 2.0 * kPi * kI;
  std::vector<cplx> e1(g1s.size()), e2(g2s.size());
  for (std::size_t i = 0; i < g1s.size(); ++i) e1[i] = std::exp(tpi * w.tau * std::norm(g1s[i].g));
  for (std::size_t j = 0; j < g2s.size(); ++j) e2[j] = std::exp(tpi * w.tau_prime * std::norm(g2s[j].g));
  cplx total = 0.0;
  for (std::size_t i = 0; i < g1s.size(); ++i) {
    const cplx g1 = g1s[i].g, g1c = std::conj(g1);
    cplx row = 0.0;
    for (std::size_t j = 0; j < g2s.size(); ++j) {
      const cplx g2 = g2s[j].g;
      row += e2[j] * std::exp(tpi * (w.z * g1c * g2 + w.w * std::conj(g2) * g1));
    }
    total += e1[i] * row;
  }
  return total;
}

}  // namespace

// ---- points ----

std::array<cplx, 3> HermitianPoint::imag_part() const {
  // (W - W^*)/(2i): diagonal Im tau, Im tau'; off-diagonal (z - conj(w)) / 2i.
  return {cplx(tau.imag(), 0.0), (z - std::conj(w)) / (2.0 * kI), cplx(tau_prime.imag(), 0.0)};
}

double HermitianPoint::lambda_min() const {
  auto y = imag_part();
  return lambda_min_hermitian(y[0].real(), y[1], y[2].real());
}

bool HermitianPoint::admissible() const {
  if (!finite(tau) || !finite(z) || !finite(w) || !finite(tau_prime)) return false;
  return tau.imag() > 0.0 && lambda_min() > 0.0;
}

void HermitianPoint::validate() const {
  if (!admissible()) throw InadmissiblePoint("Hermitian point: imaginary part is not positive definite");
}

double SiegelPoint::lambda_min() const {
  return lambda_min_hermitian(tau.imag(), cplx(z.imag(), 0.0), tau_prime.imag());
}

bool SiegelPoint::admissible() const {
  if (!finite(tau) || !finite(z) || !finite(tau_prime)) return false;
  return tau.imag() > 0.0 && lambda_min() > 0.0;
}

void SiegelPoint::validate() const {
  if (!admissible()) throw InadmissiblePoint("Siegel point: imaginary part is not positive definite");
}

ThetaCharacteristic siegel_characteristic(int j) {
  if (j < 0 || j > 9) throw InvalidArgument("Siegel characteristic index must be in 0..9");
  const auto& c = kSiegelChars[j];
  return {j, {c[0], c[1]}, {c[2], c[3]}};
}

ThetaCharacteristic hermitian_characteristic(int k) {
  if (k < 0 || k > 4) throw InvalidArgument("Hermitian characteristic index must be in 0..4");
  return {k, kHermChars[k], {0, 0}};
}

// ---- truncation ----

double tail_bound(const HermitianPoint& w, int radius) {
  const double lam = w.lambda_min();
  if (!(lam > 0.0)) throw InadmissiblePoint("tail bound needs a positive definite imaginary part");
  // |g|^2 >= (x_a^2 + x_c^2) / 2 on each Eisenstein coordinate, so each term is
  // at most exp(-pi lam |x|^2) in the four real shifted coordinates.
  return box_tail(kPi * lam, 4, 2.0 / 3.0, radius);
}

double tail_bound(const SiegelPoint& w, int radius) {
  const double lam = w.lambda_min();
  if (!(lam > 0.0)) throw InadmissiblePoint("tail bound needs a positive definite imaginary part");
  return box_tail(kPi * lam, 2, 0.5, radius);
}

int resolve_radius(const HermitianPoint& w, const TruncationSpec& tr) { return resolve_radius_impl(w, tr); }
int resolve_radius(const SiegelPoint& w, const TruncationSpec& tr) { return resolve_radius_impl(w, tr); }

// ---- Siegel ----

ThetaResult siegel_theta_ex(const ThetaCharacteristic& j, const SiegelPoint& w0, const TruncationSpec& tr) {
  const int r = resolve_radius(w0, tr);
  const double s = j.m[0] / 2.0, t = j.m[1] / 2.0;
  const double u = j.n[0] / 2.0, v = j.n[1] / 2.0;
  const cplx pii = kPi * kI;
  cplx total = 0.0;
  for (int a = -r; a <= r; ++a) {
    const double x = a + s;
    for (int b = -r; b <= r; ++b) {
      const double y = b + t;
      total += std::exp(pii * (x * x * w0.tau + 2.0 * x * y * w0.z + y * y * w0.tau_prime) +
                        2.0 * pii * (x * u + y * v));
    }
  }
  return {total, r, tail_bound(w0, r)};
}

cplx siegel_theta(const ThetaCharacteristic& j, const SiegelPoint& w0, const TruncationSpec& tr) {
  return siegel_theta_ex(j, w0, tr).value;
}

std::array<cplx, 10> siegel_theta_all(const SiegelPoint& w0, const TruncationSpec& tr) {
  TruncationSpec fixed{resolve_radius(w0, tr), tr.tail_tol};
  std::array<cplx, 10> out;
  for (int j = 0; j < 10; ++j) out[j] = siegel_theta(siegel_characteristic(j), w0, fixed);
  return out;
}

// ---- Hermitian ----

ThetaResult hermitian_theta_ex(const ThetaCharacteristic& k, const HermitianPoint& w, const TruncationSpec& tr) {
  const int r = resolve_radius(w, tr);
  return {hermitian_sum(w, k.m[0], k.m[1], r), r, tail_bound(w, r)};
}

cplx hermitian_theta(const ThetaCharacteristic& k, const HermitianPoint& w, const TruncationSpec& tr) {
  return hermitian_theta_ex(k, w, tr).value;
}

std::array<cplx, 5> hermitian_theta_all(const HermitianPoint& w, const TruncationSpec& tr) {
  TruncationSpec fixed{resolve_radius(w, tr), tr.tail_tol};
  std::array<cplx, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = hermitian_theta(hermitian_characteristic(k), w, fixed);
  return out;
}

// ---- restrictions ----

ThetaResult restricted_theta_zw_ex(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z,
                                   const TruncationSpec& tr) {
  const auto pt = HermitianPoint::on_zw(tau, tau_prime, z);
  const int r = resolve_radius(pt, tr);
  const double s = k.m[0], t = k.m[1];
  const cplx tpi = 2.0 * kPi * kI;
  cplx total = 0.0;
  for (int a = -r; a <= r; ++a)
    for (int c = -r; c <= r; ++c) {
      const double e1 = a * a - a * c + c * c + s * c + s * s / 3.0;
      const cplx f1 = std::exp(tpi * e1 * tau);
      cplx inner = 0.0;
      for (int b = -r; b <= r; ++b)
        for (int d = -r; d <= r; ++d) {
          const double e2 = b * b - b * d + d * d + t * d + t * t / 3.0;
          const double ez = 2.0 * a * b + 2.0 * c * d - a * d - b * c + t * c + s * d + (2.0 / 3.0) * s * t;
          inner += std::exp(tpi * (e2 * tau_prime + ez * z));
        }
      total += f1 * inner;
    }
  return {total, r, tail_bound(pt, r)};
}

cplx restricted_theta_zw(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z, const TruncationSpec& tr) {
  return restricted_theta_zw_ex(k, tau, tau_prime, z, tr).value;
}

ThetaResult restricted_theta_zmw_ex(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z,
                                    const TruncationSpec& tr) {
  const auto pt = HermitianPoint::on_zmw(tau, tau_prime, z);
  const int r = resolve_radius(pt, tr);
  const double s = k.m[0], t = k.m[1];
  const double rt3 = std::sqrt(3.0);
  const cplx tpi = 2.0 * kPi * kI;
  cplx total = 0.0;
  for (int a = -r; a <= r; ++a)
    for (int c = -r; c <= r; ++c) {
      const double e1 = a * a - a * c + c * c + s * c + s * s / 3.0;
      const cplx f1 = std::exp(tpi * e1 * tau);
      cplx inner = 0.0;
      for (int b = -r; b <= r; ++b)
        for (int d = -r; d <= r; ++d) {
          const double e2 = b * b - b * d + d * d + t * d + t * t / 3.0;
          const cplx ez = kI * (rt3 * (a * d - b * c) + (2.0 / rt3) * (a * t - b * s) - (1.0 / rt3) * (c * t - d * s));
          inner += std::exp(tpi * (e2 * tau_prime + ez * z));
        }
      total += f1 * inner;
    }
  return {total, r, tail_bound(pt, r)};
}

cplx restricted_theta_zmw(const ThetaCharacteristic& k, cplx tau, cplx tau_prime, cplx z, const TruncationSpec& tr) {
  return restricted_theta_zmw_ex(k, tau, tau_prime, z, tr).value;
}

// ---- loci and sampling ----

std::string locus_name(Locus l) {
  switch (l) {
    case Locus::zw: return "z=w";
    case Locus::zmw: return "z=-w";
    default: return "generic";
  }
}

Locus parse_locus(const std::string& s) {
  if (s == "z=w" || s == "zw") return Locus::zw;
  if (s == "z=-w" || s == "zmw") return Locus::zmw;
  if (s == "generic") return Locus::generic;
  throw InvalidArgument("unknown locus: " + s);
}

cplx PointSampler::small_z() {
  const double r = 0.3 * std::sqrt(uniform(0.0, 1.0));
  const double phi = uniform(0.0, 2.0 * kPi);
  return std::polar(r, phi);
}

HermitianPoint PointSampler::hermitian(Locus locus) {
  for (;;) {
    const cplx tau(uniform(-0.5, 0.5), uniform(1.0, 2.0));
    const cplx tp(uniform(-0.5, 0.5), uniform(1.0, 2.0));
    const cplx z = small_z();
    HermitianPoint p;
    switch (locus) {
      case Locus::zw: p = HermitianPoint::on_zw(tau, tp, z); break;
      case Locus::zmw: p = HermitianPoint::on_zmw(tau, tp, z); break;
      default: p = {tau, z, small_z(), tp}; break;
    }
    if (p.admissible() && p.lambda_min() >= 0.4) return p;
  }
}

SiegelPoint PointSampler::siegel() {
  for (;;) {
    SiegelPoint p{cplx(uniform(-0.5, 0.5), uniform(1.0, 2.0)), small_z(), cplx(uniform(-0.5, 0.5), uniform(1.0, 2.0))};
    if (p.admissible() && p.lambda_min() >= 0.4) return p;
  }
}

}  // namespace hermk3
