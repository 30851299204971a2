// Acceptance runner: one PASS/FAIL line per criterion.
// Each criterion is a set of verify checks with a tolerance cap and a time budget.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hermk3/hermk3.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Criterion {
  int id;
  const char* name;
  std::vector<std::string> checks;
  double tol;  // < 0: exact checks, tolerance taken from the report
  double limit_s;
};

const std::vector<Criterion> kCriteria = {
    {1, "restriction identity on z=w and z=-w", {"theta.restriction_zw", "theta.restriction_zmw"}, 1e-9, 10},
    {2, "normalized t18 vanishes on z=w", {"invariants.t18_vanishing_zw"}, 1e-8, 5},
    {3, "normalized d90 vanishes on z=-w", {"invariants.d90_vanishing_zmw"}, 1e-5, 20},
    {4, "Igusa-Burkhardt bridge on z=w", {"invariants.bridge_zw"}, 1e-8, 20},
    {5, "modular transformation for M1 M2 M3 J",
     {"theta.transform_M1", "theta.transform_M2", "theta.transform_M3", "theta.transform_J"}, 1e-8, 30},
    {6, "group order 25920 and Molien series to degree 20", {"group.closure_order", "group.molien"}, -1, 60},
    {7, "exact Fourier leading terms and exponent sets",
     {"qexp.siegel_theta_leading", "qexp.igusa_leading", "qexp.dk_theta_leading", "qexp.burkhardt_leading",
      "qexp.zero_exponent_sets"},
     -1, 10},
    {8, "lattice suite", {"lattice.discriminant_A", "lattice.tn_conjugation", "lattice.orth_images", "lattice.monodromy"},
     -1, 1},
    {9, "d90 weight scan and B_j invariance", {"invariants.d90_static", "invariants.psi_invariance"}, 1e-9, 5},
    {10, "fibration inventory and reference variant", {"fibration.generic_inventory", "fibration.reference_variant"}, -1,
     5},
};

}  // namespace

int main() {
  hk3_verify_options o = hk3_verify_defaults();
  o.seed = 0;
  o.samples = 20;
  o.timings = 1;

  std::map<std::string, json> reports;
  for (const char* suite : {"lattice", "theta", "qexp", "invariants", "group", "fibration"}) {
    char* text = nullptr;
    int all = 0;
    if (hk3_verify(suite, &o, &text, &all) != HK3_OK) {
      std::printf("suite %s failed to run: %s\n", suite, hk3_last_error());
      return 2;
    }
    for (auto& r : json::parse(text)) reports[r["check_id"].get<std::string>()] = r;
    hk3_string_free(text);
  }

  int failed = 0;
  for (const auto& c : kCriteria) {
    bool ok = true;
    double residual = 0, tol = 0;
    long long ms = 0;
    std::string note;
    for (const auto& id : c.checks) {
      auto it = reports.find(id);
      if (it == reports.end()) {
        ok = false;
        note += " missing " + id;
        continue;
      }
      const json& r = it->second;
      const double res = r["residual"].is_number() ? r["residual"].get<double>() : 1e300;
      const double t = c.tol < 0 ? r["tolerance"].get<double>() : c.tol;
      ok = ok && r["status"] == "pass" && (c.tol < 0 ? res <= t : res < t);
      residual = std::max(residual, res);
      tol = std::max(tol, t);
      ms += r["runtime_ms"].get<long long>();
      if (r["status"] != "pass") note += " " + id + ": " + r["details"].get<std::string>();
    }
    if (ms > c.limit_s * 1000) {
      ok = false;
      note += " over time budget";
    }
    if (c.id == 10) note += " [" + reports["fibration.reference_variant"]["details"].get<std::string>() + "]";
    std::printf("%s %2d %-48s residual=%.3e tol=%.0e time=%lldms limit=%.0fs%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                residual, tol, ms, c.limit_s, note.c_str());
    failed += !ok;
  }
  std::printf("%d/%zu criteria passed\n", int(kCriteria.size()) - failed, kCriteria.size());
  return failed ? 1 : 0;
}
