#include "hermk3/hermk3.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "hermk3/error.hpp"
#include "hermk3/fibration.hpp"
#include "hermk3/invariants.hpp"
#include "hermk3/modgroup.hpp"
#include "hermk3/qseries.hpp"
#include "hermk3/theta.hpp"
#include "hermk3/verify.hpp"
#include "json.hpp"

using namespace hermk3;

struct hk3_series {
  FourierSeries s;
};

struct hk3_group {
  GroupClosure g;
};

namespace {

thread_local std::string g_last_error;

template <class F>
hk3_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return HK3_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<hk3_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HK3_E_CAPACITY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HK3_E_INTERNAL;
  }
}

cplx c(hk3_complex z) { return {z.re, z.im}; }
hk3_complex h(cplx z) { return {z.real(), z.imag()}; }

TruncationSpec spec(hk3_truncation tr) {
  if (tr.radius < 0) throw InvalidArgument("radius must be non-negative");
  TruncationSpec s;
  s.radius = tr.radius;
  if (tr.tail_tol > 0) s.tail_tol = tr.tail_tol;
  return s;
}

void need(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void fill_info(hk3_truncation_info* info, int radius, double tail) {
  if (info) *info = {radius, tail};
}

int parse_int(const char* s, const char* what) {
  need(s, what);
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0') throw InvalidArgument(std::string("bad ") + what + ": " + s);
  return static_cast<int>(v);
}

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) throw InvalidArgument(std::string(what) + " out of range");
}

}  // namespace

extern "C" {

const char* hk3_version(void) { return "0.1.0"; }

const char* hk3_last_error(void) { return g_last_error.c_str(); }

void hk3_string_free(char* s) { std::free(s); }

hk3_status hk3_siegel_theta(int j, hk3_complex tau, hk3_complex z, hk3_complex tau_prime, hk3_truncation tr,
                            hk3_complex* out, hk3_truncation_info* info) {
  return guarded([&] {
    need(out, "out");
    check_index(j, 10, "characteristic index");
    auto r = siegel_theta_ex(siegel_characteristic(j), SiegelPoint{c(tau), c(z), c(tau_prime)}, spec(tr));
    *out = h(r.value);
    fill_info(info, r.radius, r.tail_bound);
  });
}

hk3_status hk3_hermitian_theta(int k, hk3_complex tau, hk3_complex z, hk3_complex w, hk3_complex tau_prime,
                               hk3_truncation tr, hk3_complex* out, hk3_truncation_info* info) {
  return guarded([&] {
    need(out, "out");
    check_index(k, 5, "characteristic index");
    auto r = hermitian_theta_ex(hermitian_characteristic(k), HermitianPoint{c(tau), c(z), c(w), c(tau_prime)}, spec(tr));
    *out = h(r.value);
    fill_info(info, r.radius, r.tail_bound);
  });
}

hk3_status hk3_igusa(const char* name, hk3_complex tau, hk3_complex z, hk3_complex tau_prime, hk3_truncation tr,
                     hk3_complex* out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    const IgusaName n = parse_igusa(name);
    *out = h(igusa(n, siegel_theta_all(SiegelPoint{c(tau), c(z), c(tau_prime)}, spec(tr))));
  });
}

hk3_status hk3_burkhardt(int weight, const hk3_complex T[5], hk3_complex* out) {
  return guarded([&] {
    need(T, "T");
    need(out, "out");
    std::array<cplx, 5> v;
    for (int i = 0; i < 5; ++i) v[i] = c(T[i]);
    *out = h(burkhardt_B(weight, v));
  });
}

hk3_status hk3_d90(const hk3_complex t[5], hk3_complex* out) {
  return guarded([&] {
    need(t, "t");
    need(out, "out");
    WeightedPoint p;
    for (int i = 0; i < 5; ++i) p.t[i] = c(t[i]);
    *out = h(d90(p));
  });
}

hk3_status hk3_inverse_period(hk3_complex tau, hk3_complex z, hk3_complex w, hk3_complex tau_prime, hk3_truncation tr,
                              hk3_complex t[5], hk3_complex normalized[5], hk3_truncation_info* info) {
  return guarded([&] {
    need(t, "t");
    auto r = inverse_period_map_ex(HermitianPoint{c(tau), c(z), c(w), c(tau_prime)}, spec(tr));
    for (int i = 0; i < 5; ++i) t[i] = h(r.t.t[i]);
    if (normalized) {
      auto n = r.t.normalized();
      for (int i = 0; i < 5; ++i) normalized[i] = h(n.t[i]);
    }
    fill_info(info, r.radius, r.tail_bound);
  });
}

hk3_status hk3_cd_map(hk3_complex tau, hk3_complex z, hk3_complex tau_prime, hk3_truncation tr, hk3_complex out[4]) {
  return guarded([&] {
    need(out, "out");
    auto p = clingher_doran_map(SiegelPoint{c(tau), c(z), c(tau_prime)}, spec(tr));
    out[0] = h(p.alpha);
    out[1] = h(p.beta);
    out[2] = h(p.gamma);
    out[3] = h(p.delta);
  });
}

hk3_status hk3_qexp(const char* subject, const char* selector, const char* locus, const char* order,
                    hk3_series** out) {
  return guarded([&] {
    need(subject, "subject");
    need(out, "out");
    need(order, "order");
    const RationalExponent ord = RationalExponent::parse(order);
    const std::string sub = subject;
    auto loc = [&] {
      need(locus, "locus");
      return parse_series_locus(locus);
    };
    std::unique_ptr<hk3_series> s;
    if (sub == "theta") {
      const int j = parse_int(selector, "characteristic index");
      check_index(j, 10, "characteristic index");
      s.reset(new hk3_series{qexp_siegel_theta(j, ord)});
    } else if (sub == "dk-theta") {
      const int k = parse_int(selector, "characteristic index");
      check_index(k, 5, "characteristic index");
      s.reset(new hk3_series{qexp_dk_theta(k, loc(), ord)});
    } else if (sub == "igusa") {
      need(selector, "name");
      s.reset(new hk3_series{qexp_igusa(parse_igusa(selector), ord)});
    } else if (sub == "burkhardt") {
      const int wgt = parse_int(selector, "weight");
      s.reset(new hk3_series{qexp_burkhardt(wgt, loc(), ord)});
    } else {
      throw InvalidArgument("unknown qexp subject: " + sub);
    }
    *out = s.release();
  });
}

hk3_status hk3_series_size(const hk3_series* s, size_t* out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = s->s.size();
  });
}

hk3_status hk3_series_json(const hk3_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(s->s.to_json());
  });
}

hk3_status hk3_series_leading(const hk3_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup(leading_term(s->s).str());
  });
}

void hk3_series_free(hk3_series* s) { delete s; }

hk3_status hk3_group_burkhardt(hk3_group** out) {
  return guarded([&] {
    need(out, "out");
    std::vector<Rep5Matrix> gens;
    for (const auto& [n, m] : psi_generators()) gens.push_back(m);
    *out = new hk3_group{group_closure(gens)};
  });
}

hk3_status hk3_group_order(const hk3_group* g, size_t* out) {
  return guarded([&] {
    need(g, "group");
    need(out, "out");
    *out = g->g.order();
  });
}

hk3_status hk3_group_elements_json(const hk3_group* g, char** out) {
  return guarded([&] {
    need(g, "group");
    need(out, "out");
    *out = dup(nlohmann::json(g->g.element_strings()).dump());
  });
}

hk3_status hk3_group_molien_json(const hk3_group* g, int max_degree, char** out) {
  return guarded([&] {
    need(g, "group");
    need(out, "out");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : molien_series(g->g, max_degree)) arr.push_back(r.get_str());
    *out = dup(arr.dump());
  });
}

void hk3_group_free(hk3_group* g) { delete g; }

hk3_status hk3_critical_points_json(const hk3_complex t[5], char** out) {
  return guarded([&] {
    need(t, "t");
    need(out, "out");
    WeightedPoint p;
    for (int i = 0; i < 5; ++i) p.t[i] = c(t[i]);
    auto rep = critical_points(fibration_from_t(p));
    nlohmann::ordered_json j;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& cp : rep.points) {
      nlohmann::ordered_json e;
      if (cp.at_infinity)
        e["location"] = "inf";
      else
        e["location"] = {cp.location.real(), cp.location.imag()};
      e["kodaira"] = cp.kodaira;
      e["orders"] = cp.orders;
      pts.push_back(e);
    }
    j["critical_points"] = pts;
    j["degenerate"] = rep.degenerate;
    j["min_root_separation"] = rep.min_root_separation;
    *out = dup(j.dump());
  });
}

hk3_verify_options hk3_verify_defaults(void) {
  VerifyOptions o;
  return {o.tol, o.seed, o.samples, o.radius, o.order, 0};
}

hk3_status hk3_verify(const char* suite, const hk3_verify_options* opts, char** json_out, int* all_pass) {
  return guarded([&] {
    need(suite, "suite");
    need(json_out, "json_out");
    VerifyOptions o;
    bool timings = false;
    if (opts) {
      o.tol = opts->tol;
      o.seed = opts->seed;
      o.samples = opts->samples;
      o.radius = opts->radius;
      o.order = opts->order;
      timings = opts->timings != 0;
    }
    auto reps = run_suite(suite, o);
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.pass;
    *json_out = dup(reports_json(reps, timings));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
