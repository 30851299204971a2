// hermk3 command line: eval, verify, qexp, closure, molien.
// Machine output is JSON on stdout; human summaries go to stderr.
// Exit codes: 0 ok, 1 verification failure, 2 invalid or inadmissible input
// (including expansion bounds), 3 convergence failure, 4 other errors.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hermk3/hermk3.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Failure {
  int code;
  std::string msg;
};

int exit_code(hk3_status s) {
  switch (s) {
    case HK3_OK: return 0;
    case HK3_E_INVALID_ARGUMENT:
    case HK3_E_INADMISSIBLE:
    case HK3_E_DIVISION_BY_ZERO:
    case HK3_E_LOCUS_MISMATCH:
    case HK3_E_BOUNDS: return 2;
    case HK3_E_CONVERGENCE: return 3;
    default: return 4;
  }
}

void check(hk3_status s) {
  if (s != HK3_OK) throw Failure{exit_code(s), hk3_last_error()};
}

std::string take(char* p) {
  std::string s(p ? p : "");
  hk3_string_free(p);
  return s;
}

// "re", "im i", "re+im i", "re-im i"; i may also be written j
hk3_complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  static const std::regex num(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  static const std::regex full(R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-](?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)[ij])?$)");
  static const std::regex imag_only(R"(^([+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)[ij]$)");
  std::smatch m;
  auto coef = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return std::stod(t);
  };
  if (std::regex_match(s, m, imag_only)) return {0.0, coef(m[1].str())};
  if (!s.empty() && std::regex_match(s, m, full)) {
    hk3_complex z{0.0, 0.0};
    if (m[1].matched) z.re = std::stod(m[1].str());
    if (m[2].matched) z.im = coef(m[2].str());
    return z;
  }
  throw Failure{2, "cannot parse complex number '" + text + "'"};
}

std::vector<hk3_complex> parse_list(const std::string& text, std::size_t n) {
  std::vector<hk3_complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.size() != n)
    throw Failure{2, "expected " + std::to_string(n) + " comma-separated values, got " + std::to_string(out.size())};
  return out;
}

json cj(hk3_complex z) { return json::array({z.re, z.im}); }

json cjs(const hk3_complex* z, int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(cj(z[i]));
  return a;
}

struct Common {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 20;
  std::string radius = "auto";
  std::string order = "2";
  int radius_value() const {
    if (radius == "auto") return 0;
    try {
      std::size_t pos = 0;
      int r = std::stoi(radius, &pos);
      if (pos != radius.size() || r < 1) throw std::invalid_argument("radius");
      return r;
    } catch (const std::exception&) {
      throw Failure{2, "radius must be 'auto' or a positive integer"};
    }
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--tol", c.tol, "Tolerance")->capture_default_str();
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--samples", c.samples, "Number of random samples")->capture_default_str();
  app->add_option("--radius", c.radius, "Truncation radius or 'auto'")->capture_default_str();
  app->add_option("--order", c.order, "Expansion order (rational, e.g. 2 or 1/2)")->capture_default_str();
}

int cmd_eval(const std::string& subject, const std::string& at, const std::optional<int>& index,
             const std::optional<int>& weight, const std::string& name, const Common& c) {
  hk3_truncation tr{c.radius_value(), 1e-14};
  json out;
  out["subject"] = subject;
  hk3_truncation_info info{0, 0.0};
  if (subject == "theta" || subject == "dk-theta") {
    if (!index) throw Failure{2, subject + " needs --index"};
    hk3_complex v;
    if (subject == "theta") {
      auto p = parse_list(at, 3);
      check(hk3_siegel_theta(*index, p[0], p[1], p[2], tr, &v, &info));
    } else {
      auto p = parse_list(at, 4);
      check(hk3_hermitian_theta(*index, p[0], p[1], p[2], p[3], tr, &v, &info));
    }
    out["index"] = *index;
    out["value"] = cj(v);
    out["radius"] = info.radius;
    out["tail_bound"] = info.tail_bound;
  } else if (subject == "igusa") {
    auto p = parse_list(at, 3);
    hk3_complex v;
    check(hk3_igusa(name.c_str(), p[0], p[1], p[2], tr, &v));
    out["name"] = name;
    out["value"] = cj(v);
  } else if (subject == "burkhardt") {
    if (!weight) throw Failure{2, "burkhardt needs --weight"};
    auto p = parse_list(at, 5);
    hk3_complex v;
    check(hk3_burkhardt(*weight, p.data(), &v));
    out["weight"] = *weight;
    out["value"] = cj(v);
  } else if (subject == "d90") {
    auto p = parse_list(at, 5);
    hk3_complex v;
    check(hk3_d90(p.data(), &v));
    out["value"] = cj(v);
  } else if (subject == "inverse-period") {
    auto p = parse_list(at, 4);
    hk3_complex t[5], n[5];
    check(hk3_inverse_period(p[0], p[1], p[2], p[3], tr, t, n, &info));
    out["t"] = cjs(t, 5);
    out["normalized"] = cjs(n, 5);
    const double t18 = std::hypot(n[4].re, n[4].im);
    out["t18_below_threshold"] = t18 < 1e-8;
    out["radius"] = info.radius;
    out["tail_bound"] = info.tail_bound;
    if (t18 < 1e-8) std::cerr << "normalized |t18| = " << t18 << " below 1e-8\n";
  } else if (subject == "cd-map") {
    auto p = parse_list(at, 3);
    hk3_complex v[4];
    check(hk3_cd_map(p[0], p[1], p[2], tr, v));
    out["value"] = cjs(v, 4);
  } else if (subject == "critical-points") {
    auto p = parse_list(at, 5);
    char* s = nullptr;
    check(hk3_critical_points_json(p.data(), &s));
    out["result"] = json::parse(take(s));
  } else {
    throw Failure{2, "unknown eval subject '" + subject + "'"};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, bool timings, const Common& c) {
  hk3_verify_options o = hk3_verify_defaults();
  o.tol = c.tol;
  o.seed = c.seed;
  o.samples = c.samples;
  o.radius = c.radius_value();
  try {
    o.order = std::stoi(c.order);
  } catch (const std::exception&) {
    throw Failure{2, "verify needs an integer --order"};
  }
  o.timings = timings ? 1 : 0;
  char* s = nullptr;
  int ok = 0;
  check(hk3_verify(suite.c_str(), &o, &s, &ok));
  const std::string text = take(s);
  std::cout << text << "\n";
  for (const auto& r : json::parse(text)) {
    std::fprintf(stderr, "%-34s %-4s residual=%-12s tol=%g\n", r["check_id"].get<std::string>().c_str(),
                 r["status"].get<std::string>().c_str(), r["residual"].dump().c_str(), r["tolerance"].get<double>());
  }
  return ok ? 0 : 1;
}

int cmd_qexp(const std::string& subject, const std::string& selector, const std::string& locus, const Common& c) {
  hk3_series* s = nullptr;
  check(hk3_qexp(subject.c_str(), selector.c_str(), locus.c_str(), c.order.c_str(), &s));
  std::unique_ptr<hk3_series, decltype(&hk3_series_free)> guard(s, hk3_series_free);
  char* text = nullptr;
  check(hk3_series_json(s, &text));
  json out;
  out["subject"] = subject;
  out["selector"] = selector;
  out["locus"] = subject == "theta" || subject == "igusa" ? "siegel" : locus;
  out["order"] = c.order;
  char* lead = nullptr;
  if (hk3_series_leading(s, &lead) == HK3_OK)
    out["leading"] = take(lead);
  else
    out["leading"] = nullptr;
  out["terms"] = json::parse(take(text));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_closure(bool elements) {
  hk3_group* g = nullptr;
  check(hk3_group_burkhardt(&g));
  std::unique_ptr<hk3_group, decltype(&hk3_group_free)> guard(g, hk3_group_free);
  size_t n = 0;
  check(hk3_group_order(g, &n));
  json out;
  out["order"] = n;
  if (elements) {
    char* s = nullptr;
    check(hk3_group_elements_json(g, &s));
    out["elements"] = json::parse(take(s));
  }
  std::cout << out.dump(elements ? -1 : 2) << "\n";
  return 0;
}

int cmd_molien(int degree) {
  hk3_group* g = nullptr;
  check(hk3_group_burkhardt(&g));
  std::unique_ptr<hk3_group, decltype(&hk3_group_free)> guard(g, hk3_group_free);
  char* s = nullptr;
  check(hk3_group_molien_json(g, degree, &s));
  std::cout << take(s) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian modular forms, Burkhardt invariants and the K3 moduli map"};
  app.require_subcommand(1);
  app.footer(
      "Complex numbers are written re, im i, or re+im i (for example 0.1+1.2i, 1.5i, -0.3).\n"
      "Points: theta/igusa/cd-map take tau,z,tau'; dk-theta/inverse-period take tau,z,w,tau';\n"
      "burkhardt takes T0..T4 and d90/critical-points take t4,t6,t10,t12,t18.");

  Common common;
  std::string subject, at, name = "psi4", suite = "all", locus = "z=w", selector;
  std::optional<int> index, weight;
  bool timings = false, elements = true;
  int degree = 20;

  auto* eval = app.add_subcommand("eval", "Evaluate a function at a point");
  eval->add_option("subject", subject, "theta, dk-theta, igusa, burkhardt, d90, inverse-period, cd-map, critical-points")
      ->required();
  eval->add_option("--at", at, "Comma-separated complex arguments")->required();
  eval->add_option("--index,--j,--k", index, "Characteristic index");
  eval->add_option("--weight", weight, "Burkhardt weight");
  eval->add_option("--name", name, "Igusa invariant: psi4, psi6, chi10, chi12")->capture_default_str();
  add_common(eval, common);

  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("suite", suite, "all, lattice, theta, qexp, invariants, group, fibration")->capture_default_str();
  verify->add_flag("--timings", timings, "Include runtime_ms in the report");
  add_common(verify, common);

  auto* qexp = app.add_subcommand("qexp", "Exact Fourier expansion");
  qexp->add_option("subject", subject, "theta, dk-theta, igusa, burkhardt")->required();
  qexp->add_option("--index,--j,--k", index, "Characteristic index");
  qexp->add_option("--weight", weight, "Burkhardt weight");
  qexp->add_option("--name", name, "Igusa invariant")->capture_default_str();
  qexp->add_option("--locus", locus, "z=w or z=-w")->capture_default_str();
  add_common(qexp, common);

  auto* closure = app.add_subcommand("closure", "Closure of the five-dimensional representation");
  closure->add_flag("!--no-elements", elements, "Print only the order");

  auto* molien = app.add_subcommand("molien", "Molien series of the representation");
  molien->add_option("--degree", degree, "Highest degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(subject, at, index, weight, name, common);
    if (*verify) return cmd_verify(suite, timings, common);
    if (*qexp) {
      if (subject == "theta" || subject == "dk-theta") {
        if (!index) throw Failure{2, subject + " needs --index"};
        selector = std::to_string(*index);
      } else if (subject == "burkhardt") {
        if (!weight) throw Failure{2, "burkhardt needs --weight"};
        selector = std::to_string(*weight);
      } else {
        selector = name;
      }
      return cmd_qexp(subject, selector, locus, common);
    }
    if (*closure) return cmd_closure(elements);
    if (*molien) return cmd_molien(degree);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.msg << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
