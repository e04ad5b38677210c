// Acceptance gate for the fpinv library and CLI.
//
// Usage: fpinv_acceptance <path-to-fpinv-binary> <path-to-jobs-dir>
//
// Prints exactly one PASS/FAIL line per criterion (all exact arithmetic,
// tolerance zero) and exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fpinv/fpinv.hpp"
#include "oracle_helpers.hpp"
#include "property_suites.hpp"

namespace {

using fpinv::BSRootReport;
using fpinv::FJEntry;
using fpinv::Ideal;
using fpinv::MonomialIdeal;
using fpinv::NuSet;
using fpinv::PrimeModulus;
using fpinv::Rational;
using fpinv_test::ctx_for;
using fpinv_test::make_ideal;

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

struct Outcome {
  bool ok = false;
  std::string detail;  // shown after the criterion label
};

std::string join_rationals(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "}";
}

std::vector<Rational> root_values(const BSRootReport& bs) {
  std::vector<Rational> out;
  for (const auto& r : bs.roots) out.push_back(r.value);
  return out;
}

bool roots_are(const BSRootReport& bs, const std::vector<Rational>& want) {
  return bs.unresolved.empty() && root_values(bs) == want;
}

// ---- criterion 1: cusp at p = 7 ------------------------------------------

Outcome criterion1() {
  Ideal a = make_ideal(ctx_for(2, 7), {"x^2 + y^3"});
  NuSet nu = fpinv::nu_invariants(a, 2);
  bool has40 = nu.contains_window(40);
  BSRootReport bs = fpinv::bernstein_sato_roots(a, 4);
  bool roots_ok = roots_are(bs, {Rational(-5, 6), Rational(-1)});
  Outcome out;
  out.ok = has40 && roots_ok;
  std::ostringstream os;
  os << "cusp p=7: nu(e=2) contains 40: " << (has40 ? "yes" : "NO")
     << "; BS roots(e_max=4) = " << join_rationals(root_values(bs))
     << " (want {-5/6, -1}, unresolved " << bs.unresolved.size() << ")";
  out.detail = os.str();
  return out;
}

// ---- criterion 2: cusp at p = 5 ------------------------------------------

Outcome criterion2() {
  Ideal a = make_ideal(ctx_for(2, 5), {"x^2 + y^3"});
  Ideal m = make_ideal(ctx_for(2, 5), {"x", "y"});
  Rational est = fpinv::f_threshold_estimate(a, m, 2);
  bool est_ok = est == Rational(19, 25);
  BSRootReport bs = fpinv::bernstein_sato_roots(a, 4);
  bool roots_ok = roots_are(bs, {Rational(-1)});
  Outcome out;
  out.ok = est_ok && roots_ok;
  std::ostringstream os;
  os << "cusp p=5: nu/p^e at e=2 = " << est.str()
     << " (want 19/25); BS roots(e_max=4) = "
     << join_rationals(root_values(bs)) << " (want {-1}, unresolved "
     << bs.unresolved.size() << ")";
  out.detail = os.str();
  return out;
}

// ---- criterion 3: monomial ideal (x^2, y^3), both pipelines ---------------

std::vector<std::int64_t> mono23_formula(std::uint32_t p, std::uint32_t e) {
  std::int64_t pe = 1;
  for (std::uint32_t k = 0; k < e; ++k) pe *= static_cast<std::int64_t>(p);
  std::vector<std::int64_t> expected;
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b) {
      std::int64_t v = (a * pe - 1) / 2 + (b * pe - 1) / 3;
      if (v < 2 * pe) expected.push_back(v);
    }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()),
                 expected.end());
  return expected;
}

Outcome criterion3() {
  int mismatches = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t e = 1; e <= 3; ++e) {
      std::vector<std::int64_t> want = mono23_formula(p, e);
      Ideal a = make_ideal(ctx_for(2, p), {"x^2", "y^3"});
      if (fpinv::nu_invariants(a, e).members != want) ++mismatches;
      MonomialIdeal m({{2, 0}, {0, 3}}, 2, PrimeModulus(p));
      if (fpinv::monomial_nu_invariants(m, e).members != want) ++mismatches;
    }
  }
  BSRootReport bs3 =
      fpinv::bernstein_sato_roots(make_ideal(ctx_for(2, 3), {"x^2", "y^3"}), 4);
  bool ok3 = roots_are(bs3, {Rational(-3, 2), Rational(-2)});
  BSRootReport bs2 =
      fpinv::bernstein_sato_roots(make_ideal(ctx_for(2, 2), {"x^2", "y^3"}), 6);
  bool ok2 =
      roots_are(bs2, {Rational(-4, 3), Rational(-5, 3), Rational(-2)});
  Outcome out;
  out.ok = mismatches == 0 && ok3 && ok2;
  std::ostringstream os;
  os << "(x^2, y^3): closed-formula nu mismatches over p in {2,3,5}, e <= 3, "
        "both pipelines: "
     << mismatches << "; BS p=3 = " << join_rationals(root_values(bs3))
     << " (want {-3/2, -2}); BS p=2 = " << join_rationals(root_values(bs2))
     << " (want {-4/3, -5/3, -2})";
  out.detail = os.str();
  return out;
}

// ---- criterion 4: approximating-polynomial roots vs jumping numbers -------

Outcome criterion4() {
  struct Case {
    std::vector<std::string> gens;
  };
  std::vector<Case> cases = {{{"x"}}, {{"x*y"}}, {{"x^2 + y^3"}}};
  int checked = 0, mismatches = 0;
  for (const Case& c : cases) {
    Ideal a = make_ideal(ctx_for(2, 7), c.gens);
    std::vector<FJEntry> fjn = fpinv::f_jumping_numbers(a, 1, 3);
    std::vector<Rational> lambdas;
    for (const FJEntry& entry : fjn) lambdas.push_back(entry.candidate);
    for (std::uint32_t e = 1; e <= 2; ++e) {
      std::int64_t pe = e == 1 ? 7 : 49;
      std::vector<Rational> want;
      for (const Rational& lam : lambdas) {
        std::int64_t num = (lam * Rational(pe)).ceil() - 1;
        want.push_back(Rational(num, pe));
      }
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      ++checked;
      if (fpinv::approx_poly_roots(a, e).roots != want) ++mismatches;
    }
  }
  Outcome out;
  out.ok = mismatches == 0 && checked == 6;
  std::ostringstream os;
  os << "p=7, a in {(x), (x*y), (x^2 + y^3)}: approx-poly roots vs "
        "(ceil(p^e*lambda) - 1)/p^e over jumping numbers in (0, 1], e <= 2: "
     << (checked - mismatches) << "/" << checked << " matched";
  out.detail = os.str();
  return out;
}

// ---- criterion 5: randomized property suites ------------------------------

Outcome criterion5() {
  std::vector<fpinv_test::SuiteResult> suites =
      fpinv_test::run_all_property_suites();
  Outcome out;
  out.ok = true;
  std::ostringstream os;
  int total_cases = 0, total_failures = 0;
  for (const auto& s : suites) {
    total_cases += s.cases;
    total_failures += s.failures;
    if (s.cases < 200 || s.failures > 0) out.ok = false;
  }
  os << suites.size() << " suites, " << total_cases << " checks, "
     << total_failures << " failures";
  for (const auto& s : suites) {
    if (s.failures == 0 && s.cases >= 200) continue;
    os << "; " << s.name << ": " << s.failures << " failures in " << s.cases
       << " checks";
    for (const std::string& d : s.details) os << " [" << d << "]";
  }
  out.detail = os.str();
  return out;
}

// ---- criterion 6: Bernstein-Sato vs F-jumping correspondence --------------

Outcome criterion6() {
  struct Case {
    const char* label;
    std::uint32_t p;
    std::vector<std::string> gens;
    std::uint32_t e_max;
    std::uint32_t range_top;
    std::uint32_t big_e;
  };
  std::vector<Case> cases = {
      {"cusp p=7", 7, {"x^2 + y^3"}, 4, 1, 3},
      {"cusp p=5", 5, {"x^2 + y^3"}, 4, 1, 3},
      {"(x^2, y^3) p=3", 3, {"x^2", "y^3"}, 4, 2, 2},
      {"(x^2, y^3) p=2", 2, {"x^2", "y^3"}, 6, 2, 3},
  };
  Outcome out;
  out.ok = true;
  std::ostringstream os;
  os << "verify_bs_vs_fjn:";
  for (const Case& c : cases) {
    Ideal a = make_ideal(ctx_for(2, c.p), c.gens);
    BSRootReport bs = fpinv::bernstein_sato_roots(a, c.e_max);
    std::vector<FJEntry> fjn =
        fpinv::f_jumping_numbers(a, c.range_top, c.big_e);
    bool match = fpinv::verify_bs_vs_fjn(a, bs, fjn);
    if (!match) out.ok = false;
    os << " " << c.label << "=" << (match ? "true" : "FALSE");
  }
  out.detail = os.str();
  return out;
}

// ---- criterion 7: byte-identical CLI output across runs --------------------

struct RunResult {
  std::string out;
  int status = -1;
};

RunResult run_capture(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  if (raw >= 0 && WIFEXITED(raw)) r.status = WEXITSTATUS(raw);
  return r;
}

Outcome criterion7(const std::string& fpinv_bin, const std::string& jobs_dir) {
  std::ifstream manifest(jobs_dir + "/MANIFEST");
  Outcome out;
  if (!manifest) {
    out.detail = "cannot open " + jobs_dir + "/MANIFEST";
    return out;
  }
  int cases = 0, mismatches = 0;
  std::string line;
  std::ostringstream bad;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, expected_exit, flag, flags;
    ls >> name >> expected_exit;
    while (ls >> flag) flags += " " + flag;
    std::string cmd = "\"" + fpinv_bin + "\" \"" + jobs_dir + "/" + name +
                      ".job\"" + flags + " 2>/dev/null";
    RunResult first = run_capture(cmd);
    RunResult second = run_capture(cmd);
    ++cases;
    if (first.out != second.out || first.status != second.status) {
      ++mismatches;
      bad << " " << name;
    }
  }
  out.ok = cases > 0 && mismatches == 0;
  std::ostringstream os;
  os << cases << " golden jobs run twice, " << mismatches
     << " with differing output" << bad.str();
  out.detail = os.str();
  return out;
}

// ---- driver ----------------------------------------------------------------

bool report(int index, const std::string& title, const Outcome& res,
            double secs, double cap_seconds) {
  bool ok = res.ok && (cap_seconds <= 0 || secs < cap_seconds);
  std::ostringstream os;
  os << (ok ? "PASS" : "FAIL") << ": criterion " << index << " — " << title
     << " — " << res.detail;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " [" << secs << " s";
  if (cap_seconds > 0) os << ", cap " << cap_seconds << " s";
  os << "]";
  std::cout << os.str() << std::endl;
  return ok;
}

using CriterionFn = Outcome (*)();

bool run_criterion(int index, const std::string& title, CriterionFn fn,
                   double cap_seconds) {
  Timer t;
  Outcome res;
  try {
    res = fn();
  } catch (const std::exception& e) {
    res.ok = false;
    res.detail = std::string("unexpected exception: ") + e.what();
  }
  return report(index, title, res, t.seconds(), cap_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: fpinv_acceptance <fpinv-binary> <jobs-dir>\n";
    return 2;
  }
  const std::string fpinv_bin = argv[1];
  const std::string jobs_dir = argv[2];

  bool all_ok = true;
  all_ok &= run_criterion(1, "cusp p=7 invariants", &criterion1, 60.0);
  all_ok &= run_criterion(2, "cusp p=5 invariants", &criterion2, 60.0);
  all_ok &= run_criterion(3, "monomial ideal, two pipelines", &criterion3,
                          120.0);
  all_ok &= run_criterion(4, "approx-poly roots vs jumping numbers",
                          &criterion4, 0.0);
  all_ok &= run_criterion(5, "randomized property suites", &criterion5, 0.0);
  all_ok &= run_criterion(6, "Bernstein-Sato vs F-jumping cross-check",
                          &criterion6, 0.0);

  {
    Timer t;
    Outcome res;
    try {
      res = criterion7(fpinv_bin, jobs_dir);
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = std::string("unexpected exception: ") + e.what();
    }
    all_ok &= report(7, "deterministic golden output", res, t.seconds(), 0.0);
  }

  return all_ok ? 0 : 1;
}
