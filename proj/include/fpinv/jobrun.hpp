#ifndef FPINV_JOBRUN_HPP
#define FPINV_JOBRUN_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpinv/bsroots.hpp"
#include "fpinv/common.hpp"
#include "fpinv/context.hpp"
#include "fpinv/frobroot.hpp"
#include "fpinv/ideal.hpp"
#include "fpinv/invariants.hpp"
#include "fpinv/padic.hpp"
#include "fpinv/parse.hpp"
#include "fpinv/rational.hpp"
#include "fpinv/version.hpp"

namespace fpinv {

using Json = nlohmann::ordered_json;

// A parsed job file.  Optional fields hold command parameters; validation
// fills in per-command defaults so the echoed document shows what actually
// ran.
struct JobSpec {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  std::string command;

  std::optional<std::int64_t> e, n, e_max, big_e, range, d_check, e0, lookahead;
  std::optional<Rational> lambda;
};

// Command-line switches applied on top of the job file.
struct JobOptions {
  bool plain = false;
  std::optional<std::int64_t> e_max_override;  // --e-max
  std::optional<std::int64_t> depth_override;  // --depth
  std::optional<double> cap_seconds;           // --cap-seconds
};

namespace detail {

[[noreturn]] inline void job_error(std::size_t line, std::size_t col,
                                   std::size_t offset, const std::string& msg) {
  throw ParseError("job file line " + std::to_string(line) + ", column " +
                       std::to_string(col) + ": " + msg,
                   offset);
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::int64_t parse_int_value(const std::string& v, std::size_t line,
                                    std::size_t col, std::size_t offset) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    job_error(line, col, offset, "expected an integer, got '" + v + "'");
  return out;
}

inline Rational parse_rational_value(const std::string& v, std::size_t line,
                                     std::size_t col, std::size_t offset) {
  std::size_t slash = v.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int_value(v, line, col, offset));
  std::int64_t num =
      parse_int_value(trim(v.substr(0, slash)), line, col, offset);
  std::int64_t den =
      parse_int_value(trim(v.substr(slash + 1)), line, col, offset);
  if (den == 0) job_error(line, col, offset, "zero denominator in fraction");
  return Rational(num, den);
}

inline std::vector<std::string> parse_name_list(const std::string& v,
                                                std::size_t line,
                                                std::size_t col,
                                                std::size_t offset) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = v.find(',', start);
    std::string piece = trim(v.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    if (piece.empty())
      job_error(line, col, offset, "empty name in comma-separated list");
    if (!is_valid_identifier(piece))
      job_error(line, col, offset, "invalid variable name '" + piece + "'");
    out.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<std::string> parse_quoted_list(const std::string& v,
                                                  std::size_t line,
                                                  std::size_t col,
                                                  std::size_t offset) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
  };
  for (;;) {
    skip_ws();
    if (i >= v.size() || v[i] != '"')
      job_error(line, col + i, offset + i, "expected a quoted generator");
    std::size_t close = v.find('"', i + 1);
    if (close == std::string::npos)
      job_error(line, col + i, offset + i, "unterminated quoted generator");
    out.push_back(v.substr(i + 1, close - i - 1));
    i = close + 1;
    skip_ws();
    if (i >= v.size()) break;
    if (v[i] != ',')
      job_error(line, col + i, offset + i,
                "expected ',' between quoted generators");
    ++i;
  }
  return out;
}

}  // namespace detail

// Parses the "key = value" job format.  Blank lines and lines whose first
// non-space character is '#' are skipped; every key may appear once.
inline JobSpec parse_job(const std::string& text) {
  JobSpec spec;
  std::vector<std::string> seen;

  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    std::size_t line_start = pos;
    ++line_no;
    pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;

    std::string stripped = detail::trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      detail::job_error(line_no, 1, line_start,
                        "expected 'key = value', got '" + stripped + "'");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    std::size_t vcol = eq + 2;
    std::size_t voff = line_start + eq + 1;
    if (key.empty())
      detail::job_error(line_no, 1, line_start, "missing key before '='");
    if (value.empty())
      detail::job_error(line_no, vcol, voff,
                        "missing value for key '" + key + "'");
    for (const std::string& s : seen)
      if (s == key)
        detail::job_error(line_no, 1, line_start,
                          "duplicate key '" + key + "'");
    seen.push_back(key);

    auto int_val = [&] {
      return detail::parse_int_value(value, line_no, vcol, voff);
    };

    if (key == "p") {
      std::int64_t v = int_val();
      if (v < 2 || v >= (1ll << 31))
        detail::job_error(line_no, vcol, voff,
                          "p outside the supported range [2, 2^31)");
      spec.p = static_cast<std::uint32_t>(v);
    } else if (key == "vars") {
      spec.vars = detail::parse_name_list(value, line_no, vcol, voff);
    } else if (key == "gens") {
      spec.gens = detail::parse_quoted_list(value, line_no, vcol, voff);
    } else if (key == "command") {
      spec.command = value;
    } else if (key == "e") {
      spec.e = int_val();
    } else if (key == "n") {
      spec.n = int_val();
    } else if (key == "e_max") {
      spec.e_max = int_val();
    } else if (key == "E") {
      spec.big_e = int_val();
    } else if (key == "range") {
      spec.range = int_val();
    } else if (key == "d_check") {
      spec.d_check = int_val();
    } else if (key == "e0") {
      spec.e0 = int_val();
    } else if (key == "lookahead") {
      spec.lookahead = int_val();
    } else if (key == "lambda") {
      spec.lambda =
          detail::parse_rational_value(value, line_no, vcol, voff);
    } else {
      detail::job_error(line_no, 1, line_start, "unknown key '" + key + "'");
    }
  }

  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw ParseError(std::string("job file: missing required key '") + what +
                           "'",
                       text.size());
  };
  require(spec.p != 0, "p");
  require(!spec.vars.empty(), "vars");
  require(!spec.gens.empty(), "gens");
  require(!spec.command.empty(), "command");

  static const char* kCommands[] = {"frob-root", "nu",         "test-ideal",
                                    "approx-poly", "fjn",      "stable-exp",
                                    "bs-roots",  "verify"};
  bool known = false;
  for (const char* c : kCommands) known = known || spec.command == c;
  if (!known)
    throw ParseError("job file: unknown command '" + spec.command + "'",
                     text.size());
  return spec;
}

namespace detail {

// Routes --e-max / --depth to the parameter slot the command actually uses.
inline void apply_overrides(JobSpec& spec, const JobOptions& opt) {
  if (opt.e_max_override) {
    const std::string& c = spec.command;
    if (c == "frob-root" || c == "nu" || c == "approx-poly")
      spec.e = *opt.e_max_override;
    else if (c == "bs-roots" || c == "verify")
      spec.e_max = *opt.e_max_override;
    else if (c == "fjn")
      spec.big_e = *opt.e_max_override;
    else
      throw PreconditionError("--e-max does not apply to command '" + c + "'");
  }
  if (opt.depth_override) {
    const std::string& c = spec.command;
    if (c == "test-ideal" || c == "stable-exp" || c == "fjn" || c == "verify")
      spec.d_check = *opt.depth_override;
    else
      throw PreconditionError("--depth does not apply to command '" + c + "'");
  }
}

struct ParamRule {
  const char* name;
  std::optional<std::int64_t> JobSpec::*slot;
  bool required;
  std::int64_t min_value;
  std::int64_t default_value;
};

inline void check_params(JobSpec& spec, const std::vector<ParamRule>& rules,
                         bool wants_lambda) {
  // Reject engaged parameters the command does not use.
  struct Named {
    const char* name;
    std::optional<std::int64_t> JobSpec::*slot;
  };
  static const Named kAll[] = {
      {"e", &JobSpec::e},           {"n", &JobSpec::n},
      {"e_max", &JobSpec::e_max},   {"E", &JobSpec::big_e},
      {"range", &JobSpec::range},   {"d_check", &JobSpec::d_check},
      {"e0", &JobSpec::e0},         {"lookahead", &JobSpec::lookahead},
  };
  for (const Named& nm : kAll) {
    bool allowed = false;
    for (const ParamRule& r : rules) allowed = allowed || (r.slot == nm.slot);
    if (!allowed && (spec.*(nm.slot)).has_value())
      throw PreconditionError(std::string("parameter '") + nm.name +
                              "' is not used by command '" + spec.command +
                              "'");
  }
  if (!wants_lambda && spec.lambda.has_value())
    throw PreconditionError("parameter 'lambda' is not used by command '" +
                            spec.command + "'");
  if (wants_lambda && !spec.lambda.has_value())
    throw PreconditionError("command '" + spec.command +
                            "' requires parameter 'lambda'");

  for (const ParamRule& r : rules) {
    std::optional<std::int64_t>& slot = spec.*(r.slot);
    if (!slot.has_value()) {
      if (r.required)
        throw PreconditionError(std::string("command '") + spec.command +
                                "' requires parameter '" + r.name + "'");
      slot = r.default_value;
    }
    if (*slot < r.min_value)
      throw PreconditionError(std::string("parameter '") + r.name +
                              "' must be at least " +
                              std::to_string(r.min_value));
    if (*slot > (1ll << 30))
      throw PreconditionError(std::string("parameter '") + r.name +
                              "' is too large");
  }
}

}  // namespace detail

// Per-command parameter validation and defaulting.  Throws PreconditionError
// before any computation starts.
inline void validate_job(JobSpec& spec) {
  using D = detail::ParamRule;
  const std::int64_t r = static_cast<std::int64_t>(spec.gens.size());
  const std::string& c = spec.command;

  if (c == "frob-root") {
    detail::check_params(
        spec, {D{"e", &JobSpec::e, false, 0, 1}, D{"n", &JobSpec::n, false, 1, 1}},
        false);
  } else if (c == "nu") {
    detail::check_params(spec, {D{"e", &JobSpec::e, true, 1, 0}}, false);
  } else if (c == "approx-poly") {
    detail::check_params(spec, {D{"e", &JobSpec::e, true, 1, 0}}, false);
  } else if (c == "test-ideal") {
    detail::check_params(spec,
                         {D{"e0", &JobSpec::e0, false, 0, 0},
                          D{"d_check", &JobSpec::d_check, false, 1, 2}},
                         true);
    if (spec.lambda->numerator() <= 0)
      throw PreconditionError("lambda must be positive");
    if (!is_power_of(spec.lambda->denominator(), spec.p))
      throw PreconditionError(
          "lambda denominator must be a power of p = " + std::to_string(spec.p) +
          "; got " + std::to_string(spec.lambda->denominator()) +
          " (use the fjn command to locate general jumping numbers)");
  } else if (c == "fjn") {
    detail::check_params(spec,
                         {D{"E", &JobSpec::big_e, false, 1, 3},
                          D{"range", &JobSpec::range, false, 1, r},
                          D{"e0", &JobSpec::e0, false, 0, 0},
                          D{"d_check", &JobSpec::d_check, false, 1, 2}},
                         false);
  } else if (c == "stable-exp") {
    detail::check_params(
        spec, {D{"d_check", &JobSpec::d_check, false, 1, 2}}, false);
  } else if (c == "bs-roots") {
    detail::check_params(spec,
                         {D{"e_max", &JobSpec::e_max, false, 2, 6},
                          D{"lookahead", &JobSpec::lookahead, false, 1, 1}},
                         false);
  } else if (c == "verify") {
    detail::check_params(spec,
                         {D{"e_max", &JobSpec::e_max, false, 2, 6},
                          D{"lookahead", &JobSpec::lookahead, false, 1, 1},
                          D{"E", &JobSpec::big_e, false, 1, 3},
                          D{"range", &JobSpec::range, false, 1, r},
                          D{"e0", &JobSpec::e0, false, 0, 0},
                          D{"d_check", &JobSpec::d_check, false, 1, 2}},
                         false);
  }
}

namespace detail {

inline Ideal build_ideal(const JobSpec& spec) {
  ContextPtr ctx = make_context(spec.vars, spec.p);
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < spec.gens.size(); ++i) {
    try {
      polys.push_back(parse_poly(ctx, spec.gens[i]));
    } catch (const ParseError& pe) {
      throw ParseError("generator " + std::to_string(i + 1) + ": " + pe.what(),
                       pe.offset());
    }
  }
  return Ideal(ctx, std::move(polys));
}

inline Json json_basis(const Ideal& I) {
  Json arr = Json::array();
  for (const Polynomial& g : I.reduced_basis()) arr.push_back(g.str());
  return arr;
}

inline Json json_params(const JobSpec& spec) {
  Json out = Json::object();
  const std::string& c = spec.command;
  if (c == "frob-root") {
    out["e"] = *spec.e;
    out["n"] = *spec.n;
  } else if (c == "nu" || c == "approx-poly") {
    out["e"] = *spec.e;
  } else if (c == "test-ideal") {
    out["lambda"] = spec.lambda->str();
    out["e0"] = *spec.e0;
    out["d_check"] = *spec.d_check;
  } else if (c == "fjn") {
    out["E"] = *spec.big_e;
    out["range"] = *spec.range;
    out["e0"] = *spec.e0;
    out["d_check"] = *spec.d_check;
  } else if (c == "stable-exp") {
    out["d_check"] = *spec.d_check;
  } else if (c == "bs-roots") {
    out["e_max"] = *spec.e_max;
    out["lookahead"] = *spec.lookahead;
  } else if (c == "verify") {
    out["e_max"] = *spec.e_max;
    out["lookahead"] = *spec.lookahead;
    out["E"] = *spec.big_e;
    out["range"] = *spec.range;
    out["e0"] = *spec.e0;
    out["d_check"] = *spec.d_check;
  }
  return out;
}

inline std::uint32_t as_u32(std::int64_t v) {
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

// Runs a validated job and assembles the result document.  The document is a
// pure function of the job and tool version: no timestamps or timings.
inline Json run_job(const JobSpec& spec, const Deadline* dl = nullptr) {
  Json doc = Json::object();
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  Json job = Json::object();
  job["p"] = spec.p;
  job["vars"] = spec.vars;
  job["gens"] = spec.gens;
  job["command"] = spec.command;
  job["params"] = detail::json_params(spec);
  doc["job"] = job;

  Ideal a = detail::build_ideal(spec);
  Json result = Json::object();
  Json warnings = Json::array();
  const std::string& c = spec.command;

  if (c == "frob-root") {
    Ideal base = a;
    if (*spec.n > 1) {
      IdealPowerCache cache;
      base = ideal_power(a, static_cast<std::uint64_t>(*spec.n), cache);
    }
    result["basis"] = detail::json_basis(
        frobenius_root(base, detail::as_u32(*spec.e), dl));
  } else if (c == "nu") {
    NuSet nu = nu_invariants(a, detail::as_u32(*spec.e), dl);
    result["r"] = nu.r;
    result["window"] = nu.window_top();
    result["members"] = nu.members;
  } else if (c == "test-ideal") {
    Ideal tau = test_ideal(a, *spec.lambda, detail::as_u32(*spec.e0),
                           detail::as_u32(*spec.d_check), dl);
    result["basis"] = detail::json_basis(tau);
    if (*spec.e0 == 0)
      warnings.push_back(
          "stable exponent chosen heuristically (agreement depth " +
          std::to_string(*spec.d_check) + "); deeper levels unchecked");
  } else if (c == "approx-poly") {
    ApproxPolyRoots ap = approx_poly_roots(a, detail::as_u32(*spec.e), dl);
    Json roots = Json::array();
    for (const Rational& root : ap.roots) roots.push_back(root.str());
    result["roots"] = roots;
  } else if (c == "fjn") {
    std::vector<FJEntry> entries = f_jumping_numbers(
        a, detail::as_u32(*spec.range), detail::as_u32(*spec.big_e),
        detail::as_u32(*spec.e0), detail::as_u32(*spec.d_check), dl);
    Json arr = Json::array();
    std::size_t open = 0;
    for (const FJEntry& fe : entries) {
      Json one = Json::object();
      one["lo"] = fe.lo.str();
      one["hi"] = fe.hi.str();
      one["candidate"] = fe.candidate.str();
      one["exact"] = fe.exact;
      if (!fe.exact) ++open;
      arr.push_back(one);
    }
    result["entries"] = arr;
    if (open > 0)
      warnings.push_back(std::to_string(open) +
                         " interval(s) carry a smallest-denominator candidate, "
                         "not a certified value");
  } else if (c == "stable-exp") {
    StableExponentReport rep =
        stable_exponent(a, detail::as_u32(*spec.d_check), 8, dl);
    result["e0"] = rep.e0;
    result["checked_depth"] = rep.checked_depth;
    warnings.push_back("stable exponent certified to agreement depth " +
                       std::to_string(rep.checked_depth) +
                       " only; deeper levels unchecked");
  } else if (c == "bs-roots") {
    BSRootReport rep = bernstein_sato_roots(a, detail::as_u32(*spec.e_max),
                                            detail::as_u32(*spec.lookahead),
                                            dl);
    Json roots = Json::array();
    for (const BSRoot& root : rep.roots) {
      Json one = Json::object();
      one["value"] = root.value.str();
      one["digits"] = root.digits.str();
      roots.push_back(one);
    }
    result["roots"] = roots;
    Json unresolved = Json::array();
    for (const DigitVector& w : rep.unresolved) unresolved.push_back(w.digits);
    result["unresolved"] = unresolved;
    if (!rep.unresolved.empty())
      warnings.push_back(std::to_string(rep.unresolved.size()) +
                         " digit word(s) unresolved at horizon e_max=" +
                         std::to_string(rep.e_max));
  } else if (c == "verify") {
    BSRootReport bs = bernstein_sato_roots(a, detail::as_u32(*spec.e_max),
                                           detail::as_u32(*spec.lookahead),
                                           dl);
    std::vector<FJEntry> entries = f_jumping_numbers(
        a, detail::as_u32(*spec.range), detail::as_u32(*spec.big_e),
        detail::as_u32(*spec.e0), detail::as_u32(*spec.d_check), dl);
    bool ok = verify_bs_vs_fjn(a, bs, entries);
    result["match"] = ok;
    Json broots = Json::array();
    for (const BSRoot& root : bs.roots) broots.push_back(root.value.str());
    result["bs_roots"] = broots;
    Json fvals = Json::array();
    for (const FJEntry& fe : entries) fvals.push_back(fe.candidate.str());
    result["fjn_values"] = fvals;
  }

  doc["result"] = result;
  doc["warnings"] = warnings;
  return doc;
}

inline std::string render_document(const Json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline std::string plain_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

inline bool all_scalars(const Json& arr) {
  for (const Json& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

inline void plain_emit(std::string& out, const std::string& key, const Json& v,
                       int indent);

inline void plain_emit_object(std::string& out, const Json& obj, int indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    plain_emit(out, it.key(), it.value(), indent);
}

inline void plain_emit(std::string& out, const std::string& key, const Json& v,
                       int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out += pad + key + ":\n";
    plain_emit_object(out, v, indent + 2);
  } else if (v.is_array()) {
    if (v.empty()) {
      out += pad + key + ": (none)\n";
    } else if (all_scalars(v)) {
      out += pad + key + ": ";
      for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + plain_scalar(v[i]);
      out += "\n";
    } else {
      out += pad + key + ":\n";
      for (const Json& item : v) {
        std::string ipad(static_cast<std::size_t>(indent) + 2, ' ');
        if (item.is_object()) {
          bool first = true;
          for (auto it = item.begin(); it != item.end(); ++it) {
            if (first) {
              out += ipad + "- ";
              first = false;
              if (it.value().is_object() || it.value().is_array()) {
                out += "\n";
                plain_emit(out, it.key(), it.value(), indent + 4);
              } else {
                out += it.key() + ": " + plain_scalar(it.value()) + "\n";
              }
            } else {
              plain_emit(out, it.key(), it.value(), indent + 4);
            }
          }
        } else {
          out += ipad + "- " + plain_scalar(item) + "\n";
        }
      }
    }
  } else {
    out += pad + key + ": " + plain_scalar(v) + "\n";
  }
}

}  // namespace detail

// Human-readable rendering of the same document (still deterministic).
inline std::string render_plain(const Json& doc) {
  std::string out;
  out += doc["tool"].get<std::string>() + " " +
         doc["version"].get<std::string>() + "\n";
  const Json& job = doc["job"];
  out += "command: " + job["command"].get<std::string>() + "\n";
  out += "p: " + detail::plain_scalar(job["p"]) + "\n";
  std::string vars;
  for (std::size_t i = 0; i < job["vars"].size(); ++i)
    vars += (i ? ", " : "") + job["vars"][i].get<std::string>();
  out += "vars: " + vars + "\n";
  std::string gens;
  for (std::size_t i = 0; i < job["gens"].size(); ++i)
    gens += (i ? ", " : "") + ("\"" + job["gens"][i].get<std::string>() + "\"");
  out += "gens: " + gens + "\n";
  detail::plain_emit(out, "params", job["params"], 0);
  detail::plain_emit(out, "result", doc["result"], 0);
  detail::plain_emit(out, "warnings", doc["warnings"], 0);
  return out;
}

// Error documents share the envelope so scripts can always parse stdout.
inline Json error_document(const std::string& kind, const std::string& message,
                           const std::string& partial = {}) {
  Json doc = Json::object();
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  Json err = Json::object();
  err["kind"] = kind;
  err["message"] = message;
  if (!partial.empty()) err["partial"] = partial;
  doc["error"] = err;
  return doc;
}

}  // namespace fpinv

#endif  // FPINV_JOBRUN_HPP
