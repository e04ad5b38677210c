// fpinv: batch computation of Frobenius-theoretic invariants of ideals in
// F_p[x_1..x_n].  One job file per invocation; results on stdout, timing and
// diagnostics on stderr.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
//             4 resource cap exceeded (partial data reported where sound).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpinv/fpinv.hpp"

namespace {

int emit_error(const std::string& kind, int code, const std::string& message,
               const std::string& partial = {}) {
  fpinv::Json doc = fpinv::error_document(kind, message, partial);
  std::cout << fpinv::render_document(doc);
  std::cerr << "fpinv: error(" << kind << "): " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fpinv: exact Frobenius-theoretic invariants of ideals over F_p"};
  std::string jobfile;
  bool plain = false;
  std::optional<std::int64_t> e_max_override;
  std::optional<std::int64_t> depth_override;
  std::optional<double> cap_seconds;

  app.add_option("jobfile", jobfile, "job file with key = value lines")
      ->required();
  app.add_flag("--plain", plain, "human-readable tables instead of JSON");
  app.add_option("--e-max", e_max_override,
                 "override the command's level parameter");
  app.add_option("--depth", depth_override,
                 "override the stabilization agreement depth");
  app.add_option("--cap-seconds", cap_seconds,
                 "wall-clock cap for the computation");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(jobfile, std::ios::binary);
  if (!in)
    return emit_error("parse", 2, "cannot open job file '" + jobfile + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  fpinv::JobOptions options;
  options.plain = plain;
  options.e_max_override = e_max_override;
  options.depth_override = depth_override;
  options.cap_seconds = cap_seconds;

  try {
    fpinv::JobSpec spec = fpinv::parse_job(text);
    fpinv::detail::apply_overrides(spec, options);
    fpinv::validate_job(spec);

    std::optional<fpinv::Deadline> deadline;
    if (options.cap_seconds) deadline.emplace(*options.cap_seconds);

    auto t0 = std::chrono::steady_clock::now();
    fpinv::Json doc =
        fpinv::run_job(spec, deadline ? &*deadline : nullptr);
    auto t1 = std::chrono::steady_clock::now();

    std::cout << (options.plain ? fpinv::render_plain(doc)
                                : fpinv::render_document(doc));
    std::cerr << "fpinv: " << spec.command << " completed in "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                     .count()
              << " ms\n";
    return 0;
  } catch (const fpinv::ParseError& e) {
    return emit_error("parse", 2, e.what());
  } catch (const fpinv::ResourceCapError& e) {
    return emit_error("resource-cap", 4, e.what(), e.partial());
  } catch (const fpinv::PreconditionError& e) {
    return emit_error("precondition", 3, e.what());
  } catch (const fpinv::FpinvError& e) {
    return emit_error("precondition", 3, e.what());
  }
}
