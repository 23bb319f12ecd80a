/*
   Copyright 2026 The ihcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// ihcalc: command-line front end over the C API.
//
//   ihcalc [--format text|structured] generic <file|->
//   ihcalc schubert <i> <j> <k> <l>
//   ihcalc hypersurface <d1> <d2> <d3> <d4>
//   ihcalc verify (--schubert [--max-l N] | --hypersurface [--max-d N])
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
// or input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ihcalc/ihcalc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ReportDeleter {
  void operator()(ihc_report* r) const { ihc_report_free(r); }
};
using ReportPtr = std::unique_ptr<ihc_report, ReportDeleter>;

bool is_math_failure(ihc_status status) {
  switch (status) {
    case IHC_ERR_INTEGRALITY_FAILURE:
    case IHC_ERR_HYPOTHESIS_VIOLATED:
    case IHC_ERR_ROUTE_DISAGREEMENT:
    case IHC_ERR_CLOSED_FORM_MISMATCH:
    case IHC_ERR_INTERNAL_MISMATCH:
    case IHC_ERR_ENGINE_MISMATCH:
    case IHC_ERR_NOT_DIVISIBLE:
      return true;
    default:
      return false;
  }
}

// Prints one report and maps it to an exit status.
int emit(ihc_status status, ihc_report* raw, bool structured) {
  ReportPtr report(raw);
  if (status != IHC_OK) {
    std::cerr << "ihcalc: " << ihc_last_error() << "\n";
    return is_math_failure(status) ? kExitCheckFailed : kExitUsage;
  }
  std::cout << (structured ? ihc_report_json(report.get()) : ihc_report_text(report.get()));
  if (structured) std::cout << "\n";
  return ihc_report_passed(report.get()) ? kExitOk : kExitCheckFailed;
}

bool read_document(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection cohomology Poincare polynomials for two-strata resolutions"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string generic_path;
  auto* generic = app.add_subcommand("generic", "Run the generic engine on a JSON document");
  generic->add_option("file", generic_path, "Input document, or - for stdin")->required();

  std::vector<int> schubert_args;
  auto* schubert = app.add_subcommand("schubert", "Single-condition Schubert variety (i j k l)");
  schubert->add_option("ijkl", schubert_args, "i j k l")->required()->expected(4);

  std::vector<std::string> degree_args;
  auto* hypersurface =
      app.add_subcommand("hypersurface", "Hypersurface t1 t3 = t2 t4 of P^5 (d1 d2 d3 d4)");
  hypersurface->add_option("degrees", degree_args, "d1 d2 d3 d4")->required()->expected(4);

  bool verify_schubert = false;
  bool verify_hypersurface = false;
  int max_l = 8;
  int max_d = 6;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_flag("--schubert", verify_schubert, "Schubert identity and route sweep");
  verify->add_flag("--hypersurface", verify_hypersurface, "Hypersurface closed-form sweep");
  verify->add_option("--max-l", max_l, "Largest l in the Schubert sweep")
      ->check(CLI::Range(2, 40))
      ->capture_default_str();
  verify->add_option("--max-d", max_d, "Largest degree in the hypersurface sweep")
      ->check(CLI::Range(1, 60))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const bool structured = format == "structured";

  if (generic->parsed()) {
    std::string document;
    if (!read_document(generic_path, document)) {
      std::cerr << "ihcalc: cannot read " << generic_path << "\n";
      return kExitUsage;
    }
    ihc_report* report = nullptr;
    const ihc_status status = ihc_run_generic(document.c_str(), &report);
    return emit(status, report, structured);
  }
  if (schubert->parsed()) {
    ihc_report* report = nullptr;
    const ihc_status status = ihc_run_schubert(schubert_args[0], schubert_args[1],
                                               schubert_args[2], schubert_args[3], &report);
    return emit(status, report, structured);
  }
  if (hypersurface->parsed()) {
    ihc_report* report = nullptr;
    const ihc_status status =
        ihc_run_hypersurface(degree_args[0].c_str(), degree_args[1].c_str(),
                             degree_args[2].c_str(), degree_args[3].c_str(), &report);
    return emit(status, report, structured);
  }

  if (!verify_schubert && !verify_hypersurface) {
    std::cerr << "ihcalc: verify needs --schubert or --hypersurface\n";
    return kExitUsage;
  }
  int exit_code = kExitOk;
  if (verify_schubert) {
    ihc_report* report = nullptr;
    const ihc_status status = ihc_run_verify_schubert(max_l, &report);
    exit_code = std::max(exit_code, emit(status, report, structured));
  }
  if (verify_hypersurface) {
    ihc_report* report = nullptr;
    const ihc_status status = ihc_run_verify_hypersurface(max_d, &report);
    exit_code = std::max(exit_code, emit(status, report, structured));
  }
  return exit_code;
}
