// Copyright 2026 The besselpade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: exact JSON reports, CSV sweeps and the comparison
// table. Exit status 0 on success, 2 on usage errors, 1 on computational
// errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "besselpade/report.hpp"

namespace {

using namespace besselpade;

constexpr int kUsageError = 2;
constexpr int kComputationError = 1;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int precision_from_env() {
  const char* raw = std::getenv("BESSELPADE_PRECISION");
  if (raw == nullptr || *raw == '\0') return 12;
  try {
    std::size_t used = 0;
    const int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value < 1 || value > 1000) throw std::out_of_range(raw);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("BESSELPADE_PRECISION must be an integer in 1..1000, got '") + raw + "'");
  }
}

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

TransferFunction load_transfer_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  return transfer_function_from_json(j);
}

unsigned parse_unsigned(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') throw UsageError(where + ": expected a count");
  return static_cast<unsigned>(value);
}

// pade:N,M | budak:M,N,GAMMA | file:PATH
Provenance parse_source(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--source must be pade:N,M, budak:M,N,GAMMA or file:PATH");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "file") return external_provenance(load_transfer_function(rest));
  std::vector<std::string> parts;
  std::stringstream ss(rest);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (kind == "pade" && parts.size() == 2) {
    return pade_provenance(parse_unsigned(parts[0], spec), parse_unsigned(parts[1], spec));
  }
  if (kind == "budak" && parts.size() == 3) {
    const unsigned m = parse_unsigned(parts[0], spec);
    const unsigned n = parse_unsigned(parts[1], spec);
    const Rational gamma = rational_arg(parts[2], "source");
    validate({m, n, gamma});
    return budak_provenance(m, n, gamma);
  }
  throw UsageError("unrecognized --source '" + spec + "'");
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + temp.string() + "'");
    out << content;
    out.close();
    if (!out) throw std::runtime_error("failed writing '" + temp.string() + "'");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw std::runtime_error("cannot move output into place: " + ec.message());
  }
}

void print_report(const DesignReport& r, bool json) {
  if (json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << to_text(r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Bessel polynomials, Pade and Budak delay approximants"};
  app.require_subcommand(1);
  bool json = false;

  auto* gbp_cmd = app.add_subcommand("gbp", "print B_n(s, alpha, beta)");
  unsigned gbp_n = 0;
  std::string gbp_alpha = "2", gbp_beta = "2";
  gbp_cmd->add_option("--n", gbp_n, "degree")->required();
  gbp_cmd->add_option("--alpha", gbp_alpha, "alpha (p/q)")->capture_default_str();
  gbp_cmd->add_option("--beta", gbp_beta, "beta (p/q, nonzero)")->capture_default_str();
  gbp_cmd->add_flag("--json", json, "JSON output");

  auto* pade_cmd = app.add_subcommand("pade", "(n,m) Pade approximant of exp(-s)");
  unsigned pade_n = 0, pade_m = 0;
  bool analyze = false;
  pade_cmd->add_option("--n", pade_n, "denominator degree")->required();
  pade_cmd->add_option("--m", pade_m, "numerator degree")->required();
  pade_cmd->add_flag("--analyze", analyze, "full design report");
  pade_cmd->add_flag("--json", json, "JSON output");

  auto* budak_cmd = app.add_subcommand("budak", "Budak approximant G_mn^gamma");
  unsigned budak_m = 0, budak_n = 1;
  std::string budak_gamma;
  bool order2 = false;
  budak_cmd->add_option("--m", budak_m, "numerator degree")->required();
  budak_cmd->add_option("--n", budak_n, "denominator degree")->required();
  auto* gamma_opt = budak_cmd->add_option("--gamma", budak_gamma, "gamma > 0 (p/q)");
  auto* order2_opt = budak_cmd->add_flag("--order2-gamma", order2, "solve for the order-2 magnitude gammas");
  gamma_opt->excludes(order2_opt);
  budak_cmd->add_flag("--json", json, "JSON output");

  auto* analyze_cmd = app.add_subcommand("analyze", "design report for a transfer-function file");
  std::string analyze_file;
  analyze_cmd->add_option("--file", analyze_file, "JSON {\"num\": [...], \"den\": [...]}, ascending")->required();
  analyze_cmd->add_flag("--json", json, "JSON output");

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV frequency sweep");
  std::string source, output;
  double omega_max = 0;
  std::size_t points = 0;
  sweep_cmd->add_option("--source", source, "pade:N,M | budak:M,N,GAMMA | file:PATH")->required();
  sweep_cmd->add_option("--omega-max", omega_max, "upper frequency (> 0)")->required();
  sweep_cmd->add_option("--points", points, "number of samples (>= 2)")->required();
  sweep_cmd->add_option("--output", output, "CSV path (stdout when omitted)");
  sweep_cmd->add_flag("--json", json, "accepted for uniformity; output is CSV");

  auto* compare_cmd = app.add_subcommand("compare", "Pade vs Budak vs all-pole table");
  unsigned compare_n = 0, compare_m = 0;
  compare_cmd->add_option("--n", compare_n, "denominator degree")->required();
  compare_cmd->add_option("--m", compare_m, "numerator degree, 1 <= m < n")->required();
  compare_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const int precision = precision_from_env();
    if (gbp_cmd->parsed()) {
      const GbpParams params{gbp_n, rational_arg(gbp_alpha, "alpha"), rational_arg(gbp_beta, "beta")};
      if (params.beta == 0) throw UsageError("--beta must be nonzero");
      const Polynomial p = gbp(params);
      if (json) {
        Json out;
        out["n"] = gbp_n;
        out["alpha"] = to_string(params.alpha);
        out["beta"] = to_string(params.beta);
        Json descending = Json::array();
        for (std::size_t k = p.coefficients().size(); k-- > 0;) descending.push_back(to_string(p.coefficient(k)));
        out["coefficients_descending"] = descending;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << to_string(p) << "\n";
      }
    } else if (pade_cmd->parsed()) {
      const Provenance prov = pade_provenance(pade_n, pade_m);
      if (analyze) {
        print_report(design_report(prov), json);
      } else if (json) {
        Json out;
        out["provenance"] = to_json(prov);
        out["transfer_function"] = to_json(reconstruct(prov));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << to_string(reconstruct(prov)) << "\n";
      }
    } else if (budak_cmd->parsed()) {
      if (order2) {
        if (budak_m < 1 || budak_m >= budak_n) throw UsageError("--order2-gamma requires 1 <= m < n");
        const Order2Report r = order2_report(budak_m, budak_n);
        if (json) {
          std::cout << to_json(r, precision).dump(2) << "\n";
        } else {
          std::cout << to_text(r, precision);
        }
      } else {
        if (budak_gamma.empty()) throw UsageError("budak needs --gamma or --order2-gamma");
        const Rational gamma = rational_arg(budak_gamma, "gamma");
        if (gamma <= 0) throw UsageError("--gamma must be positive");
        validate({budak_m, budak_n, gamma});
        print_report(design_report(budak_provenance(budak_m, budak_n, gamma)), json);
      }
    } else if (analyze_cmd->parsed()) {
      const TransferFunction tf = load_transfer_function(analyze_file);
      print_report(design_report(tf, external_provenance(tf)), json);
    } else if (sweep_cmd->parsed()) {
      if (!(omega_max > 0)) throw UsageError("--omega-max must be > 0");
      if (points < 2) throw UsageError("--points must be at least 2");
      const std::string csv = sweep_csv(reconstruct(parse_source(source)), omega_max, points);
      if (output.empty()) {
        std::cout << csv;
      } else {
        write_atomically(output, csv);
      }
    } else if (compare_cmd->parsed()) {
      if (compare_m < 1 || compare_m >= compare_n) throw UsageError("compare requires 1 <= m < n");
      const auto rows = compare(compare_n, compare_m);
      if (json) {
        Json out;
        out["n"] = compare_n;
        out["m"] = compare_m;
        out["rows"] = to_json(rows, precision);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << to_text(rows, precision);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  }
  return 0;
}
