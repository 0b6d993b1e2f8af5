// Copyright 2026 The qtel authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Reports go to stdout, diagnostics to stderr, and
// the exit status is 0 iff every verification the command ran passed.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtel/report.hpp"

namespace {

using qtel::report::ordered_json;
using qtel::report::ReportFormat;

int emit(const ordered_json& report, const std::string& format) {
  std::cout << qtel::report::render(report, qtel::report::parse_format(format));
  return report["ok"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Controlled teleportation over three-qubit channels: correction "
      "tables, fidelity analyses and the generalized n-qubit scheme, all "
      "machine-verified."};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format: text, csv or json")
      ->capture_default_str();
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text, csv or json")
        ->capture_default_str();
  };

  // table1
  qtel::report::Table1Options t1;
  CLI::App* table1 = app.add_subcommand(
      "table1", "Derive and verify the outcome -> Pauli correction table");
  table1->add_option("--channel", t1.channel,
                     "Channel: yang, zhang, u,v,w bits, bell-pair spec "
                     "(e.g. psi+:0,phi+:1), or biseparable")
      ->capture_default_str();
  table1->add_option("--seed", t1.seed, "Verification sweep seed")->capture_default_str();
  table1->add_option("--sweep", t1.sweep, "Verification sweep size")->capture_default_str();
  table1->add_option("--tolerance", t1.tolerance, "Verification tolerance")
      ->capture_default_str();
  add_format(table1);

  // table2
  qtel::report::Table2Options t2;
  CLI::App* table2 = app.add_subcommand(
      "table2", "Fidelity analysis when Charlie withholds the measurement");
  table2->add_option("--alpha", t2.alpha, "Amplitude of |0> (e.g. 0.6 or 0.6+0.2i)")
      ->capture_default_str();
  table2->add_option("--beta", t2.beta, "Amplitude of |1>")->capture_default_str();
  table2->add_option("--tolerance", t2.tolerance, "Check tolerance")->capture_default_str();
  add_format(table2);

  // teleport
  qtel::report::TeleportOptions tp;
  CLI::App* teleport = app.add_subcommand(
      "teleport", "Run one sampled protocol instance plus an exhaustive branch sweep");
  teleport->add_option("--alpha", tp.alpha, "Amplitude of |0>")->capture_default_str();
  teleport->add_option("--beta", tp.beta, "Amplitude of |1>")->capture_default_str();
  teleport->add_option("--channel", tp.channel, "Channel (see table1)")
      ->capture_default_str();
  teleport->add_option("--seed", tp.seed, "Sampling and verification seed")
      ->capture_default_str();
  teleport->add_option("--sweep", tp.sweep, "Table verification sweep size")
      ->capture_default_str();
  teleport->add_option("--tolerance", tp.tolerance, "Verification tolerance")
      ->capture_default_str();
  add_format(teleport);

  // family
  qtel::report::FamilyOptions fam;
  CLI::App* family = app.add_subcommand(
      "family", "Enumerate the 12-channel family and verify every member");
  family->add_option("--seed", fam.seed, "Verification sweep seed")->capture_default_str();
  family->add_option("--sweep", fam.sweep, "Verification sweep size")
      ->capture_default_str();
  family->add_option("--tolerance", fam.tolerance, "Verification tolerance")
      ->capture_default_str();
  add_format(family);

  // generalized
  qtel::report::GeneralizedOptions gen;
  std::uint64_t gen_x = 0;
  std::string gen_sign = "+";
  CLI::App* generalized = app.add_subcommand(
      "generalized",
      "Teleport alpha|x> + sign*beta|x_bar> on n qubits; sweeps all x and "
      "signs when --x is omitted");
  generalized->add_option("--n", gen.n, "Register size (1..12)")->capture_default_str();
  CLI::Option* xopt =
      generalized->add_option("--x", gen_x, "Basis label carrying alpha");
  generalized->add_option("--sign", gen_sign, "Relative sign: + or -")
      ->capture_default_str();
  generalized->add_option("--alpha", gen.alpha, "Amplitude of |x>")->capture_default_str();
  generalized->add_option("--beta", gen.beta, "Amplitude of |x_bar>")
      ->capture_default_str();
  generalized->add_option("--channel", gen.channel, "Channel (see table1)")
      ->capture_default_str();
  generalized->add_option("--seed", gen.seed, "Verification sweep seed")
      ->capture_default_str();
  generalized->add_option("--sweep", gen.sweep, "Table verification sweep size")
      ->capture_default_str();
  generalized->add_option("--tolerance", gen.tolerance, "Verification tolerance")
      ->capture_default_str();
  add_format(generalized);

  CLI11_PARSE(app, argc, argv);

  try {
    if (table1->parsed()) return emit(qtel::report::build_table1(t1), format);
    if (table2->parsed()) return emit(qtel::report::build_table2(t2), format);
    if (teleport->parsed()) return emit(qtel::report::build_teleport(tp), format);
    if (family->parsed()) return emit(qtel::report::build_family(fam), format);
    if (generalized->parsed()) {
      if (xopt->count() > 0) gen.x = gen_x;
      if (gen_sign == "+")
        gen.sign = 1;
      else if (gen_sign == "-")
        gen.sign = -1;
      else
        throw std::invalid_argument("--sign must be + or -");
      return emit(qtel::report::build_generalized(gen), format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
