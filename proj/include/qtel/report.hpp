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

/**
 * @file report.hpp
 * Report builders behind the command-line tool. Every command builds one
 * JSON document (nlohmann ordered_json, so field order and therefore bytes
 * are deterministic for a fixed seed); the text and csv renderers are pure
 * functions of that document. The JSON field names here are the tool's
 * stable machine interface and are documented in the README.
 */
#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtel.hpp"

namespace qtel::report {

using ordered_json = nlohmann::ordered_json;

enum class ReportFormat { text, csv, json };

inline ReportFormat parse_format(const std::string& text) {
  if (text == "text") return ReportFormat::text;
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown format '" + text + "' (expected text, csv or json)");
}

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

namespace detail {

inline double checked_stod(const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric literal '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("bad numeric literal '" + text + "'");
  return v;
}

}  // namespace detail

/// Accepts "0.6", "0.6+0.8i", "1-2e-3i", "i", "-i", "0.8i".
inline complex_t parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  const bool has_i = (s.back() == 'i');
  if (!has_i) return complex_t{detail::checked_stod(s), 0.0};
  s.pop_back();  // drop the trailing i

  // Split at the last +/- that does not follow an exponent marker and is
  // not the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  std::string real_part = "0", imag_part;
  if (split == std::string::npos) {
    imag_part = s;
  } else {
    real_part = s.substr(0, split);
    imag_part = s.substr(split);
  }
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";
  return complex_t{detail::checked_stod(real_part), detail::checked_stod(imag_part)};
}

/// A resolved --channel argument.
struct ChannelChoice {
  std::string request;  // flag text as given
  std::string label;    // canonical description
  StateVector state;
  bool is_yang = false;
  bool is_zhang = false;
  bool is_biseparable = false;
};

/// Accepts the aliases "yang" and "zhang", circuit bits "u,v,w", a Bell-pair
/// spec "psi+:0,phi+:1", or the failure fixture "biseparable".
inline ChannelChoice resolve_channel(const std::string& text) {
  if (text == "yang")
    return ChannelChoice{text, "yang", prepare_channel(0, 0, 1), true, false, false};
  if (text == "zhang")
    return ChannelChoice{text, "zhang", prepare_channel(0, 0, 0), false, true, false};
  if (text == "biseparable")
    return ChannelChoice{text, "biseparable", biseparable_channel(), false, false, true};

  if (text.find(':') != std::string::npos) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad channel spec '" + text +
                                  "' (expected e.g. psi+:0,phi+:1)");
    std::optional<BellKind> for_zero, for_one;
    for (const std::string& part :
         {text.substr(0, comma), text.substr(comma + 1)}) {
      const std::size_t colon = part.find(':');
      if (colon == std::string::npos || colon + 2 != part.size())
        throw std::invalid_argument("bad channel spec component '" + part + "'");
      const BellKind kind = bell_from_label(part.substr(0, colon));
      const char slot = part[colon + 1];
      if (slot == '0' && !for_zero)
        for_zero = kind;
      else if (slot == '1' && !for_one)
        for_one = kind;
      else
        throw std::invalid_argument("channel spec must bind slots 0 and 1 once each");
    }
    if (!for_zero || !for_one)
      throw std::invalid_argument("channel spec must bind slots 0 and 1 once each");
    const ChannelSpec spec(*for_zero, *for_one);
    const ChannelSpec yang = yang_spec(), zhang = zhang_spec();
    return ChannelChoice{text, spec.label(), channel_from_spec(spec),
                         spec.bell_for_zero == yang.bell_for_zero &&
                             spec.bell_for_one == yang.bell_for_one,
                         spec.bell_for_zero == zhang.bell_for_zero &&
                             spec.bell_for_one == zhang.bell_for_one,
                         false};
  }

  if (text.find(',') != std::string::npos) {
    int bits[3] = {-1, -1, -1};
    std::size_t idx = 0, start = 0;
    while (idx < 3) {
      const std::size_t comma = text.find(',', start);
      const std::string tok = text.substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
      if (tok != "0" && tok != "1") break;
      bits[idx++] = tok == "1" ? 1 : 0;
      if (comma == std::string::npos) {
        start = text.size();
        break;
      }
      start = comma + 1;
    }
    if (idx != 3 || start != text.size())
      throw std::invalid_argument("bad channel bits '" + text + "' (expected u,v,w)");
    return ChannelChoice{text,
                         text,
                         prepare_channel(bits[0], bits[1], bits[2]),
                         bits[0] == 0 && bits[1] == 0 && bits[2] == 1,
                         bits[0] == 0 && bits[1] == 0 && bits[2] == 0,
                         false};
  }

  throw std::invalid_argument("unrecognized channel '" + text + "'");
}

// ---------------------------------------------------------------------------
// Formatting helpers
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt_g(double v, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

/// Full-precision decimal for csv cells.
inline std::string fmt_full(double v) { return fmt_g(v, 17); }

inline std::string fmt_complex(complex_t z, int prec) {
  std::string out = fmt_g(z.real(), prec);
  out += z.imag() < 0.0 ? "-" : "+";
  out += fmt_g(std::abs(z.imag()), prec);
  out += "i";
  return out;
}

inline ordered_json json_complex(complex_t z) {
  return ordered_json::array({z.real(), z.imag()});
}

inline ordered_json json_state(const StateVector& s) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(json_complex(s.amplitude(i)));
  return out;
}

inline ordered_json json_matrix(const CMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.dim; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim; ++c) row.push_back(json_complex(m.at(r, c)));
    out.push_back(row);
  }
  return out;
}

inline ordered_json json_channel(const ChannelChoice& ch) {
  ordered_json out;
  out["request"] = ch.request;
  out["label"] = ch.label;
  out["amplitudes"] = json_state(ch.state);
  return out;
}

inline ordered_json json_verification(const CorrectionTable& table,
                                      std::uint64_t seed, double tolerance) {
  ordered_json out;
  out["rng"] = std::string(kRngAlgorithm);
  out["seed"] = seed;
  out["sweep_size"] = table.sweep_size();
  out["max_fidelity_deviation"] = table.max_fidelity_deviation();
  out["tolerance"] = tolerance;
  out["verified"] = table.verified();
  return out;
}

inline ordered_json json_table_rows(const CorrectionTable& table) {
  ordered_json rows = ordered_json::array();
  for (const BranchKey& key : correction_rows()) {
    ordered_json row;
    row["alice"] = std::string(bell_label(key.bell));
    row["charlie"] = key.charlie_bit;
    row["correction"] = std::string(correction_label(table.at(key.bell, key.charlie_bit)));
    rows.push_back(row);
  }
  return rows;
}

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// table1
// ---------------------------------------------------------------------------

struct Table1Options {
  std::string channel = "yang";
  std::uint64_t seed = 1;
  std::size_t sweep = 1000;
  double tolerance = kTolerance;
};

inline ordered_json build_table1(const Table1Options& opts) {
  const ChannelChoice ch = resolve_channel(opts.channel);
  const CorrectionTable table = derive_correction_table(
      ch.state, DeriveOptions{opts.sweep, RandomSeed{opts.seed}, opts.tolerance});

  ordered_json out;
  out["command"] = "table1";
  out["channel"] = detail::json_channel(ch);
  out["rows"] = detail::json_table_rows(table);
  out["verification"] = detail::json_verification(table, opts.seed, opts.tolerance);
  out["ok"] = table.verified();
  return out;
}

// ---------------------------------------------------------------------------
// table2
// ---------------------------------------------------------------------------

struct Table2Options {
  std::string alpha = "0.6";
  std::string beta = "0.8";
  double tolerance = kTolerance;
};

inline ordered_json build_table2(const Table2Options& opts) {
  const UnknownQubit u(parse_complex(opts.alpha), parse_complex(opts.beta));
  const StateVector channel = channel_from_spec(yang_spec());
  const auto rows = noncooperative_analysis(u, channel);

  const double coherence =
      (std::conj(u.alpha()) * u.beta() + std::conj(u.beta()) * u.alpha()).real();

  ordered_json out;
  out["command"] = "table2";
  out["alpha"] = detail::json_complex(u.alpha());
  out["beta"] = detail::json_complex(u.beta());
  out["coherence"] = coherence;
  double sum = 0.0;
  ordered_json jrows = ordered_json::array();
  for (const NoncooperativeRow& row : rows) {
    ordered_json j;
    j["alice"] = std::string(bell_label(row.alice));
    j["probability"] = row.probability;
    j["joint_state"] = detail::json_state(row.joint_state);
    j["bob_state"] = detail::json_matrix(row.bob_state.matrix());
    j["conditional_fidelity"] = row.conditional_fidelity;
    j["weighted_fidelity"] = row.weighted_fidelity;
    jrows.push_back(j);
    sum += row.weighted_fidelity;
  }
  out["rows"] = jrows;
  out["weighted_sum"] = sum;
  out["ok"] = std::abs(sum - 0.5) <= opts.tolerance;
  return out;
}

// ---------------------------------------------------------------------------
// teleport
// ---------------------------------------------------------------------------

struct TeleportOptions {
  std::string alpha = "0.6";
  std::string beta = "0.8";
  std::string channel = "yang";
  std::uint64_t seed = 1;
  std::size_t sweep = 1000;
  double tolerance = kTolerance;
};

inline ordered_json build_teleport(const TeleportOptions& opts) {
  const ChannelChoice ch = resolve_channel(opts.channel);
  const UnknownQubit u(parse_complex(opts.alpha), parse_complex(opts.beta));

  ordered_json out;
  out["command"] = "teleport";
  out["alpha"] = detail::json_complex(u.alpha());
  out["beta"] = detail::json_complex(u.beta());
  out["channel"] = detail::json_channel(ch);

  CorrectionTable table;
  try {
    table = derive_correction_table(
        ch.state, DeriveOptions{opts.sweep, RandomSeed{opts.seed}, opts.tolerance});
  } catch (const NoCorrectionFound& e) {
    ordered_json err;
    err["type"] = "no_correction_found";
    err["alice"] = std::string(bell_label(e.bell()));
    err["charlie"] = e.charlie_bit();
    err["message"] = e.what();
    out["error"] = err;
    out["ok"] = false;
    return out;
  }

  out["table"] = detail::json_table_rows(table);
  out["verification"] = detail::json_verification(table, opts.seed, opts.tolerance);

  const SampledTeleport sampled =
      run_teleportation(u, ch.state, table, RandomSeed{opts.seed});
  ordered_json js;
  js["alice"] = std::string(bell_label(sampled.outcome.alice));
  js["charlie"] = sampled.outcome.charlie_bit;
  js["probability"] = sampled.outcome.probability;
  js["fidelity"] = sampled.outcome.fidelity;
  js["bob_state"] = detail::json_state(sampled.outcome.bob_state);
  js["next_seed"] = sampled.next.value;
  out["sampled"] = js;

  bool all_unit = sampled.outcome.valid &&
                  std::abs(1.0 - sampled.outcome.fidelity) <= opts.tolerance;
  ordered_json sweep_rows = ordered_json::array();
  for (const TeleportOutcome& run : teleport_branch_sweep(u, ch.state, table)) {
    ordered_json j;
    j["alice"] = std::string(bell_label(run.alice));
    j["charlie"] = run.charlie_bit;
    j["probability"] = run.probability;
    j["fidelity"] = run.fidelity;
    j["valid"] = run.valid;
    sweep_rows.push_back(j);
    if (run.valid && std::abs(1.0 - run.fidelity) > opts.tolerance) all_unit = false;
  }
  out["sweep"] = sweep_rows;
  out["all_unit_fidelity"] = all_unit;
  out["ok"] = table.verified() && all_unit;
  return out;
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

struct FamilyOptions {
  std::uint64_t seed = 1;
  std::size_t sweep = 1000;
  double tolerance = kTolerance;
};

inline ordered_json build_family(const FamilyOptions& opts) {
  const std::vector<ChannelSpec> family = enumerate_family();
  const ChannelSpec yang = yang_spec(), zhang = zhang_spec();

  ordered_json out;
  out["command"] = "family";
  out["count"] = family.size();
  bool all_ok = family.size() == 12;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ChannelSpec& spec = family[i];
    const StateVector state = channel_from_spec(spec);
    const bool ghz = is_ghz_class(state, opts.tolerance);
    const CorrectionTable table = derive_correction_table(
        state, DeriveOptions{opts.sweep, RandomSeed{opts.seed}, opts.tolerance});

    std::string named;
    if (spec.bell_for_zero == yang.bell_for_zero && spec.bell_for_one == yang.bell_for_one)
      named = "yang";
    if (spec.bell_for_zero == zhang.bell_for_zero && spec.bell_for_one == zhang.bell_for_one)
      named = "zhang";

    ordered_json j;
    j["index"] = i;
    j["label"] = spec.label();
    j["bell_for_zero"] = std::string(bell_label(spec.bell_for_zero));
    j["bell_for_one"] = std::string(bell_label(spec.bell_for_one));
    j["named"] = named;
    j["ghz_class"] = ghz;
    j["table_verified"] = table.verified();
    j["max_fidelity_deviation"] = table.max_fidelity_deviation();
    rows.push_back(j);
    all_ok = all_ok && ghz && table.verified();
  }
  out["rows"] = rows;
  out["verification"]["rng"] = std::string(kRngAlgorithm);
  out["verification"]["seed"] = opts.seed;
  out["verification"]["sweep_size"] = opts.sweep;
  out["verification"]["tolerance"] = opts.tolerance;
  out["ok"] = all_ok;
  return out;
}

// ---------------------------------------------------------------------------
// generalized
// ---------------------------------------------------------------------------

struct GeneralizedOptions {
  std::size_t n = 3;
  std::optional<std::uint64_t> x;  // absent: sweep all labels and signs
  int sign = 1;
  std::string alpha = "0.6";
  std::string beta = "0.8";
  std::string channel = "yang";
  std::uint64_t seed = 1;
  std::size_t sweep = 1000;
  double tolerance = kTolerance;
};

inline ordered_json build_generalized(const GeneralizedOptions& opts) {
  const ChannelChoice ch = resolve_channel(opts.channel);
  const complex_t alpha = parse_complex(opts.alpha);
  const complex_t beta = parse_complex(opts.beta);
  const CorrectionTable table = derive_correction_table(
      ch.state, DeriveOptions{opts.sweep, RandomSeed{opts.seed}, opts.tolerance});

  std::vector<std::pair<std::uint64_t, int>> tasks;
  if (opts.x) {
    tasks.emplace_back(*opts.x, opts.sign);
  } else {
    if (opts.n > kMaxGeneralizedQubits)
      throw std::out_of_range("generalized: n must be in [1, " +
                              std::to_string(kMaxGeneralizedQubits) + "]");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << opts.n); ++x)
      for (int sign : {1, -1}) tasks.emplace_back(x, sign);
  }

  ordered_json out;
  out["command"] = "generalized";
  out["n"] = opts.n;
  out["alpha"] = detail::json_complex(alpha);
  out["beta"] = detail::json_complex(beta);
  out["channel"] = detail::json_channel(ch);
  out["verification"] = detail::json_verification(table, opts.seed, opts.tolerance);

  bool all_ok = table.verified();
  ordered_json runs = ordered_json::array();
  for (const auto& [x, sign] : tasks) {
    const GeneralizedState task(opts.n, x, sign, alpha, beta);
    const GeneralizedOutcome res = generalized_teleport(task, ch.state, table);
    const bool ok = std::abs(1.0 - res.min_fidelity) <= opts.tolerance;
    all_ok = all_ok && ok;

    ordered_json j;
    j["x"] = x;
    j["x_bar"] = task.x_bar();
    j["sign"] = sign;
    j["min_fidelity"] = res.min_fidelity;
    j["ok"] = ok;
    if (tasks.size() == 1) {
      ordered_json branches = ordered_json::array();
      for (const GeneralizedBranch& b : res.branches) {
        ordered_json jb;
        jb["alice"] = std::string(bell_label(b.alice));
        jb["charlie"] = b.charlie_bit;
        jb["probability"] = b.probability;
        jb["fidelity"] = b.fidelity;
        jb["valid"] = b.valid;
        branches.push_back(jb);
      }
      j["branches"] = branches;
    }
    runs.push_back(j);
  }
  out["runs"] = runs;
  out["ok"] = all_ok;
  return out;
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

namespace detail {

inline std::string text_verification(const ordered_json& v) {
  std::ostringstream os;
  os << "verification: sweep=" << v["sweep_size"].get<std::size_t>()
     << " seed=" << v["seed"].get<std::uint64_t>()
     << " max|1-F|=" << fmt_g(v["max_fidelity_deviation"].get<double>(), 6)
     << " -> " << (v["verified"].get<bool>() ? "ok" : "FAILED") << "\n";
  return os.str();
}

inline complex_t complex_from_json(const ordered_json& j) {
  return complex_t{j[0].get<double>(), j[1].get<double>()};
}

inline std::string text_table1(const ordered_json& r) {
  std::ostringstream os;
  os << "correction table, channel " << r["channel"]["label"].get<std::string>() << "\n";
  os << pad("alice", 7) << pad("charlie", 9) << "correction\n";
  for (const auto& row : r["rows"]) {
    os << pad(row["alice"].get<std::string>(), 7)
       << pad(std::to_string(row["charlie"].get<int>()), 9)
       << row["correction"].get<std::string>() << "\n";
  }
  os << text_verification(r["verification"]);
  return os.str();
}

inline std::string csv_table1(const ordered_json& r) {
  std::string out = "alice,charlie,correction\n";
  for (const auto& row : r["rows"])
    out += row["alice"].get<std::string>() + "," +
           std::to_string(row["charlie"].get<int>()) + "," +
           row["correction"].get<std::string>() + "\n";
  return out;
}

inline std::string text_table2(const ordered_json& r) {
  std::ostringstream os;
  os << "noncooperative fidelity, alpha="
     << fmt_complex(complex_from_json(r["alpha"]), 6)
     << " beta=" << fmt_complex(complex_from_json(r["beta"]), 6)
     << " coherence=" << fmt_g(r["coherence"].get<double>(), 6) << "\n";
  os << pad("alice", 7) << pad("probability", 13) << pad("cond_fidelity", 15)
     << "weighted\n";
  for (const auto& row : r["rows"]) {
    os << pad(row["alice"].get<std::string>(), 7)
       << pad(fmt_g(row["probability"].get<double>(), 6), 13)
       << pad(fmt_g(row["conditional_fidelity"].get<double>(), 6), 15)
       << fmt_g(row["weighted_fidelity"].get<double>(), 6) << "\n";
  }
  os << "weighted sum = " << fmt_g(r["weighted_sum"].get<double>(), 6)
     << (r["ok"].get<bool>() ? " (= 1/2)" : " (expected 1/2; FAILED)") << "\n";
  return os.str();
}

inline std::string csv_table2(const ordered_json& r) {
  std::string out = "alice,probability,conditional_fidelity,weighted_fidelity\n";
  for (const auto& row : r["rows"])
    out += row["alice"].get<std::string>() + "," +
           fmt_full(row["probability"].get<double>()) + "," +
           fmt_full(row["conditional_fidelity"].get<double>()) + "," +
           fmt_full(row["weighted_fidelity"].get<double>()) + "\n";
  out += "total,,," + fmt_full(r["weighted_sum"].get<double>()) + "\n";
  return out;
}

inline std::string text_teleport(const ordered_json& r) {
  std::ostringstream os;
  os << "teleport alpha=" << fmt_complex(complex_from_json(r["alpha"]), 6)
     << " beta=" << fmt_complex(complex_from_json(r["beta"]), 6) << " channel "
     << r["channel"]["label"].get<std::string>() << "\n";
  if (r.contains("error")) {
    os << "FAILED: " << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  const auto& s = r["sampled"];
  os << "sampled outcome: alice=" << s["alice"].get<std::string>()
     << " charlie=" << s["charlie"].get<int>()
     << " p=" << fmt_g(s["probability"].get<double>(), 6)
     << " fidelity=" << fmt_g(s["fidelity"].get<double>(), 6) << "\n";
  os << "branch sweep:\n";
  os << pad("alice", 7) << pad("charlie", 9) << pad("probability", 13)
     << "fidelity\n";
  for (const auto& row : r["sweep"]) {
    os << pad(row["alice"].get<std::string>(), 7)
       << pad(std::to_string(row["charlie"].get<int>()), 9)
       << pad(fmt_g(row["probability"].get<double>(), 6), 13)
       << fmt_g(row["fidelity"].get<double>(), 6) << "\n";
  }
  os << text_verification(r["verification"]);
  os << "all branches unit fidelity: "
     << (r["all_unit_fidelity"].get<bool>() ? "yes" : "NO") << "\n";
  return os.str();
}

inline std::string csv_teleport(const ordered_json& r) {
  std::string out = "alice,charlie,probability,fidelity\n";
  if (r.contains("error")) return out;
  for (const auto& row : r["sweep"])
    out += row["alice"].get<std::string>() + "," +
           std::to_string(row["charlie"].get<int>()) + "," +
           fmt_full(row["probability"].get<double>()) + "," +
           fmt_full(row["fidelity"].get<double>()) + "\n";
  return out;
}

inline std::string text_family(const ordered_json& r) {
  std::ostringstream os;
  os << "channel family: " << r["count"].get<std::size_t>() << " members\n";
  os << pad("index", 7) << pad("label", 16) << pad("named", 7) << pad("ghz", 5)
     << pad("table", 7) << "max|1-F|\n";
  for (const auto& row : r["rows"]) {
    os << pad(std::to_string(row["index"].get<std::size_t>()), 7)
       << pad(row["label"].get<std::string>(), 16)
       << pad(row["named"].get<std::string>().empty()
                  ? "-"
                  : row["named"].get<std::string>(),
              7)
       << pad(row["ghz_class"].get<bool>() ? "yes" : "NO", 5)
       << pad(row["table_verified"].get<bool>() ? "ok" : "FAIL", 7)
       << fmt_g(row["max_fidelity_deviation"].get<double>(), 6) << "\n";
  }
  os << "all members verified: " << (r["ok"].get<bool>() ? "yes" : "NO") << "\n";
  return os.str();
}

inline std::string csv_family(const ordered_json& r) {
  std::string out =
      "index,bell_for_zero,bell_for_one,named,ghz_class,table_verified,max_fidelity_deviation\n";
  for (const auto& row : r["rows"])
    out += std::to_string(row["index"].get<std::size_t>()) + "," +
           row["bell_for_zero"].get<std::string>() + "," +
           row["bell_for_one"].get<std::string>() + "," +
           row["named"].get<std::string>() + "," +
           (row["ghz_class"].get<bool>() ? "true" : "false") + "," +
           (row["table_verified"].get<bool>() ? "true" : "false") + "," +
           fmt_full(row["max_fidelity_deviation"].get<double>()) + "\n";
  return out;
}

inline std::string text_generalized(const ordered_json& r) {
  std::ostringstream os;
  os << "generalized teleport, n=" << r["n"].get<std::size_t>()
     << " alpha=" << fmt_complex(complex_from_json(r["alpha"]), 6)
     << " beta=" << fmt_complex(complex_from_json(r["beta"]), 6) << " channel "
     << r["channel"]["label"].get<std::string>() << "\n";
  os << pad("x", 6) << pad("x_bar", 7) << pad("sign", 6) << pad("min_fidelity", 14)
     << "ok\n";
  for (const auto& row : r["runs"]) {
    os << pad(std::to_string(row["x"].get<std::uint64_t>()), 6)
       << pad(std::to_string(row["x_bar"].get<std::uint64_t>()), 7)
       << pad(row["sign"].get<int>() > 0 ? "+" : "-", 6)
       << pad(fmt_g(row["min_fidelity"].get<double>(), 6), 14)
       << (row["ok"].get<bool>() ? "yes" : "NO") << "\n";
    if (row.contains("branches")) {
      os << "  " << pad("alice", 7) << pad("charlie", 9) << pad("probability", 13)
         << "fidelity\n";
      for (const auto& b : row["branches"])
        os << "  " << pad(b["alice"].get<std::string>(), 7)
           << pad(std::to_string(b["charlie"].get<int>()), 9)
           << pad(fmt_g(b["probability"].get<double>(), 6), 13)
           << fmt_g(b["fidelity"].get<double>(), 6) << "\n";
    }
  }
  os << text_verification(r["verification"]);
  os << "all runs unit fidelity: " << (r["ok"].get<bool>() ? "yes" : "NO") << "\n";
  return os.str();
}

inline std::string csv_generalized(const ordered_json& r) {
  std::string out = "x,x_bar,sign,min_fidelity,ok\n";
  for (const auto& row : r["runs"])
    out += std::to_string(row["x"].get<std::uint64_t>()) + "," +
           std::to_string(row["x_bar"].get<std::uint64_t>()) + "," +
           (row["sign"].get<int>() > 0 ? "+" : "-") + "," +
           fmt_full(row["min_fidelity"].get<double>()) + "," +
           (row["ok"].get<bool>() ? "true" : "false") + "\n";
  return out;
}

}  // namespace detail

/// Renders a report document in the requested format. JSON is the document
/// itself (stable field order, full precision).
inline std::string render(const ordered_json& report, ReportFormat format) {
  if (format == ReportFormat::json) return report.dump(2) + "\n";
  const std::string cmd = report["command"].get<std::string>();
  if (format == ReportFormat::text) {
    if (cmd == "table1") return detail::text_table1(report);
    if (cmd == "table2") return detail::text_table2(report);
    if (cmd == "teleport") return detail::text_teleport(report);
    if (cmd == "family") return detail::text_family(report);
    if (cmd == "generalized") return detail::text_generalized(report);
  } else {
    if (cmd == "table1") return detail::csv_table1(report);
    if (cmd == "table2") return detail::csv_table2(report);
    if (cmd == "teleport") return detail::csv_teleport(report);
    if (cmd == "family") return detail::csv_family(report);
    if (cmd == "generalized") return detail::csv_generalized(report);
  }
  throw std::invalid_argument("render: unknown command '" + cmd + "'");
}

}  // namespace qtel::report
