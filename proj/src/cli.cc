// Copyright 2026 The Interp Authors.
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

#include "interp/cli.h"

#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "interp/basis.h"
#include "interp/brill_noether.h"
#include "interp/errors.h"
#include "interp/fit.h"
#include "interp/harness.h"
#include "interp/io.h"
#include "interp/random.h"
#include "interp/reed_solomon.h"

namespace interp {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << contents;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed " + what + ": " + e.what());
  }
}

const CLI::Validator kPrime(
    [](std::string& s) -> std::string {
      uint64_t p = 0;
      try {
        size_t used = 0;
        p = std::stoull(s, &used);
        if (used != s.size()) return "expected a decimal prime, got '" + s + "'";
      } catch (const std::exception&) {
        return "expected a decimal prime, got '" + s + "'";
      }
      if (p <= 2 || p >= PrimeModulus::kLimit || !is_prime(p)) {
        return "expected an odd prime below 2^62, got " + s;
      }
      return {};
    },
    "PRIME", "odd prime");

const CLI::Validator kCharacteristic(
    [](std::string& s) -> std::string {
      uint64_t c = 0;
      try {
        c = std::stoull(s);
      } catch (const std::exception&) {
        return "expected 0 or a prime, got '" + s + "'";
      }
      if (c != 0 && !is_prime(c)) return "expected 0 or a prime, got " + s;
      return {};
    },
    "CHAR", "characteristic");

std::string join(const std::vector<FieldValue>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i].to_string();
  }
  return out;
}

std::string codeword_line(const Codeword& c) { return codeword_to_json(c).dump(); }

void print_report(const BNReport& r, std::ostream& out) {
  out << "curve class: g=" << r.curve.g << " r=" << r.curve.r << " d=" << r.curve.d << '\n';
  out << "rho: " << r.rho << '\n';
  if (r.bn_exists) {
    out << "Brill-Noether component: exists, dimension " << *r.bn_dim << '\n';
  } else {
    out << "Brill-Noether component: none (rho < 0)\n";
  }
  if (r.expected_points) out << "expected interpolation count: " << *r.expected_points << '\n';
  switch (r.interpolates) {
    case Verdict::kYes:
      out << "interpolates expected count: yes\n";
      break;
    case Verdict::kNoException:
      out << "interpolates expected count: no (exception)\n";
      out << "obstruction: " << r.exception_note() << '\n';
      out << "obstruction bound: " << r.exception->point_bound << '\n';
      break;
    case Verdict::kNotApplicable:
      out << "interpolates expected count: not applicable\n";
      break;
  }
  if (r.characteristic != 0 && r.characteristic != 2) {
    out << "normal bundle interpolation (characteristic " << r.characteristic
        << "): " << to_string(r.nb_interpolation) << '\n';
  }
  out << "normal bundle interpolation (characteristic 0): " << to_string(r.nb_char0) << '\n';
  out << "normal bundle interpolation (characteristic 2): " << to_string(r.nb_char2) << '\n';
}

struct Options {
  bool json = false;

  std::string points_file, basis_name, out_file;
  std::optional<uint32_t> degree;
  std::optional<size_t> num_vars;

  std::string kind;
  std::optional<int64_t> genus;

  int64_t g = 0, r = 0, d = 0;
  uint64_t characteristic = 0;
  int64_t g_max = 0, r_max = 0, d_max = 0;

  uint64_t p = 0;
  std::string message;
  size_t k = 0;
  std::string codeword_file;
  size_t index = 0;
  std::string value;
  size_t n = 0;
  uint64_t seed = kDefaultSeed;

  std::string suite;
  uint64_t prime = kDefaultPrime;
  size_t trials = 100;
};

int cmd_fit(const Options& o, std::ostream& out) {
  const PointSet points = parse_points_csv(read_file(o.points_file));
  const BasisSpec basis = BasisSpec::from_name(o.basis_name, points.field(), o.degree,
                                               o.num_vars ? o.num_vars : std::optional(points.dim()));
  const FitResult fit = fit_curves(points, basis);
  const Json j = fit_result_to_json(fit, basis);
  if (!o.out_file.empty()) write_file(o.out_file, j.dump(2) + "\n");
  if (o.json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "basis " << basis.name() << " (" << basis.size() << " elements), " << points.size()
      << " points over " << points.field().to_string() << '\n';
  out << "design rank " << fit.design_rank << ", kernel dimension " << fit.kernel_dim << '\n';
  for (size_t i = 0; i < fit.curves.size(); ++i) {
    out << "curve " << i + 1 << ": " << fit.curves[i].to_string() << '\n';
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  int64_t count = 0;
  const int64_t d = *o.degree;
  if (o.kind == "plane") {
    count = o.genus ? plane_interpolation_count(d, *o.genus) : hypersurface_count(2, d);
  } else if (o.kind == "hypersurface") {
    count = hypersurface_count(static_cast<int64_t>(o.num_vars.value_or(2)), d);
  } else {
    count = expected_interpolation_count(BasisSpec::graph(Field::rational(), *o.degree));
  }
  if (o.json) {
    Json j = {{"kind", o.kind}, {"degree", d}};
    if (o.kind == "hypersurface") j["num_vars"] = o.num_vars.value_or(2);
    if (o.genus) j["genus"] = *o.genus;
    j["count"] = count;
    out << j.dump() << '\n';
  } else {
    out << count << '\n';
  }
  return kExitOk;
}

int cmd_bn_query(const Options& o, std::ostream& out) {
  const BNReport r = interpolation_verdict({o.g, o.r, o.d}, o.characteristic);
  if (o.json) {
    out << bn_report_to_json(r).dump() << '\n';
  } else {
    print_report(r, out);
  }
  return kExitOk;
}

int cmd_bn_table(const Options& o, std::ostream& out) {
  const std::vector<BNReport> rows = bn_table(o.g_max, o.r_max, o.d_max);
  const std::string csv = bn_table_csv(rows);
  if (o.out_file.empty()) {
    out << csv;
    return kExitOk;
  }
  write_file(o.out_file, csv);
  if (o.json) {
    out << Json{{"rows", rows.size()}, {"out", o.out_file}}.dump() << '\n';
  } else {
    out << "wrote " << rows.size() << " rows to " << o.out_file << '\n';
  }
  return kExitOk;
}

Message parse_message(const std::string& text, const PrimeModulus& m) {
  Message msg{m, {}};
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) msg.coefficients.push_back(FieldValue::parse(cell, Field::prime(m)));
  msg.validate();
  return msg;
}

int cmd_rs_encode(const Options& o, std::ostream& out) {
  const PrimeModulus m(o.p);
  const Codeword c = rs_encode(parse_message(o.message, m), o.k);
  if (!o.out_file.empty()) write_file(o.out_file, codeword_line(c) + "\n");
  out << codeword_line(c) << '\n';
  return kExitOk;
}

int cmd_rs_corrupt(const Options& o, std::ostream& out, std::ostream& err) {
  const Codeword c = codeword_from_json(parse_json(read_file(o.codeword_file), "codeword"));
  const CorruptResult res =
      rs_corrupt(c, o.index, FieldValue::parse(o.value, Field::prime(c.modulus)));
  if (!o.out_file.empty()) write_file(o.out_file, codeword_line(res.codeword) + "\n");
  if (o.json) {
    out << Json{{"no_op", res.no_op}, {"codeword", codeword_to_json(res.codeword)}}.dump() << '\n';
  } else {
    if (res.no_op) err << "note: new value equals the old one; codeword unchanged\n";
    out << codeword_line(res.codeword) << '\n';
  }
  return kExitOk;
}

void print_decode(const DecodeResult& r, std::ostream& out) {
  out << "status: " << to_string(r.status) << '\n';
  if (r.message) out << "message: " << join(r.message->coefficients) << '\n';
  if (r.corrected_index) out << "corrected index: " << *r.corrected_index << '\n';
  if (r.status == DecodeStatus::kAmbiguous) {
    out << "candidates: " << r.candidates << " distinct consistent fits\n";
  }
}

int cmd_rs_decode(const Options& o, std::ostream& out) {
  const Codeword c = codeword_from_json(parse_json(read_file(o.codeword_file), "codeword"));
  const DecodeResult r = rs_decode(c);
  if (o.json) {
    out << decode_result_to_json(r).dump() << '\n';
  } else {
    print_decode(r, out);
  }
  return kExitOk;
}

int cmd_rs_demo(const Options& o, std::ostream& out) {
  const PrimeModulus m(o.p);
  if (o.p <= o.n + 2) {
    throw FieldTooSmall("p = " + std::to_string(o.p) + " must exceed n + 2 = " +
                        std::to_string(o.n + 2));
  }
  SeededRng rng(o.seed);
  Message msg{m, {}};
  for (size_t i = 0; i < o.n; ++i) msg.coefficients.push_back(sample_uniform(m, rng));
  const Codeword sent = rs_encode(msg, 2);
  const size_t index = rng.uniform_below(sent.pairs.size());
  const FieldValue delta = FieldValue::residue(1 + rng.uniform_below(o.p - 1), m);
  const FieldValue bad = sent.pairs[index].second + delta;
  const Codeword received = rs_corrupt(sent, index, bad).codeword;
  const bool consistent = rs_detect(received);
  const DecodeResult r = rs_decode(received);
  const bool recovered = r.message && *r.message == msg;

  if (o.json) {
    out << Json{{"seed", o.seed},
                {"message", message_to_json(msg)["message"]},
                {"codeword", codeword_to_json(sent)},
                {"corruption", {{"index", index},
                                {"old", sent.pairs[index].second.to_string()},
                                {"new", bad.to_string()}}},
                {"received", codeword_to_json(received)},
                {"error_detected", !consistent},
                {"decode", decode_result_to_json(r)},
                {"recovered", recovered}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "message: " << join(msg.coefficients) << '\n';
  out << "sent: " << codeword_line(sent) << '\n';
  out << "corruption: pair " << index << " y " << sent.pairs[index].second.to_string() << " -> "
      << bad.to_string() << '\n';
  out << "received: " << codeword_line(received) << '\n';
  out << "error detected: " << (consistent ? "no" : "yes") << '\n';
  print_decode(r, out);
  out << "recovered original: " << (recovered ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg{Suite::parse(o.suite, o.degree), PrimeModulus(o.prime), o.trials, o.seed};
  if (cfg.small_prime()) {
    err << "warning: p = " << o.prime << " is below " << kSmallPrimeWarning
        << "; expect degenerate samples\n";
  }
  const SuiteReport rep = run_suite(cfg);
  const Json j = suite_report_to_json(rep);
  if (!o.out_file.empty()) write_file(o.out_file, j.dump(2) + "\n");
  if (o.json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "suite " << rep.suite << ", p = " << rep.prime << ", " << rep.trials << " trials, seed "
      << rep.seed << '\n';
  out << "at expected count: " << rep.at_count.pass << " pass, " << rep.at_count.fail
      << " fail\n";
  out << "one point over:    " << rep.over_count.pass << " pass, " << rep.over_count.fail
      << " fail\n";
  for (const TrialFailure& f : rep.failures) {
    out << "  trial " << f.trial << " " << f.stage << ": kernel dimension " << f.kernel_dim
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact interpolation toolkit: curve fitting, Reed-Solomon, Brill-Noether counts",
               args.empty() ? "interp" : args.front()};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON on stdout");

  std::function<int()> action;

  auto* fit = app.add_subcommand("fit", "Fit every curve of a family through a point file");
  fit->add_option("--points,points", o.points_file, "Points CSV")->required()->check(CLI::ExistingFile);
  fit->add_option("--basis", o.basis_name,
                  "line, circle, conic, cubic, plane, full, graph, quadric_surface")
      ->required();
  fit->add_option("--degree", o.degree, "Degree for plane/full/graph")->check(CLI::Range(0, 64));
  fit->add_option("--num-vars", o.num_vars, "Variables for full/quadric_surface")
      ->check(CLI::Range(1, 16));
  fit->add_option("--out", o.out_file, "Write the fit as JSON");
  fit->callback([&] { action = [&] { return cmd_fit(o, out); }; });

  auto* count = app.add_subcommand("count", "Expected number of general points");
  count->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"plane", "hypersurface", "graph"}));
  count->add_option("--degree", o.degree)->required()->check(CLI::Range(1, 100000));
  count->add_option("--num-vars", o.num_vars, "Variables (hypersurface, default 2)")
      ->check(CLI::Range(1, 1000));
  count->add_option("--genus", o.genus, "Genus (plane only)");
  count->callback([&] { action = [&] { return cmd_count(o, out); }; });

  auto* query = app.add_subcommand("bn-query", "Interpolation report for one class (g, r, d)");
  query->add_option("g", o.g)->required()->check(CLI::NonNegativeNumber);
  query->add_option("r", o.r)->required()->check(CLI::Range(int64_t{2}, int64_t{1} << 30));
  query->add_option("d", o.d)->required()->check(CLI::Range(int64_t{1}, int64_t{1} << 30));
  query->add_option("--characteristic", o.characteristic, "0 or a prime")->check(kCharacteristic);
  query->callback([&] { action = [&] { return cmd_bn_query(o, out); }; });

  auto* table = app.add_subcommand("bn-table", "CSV table of reports over a box of classes");
  table->add_option("--g-max", o.g_max)->required()->check(CLI::Range(0, 10000));
  table->add_option("--r-max", o.r_max)->required()->check(CLI::Range(2, 10000));
  table->add_option("--d-max", o.d_max)->required()->check(CLI::Range(1, 10000));
  table->add_option("--out", o.out_file, "Output CSV (default stdout)");
  table->callback([&] { action = [&] { return cmd_bn_table(o, out); }; });

  auto* enc = app.add_subcommand("rs-encode", "Encode a message with k extra values");
  enc->add_option("--p", o.p)->required()->check(kPrime);
  enc->add_option("--message", o.message, "Comma-separated numbers p_1,...,p_n")->required();
  enc->add_option("--k", o.k, "Redundancy 0, 1 or 2")->required()->check(CLI::Range(0, 2));
  enc->add_option("--out", o.out_file, "Also write the codeword JSON here");
  enc->callback([&] { action = [&] { return cmd_rs_encode(o, out); }; });

  auto* cor = app.add_subcommand("rs-corrupt", "Replace one transmitted value");
  cor->add_option("--codeword,codeword", o.codeword_file)->required()->check(CLI::ExistingFile);
  cor->add_option("--index", o.index)->required();
  cor->add_option("--value", o.value)->required();
  cor->add_option("--out", o.out_file, "Also write the codeword JSON here");
  cor->callback([&] { action = [&] { return cmd_rs_corrupt(o, out, err); }; });

  auto* dec = app.add_subcommand("rs-decode", "Detect or correct a single error");
  dec->add_option("--codeword,codeword", o.codeword_file)->required()->check(CLI::ExistingFile);
  dec->callback([&] { action = [&] { return cmd_rs_decode(o, out); }; });

  auto* demo = app.add_subcommand("rs-demo", "Encode, corrupt one value, detect and correct");
  demo->add_option("--p", o.p)->required()->check(kPrime);
  demo->add_option("--n", o.n)->required()->check(CLI::Range(1, 10000));
  demo->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  demo->callback([&] { action = [&] { return cmd_rs_demo(o, out); }; });

  auto* verify = app.add_subcommand("verify", "Randomized check of a family's point count");
  verify->add_option("--suite", o.suite,
                     "line, circle, conic, cubic, quadric_surface, plane(d), graph(d)")
      ->required();
  verify->add_option("--degree", o.degree, "Degree for plane/graph")->check(CLI::Range(1, 64));
  verify->add_option("--prime", o.prime)->capture_default_str()->check(kPrime);
  verify->add_option("--trials", o.trials)->capture_default_str()->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  verify->add_option("--out", o.out_file, "Also write the report JSON here");
  verify->callback([&] { action = [&] { return cmd_verify(o, out, err); }; });

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const interp::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace interp
