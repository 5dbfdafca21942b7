// Copyright 2026 The LAC Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lac/channel.hpp"
#include "lac/jrc.hpp"
#include "lac/region.hpp"
#include "lac/schemes.hpp"
#include "lac/topology.hpp"
#include "lac/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": expected integers, got '" +
                                  item + "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::vector<int> frame_ints(const lac::channel::TransmitFrame& f) {
  return std::vector<int>(f.bits.begin(), f.bits.end());
}

std::string format_vector(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

struct SchemeOptions {
  std::string scheme = "jrc";
  int receiver = 1;  // 1-based
  std::vector<std::string> split_args;   // "i,p,value"
  std::vector<std::string> assign_args;  // "i,p" per higher-order transmitter
  std::vector<int> higher_bits;
};

lac::jrc::Allocation build_allocation(const lac::topo::Topology& t,
                                      const SchemeOptions& opts) {
  lac::jrc::Allocation alloc(t.receivers());
  for (const auto& arg : opts.split_args) {
    auto v = parse_int_list(arg, "--split");
    if (v.size() != 3)
      throw std::invalid_argument("--split expects i,p,value");
    const int i = v[0] - 1, p = v[1] - 1;
    if (i < 0 || i >= t.receivers() || p < 0 || p >= t.receivers() || i == p)
      throw std::invalid_argument("--split: receiver pair out of range");
    alloc.split[i][p] = v[2];
  }
  return alloc;
}

lac::jrc::PairAssignment build_assignment(const lac::topo::Topology& t,
                                          const SchemeOptions& opts) {
  const auto higher = lac::jrc::higher_transmitters(t);
  lac::jrc::PairAssignment assignment;
  if (opts.assign_args.empty()) {
    // Default: each higher-order transmitter goes to the lexicographically
    // smallest pair within its receiver set.
    for (const auto& h : higher)
      assignment.emplace_back(h.receiver_set[0], h.receiver_set[1]);
    return assignment;
  }
  if (opts.assign_args.size() != higher.size())
    throw std::invalid_argument(
        "--assign: need one pair per transmitter covering 3+ receivers");
  for (const auto& arg : opts.assign_args) {
    auto v = parse_int_list(arg, "--assign");
    if (v.size() != 2) throw std::invalid_argument("--assign expects i,p");
    assignment.emplace_back(std::min(v[0], v[1]) - 1, std::max(v[0], v[1]) - 1);
  }
  return assignment;
}

int cmd_region(const std::vector<std::string>& topology_paths,
               const std::string& out_path, const std::string& format) {
  std::vector<lac::topo::Topology> topologies;
  for (const auto& path : topology_paths)
    topologies.push_back(lac::topo::load_topology(path));
  auto tuples = lac::region::collect_tuples(topologies);
  auto hull = lac::region::convex_hull(tuples);

  if (format == "svg")
    write_output(out_path, lac::region::to_svg(hull));
  else
    write_output(out_path, lac::region::to_csv(hull));

  double max_sum = 0.0;
  for (const auto& v : hull.vertices) {
    double sum = 0.0;
    for (double r : v.rates) sum += r;
    max_sum = std::max(max_sum, sum);
  }
  std::cerr << "vertices: " << hull.vertices.size() << "\n"
            << "max sum rate: " << max_sum << "\n";
  return kExitOk;
}

int cmd_encode(const std::string& topology_path, const SchemeOptions& opts,
               const std::string& message_arg) {
  auto t = lac::topo::load_topology(topology_path);
  auto message = parse_int_list(message_arg, "--message");
  lac::channel::TransmitFrame frame;
  std::vector<int> decoded;

  if (opts.scheme == "src") {
    if (message.size() != 1)
      throw std::invalid_argument("src encodes one level; give --message L");
    frame = lac::schemes::src_encode(t, opts.receiver - 1, message[0]);
    auto y = lac::channel::transmit(t, frame);
    decoded = {lac::schemes::src_decode(y, opts.receiver - 1)};
    std::cout << "scheme: src, receiver " << opts.receiver << "\n";
    std::cout << "frame: " << format_vector(frame_ints(frame))
              << "\n";
    std::cout << "received: " << format_vector(y.levels) << "\n";
    std::cout << "decoded = " << format_vector(decoded) << "\n";
  } else if (opts.scheme == "erc") {
    auto code = lac::schemes::erc_code(t);
    if (!code)
      throw std::invalid_argument("erc: topological matrix is not full rank");
    frame = lac::schemes::erc_encode(t, *code, message);
    auto y = lac::channel::transmit(t, frame);
    decoded = lac::schemes::erc_decode(y);
    std::cout << "scheme: erc\n";
    std::cout << "frame: " << format_vector(frame_ints(frame))
              << "\n";
    std::cout << "received: " << format_vector(y.levels) << "\n";
    std::cout << "decoded = " << format_vector(decoded) << "\n";
  } else {
    auto alloc = build_allocation(t, opts);
    auto assignment = build_assignment(t, opts);
    const auto higher = lac::jrc::higher_transmitters(t);
    auto profile = higher.empty() ? lac::jrc::pairwise_profile(t)
                                  : lac::jrc::convert_to_pairwise(t, assignment);
    auto c = lac::jrc::moduli(profile, alloc);
    lac::jrc::Codeword cw;
    if (higher.empty()) {
      cw = lac::jrc::jrcn_encode(profile, alloc, message);
    } else if (!opts.higher_bits.empty()) {
      std::vector<std::uint8_t> bits(opts.higher_bits.begin(),
                                     opts.higher_bits.end());
      cw = lac::jrc::general_encode(t, assignment, alloc, bits, message);
    } else {
      cw = lac::jrc::general_encode_auto(t, assignment, alloc, message);
    }
    frame = lac::jrc::realize_frame(t, cw);
    auto y = lac::channel::transmit(t, frame);
    decoded = lac::jrc::jrcn_decode(y, c);
    std::cout << "scheme: jrc, moduli " << format_vector(c) << "\n";
    std::cout << "codeword: exclusive " << format_vector(cw.exclusive_levels);
    std::cout << ", shared";
    for (int i = 0; i < t.receivers(); ++i)
      for (int p = i + 1; p < t.receivers(); ++p)
        if (profile.shared[i][p] > 0)
          std::cout << " x_" << i + 1 << p + 1 << "=" << cw.shared_levels[i][p];
    if (!cw.higher_bits.empty()) {
      std::cout << ", higher bits";
      for (auto b : cw.higher_bits) std::cout << " " << int(b);
    }
    std::cout << "\n";
    std::cout << "frame: " << format_vector(frame_ints(frame))
              << "\n";
    std::cout << "received: " << format_vector(y.levels) << "\n";
    std::cout << "decoded = " << format_vector(decoded) << "\n";
  }
  return kExitOk;
}

int cmd_decode(const std::string& topology_path, const SchemeOptions& opts,
               const std::string& levels_arg) {
  auto t = lac::topo::load_topology(topology_path);
  auto levels = parse_int_list(levels_arg, "--levels");
  lac::channel::ReceivedLevels y{levels};

  if (opts.scheme == "src") {
    std::cout << "decoded = ("
              << lac::schemes::src_decode(y, opts.receiver - 1) << ")\n";
  } else if (opts.scheme == "erc") {
    std::cout << "decoded = " << format_vector(lac::schemes::erc_decode(y)) << "\n";
  } else {
    auto alloc = build_allocation(t, opts);
    auto assignment = build_assignment(t, opts);
    auto profile = lac::jrc::higher_transmitters(t).empty()
                       ? lac::jrc::pairwise_profile(t)
                       : lac::jrc::convert_to_pairwise(t, assignment);
    auto c = lac::jrc::moduli(profile, alloc);
    std::cout << "decoded = " << format_vector(lac::jrc::jrcn_decode(y, c)) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& topology_path, const SchemeOptions& opts,
               const std::string& mode, std::uint64_t seed, std::uint64_t samples,
               int sweep_receivers, int sweep_max, const std::string& out_path) {
  std::vector<lac::verify::VerificationReport> reports;

  if (sweep_receivers > 0) {
    reports = lac::verify::sweep_parameter_space(sweep_receivers, sweep_max);
  } else {
    auto t = lac::topo::load_topology(topology_path);
    lac::verify::SchemeParams params;
    if (opts.scheme == "src") {
      params.kind = lac::verify::SchemeParams::Kind::Src;
      params.receiver = opts.receiver - 1;
    } else if (opts.scheme == "erc") {
      params.kind = lac::verify::SchemeParams::Kind::Erc;
    } else {
      params.kind = lac::verify::SchemeParams::Kind::Jrc;
      params.alloc = build_allocation(t, opts);
      params.assignment = build_assignment(t, opts);
    }
    auto m = mode == "random" ? lac::verify::Mode::Random(seed, samples)
                              : lac::verify::Mode::Exhaustive();
    reports.push_back(lac::verify::verify_scheme(t, params, m));
  }

  std::ostringstream lines;
  std::uint64_t failures = 0;
  for (const auto& r : reports) {
    lines << r.to_json_line() << "\n";
    failures += r.failures.size();
  }
  write_output(out_path, lines.str());
  std::cerr << "configurations: " << reports.size() << ", failures: " << failures
            << "\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_alloc(const std::string& topology_path) {
  auto t = lac::topo::load_topology(topology_path);
  const auto higher = lac::jrc::higher_transmitters(t);
  lac::jrc::PairwiseProfile profile(t.receivers());
  if (higher.empty()) {
    profile = lac::jrc::pairwise_profile(t);
  } else {
    lac::jrc::PairAssignment assignment;
    for (const auto& h : higher)
      assignment.emplace_back(h.receiver_set[0], h.receiver_set[1]);
    profile = lac::jrc::convert_to_pairwise(t, assignment);
    std::cout << "higher-order transmitters assigned to their smallest pair\n";
  }
  auto result = lac::jrc::greedy_max_sum(profile);
  for (const auto& step : result.steps) {
    std::cout << "pair {" << step.i + 1 << "," << step.p + 1 << "}: ";
    if (step.chosen < 0)
      std::cout << "skipped (no feasible side)\n";
    else
      std::cout << "unit to receiver " << step.chosen + 1 << " (c was " << step.c_i
                << " vs " << step.c_p << ")\n";
  }
  std::cout << "allocation:";
  for (int i = 0; i < t.receivers(); ++i)
    for (int p = 0; p < t.receivers(); ++p)
      if (p != i && profile.shared[i][p] > 0 && i < p)
        std::cout << " t^" << i + 1 << "_" << i + 1 << p + 1 << "="
                  << result.alloc.split[i][p] << " t^" << p + 1 << "_" << i + 1
                  << p + 1 << "=" << result.alloc.split[p][i];
  std::cout << "\n";
  auto rates = lac::jrc::rates(profile, result.alloc);
  std::cout << "rates: (";
  for (std::size_t i = 0; i < rates.size(); ++i)
    std::cout << (i ? ", " : "") << rates[i];
  std::cout << ")\n";
  return kExitOk;
}

int cmd_channel_matrix(const std::string& topology_path, int receiver,
                       const std::string& out_path) {
  auto t = lac::topo::load_topology(topology_path);
  auto a = lac::channel::channel_matrix(t, receiver - 1);
  std::ostringstream csv;
  for (const auto& row : a.entries) {
    for (std::size_t j = 0; j < row.size(); ++j)
      csv << (j ? "," : "") << int(row[j]);
    csv << "\n";
  }
  write_output(out_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"location-assisted coding toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> topology_paths;
  std::string out_path, format = "csv", message_arg, levels_arg;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0, samples = 1000;
  int sweep_receivers = 0, sweep_max = 0;
  SchemeOptions opts;

  auto add_scheme_flags = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", opts.scheme, "src|erc|jrc")
        ->check(CLI::IsMember({"src", "erc", "jrc"}));
    cmd->add_option("--receiver", opts.receiver, "receiver index (1-based)");
    cmd->add_option("--split", opts.split_args,
                    "i,p,value: shared units of pair {i,p} credited to i");
    cmd->add_option("--assign", opts.assign_args,
                    "i,p: pair choice per transmitter covering 3+ receivers");
    cmd->add_option("--higher-bit", opts.higher_bits,
                    "fixed bit per transmitter covering 3+ receivers");
  };

  auto* region_cmd = app.add_subcommand("region", "rate region vertices");
  region_cmd->add_option("--topology", topology_paths, "topology JSON file")
      ->required();
  region_cmd->add_option("--out", out_path, "output file (default stdout)");
  region_cmd->add_option("--format", format, "csv|svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  auto* encode_cmd = app.add_subcommand("encode", "encode one message");
  encode_cmd->add_option("--topology", topology_paths, "topology JSON file")
      ->required();
  add_scheme_flags(encode_cmd);
  encode_cmd->add_option("--message", message_arg, "comma-separated message")
      ->required();

  auto* decode_cmd = app.add_subcommand("decode", "decode received levels");
  decode_cmd->add_option("--topology", topology_paths, "topology JSON file")
      ->required();
  add_scheme_flags(decode_cmd);
  decode_cmd->add_option("--levels", levels_arg, "comma-separated received levels")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "round-trip verification");
  verify_cmd->add_option("--topology", topology_paths, "topology JSON file");
  add_scheme_flags(verify_cmd);
  verify_cmd->add_option("--mode", mode, "exhaustive|random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--seed", seed, "random-mode seed");
  verify_cmd->add_option("--samples", samples, "random-mode sample count");
  verify_cmd->add_option("--sweep-receivers", sweep_receivers,
                         "sweep all profiles with this receiver count (2|3)");
  verify_cmd->add_option("--sweep-max", sweep_max, "sweep per-group count bound");
  verify_cmd->add_option("--out", out_path, "report file (default stdout)");
  verify_cmd->add_option("--format", format, "jsonl")
      ->check(CLI::IsMember({"jsonl"}));

  auto* alloc_cmd = app.add_subcommand("alloc", "greedy max-sum-rate allocation");
  alloc_cmd->add_option("--topology", topology_paths, "topology JSON file")
      ->required();
  alloc_cmd->add_flag("--greedy", "use the greedy allocator (default)");

  auto* matrix_cmd = app.add_subcommand("channel-matrix", "per-receiver channel matrix");
  matrix_cmd->add_option("--topology", topology_paths, "topology JSON file")
      ->required();
  matrix_cmd->add_option("--receiver", opts.receiver, "receiver index (1-based)")
      ->required();
  matrix_cmd->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (region_cmd->parsed()) return cmd_region(topology_paths, out_path, format);
    const std::string first = topology_paths.empty() ? "" : topology_paths.front();
    if (encode_cmd->parsed()) return cmd_encode(first, opts, message_arg);
    if (decode_cmd->parsed()) return cmd_decode(first, opts, levels_arg);
    if (verify_cmd->parsed())
      return cmd_verify(first, opts, mode, seed, samples, sweep_receivers,
                        sweep_max, out_path);
    if (alloc_cmd->parsed()) return cmd_alloc(first);
    if (matrix_cmd->parsed())
      return cmd_channel_matrix(first, opts.receiver, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
