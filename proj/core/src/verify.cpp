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

#include "lac/verify.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "lac/channel.hpp"
#include "lac/schemes.hpp"

namespace lac::verify {

namespace {

constexpr std::uint64_t kExhaustiveBound = 10'000'000;

std::vector<int> frame_ints(const channel::TransmitFrame& f) {
  return std::vector<int>(f.bits.begin(), f.bits.end());
}

struct Trial {
  std::vector<int> message;
  channel::TransmitFrame frame;
  channel::ReceivedLevels received;
  std::vector<int> decoded;
  bool ok = false;
};

/// One encode -> transmit -> decode pass for a message in the box.
class Runner {
 public:
  Runner(const topo::Topology& t, const SchemeParams& params)
      : t_(t), params_(params) {
    switch (params.kind) {
      case SchemeParams::Kind::Src: {
        const int rx = params.receiver;
        if (rx < 0 || rx >= t.receivers())
          throw std::invalid_argument("verify: receiver index out of range");
        box_ = {t.fan_in(rx) + 1};
        break;
      }
      case SchemeParams::Kind::Erc: {
        erc_ = schemes::erc_code(t);
        if (!erc_)
          throw std::invalid_argument("verify: topology matrix is not full rank");
        box_.assign(t.receivers(), 2);
        break;
      }
      case SchemeParams::Kind::Jrc: {
        if (!params.alloc)
          throw std::invalid_argument("verify: jrc requires an allocation");
        const auto higher = jrc::higher_transmitters(t);
        pure_pairwise_ = higher.empty();
        profile_ = pure_pairwise_
                       ? jrc::pairwise_profile(t)
                       : jrc::convert_to_pairwise(t, params.assignment);
        jrc::validate_allocation(*profile_, *params.alloc);
        box_ = jrc::moduli(*profile_, *params.alloc);
        break;
      }
    }
  }

  std::uint64_t box_size() const {
    std::uint64_t n = 1;
    for (int c : box_) n *= static_cast<std::uint64_t>(c);
    return n;
  }

  std::vector<int> unpack(std::uint64_t index) const {
    std::vector<int> b(box_.size());
    for (std::size_t i = 0; i < box_.size(); ++i) {
      b[i] = static_cast<int>(index % static_cast<std::uint64_t>(box_[i]));
      index /= static_cast<std::uint64_t>(box_[i]);
    }
    return b;
  }

  Trial run(const std::vector<int>& b) const {
    Trial trial;
    trial.message = b;
    switch (params_.kind) {
      case SchemeParams::Kind::Src:
        trial.frame = schemes::src_encode(t_, params_.receiver, b[0]);
        trial.received = channel::transmit(t_, trial.frame);
        trial.decoded = {schemes::src_decode(trial.received, params_.receiver)};
        break;
      case SchemeParams::Kind::Erc:
        trial.frame = schemes::erc_encode(t_, *erc_, b);
        trial.received = channel::transmit(t_, trial.frame);
        trial.decoded = schemes::erc_decode(trial.received);
        break;
      case SchemeParams::Kind::Jrc: {
        auto cw = pure_pairwise_
                      ? jrc::jrcn_encode(*profile_, *params_.alloc, b)
                      : jrc::general_encode_auto(t_, params_.assignment,
                                                 *params_.alloc, b);
        trial.frame = jrc::realize_frame(t_, cw);
        trial.received = channel::transmit(t_, trial.frame);
        trial.decoded = jrc::jrcn_decode(trial.received, box_);
        break;
      }
    }
    trial.ok = trial.decoded == trial.message;
    return trial;
  }

  /// Maps a decoded vector onto per-receiver values for rate counting.
  void note_decoded(const Trial& trial,
                    std::vector<std::set<int>>& decoded_values) const {
    if (params_.kind == SchemeParams::Kind::Src) {
      decoded_values[params_.receiver].insert(trial.decoded[0]);
      return;
    }
    for (std::size_t i = 0; i < trial.decoded.size(); ++i)
      decoded_values[i].insert(trial.decoded[i]);
  }

 private:
  const topo::Topology& t_;
  const SchemeParams& params_;
  std::vector<int> box_;
  std::optional<schemes::ErcCode> erc_;
  std::optional<jrc::PairwiseProfile> profile_;
  bool pure_pairwise_ = true;
};

std::string scheme_name(SchemeParams::Kind kind) {
  switch (kind) {
    case SchemeParams::Kind::Src: return "src";
    case SchemeParams::Kind::Erc: return "erc";
    case SchemeParams::Kind::Jrc: return "jrc";
  }
  return "?";
}

std::string params_json(const SchemeParams& params) {
  nlohmann::json j = nlohmann::json::object();
  switch (params.kind) {
    case SchemeParams::Kind::Src:
      j["receiver"] = params.receiver + 1;
      break;
    case SchemeParams::Kind::Erc:
      break;
    case SchemeParams::Kind::Jrc: {
      nlohmann::json split = nlohmann::json::array();
      for (const auto& row : params.alloc->split) split.push_back(row);
      j["split"] = split;
      if (!params.assignment.empty()) {
        nlohmann::json assign = nlohmann::json::array();
        for (const auto& [i, p] : params.assignment)
          assign.push_back({i + 1, p + 1});
        j["assignment"] = assign;
      }
      break;
    }
  }
  return j.dump();
}

}  // namespace

std::string VerificationReport::to_json_line() const {
  nlohmann::json j;
  j["scheme"] = scheme;
  j["params"] = nlohmann::json::parse(params);
  j["tested"] = tested;
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) {
    fails.push_back({{"message", f.message},
                     {"frame", f.frame},
                     {"received", f.received},
                     {"decoded", f.decoded}});
  }
  j["failures"] = fails;
  j["rates"] = rates;
  return j.dump();
}

VerificationReport verify_scheme(const topo::Topology& t, const SchemeParams& params,
                                 const Mode& mode) {
  Runner runner(t, params);
  const std::uint64_t box = runner.box_size();
  if (mode.exhaustive && box > kExhaustiveBound)
    throw std::invalid_argument("verify: message box exceeds the exhaustive bound");

  VerificationReport report;
  report.scheme = scheme_name(params.kind);
  report.params = params_json(params);
  std::vector<std::set<int>> decoded_values(t.receivers());

  auto record = [&](const Trial& trial) {
    ++report.tested;
    if (trial.ok) {
      runner.note_decoded(trial, decoded_values);
    } else {
      report.failures.push_back({trial.message, frame_ints(trial.frame),
                                 trial.received.levels, trial.decoded});
    }
  };

  if (mode.exhaustive) {
    for (std::uint64_t index = 0; index < box; ++index)
      record(runner.run(runner.unpack(index)));
  } else {
    Rng rng(mode.seed);
    for (std::uint64_t s = 0; s < mode.samples; ++s)
      record(runner.run(runner.unpack(rng.below(box))));
  }

  report.rates.resize(t.receivers());
  for (int i = 0; i < t.receivers(); ++i) {
    const std::size_t distinct = std::max<std::size_t>(decoded_values[i].size(), 1);
    report.rates[i] = std::log2(static_cast<double>(distinct));
  }
  return report;
}

std::vector<VerificationReport> sweep_parameter_space(int receivers, int max_count) {
  if (receivers != 2 && receivers != 3)
    throw std::invalid_argument("verify: sweep supports 2 or 3 receivers");
  if (max_count < 0) throw std::invalid_argument("verify: negative bound");

  const int m = receivers;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int p = i + 1; p < m; ++p) pairs.emplace_back(i, p);
  const int dims = m + static_cast<int>(pairs.size());

  std::vector<VerificationReport> reports;
  std::uint64_t total = 0;

  std::vector<int> counts(dims, 0);
  // Odometer over (t_1..t_m, t_{ip}...), first coordinate slowest.
  while (true) {
    jrc::PairwiseProfile profile(m);
    for (int i = 0; i < m; ++i) profile.exclusive[i] = counts[i];
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      profile.shared[pairs[q].first][pairs[q].second] = counts[m + q];
      profile.shared[pairs[q].second][pairs[q].first] = counts[m + q];
    }
    const auto t = jrc::make_topology(profile);
    for (const auto& alloc : jrc::enumerate_allocations(profile)) {
      // Valid allocations whose box is not fully encodable are outside
      // the codec's claimed domain; skip them.
      if (!jrc::allocation_supported(profile, alloc)) continue;
      SchemeParams params;
      params.kind = SchemeParams::Kind::Jrc;
      params.alloc = alloc;
      auto report = verify_scheme(t, params, Mode::Exhaustive());
      total += report.tested;
      if (total > kExhaustiveBound)
        throw std::invalid_argument("verify: sweep exceeds the exhaustive bound");
      reports.push_back(std::move(report));
    }

    int pos = dims - 1;
    while (pos >= 0 && counts[pos] == max_count) counts[pos--] = 0;
    if (pos < 0) break;
    ++counts[pos];
  }
  return reports;
}

}  // namespace lac::verify
