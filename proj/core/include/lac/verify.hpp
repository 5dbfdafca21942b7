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

#ifndef LAC_VERIFY_HPP_
#define LAC_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lac/jrc.hpp"
#include "lac/topology.hpp"

namespace lac::verify {

/// xorshift64* with a fixed scrambling constant, so reports are
/// reproducible across platforms and implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed)
      : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
  }

  /// Uniform-ish draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct SchemeParams {
  enum class Kind { Src, Erc, Jrc };
  Kind kind = Kind::Src;
  int receiver = 0;                        // SRC only
  jrc::PairAssignment assignment;          // JRC: higher-order pair choices
  std::optional<jrc::Allocation> alloc;    // JRC only
};

struct Mode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  static Mode Exhaustive() { return {true, 0, 0}; }
  static Mode Random(std::uint64_t seed, std::uint64_t samples) {
    return {false, seed, samples};
  }
};

struct Failure {
  std::vector<int> message;
  std::vector<int> frame;
  std::vector<int> received;
  std::vector<int> decoded;
};

struct VerificationReport {
  std::string scheme;
  std::string params;  // serialized JSON object
  std::uint64_t tested = 0;
  std::vector<Failure> failures;
  std::vector<double> rates;  // empirical, log2(distinct decoded values)

  /// One JSON object, no trailing newline.
  std::string to_json_line() const;
};

/// Runs encode -> transmit -> decode over the scheme's message box
/// (exhaustive) or over seeded uniform draws (random), recording every
/// mismatch.  Exhaustive mode requires a box of at most 10^7 messages.
VerificationReport verify_scheme(const topo::Topology& t, const SchemeParams& params,
                                 const Mode& mode);

/// Exhaustive verification of every valid allocation of every pairwise
/// profile with the given receiver count (2 or 3) and all group counts at
/// most `max_count`.  Reports come in canonical configuration order;
/// throws if the total message count would exceed 10^7.
std::vector<VerificationReport> sweep_parameter_space(int receivers, int max_count);

}  // namespace lac::verify

#endif  // LAC_VERIFY_HPP_
