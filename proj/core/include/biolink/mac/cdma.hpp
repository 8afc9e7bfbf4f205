#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "biolink/mac/aloha.hpp"

namespace biolink::mac {

enum class CodeFamily { Random, Walsh };

std::string_view to_string(CodeFamily f);

struct SpreadingCode {
  std::vector<std::int8_t> chips;  // +-1
  CodeFamily family = CodeFamily::Random;

  std::size_t length() const { return chips.size(); }
};

/// Lengths the deployment study considers.
inline constexpr int kCodeLengths[] = {16, 32, 64, 128, 256};

/// Sylvester-Hadamard rows; `length` must be a power of two.
std::vector<SpreadingCode> walsh_codes(int length);

/// I.i.d. fair +-1 chips.
SpreadingCode random_code(int length, Rng& rng);

/// Static codes for one session. Random: fresh i.i.d. code per mote. Walsh:
/// the `length` orthogonal rows in a random order, reused cyclically when
/// there are more motes than rows.
std::vector<SpreadingCode> assign_codes(int n_motes, CodeFamily family, int length, Rng& rng);

/// +-1 data for each mote, `bits` per mote.
using MoteBits = std::vector<std::vector<std::int8_t>>;

/// Synchronous despreading: the reader correlates the summed chip stream
/// with each mote's code, decides each bit by sign (0 decides +1), and a
/// mote counts only if its whole packet is recovered. Evaluated through
/// the code cross-correlation matrix.
int cdma_successes(std::span<const SpreadingCode> codes, const MoteBits& bits);

/// Same decision computed chip by chip on the summed waveform.
int cdma_successes_chip_level(std::span<const SpreadingCode> codes, const MoteBits& bits);

struct CdmaScenario {
  int n_motes = 1;
  CodeFamily family = CodeFamily::Random;
  int code_length = 128;
  int packet_bytes = 64;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
};

/// Mean whole-packet successes; trial t uses derive_seed(seed, t).
MeanSuccesses cdma_simulate(const CdmaScenario& sc, unsigned workers = 1);

}  // namespace biolink::mac
