#include "biolink/phy/ber.hpp"

#include "biolink/common/errors.hpp"
#include "biolink/common/parallel.hpp"
#include "biolink/common/units.hpp"
#include "biolink/fec/bits.hpp"
#include "biolink/fec/hamming.hpp"
#include "biolink/fec/reed_solomon.hpp"
#include "biolink/phy/channel.hpp"

namespace biolink::phy {

namespace {

constexpr std::uint64_t kTargetBlockBits = 4096;

struct BlockTally {
  std::uint64_t bits = 0;
  std::uint64_t errors = 0;
};

std::vector<std::uint8_t> random_bits(std::size_t n, Rng& rng) {
  std::vector<std::uint8_t> bits(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
  }
  return bits;
}

std::vector<std::uint8_t> encode(CodeScheme code, std::span<const std::uint8_t> info) {
  switch (code) {
    case CodeScheme::None:
      return {info.begin(), info.end()};
    case CodeScheme::Hamming15_11: {
      std::vector<std::uint8_t> out;
      out.reserve(info.size() / fec::kHammingK * fec::kHammingN);
      for (std::size_t i = 0; i < info.size(); i += fec::kHammingK) {
        const auto cw = fec::hamming_encode(info.subspan(i, fec::kHammingK));
        out.insert(out.end(), cw.begin(), cw.end());
      }
      return out;
    }
    case CodeScheme::Rs31_26: {
      std::vector<std::uint8_t> out;
      constexpr std::size_t kInfo = fec::kRsK * fec::kRsBitsPerSymbol;
      out.reserve(info.size() / kInfo * fec::kRsN * fec::kRsBitsPerSymbol);
      for (std::size_t i = 0; i < info.size(); i += kInfo) {
        const auto msg = fec::bits_to_symbols(info.subspan(i, kInfo));
        const auto cw = fec::rs_encode(msg);
        const auto bits = fec::symbols_to_bits(cw);
        out.insert(out.end(), bits.begin(), bits.end());
      }
      return out;
    }
  }
  return {};
}

std::vector<std::uint8_t> decode(CodeScheme code, std::span<const std::uint8_t> coded) {
  switch (code) {
    case CodeScheme::None:
      return {coded.begin(), coded.end()};
    case CodeScheme::Hamming15_11: {
      std::vector<std::uint8_t> out;
      out.reserve(coded.size() / fec::kHammingN * fec::kHammingK);
      for (std::size_t i = 0; i < coded.size(); i += fec::kHammingN) {
        const auto r = fec::hamming_decode(coded.subspan(i, fec::kHammingN));
        out.insert(out.end(), r.message.begin(), r.message.end());
      }
      return out;
    }
    case CodeScheme::Rs31_26: {
      std::vector<std::uint8_t> out;
      constexpr std::size_t kCoded = fec::kRsN * fec::kRsBitsPerSymbol;
      for (std::size_t i = 0; i < coded.size(); i += kCoded) {
        const auto word = fec::bits_to_symbols(coded.subspan(i, kCoded));
        const auto r = fec::rs_decode(word);
        const auto bits = fec::symbols_to_bits(r.message);
        out.insert(out.end(), bits.begin(), bits.end());
      }
      return out;
    }
  }
  return {};
}

BlockTally run_block(const PhyConfig& cfg, double channel_snr_db, std::uint64_t block) {
  Rng rng(derive_seed(cfg.seed, block));
  const auto info = random_bits(block_info_bits(cfg.code), rng);
  const auto coded = encode(cfg.code, info);
  const auto tx = modulate(coded, cfg.modulation, cfg.amplitude);
  const auto rx = awgn(tx, channel_snr_db, rng,
                       average_symbol_energy(cfg.modulation, cfg.amplitude));
  const auto decided = demodulate(rx, cfg.modulation, cfg.amplitude);
  const auto recovered = decode(cfg.code, decided);
  BlockTally t{info.size(), 0};
  for (std::size_t i = 0; i < info.size(); ++i) t.errors += info[i] != recovered[i];
  return t;
}

}  // namespace

std::string_view to_string(CodeScheme c) {
  switch (c) {
    case CodeScheme::None: return "none";
    case CodeScheme::Hamming15_11: return "hamming15_11";
    case CodeScheme::Rs31_26: return "rs31_26";
  }
  return "?";
}

double code_rate(CodeScheme c) {
  switch (c) {
    case CodeScheme::None: return 1.0;
    case CodeScheme::Hamming15_11: return fec::kHammingRate;
    case CodeScheme::Rs31_26: return fec::kRsRate;
  }
  return 1.0;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double ber_theory(ModScheme scheme, double ebn0_db) {
  const double ebn0 = units::from_db(ebn0_db);
  return scheme == ModScheme::Bpsk ? q_function(std::sqrt(2.0 * ebn0))
                                   : q_function(std::sqrt(ebn0));
}

std::uint64_t block_info_bits(CodeScheme c) {
  std::uint64_t k = 1;
  if (c == CodeScheme::Hamming15_11) k = fec::kHammingK;
  if (c == CodeScheme::Rs31_26) k = fec::kRsK * fec::kRsBitsPerSymbol;
  return (kTargetBlockBits + k - 1) / k * k;
}

BerResult ber_monte_carlo(const PhyConfig& cfg, double ebn0_db) {
  if (cfg.max_bits == 0) throw ArgumentError("ber_monte_carlo: max_bits must be > 0");
  if (std::isnan(ebn0_db)) throw ArgumentError("ber_monte_carlo: Eb/N0 is NaN");
  // Real-baseband noise per dimension is N0/2, so the channel SNR handed to
  // awgn (Es / sigma^2) is 2 Es/N0.
  const double es_n0_db = ebn0_db + units::to_db(code_rate(cfg.code));
  const double channel_snr_db = es_n0_db + units::to_db(2.0);

  BerResult r;
  const unsigned wave = std::max(1u, cfg.workers);
  std::uint64_t next_block = 0;
  for (;;) {
    auto tallies = parallel_map(wave, cfg.workers, [&](std::size_t i) {
      return run_block(cfg, channel_snr_db, next_block + i);
    });
    next_block += wave;
    for (const auto& t : tallies) {
      r.bits += t.bits;
      r.errors += t.errors;
      const bool enough = r.bits >= cfg.min_bits && r.errors >= cfg.min_errors;
      if (enough || r.bits >= cfg.max_bits) {
        r.ber = static_cast<double>(r.errors) / static_cast<double>(r.bits);
        r.low_confidence = r.errors < cfg.min_errors;
        return r;
      }
    }
  }
}

std::vector<BerPoint> ber_vs_distance(const link::LinkConfig& link,
                                      const link::NoiseModel& noise, const PhyConfig& cfg,
                                      std::span<const double> distances) {
  const auto sweep = link::backscatter_sweep(link, noise, distances);
  std::vector<BerPoint> out;
  out.reserve(sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    PhyConfig point_cfg = cfg;
    point_cfg.seed = derive_seed(cfg.seed, i);
    BerPoint p;
    p.distance = sweep[i].distance;
    p.snr_db = sweep[i].snr_db;
    p.ebn0_db = p.snr_db - units::to_db(code_rate(cfg.code));
    p.result = ber_monte_carlo(point_cfg, p.ebn0_db);
    out.push_back(p);
  }
  return out;
}

}  // namespace biolink::phy
