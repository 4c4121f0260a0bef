// SPDX-License-Identifier: MIT

#include "p3dk/bench.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <ctime>
#include <random>

#include "p3dk/container.hpp"
#include "p3dk/error.hpp"
#include "p3dk/keyed_rng.hpp"

namespace p3dk::bench {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps timed results observable so the optimizer cannot drop the work.
volatile std::uint64_t g_sink = 0;

double elapsed_ms(Clock::time_point start, Clock::time_point stop) {
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void validate(const TimingOptions &options) {
  if (options.trials < 1) throw UsageError("trials must be at least 1");
  if (options.warmup < 0) throw UsageError("warmup must be non-negative");
}

BenchReport new_report(std::string experiment, const TimingOptions &options) {
  BenchReport r;
  r.experiment = std::move(experiment);
  r.unit = "ms";
  r.metadata = {{"timestamp", utc_timestamp()},
                {"trials", std::to_string(options.trials)},
                {"warmup", std::to_string(options.warmup)},
                {"statistic", "median"}};
  return r;
}

std::vector<std::uint8_t> harness_bytes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::uint8_t> out(n);
  for (std::uint8_t &b : out) b = static_cast<std::uint8_t>(gen() >> 56);
  return out;
}

// Runs warmup rounds, then `trials` rounds; every round visits every case
// once so slow drift hits all cases alike. Returns per-case medians.
template <typename Run>
std::vector<double> interleaved_medians(std::size_t cases, const TimingOptions &options, Run run) {
  std::vector<std::vector<double>> samples(cases);
  for (int w = 0; w < options.warmup; ++w) {
    for (std::size_t c = 0; c < cases; ++c) run(c);
  }
  // Rotate the starting case so no case is pinned to the first slot of a pass.
  for (int t = 0; t < options.trials; ++t) {
    for (std::size_t k = 0; k < cases; ++k) {
      const std::size_t c = (k + static_cast<std::size_t>(t)) % cases;
      samples[c].push_back(run(c));
    }
  }
  std::vector<double> medians;
  medians.reserve(cases);
  for (auto &s : samples) medians.push_back(median(std::move(s)));
  return medians;
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) throw UsageError("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw UsageError("linear fit needs at least two paired points");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : (ss_res == 0 ? 1.0 : 0.0);
  return fit;
}

bool non_decreasing(const BenchReport &report) {
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].value < report.rows[i - 1].value) return false;
  }
  return true;
}

BenchReport bench_filesize(std::span<const unsigned> sizes_kb, const MasterKey &key, TimingOptions options) {
  validate(options);
  if (sizes_kb.empty()) throw UsageError("no file sizes given");
  std::vector<unsigned> sizes(sizes_kb.begin(), sizes_kb.end());
  if (std::find(sizes.begin(), sizes.end(), 0u) != sizes.end()) {
    throw UsageError("file sizes must be positive");
  }
  std::sort(sizes.begin(), sizes.end());

  const std::vector<std::uint8_t> data = harness_bytes(std::size_t{sizes.back()} * 1024, kHarnessSeed);
  const std::vector<double> medians = interleaved_medians(sizes.size(), options, [&](std::size_t c) {
    const std::span<const std::uint8_t> input(data.data(), std::size_t{sizes[c]} * 1024);
    const auto start = Clock::now();
    const CipherContainer out = encrypt_stream(input, key);
    const auto stop = Clock::now();
    g_sink = g_sink + out.blocks.back()[0];
    return elapsed_ms(start, stop);
  });

  BenchReport report = new_report("encryption time vs file size (KB)", options);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    report.rows.push_back({std::to_string(sizes[i]), medians[i]});
  }
  report.metadata.emplace_back("input", "pseudo-random bytes, harness seed");
  report.metadata.emplace_back("reference_proposed_s",
                               "20=28;35=58;155=261;100=468;300=468;512=501 (published table, other hardware)");
  return report;
}

BenchReport bench_rotations(unsigned max_count, TimingOptions options) {
  validate(options);
  if (max_count > static_cast<unsigned>(kSboxRotations)) {
    throw UsageError("rotation count must lie in [0, 16]");
  }
  // Each sample repeats the rotation call so it spans many clock ticks.
  constexpr int kRepeats = 32;
  SBox3D box = SBox3D::build(0);
  const std::size_t cases = max_count + 1;
  const std::vector<double> medians = interleaved_medians(cases, options, [&](std::size_t n) {
    const auto start = Clock::now();
    for (int i = 0; i < kRepeats; ++i) box.rotate_in_place(static_cast<unsigned>(n));
    const auto stop = Clock::now();
    g_sink = g_sink + box.substitute_packed(0);
    return elapsed_ms(start, stop) / kRepeats;
  });

  BenchReport report = new_report("time vs S-box rotation count", options);
  std::vector<double> xs;
  for (std::size_t n = 0; n < cases; ++n) {
    report.rows.push_back({std::to_string(n), medians[n]});
    xs.push_back(static_cast<double>(n));
  }
  report.metadata.emplace_back("repeats_per_sample", std::to_string(kRepeats));
  if (cases >= 2) {
    const LinearFit fit = fit_line(xs, medians);
    report.metadata.emplace_back("slope_ms_per_rotation", std::to_string(fit.slope));
    report.metadata.emplace_back("intercept_ms", std::to_string(fit.intercept));
    report.metadata.emplace_back("r_squared", std::to_string(fit.r_squared));
  }
  report.metadata.emplace_back("reference_ms", "0.003 per rotation, 0.000 at 0, 0.048 at 16 (published table)");
  return report;
}

BenchReport bench_sboxgen(std::span<const unsigned> bit_lengths, TimingOptions options) {
  validate(options);
  if (bit_lengths.empty()) throw UsageError("no bit lengths given");
  std::vector<unsigned> lengths(bit_lengths.begin(), bit_lengths.end());
  for (unsigned l : lengths) {
    if (std::find(kDefaultBitLengths.begin(), kDefaultBitLengths.end(), l) == kDefaultBitLengths.end()) {
      throw UsageError("bit length must be one of 3, 9, 27, 81, 243; got " + std::to_string(l));
    }
  }
  std::sort(lengths.begin(), lengths.end());

  constexpr int kRepeats = 4;
  const std::vector<std::uint8_t> message = harness_bytes(kPlainBlockBytes, kHarnessSeed ^ 0x9E3779B97F4A7C15ull);
  const std::vector<double> medians = interleaved_medians(lengths.size(), options, [&](std::size_t c) {
    const std::size_t bits = lengths[c];
    const std::size_t used_bytes = (bits + 7) / 8;
    const auto start = Clock::now();
    for (int i = 0; i < kRepeats; ++i) {
      const Block31 padded = pad_block(message, bits);
      std::array<std::uint8_t, kStateBytes> encoded{};
      for (std::size_t p = 0; p < used_bytes; ++p) {
        const SymbolTriple t = encode_byte(padded[p], p);
        encoded[3 * p] = static_cast<std::uint8_t>(t.row_digit);
        encoded[3 * p + 1] = static_cast<std::uint8_t>(t.col_digit);
        encoded[3 * p + 2] = static_cast<std::uint8_t>(t.depth_symbol);
      }
      KeyedRng rng = KeyedRng::seed_from_bytes(std::span(encoded.data(), 3 * used_bytes));
      const SBox3D box = SBox3D::build(static_cast<int>(rng.next_below(kSboxRotations)));
      g_sink = g_sink + box.substitute_packed(static_cast<std::uint16_t>(i));
    }
    const auto stop = Clock::now();
    return elapsed_ms(start, stop) / kRepeats;
  });

  BenchReport report = new_report("setup time vs input bit length", options);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    report.rows.push_back({std::to_string(lengths[i]), medians[i]});
  }
  report.metadata.emplace_back("repeats_per_sample", std::to_string(kRepeats));
  report.metadata.emplace_back("reference_ms", "3=0.0003;9=0.0057;81=0.0285;243=0.057 (published table)");
  return report;
}

AvalancheStats measure_avalanche(std::size_t key_count, std::size_t flips_per_key, std::uint64_t seed) {
  if (key_count == 0 || flips_per_key == 0) {
    throw UsageError("avalanche needs at least one key and one flip");
  }
  std::mt19937_64 gen(seed);
  auto random_block = [&gen] {
    Block31 b{};
    for (std::uint8_t &x : b) x = static_cast<std::uint8_t>(gen() >> 56);
    b[kPlainBlockBytes - 1] &= 0xE0;
    return b;
  };

  std::vector<double> fractions;
  fractions.reserve(key_count * flips_per_key);
  for (std::size_t k = 0; k < key_count; ++k) {
    const ExpandedKey ek = expand_key(MasterKey::from_bytes(random_block()));
    for (std::size_t f = 0; f < flips_per_key; ++f) {
      Block31 plain = random_block();
      const std::size_t bit = static_cast<std::size_t>(gen() % kBlockBits);
      const Block93 c0 = encrypt_block(plain, ek);
      plain[bit / 8] ^= static_cast<std::uint8_t>(0x80 >> (bit % 8));
      const Block93 c1 = encrypt_block(plain, ek);
      int changed = 0;
      for (std::size_t i = 0; i < kStateBytes; ++i) changed += std::popcount(static_cast<unsigned>(c0[i] ^ c1[i]));
      fractions.push_back(static_cast<double>(changed) / static_cast<double>(kStateBits));
    }
  }

  AvalancheStats stats;
  stats.samples = fractions.size();
  double sum = 0;
  for (double f : fractions) sum += f;
  stats.mean = sum / static_cast<double>(fractions.size());
  if (fractions.size() > 1) {
    double ss = 0;
    for (double f : fractions) ss += (f - stats.mean) * (f - stats.mean);
    stats.stddev = std::sqrt(ss / static_cast<double>(fractions.size() - 1));
  }
  return stats;
}

BenchReport avalanche(std::size_t key_count, std::size_t flips_per_key, std::uint64_t seed) {
  const AvalancheStats stats = measure_avalanche(key_count, flips_per_key, seed);
  BenchReport report;
  report.experiment = "avalanche (fraction of 744 ciphertext bits flipped)";
  report.unit = "fraction";
  report.rows = {{"mean", stats.mean}, {"stddev", stats.stddev}};
  report.metadata = {{"timestamp", utc_timestamp()},
                     {"keys", std::to_string(key_count)},
                     {"flips_per_key", std::to_string(flips_per_key)},
                     {"samples", std::to_string(stats.samples)},
                     {"seed", std::to_string(seed)}};
  return report;
}

}  // namespace p3dk::bench
