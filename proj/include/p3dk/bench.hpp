// SPDX-License-Identifier: MIT
//
// Timing experiments: encryption time vs file size, S-box rotation cost vs
// rotation count, per-message setup cost vs input bit length, plus an
// avalanche statistic. Timings use steady_clock, exclude warmup runs, and
// report the median over trials. All timed sections are single-threaded.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "p3dk/cipher.hpp"
#include "p3dk/report.hpp"

namespace p3dk::bench {

inline constexpr std::uint64_t kHarnessSeed = 0x5EED'3D4B'6D61'7472ull;

struct TimingOptions {
  int trials = 5;
  int warmup = 1;
};

inline const std::vector<unsigned> kDefaultFileSizesKb = {20, 35, 155, 333, 512};
inline const std::vector<unsigned> kDefaultBitLengths = {3, 9, 27, 81, 243};

/// Median encrypt_stream time (ms) per size. Inputs are generated from the
/// harness seed. UsageError on an empty or zero size, or trials < 1.
BenchReport bench_filesize(std::span<const unsigned> sizes_kb, const MasterKey &key,
                           TimingOptions options = {});

/// Median time (ms) of n unit rotations for n = 0..max_count, with the
/// least-squares slope, intercept and R^2 in the metadata.
/// UsageError unless max_count <= 16 and trials >= 1.
BenchReport bench_rotations(unsigned max_count, TimingOptions options = {});

/// Median time (ms) of one per-message setup for an L-bit input: pad to a
/// block, cube-encode, seed the keyed generator, build the drawn S-box.
/// UsageError unless every length is one of 3, 9, 27, 81, 243.
BenchReport bench_sboxgen(std::span<const unsigned> bit_lengths, TimingOptions options = {});

struct AvalancheStats {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t samples = 0;
};

/// Fraction of the 744 ciphertext bits that change under a random
/// single-bit plaintext flip, over key_count random keys with
/// flips_per_key fresh plaintexts each. UsageError on zero counts.
AvalancheStats measure_avalanche(std::size_t key_count, std::size_t flips_per_key,
                                 std::uint64_t seed = kHarnessSeed);
BenchReport avalanche(std::size_t key_count, std::size_t flips_per_key,
                      std::uint64_t seed = kHarnessSeed);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);
double median(std::vector<double> values);
bool non_decreasing(const BenchReport &report);

}  // namespace p3dk::bench
