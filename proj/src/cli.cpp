// SPDX-License-Identifier: MIT

#include "p3dk/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>

#include "p3dk/bench.hpp"
#include "p3dk/container.hpp"
#include "p3dk/error.hpp"

namespace p3dk::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::uint8_t> read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading " + path.string());
  return data;
}

void write_file(const fs::path &path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char *>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

void write_text(std::ostream &out, const fs::path &path, const std::string &text) {
  if (path.empty()) {
    out << text;
    return;
  }
  write_file(path, std::span(reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

bool same_path(const fs::path &a, const fs::path &b) {
  std::error_code ec;
  if (fs::exists(a, ec) && fs::exists(b, ec)) return fs::equivalent(a, b, ec);
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

struct Paths {
  std::string key;
  std::string in;
  std::string out;
};

struct BenchArgs {
  std::vector<unsigned> sizes;
  int trials = 5;
  int warmup = 1;
  unsigned max_count = 16;
  std::string out;
  std::string svg;
};

void emit_report(const BenchReport &report, const BenchArgs &args) {
  emit_csv(report, args.out);
  if (!args.svg.empty()) emit_svg(report, args.svg);
}

void add_bench_flags(CLI::App *cmd, BenchArgs &args, bool with_sizes) {
  if (with_sizes) {
    cmd->add_option("--sizes", args.sizes, "Comma-separated list")->delimiter(',');
  }
  cmd->add_option("--trials", args.trials, "Timed trials per point")->check(CLI::PositiveNumber);
  cmd->add_option("--warmup", args.warmup, "Untimed warmup rounds")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", args.out, "CSV output path")->required();
  cmd->add_option("--svg", args.svg, "SVG chart output path");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"p3dk: 243-bit cube/S-box block cipher toolkit (experimental, no security claim)"};
  app.name(args.empty() ? "p3dk" : args.front());
  app.require_subcommand(1);
  app.allow_windows_style_options(false);

  std::string keygen_out;
  auto *keygen = app.add_subcommand("keygen", "Write a random 31-byte key (last 5 bits zero)");
  keygen->add_option("--out", keygen_out, "Key file to create")->required();

  Paths enc, dec;
  auto *encrypt = app.add_subcommand("encrypt", "Encrypt a file into a P3DK container");
  encrypt->add_option("--key", enc.key, "31-byte key file")->required();
  encrypt->add_option("--in", enc.in, "Plaintext file")->required();
  encrypt->add_option("--out", enc.out, "Container to write")->required();
  auto *decrypt = app.add_subcommand("decrypt", "Decrypt a P3DK container");
  decrypt->add_option("--key", dec.key, "31-byte key file")->required();
  decrypt->add_option("--in", dec.in, "Container file")->required();
  decrypt->add_option("--out", dec.out, "Plaintext to write")->required();

  BenchArgs filesize_args, rotations_args, sboxgen_args;
  auto *bench = app.add_subcommand("bench", "Timing experiments");
  bench->require_subcommand(1);
  auto *filesize = bench->add_subcommand("filesize", "Encryption time vs file size (KB)");
  add_bench_flags(filesize, filesize_args, true);
  auto *rotations = bench->add_subcommand("rotations", "Time vs S-box rotation count");
  add_bench_flags(rotations, rotations_args, false);
  rotations->add_option("--max-count", rotations_args.max_count, "Largest rotation count (<= 16)")
      ->check(CLI::Range(0u, 16u));
  auto *sboxgen = bench->add_subcommand("sboxgen", "Setup time vs input bit length");
  add_bench_flags(sboxgen, sboxgen_args, true);

  std::size_t av_trials = 1000;
  std::size_t av_flips = 1;
  std::uint64_t av_seed = bench::kHarnessSeed;
  std::string av_out;
  auto *aval = app.add_subcommand("avalanche", "Single-bit-flip diffusion statistic");
  aval->add_option("--trials", av_trials, "Number of random keys")->check(CLI::PositiveNumber);
  aval->add_option("--flips-per-key", av_flips, "Plaintext flips per key")->check(CLI::PositiveNumber);
  aval->add_option("--seed", av_seed, "Harness seed");
  aval->add_option("--out", av_out, "CSV output path")->required();

  std::string cube_out;
  auto *dump_cube_cmd = app.add_subcommand("dump-cube", "Print the 9x9x9 symbol cube");
  dump_cube_cmd->add_option("--out", cube_out, "Write to a file instead of stdout");

  int sbox_rotation = 0;
  std::string sbox_out;
  auto *dump_sbox_cmd = app.add_subcommand("dump-sbox", "Print the S-box table for one rotation");
  dump_sbox_cmd->add_option("--rotation", sbox_rotation, "Rotation R in [0, 15]")->required();
  dump_sbox_cmd->add_option("--out", sbox_out, "Write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*keygen) {
      std::random_device rd;
      std::array<std::uint8_t, kPlainBlockBytes> key{};
      for (std::uint8_t &b : key) b = static_cast<std::uint8_t>(rd() & 0xFF);
      key.back() &= 0xE0;
      write_file(keygen_out, key);
    } else if (*encrypt) {
      if (same_path(enc.in, enc.out)) throw UsageError("--in and --out must differ");
      const MasterKey key = load_key_file(enc.key);
      const std::vector<std::uint8_t> plain = read_file(enc.in);
      write_file(enc.out, encrypt_stream(plain, key).serialize());
    } else if (*decrypt) {
      if (same_path(dec.in, dec.out)) throw UsageError("--in and --out must differ");
      const MasterKey key = load_key_file(dec.key);
      const CipherContainer container = CipherContainer::parse(read_file(dec.in));
      write_file(dec.out, decrypt_stream(container, key));
    } else if (*filesize) {
      if (filesize_args.sizes.empty()) filesize_args.sizes = bench::kDefaultFileSizesKb;
      // Fixed bench key: 31 bytes of '*' with the padding bits cleared.
      std::array<std::uint8_t, kPlainBlockBytes> raw{};
      raw.fill(0x2A);
      raw.back() = 0x20;
      emit_report(bench::bench_filesize(filesize_args.sizes, MasterKey::from_bytes(raw),
                                        {filesize_args.trials, filesize_args.warmup}),
                  filesize_args);
    } else if (*rotations) {
      emit_report(bench::bench_rotations(rotations_args.max_count, {rotations_args.trials, rotations_args.warmup}),
                  rotations_args);
    } else if (*sboxgen) {
      if (sboxgen_args.sizes.empty()) sboxgen_args.sizes = bench::kDefaultBitLengths;
      emit_report(bench::bench_sboxgen(sboxgen_args.sizes, {sboxgen_args.trials, sboxgen_args.warmup}),
                  sboxgen_args);
    } else if (*aval) {
      const BenchReport report = bench::avalanche(av_trials, av_flips, av_seed);
      emit_csv(report, av_out);
      out << "avalanche mean=" << report.rows[0].value << " stddev=" << report.rows[1].value << "\n";
    } else if (*dump_cube_cmd) {
      write_text(out, cube_out, dump_cube(build_cube()));
    } else if (*dump_sbox_cmd) {
      write_text(out, sbox_out, dump_sbox(build_sbox(sbox_rotation)));
    }
  } catch (const UsageError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const IoError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kIo;
  } catch (const KeyFormatError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kKey;
  } catch (const SeedError &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kKey;
  } catch (const Error &e) {
    // FormatError, LengthError, IntegrityError, RangeError
    err << app.get_name() << ": " << e.what() << "\n";
    return kFormat;
  } catch (const std::exception &e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}

int run(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace p3dk::cli
