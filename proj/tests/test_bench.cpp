// SPDX-License-Identifier: MIT

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "p3dk/bench.hpp"
#include "p3dk/error.hpp"

using namespace p3dk;

namespace {

MasterKey zero_key() { return MasterKey::from_bytes(std::vector<std::uint8_t>(31, 0)); }

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Stats, MedianAndFit) {
  EXPECT_DOUBLE_EQ(bench::median({3, 1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(bench::median({4, 1, 2, 3}), 2.5);
  EXPECT_THROW(bench::median({}), UsageError);

  const std::vector<double> xs{0, 1, 2, 3};
  const std::vector<double> ys{1, 3, 5, 7};
  const bench::LinearFit fit = bench::fit_line(xs, ys);
  EXPECT_NEAR(fit.slope, 2.0, 1e-12);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);

  // Hand-computed: y = 0,2,1,3 -> slope 0.8, intercept 0.3, R^2 = 0.64.
  const bench::LinearFit noisy = bench::fit_line(xs, std::vector<double>{0, 2, 1, 3});
  EXPECT_NEAR(noisy.slope, 0.8, 1e-12);
  EXPECT_NEAR(noisy.intercept, 0.3, 1e-12);
  EXPECT_NEAR(noisy.r_squared, 0.64, 1e-12);
}

TEST(Report, CsvRoundTrip) {
  BenchReport r;
  r.experiment = "demo";
  r.unit = "ms";
  r.rows = {{"20", 0.1234567890123}, {"35", 1e-9}, {"512", 42.0}};
  r.metadata = {{"trials", "5"}, {"note", "a: b"}};
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.rfind("# experiment: demo\n", 0), 0u);
  EXPECT_NE(csv.find("label,value,unit\n"), std::string::npos);

  const BenchReport back = parse_csv(csv);
  EXPECT_EQ(back.experiment, r.experiment);
  EXPECT_EQ(back.unit, r.unit);
  EXPECT_EQ(back.rows, r.rows);
  EXPECT_EQ(back.metadata, r.metadata);
}

TEST(Report, OneRowCsvShape) {
  BenchReport r;
  r.experiment = "one";
  r.unit = "ms";
  r.rows = {{"1", 2.5}};
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv, "# experiment: one\nlabel,value,unit\n1,2.5,ms\n");
  EXPECT_THROW(parse_csv("1,2,ms\n"), FormatError);
  EXPECT_THROW(parse_csv("label,value,unit\n1;2\n"), FormatError);
}

TEST(Report, SvgAndFiles) {
  BenchReport r;
  r.experiment = "time <vs> size";
  r.unit = "ms";
  r.rows = {{"a", 1}, {"b", 3}};
  const std::string svg = to_svg(r);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("time &lt;vs&gt; size"), std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "p3dk_test_report";
  std::filesystem::create_directories(dir);
  emit_csv(r, dir / "r.csv");
  emit_svg(r, dir / "r.svg");
  EXPECT_EQ(parse_csv(slurp(dir / "r.csv")).rows, r.rows);
  EXPECT_EQ(slurp(dir / "r.svg"), svg);
  EXPECT_THROW(emit_csv(r, dir / "missing_dir" / "r.csv"), IoError);
  std::filesystem::remove_all(dir);
}

TEST(Bench, FilesizeStructure) {
  const std::vector<unsigned> sizes{20};
  const BenchReport r = bench::bench_filesize(sizes, zero_key(), {.trials = 1, .warmup = 0});
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].label, "20");
  EXPECT_GT(r.rows[0].value, 0.0);
  ASSERT_NE(r.find_metadata("reference_proposed_s"), nullptr);
  EXPECT_THROW(bench::bench_filesize(std::vector<unsigned>{}, zero_key()), UsageError);
  EXPECT_THROW(bench::bench_filesize(std::vector<unsigned>{0}, zero_key()), UsageError);
  EXPECT_THROW(bench::bench_filesize(sizes, zero_key(), {.trials = 0}), UsageError);
}

TEST(Bench, RotationsStructure) {
  const BenchReport r = bench::bench_rotations(4, {.trials = 3, .warmup = 1});
  ASSERT_EQ(r.rows.size(), 5u);
  EXPECT_EQ(r.rows.front().label, "0");
  EXPECT_EQ(r.rows.back().label, "4");
  for (const BenchRow &row : r.rows) EXPECT_GE(row.value, 0.0);
  EXPECT_NE(r.find_metadata("r_squared"), nullptr);
  EXPECT_NE(r.find_metadata("slope_ms_per_rotation"), nullptr);
  EXPECT_THROW(bench::bench_rotations(17), UsageError);
}

TEST(Bench, SboxgenStructure) {
  const std::vector<unsigned> lengths{243, 3, 27};
  const BenchReport r = bench::bench_sboxgen(lengths, {.trials = 2, .warmup = 0});
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].label, "3");
  EXPECT_EQ(r.rows[1].label, "27");
  EXPECT_EQ(r.rows[2].label, "243");
  EXPECT_THROW(bench::bench_sboxgen(std::vector<unsigned>{8}), UsageError);
  EXPECT_THROW(bench::bench_sboxgen(std::vector<unsigned>{}), UsageError);
}

TEST(Bench, AvalancheDeterministicAndBounded) {
  EXPECT_THROW(bench::measure_avalanche(0, 1), UsageError);
  EXPECT_THROW(bench::measure_avalanche(1, 0), UsageError);
  const bench::AvalancheStats a = bench::measure_avalanche(50, 2);
  const bench::AvalancheStats b = bench::measure_avalanche(50, 2);
  EXPECT_EQ(a.samples, 100u);
  EXPECT_GT(a.mean, 0.0);
  EXPECT_LT(a.mean, 1.0);
  EXPECT_DOUBLE_EQ(a.mean, b.mean);
  EXPECT_DOUBLE_EQ(a.stddev, b.stddev);

  const BenchReport r = bench::avalanche(10, 1);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].label, "mean");
  EXPECT_EQ(r.unit, "fraction");
}
