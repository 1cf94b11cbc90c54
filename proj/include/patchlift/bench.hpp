#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "patchlift/core_types.hpp"
#include "patchlift/op_counter.hpp"

namespace patchlift {

// One finished filter invocation: what ran, on what, how long, and the
// operation counts gathered from an instrumented pass.
struct BenchRecord {
  std::string method;
  int rows = 0;  // 1 for signals
  int cols = 0;  // width, or signal length
  NlmParams params;
  double seconds = 0.0;
  OpCounter ops;

  std::string to_line() const;
};

struct BenchConfig {
  std::string mode = "2d";  // "2d" or "1d"
  std::vector<int> sizes = {64, 128};
  std::vector<int> patch_radii = {3};
  int search_radius = 10;
  double h = 50.0;
  std::vector<std::string> methods;  // empty -> mode defaults
  int trials = 3;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct BenchRow {
  std::string method;
  int size = 0;
  int patch_radius = 0;
  double median_seconds = 0.0;
  OpCounter ops;
};

// Uniform values in [0, 255], deterministic in seed.
Image2D random_image(int rows, int cols, std::uint64_t seed);
Signal1D random_signal(int n, std::uint64_t seed);

// Times every (method, size, patch radius) combination on synthetic inputs:
// one warm-up run, then `trials` timed runs on freshly seeded inputs with
// the median reported, plus one instrumented run for the op counts.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

// Aligned table of the rows followed by per-size speedup ratios
// (nlm2d over snlm in 2d mode, naive over patchlift in 1d mode).
void print_bench_report(const BenchConfig& cfg, const std::vector<BenchRow>& rows,
                        std::ostream& out);

}  // namespace patchlift
