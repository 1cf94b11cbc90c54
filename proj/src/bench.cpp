#include "patchlift/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

#include "patchlift/nlm.hpp"

namespace patchlift {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

using MethodFn = std::function<void(int size, std::uint64_t seed, const NlmParams& p,
                                    int threads, OpCounter* ops)>;

MethodFn method_runner(const std::string& name, const std::string& mode) {
  if (mode == "2d") {
    if (name == "nlm2d") {
      return [](int n, std::uint64_t seed, const NlmParams& p, int threads, OpCounter* ops) {
        nlm_2d_naive(random_image(n, n, seed), p, ops, threads);
      };
    }
    if (name == "snlm") {
      return [](int n, std::uint64_t seed, const NlmParams& p, int threads, OpCounter* ops) {
        snlm_2d(random_image(n, n, seed), p, ops, threads);
      };
    }
    if (name == "snlm-rc") {
      return [](int n, std::uint64_t seed, const NlmParams& p, int threads, OpCounter* ops) {
        snlm_2d_row_col(random_image(n, n, seed), p, ops, threads);
      };
    }
    if (name == "snlm-cr") {
      return [](int n, std::uint64_t seed, const NlmParams& p, int threads, OpCounter* ops) {
        snlm_2d_col_row(random_image(n, n, seed), p, ops, threads);
      };
    }
  } else {
    if (name == "nlm1d-naive") {
      return [](int n, std::uint64_t seed, const NlmParams& p, int, OpCounter* ops) {
        nlm_1d_naive(random_signal(n, seed), p, ops);
      };
    }
    if (name == "nlm1d-patchlift") {
      return [](int n, std::uint64_t seed, const NlmParams& p, int, OpCounter* ops) {
        nlm_1d_patchlift(random_signal(n, seed), p, ops);
      };
    }
  }
  throw ValidationError("unknown method '" + name + "' for mode " + mode);
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", s);
  return buf;
}

}  // namespace

std::string BenchRecord::to_line() const {
  char buf[256];
  if (rows <= 1) {
    std::snprintf(buf, sizeof(buf),
                  "method=%s n=%d search=%d patch=%d h=%g seconds=%.6f "
                  "adds=%llu muls=%llu exps=%llu",
                  method.c_str(), cols, params.search_radius, params.patch_radius,
                  params.h, seconds, static_cast<unsigned long long>(ops.adds),
                  static_cast<unsigned long long>(ops.muls),
                  static_cast<unsigned long long>(ops.exps));
  } else {
    std::snprintf(buf, sizeof(buf),
                  "method=%s size=%dx%d search=%d patch=%d h=%g seconds=%.6f "
                  "adds=%llu muls=%llu exps=%llu",
                  method.c_str(), cols, rows, params.search_radius, params.patch_radius,
                  params.h, seconds, static_cast<unsigned long long>(ops.adds),
                  static_cast<unsigned long long>(ops.muls),
                  static_cast<unsigned long long>(ops.exps));
  }
  return buf;
}

Image2D random_image(int rows, int cols, std::uint64_t seed) {
  Image2D img(rows, cols);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 255.0);
  for (double& v : img.data) {
    v = uniform(rng);
  }
  return img;
}

Signal1D random_signal(int n, std::uint64_t seed) {
  std::vector<double> samples(static_cast<std::size_t>(n));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 255.0);
  for (double& v : samples) {
    v = uniform(rng);
  }
  return Signal1D(std::move(samples));
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.mode != "2d" && cfg.mode != "1d") {
    throw ValidationError("mode must be 2d or 1d");
  }
  if (cfg.sizes.empty()) {
    throw ValidationError("size list is empty");
  }
  for (int s : cfg.sizes) {
    if (s < 1) {
      throw ValidationError("sizes must be positive");
    }
  }
  if (cfg.patch_radii.empty()) {
    throw ValidationError("patch radius list is empty");
  }
  if (cfg.trials < 1) {
    throw ValidationError("trials must be at least 1");
  }
  std::vector<std::string> methods = cfg.methods;
  if (methods.empty()) {
    methods = cfg.mode == "2d" ? std::vector<std::string>{"nlm2d", "snlm"}
                               : std::vector<std::string>{"nlm1d-naive", "nlm1d-patchlift"};
  }

  std::vector<BenchRow> rows;
  for (int size : cfg.sizes) {
    for (int patch : cfg.patch_radii) {
      NlmParams params{cfg.search_radius, patch, cfg.h};
      for (const std::string& name : methods) {
        const MethodFn run = method_runner(name, cfg.mode);

        run(size, cfg.seed ^ 0x9e3779b97f4a7c15ULL, params, cfg.threads, nullptr);  // warm-up

        std::vector<double> times(static_cast<std::size_t>(cfg.trials));
        for (int t = 0; t < cfg.trials; ++t) {
          const auto start = Clock::now();
          run(size, cfg.seed + static_cast<std::uint64_t>(t), params, cfg.threads, nullptr);
          times[static_cast<std::size_t>(t)] = seconds_since(start);
        }

        BenchRow row;
        row.method = name;
        row.size = size;
        row.patch_radius = patch;
        row.median_seconds = median(times);
        run(size, cfg.seed, params, cfg.threads, &row.ops);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void print_bench_report(const BenchConfig& cfg, const std::vector<BenchRow>& rows,
                        std::ostream& out) {
  char buf[200];
  std::snprintf(buf, sizeof(buf), "%-18s %8s %6s %12s %16s %16s", "method", "size",
                "patch", "median_s", "adds", "muls");
  out << buf << '\n';
  for (const BenchRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%-18s %8d %6d %12s %16llu %16llu",
                  row.method.c_str(), row.size, row.patch_radius,
                  format_seconds(row.median_seconds).c_str(),
                  static_cast<unsigned long long>(row.ops.adds),
                  static_cast<unsigned long long>(row.ops.muls));
    out << buf << '\n';
  }

  const std::string slow = cfg.mode == "2d" ? "nlm2d" : "nlm1d-naive";
  const std::string fast = cfg.mode == "2d" ? "snlm" : "nlm1d-patchlift";
  for (int size : cfg.sizes) {
    for (int patch : cfg.patch_radii) {
      const BenchRow* a = nullptr;
      const BenchRow* b = nullptr;
      for (const BenchRow& row : rows) {
        if (row.size != size || row.patch_radius != patch) {
          continue;
        }
        if (row.method == slow) {
          a = &row;
        } else if (row.method == fast) {
          b = &row;
        }
      }
      if (a && b && b->median_seconds > 0.0) {
        std::snprintf(buf, sizeof(buf), "speedup size=%d patch=%d %s/%s=%.1f", size,
                      patch, slow.c_str(), fast.c_str(),
                      a->median_seconds / b->median_seconds);
        out << buf << '\n';
      }
    }
  }
}

}  // namespace patchlift
