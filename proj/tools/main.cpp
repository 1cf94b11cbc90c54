#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "patchlift/bench.hpp"
#include "patchlift/image_io.hpp"
#include "patchlift/metrics.hpp"
#include "patchlift/nlm.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct DenoiseArgs {
  std::string input;
  std::string output;
  std::string method = "snlm";
  int search = 10;
  int patch = 3;
  double h = 0.0;
  int threads = 0;
};

struct Denoise1dArgs {
  std::string input;
  std::string output;
  std::string method = "patchlift";
  int search = 10;
  int patch = 3;
  double h = 0.0;
};

struct KernelArgs {
  std::string input;
  std::string output;
  int search = 10;
  int patch = 3;
};

struct NoiseArgs {
  std::string input;
  std::string output;
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

struct MetricsArgs {
  std::string ref;
  std::string test;
};

struct BenchArgs {
  std::string mode = "2d";
  std::vector<int> sizes = {64, 128};
  std::vector<int> patches = {3};
  int search = 10;
  double h = 50.0;
  std::vector<std::string> methods;
  int trials = 3;
  std::uint64_t seed = 1;
  int threads = 0;
};

int run_denoise(const DenoiseArgs& args) {
  const patchlift::Image2D input = patchlift::read_pgm(args.input);
  const patchlift::NlmParams params{args.search, args.patch, args.h};

  patchlift::BenchRecord record;
  record.method = args.method;
  record.rows = input.rows;
  record.cols = input.cols;
  record.params = params;

  const auto start = Clock::now();
  patchlift::Image2D result = [&] {
    if (args.method == "nlm2d") {
      return patchlift::nlm_2d_naive(input, params, &record.ops, args.threads);
    }
    if (args.method == "snlm") {
      return patchlift::snlm_2d(input, params, &record.ops, args.threads);
    }
    if (args.method == "snlm-rc") {
      return patchlift::snlm_2d_row_col(input, params, &record.ops, args.threads);
    }
    return patchlift::snlm_2d_col_row(input, params, &record.ops, args.threads);
  }();
  record.seconds = std::chrono::duration<double>(Clock::now() - start).count();

  patchlift::write_pgm(result, args.output);
  std::cout << record.to_line() << "\n";
  return 0;
}

int run_denoise1d(const Denoise1dArgs& args) {
  const patchlift::Signal1D input = patchlift::read_signal_csv(args.input);
  const patchlift::NlmParams params{args.search, args.patch, args.h};

  patchlift::BenchRecord record;
  record.method = "nlm1d-" + args.method;
  record.rows = 1;
  record.cols = input.size();
  record.params = params;

  const auto start = Clock::now();
  const patchlift::Signal1D result =
      args.method == "naive" ? patchlift::nlm_1d_naive(input, params, &record.ops)
                             : patchlift::nlm_1d_patchlift(input, params, &record.ops);
  record.seconds = std::chrono::duration<double>(Clock::now() - start).count();

  patchlift::write_signal_csv(result, args.output);
  std::cout << record.to_line() << "\n";
  return 0;
}

int run_kernel(const KernelArgs& args) {
  const patchlift::Signal1D input = patchlift::read_signal_csv(args.input);
  const patchlift::BandedKernel kern =
      patchlift::compute_banded_kernel(input, args.search, args.patch);
  std::ofstream out(args.output);
  if (!out) {
    throw patchlift::IoError("cannot open '" + args.output + "' for writing");
  }
  patchlift::dump_kernel_csv(kern, out);
  if (!out) {
    throw patchlift::IoError("write failed for '" + args.output + "'");
  }
  return 0;
}

int run_noise(const NoiseArgs& args) {
  const patchlift::Image2D input = patchlift::read_pgm(args.input);
  patchlift::write_pgm(patchlift::add_awgn(input, args.sigma, args.seed), args.output);
  return 0;
}

int run_metrics(const MetricsArgs& args) {
  const patchlift::Image2D ref = patchlift::read_pgm(args.ref);
  const patchlift::Image2D test = patchlift::read_pgm(args.test);
  std::cout << patchlift::compare_images(ref, test).to_line() << "\n";
  return 0;
}

int run_bench(const BenchArgs& args) {
  patchlift::BenchConfig cfg;
  cfg.mode = args.mode;
  cfg.sizes = args.sizes;
  cfg.patch_radii = args.patches;
  cfg.search_radius = args.search;
  cfg.h = args.h;
  cfg.methods = args.methods;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.threads = args.threads;
  patchlift::print_bench_report(cfg, patchlift::run_bench(cfg), std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PatchLift separable non-local means denoiser"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  // The smoothing flag is literally --h, so no subcommand may own a short -h.
  app.set_help_flag("--help", "Print help and exit");

  DenoiseArgs denoise;
  auto* cmd_denoise = app.add_subcommand("denoise", "Denoise a PGM image");
  cmd_denoise->set_help_flag("--help", "Print help and exit");
  cmd_denoise->add_option("--input", denoise.input, "Input PGM")->required();
  cmd_denoise->add_option("--output", denoise.output, "Output PGM")->required();
  cmd_denoise->add_option("--method", denoise.method, "Filter to run")
      ->check(CLI::IsMember({"nlm2d", "snlm", "snlm-rc", "snlm-cr"}))
      ->required();
  cmd_denoise->add_option("--search", denoise.search, "Search radius S")
      ->capture_default_str();
  cmd_denoise->add_option("--patch", denoise.patch, "Patch radius K")
      ->capture_default_str();
  cmd_denoise->add_option("--h", denoise.h, "Smoothing parameter h")->required();
  cmd_denoise->add_option("--threads", denoise.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  Denoise1dArgs denoise1d;
  auto* cmd_denoise1d = app.add_subcommand("denoise1d", "Denoise a CSV signal");
  cmd_denoise1d->set_help_flag("--help", "Print help and exit");
  cmd_denoise1d->add_option("--input", denoise1d.input, "Input CSV")->required();
  cmd_denoise1d->add_option("--output", denoise1d.output, "Output CSV")->required();
  cmd_denoise1d->add_option("--method", denoise1d.method, "patchlift or naive")
      ->check(CLI::IsMember({"patchlift", "naive"}))
      ->capture_default_str();
  cmd_denoise1d->add_option("--search", denoise1d.search, "Search radius S")
      ->capture_default_str();
  cmd_denoise1d->add_option("--patch", denoise1d.patch, "Patch radius K")
      ->capture_default_str();
  cmd_denoise1d->add_option("--h", denoise1d.h, "Smoothing parameter h")->required();

  KernelArgs kernel;
  auto* cmd_kernel = app.add_subcommand("kernel", "Dump the banded patch-distance kernel as CSV");
  cmd_kernel->set_help_flag("--help", "Print help and exit");
  cmd_kernel->add_option("--input", kernel.input, "Input CSV signal")->required();
  cmd_kernel->add_option("--output", kernel.output, "Output CSV kernel dump")->required();
  cmd_kernel->add_option("--search", kernel.search, "Search radius S")
      ->capture_default_str();
  cmd_kernel->add_option("--patch", kernel.patch, "Patch radius K")
      ->capture_default_str();

  NoiseArgs noise;
  auto* cmd_noise = app.add_subcommand("noise", "Add white Gaussian noise to a PGM image");
  cmd_noise->set_help_flag("--help", "Print help and exit");
  cmd_noise->add_option("--input", noise.input, "Input PGM")->required();
  cmd_noise->add_option("--output", noise.output, "Output PGM")->required();
  cmd_noise->add_option("--sigma", noise.sigma, "Noise standard deviation")->required();
  cmd_noise->add_option("--seed", noise.seed, "Generator seed")->capture_default_str();

  MetricsArgs metrics;
  auto* cmd_metrics = app.add_subcommand("metrics", "MSE / PSNR / SSIM between two PGM images");
  cmd_metrics->set_help_flag("--help", "Print help and exit");
  cmd_metrics->add_option("--ref", metrics.ref, "Reference PGM")->required();
  cmd_metrics->add_option("--test", metrics.test, "Test PGM")->required();

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Time the filters on synthetic inputs");
  cmd_bench->set_help_flag("--help", "Print help and exit");
  cmd_bench->add_option("--mode", bench.mode, "2d or 1d")
      ->check(CLI::IsMember({"2d", "1d"}))
      ->capture_default_str();
  cmd_bench->add_option("--sizes", bench.sizes, "Image sides / signal lengths")
      ->delimiter(',')
      ->capture_default_str();
  cmd_bench->add_option("--patch", bench.patches, "Patch radii to sweep")
      ->delimiter(',')
      ->capture_default_str();
  cmd_bench->add_option("--search", bench.search, "Search radius S")
      ->capture_default_str();
  cmd_bench->add_option("--h", bench.h, "Smoothing parameter h")
      ->capture_default_str();
  cmd_bench->add_option("--methods", bench.methods, "Methods to time")->delimiter(',');
  cmd_bench->add_option("--trials", bench.trials, "Timed trials per point")
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench.seed, "Input synthesis seed")
      ->capture_default_str();
  cmd_bench->add_option("--threads", bench.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_denoise->parsed()) {
      return run_denoise(denoise);
    }
    if (cmd_denoise1d->parsed()) {
      return run_denoise1d(denoise1d);
    }
    if (cmd_kernel->parsed()) {
      return run_kernel(kernel);
    }
    if (cmd_noise->parsed()) {
      return run_noise(noise);
    }
    if (cmd_metrics->parsed()) {
      return run_metrics(metrics);
    }
    if (cmd_bench->parsed()) {
      return run_bench(bench);
    }
  } catch (const patchlift::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const patchlift::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
