#include "patchlift/nlm.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

namespace patchlift {

namespace {

// Runs fn(index, counter) for index in [0, count). Work is split into
// contiguous chunks, one per worker, each with its own counter; counters
// merge in chunk order after the join, so totals do not depend on the
// worker count. Every index's arithmetic is self-contained, which keeps
// results bit-identical for any thread count.
template <typename Fn>
void parallel_for(int count, int threads, OpCounter* ops, Fn&& fn) {
  int t = threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : threads;
  t = std::clamp(t, 1, std::max(1, count));

  if (t == 1) {
    OpCounter local;
    for (int i = 0; i < count; ++i) {
      fn(i, ops ? &local : nullptr);
    }
    if (ops) {
      *ops += local;
    }
    return;
  }

  std::vector<OpCounter> locals(t);
  std::vector<std::thread> workers;
  workers.reserve(t);
  for (int w = 0; w < t; ++w) {
    const int lo = static_cast<int>(static_cast<long long>(count) * w / t);
    const int hi = static_cast<int>(static_cast<long long>(count) * (w + 1) / t);
    workers.emplace_back([&, lo, hi, w] {
      for (int i = lo; i < hi; ++i) {
        fn(i, ops ? &locals[w] : nullptr);
      }
    });
  }
  for (auto& worker : workers) {
    worker.join();
  }
  if (ops) {
    for (const auto& local : locals) {
      *ops += local;
    }
  }
}

double patch_distance_sq_ext(const std::vector<double>& e, int i, int j, int K) {
  double acc = 0.0;
  for (int k = -K; k <= K; ++k) {
    const double diff = e[i + k + K] - e[j + k + K];
    acc += diff * diff;
  }
  return acc;
}

// Shared window loop; both 1D filters differ only in how rho^2 is obtained.
template <typename DistFn>
Signal1D nlm_1d_impl(const Signal1D& f, const NlmParams& p, DistFn&& dist) {
  const int n = f.size();
  const int S = p.search_radius;
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int jlo = std::max(0, i - S);
    const int jhi = std::min(n - 1, i + S);
    WeightAccumulator acc;
    for (int j = jlo; j <= jhi; ++j) {
      acc.add(weight(dist(i, j), p.h), f[j]);
    }
    out[static_cast<std::size_t>(i)] = acc.value();
  }
  return Signal1D(std::move(out));
}

// Mirror-pads an image by pad samples on every side (half-sample rule per axis).
Image2D extend_symmetric_2d(const Image2D& img, int pad) {
  const int H = img.rows;
  const int W = img.cols;
  Image2D out(H + 2 * pad, W + 2 * pad);
  auto mirror = [pad](int v, int n) {
    int x = v - pad;
    if (x < 0) {
      x = -1 - x;
    } else if (x >= n) {
      x = 2 * n - 1 - x;
    }
    return x;
  };
  for (int r = 0; r < out.rows; ++r) {
    const int sr = mirror(r, H);
    for (int c = 0; c < out.cols; ++c) {
      out.at(r, c) = img.at(sr, mirror(c, W));
    }
  }
  return out;
}

Image2D average(const Image2D& a, const Image2D& b) {
  Image2D out(a.rows, a.cols);
  for (std::size_t k = 0; k < out.data.size(); ++k) {
    out.data[k] = (a.data[k] + b.data[k]) / 2.0;
  }
  return out;
}

}  // namespace

double weight(double rho_sq, double h) {
  return std::exp(-rho_sq / (h * h));
}

Signal1D nlm_1d_naive(const Signal1D& f, const NlmParams& p, OpCounter* ops) {
  validate_params(p, f.size());
  const int n = f.size();
  const int K = p.patch_radius;
  const Signal1D extended = extend_symmetric(f, K);
  const std::vector<double>& e = extended.samples;

  Signal1D out = nlm_1d_impl(f, p, [&](int i, int j) {
    return patch_distance_sq_ext(e, i, j, K);
  });

  if (ops) {
    std::uint64_t windows = 0;
    for (int i = 0; i < n; ++i) {
      const int m = std::min(n - 1, i + p.search_radius) - std::max(0, i - p.search_radius) + 1;
      windows += static_cast<std::uint64_t>(m);
    }
    ops->adds += windows * (2 * static_cast<std::uint64_t>(2 * K + 1) + 2);
    ops->muls += windows * (static_cast<std::uint64_t>(2 * K + 1) + 1);
    ops->exps += windows;
  }
  return out;
}

Signal1D nlm_1d_patchlift(const Signal1D& f, const NlmParams& p, OpCounter* ops) {
  validate_params(p, f.size());
  const int n = f.size();
  const BandedKernel kern = compute_banded_kernel(f, p.search_radius, p.patch_radius, ops);

  std::uint64_t clamps = 0;
  Signal1D out = nlm_1d_impl(f, p, [&](int i, int j) {
    return kernel_distance_sq(kern, i, j, &clamps);
  });

  if (ops) {
    std::uint64_t windows = 0;
    for (int i = 0; i < n; ++i) {
      const int m = std::min(n - 1, i + p.search_radius) - std::max(0, i - p.search_radius) + 1;
      windows += static_cast<std::uint64_t>(m);
    }
    ops->adds += windows * 4;  // two per distance, two per accumulation
    ops->muls += windows * 2;
    ops->exps += windows;
    ops->clamps += clamps;
  }
  return out;
}

Image2D nlm_2d_naive(const Image2D& img, const NlmParams& p, OpCounter* ops,
                     int threads) {
  validate_params(p, std::min(img.rows, img.cols));
  const int H = img.rows;
  const int W = img.cols;
  const int S = p.search_radius;
  const int K = p.patch_radius;
  const Image2D ext = extend_symmetric_2d(img, K);
  const int patch = (2 * K + 1) * (2 * K + 1);

  Image2D out(H, W);
  parallel_for(H, threads, ops, [&](int r, OpCounter* local) {
    const int rlo = std::max(0, r - S);
    const int rhi = std::min(H - 1, r + S);
    std::uint64_t windows = 0;
    for (int c = 0; c < W; ++c) {
      const int clo = std::max(0, c - S);
      const int chi = std::min(W - 1, c + S);
      WeightAccumulator acc;
      for (int r2 = rlo; r2 <= rhi; ++r2) {
        for (int c2 = clo; c2 <= chi; ++c2) {
          double rho_sq = 0.0;
          for (int py = -K; py <= K; ++py) {
            const double* a = ext.data.data() +
                              static_cast<std::size_t>(r + py + K) * ext.cols + (c + K);
            const double* b = ext.data.data() +
                              static_cast<std::size_t>(r2 + py + K) * ext.cols + (c2 + K);
            for (int px = -K; px <= K; ++px) {
              const double diff = a[px] - b[px];
              rho_sq += diff * diff;
            }
          }
          acc.add(weight(rho_sq, p.h), img.at(r2, c2));
        }
      }
      out.at(r, c) = acc.value();
      windows += static_cast<std::uint64_t>(rhi - rlo + 1) * (chi - clo + 1);
    }
    if (local) {
      local->adds += windows * (2 * static_cast<std::uint64_t>(patch) + 2);
      local->muls += windows * (static_cast<std::uint64_t>(patch) + 1);
      local->exps += windows;
    }
  });
  return out;
}

Image2D nlm_row_pass(const Image2D& img, const NlmParams& p, OpCounter* ops,
                     int threads) {
  validate_params(p, img.cols);
  Image2D out(img.rows, img.cols);
  parallel_for(img.rows, threads, ops, [&](int r, OpCounter* local) {
    std::vector<double> row(img.data.begin() + static_cast<std::size_t>(r) * img.cols,
                            img.data.begin() + static_cast<std::size_t>(r + 1) * img.cols);
    const Signal1D filtered = nlm_1d_patchlift(Signal1D(std::move(row)), p, local);
    std::copy(filtered.samples.begin(), filtered.samples.end(),
              out.data.begin() + static_cast<std::size_t>(r) * img.cols);
  });
  return out;
}

Image2D nlm_col_pass(const Image2D& img, const NlmParams& p, OpCounter* ops,
                     int threads) {
  return transpose(nlm_row_pass(transpose(img), p, ops, threads));
}

Image2D snlm_2d_row_col(const Image2D& img, const NlmParams& p, OpCounter* ops,
                        int threads) {
  validate_params(p, img.rows);
  validate_params(p, img.cols);
  return nlm_col_pass(nlm_row_pass(img, p, ops, threads), p, ops, threads);
}

Image2D snlm_2d_col_row(const Image2D& img, const NlmParams& p, OpCounter* ops,
                        int threads) {
  validate_params(p, img.rows);
  validate_params(p, img.cols);
  return nlm_row_pass(nlm_col_pass(img, p, ops, threads), p, ops, threads);
}

Image2D snlm_2d(const Image2D& img, const NlmParams& p, OpCounter* ops,
                int threads) {
  const Image2D rc = snlm_2d_row_col(img, p, ops, threads);
  const Image2D cr = snlm_2d_col_row(img, p, ops, threads);
  return average(rc, cr);
}

}  // namespace patchlift
