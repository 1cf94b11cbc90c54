#pragma once

#include "patchlift/banded_kernel.hpp"
#include "patchlift/core_types.hpp"
#include "patchlift/op_counter.hpp"

namespace patchlift {

// Running numerator/denominator of the weighted average. The center sample
// always contributes weight 1, so den > 0 after any window.
struct WeightAccumulator {
  double num = 0.0;
  double den = 0.0;

  void add(double w, double sample) {
    num += w * sample;
    den += w;
  }
  double value() const { return num / den; }
};

// exp(-rho_sq / h^2). No patch-size normalization, no center special case.
double weight(double rho_sq, double h);

// 1D non-local means with direct patch distances. O(N*S*K) reference.
Signal1D nlm_1d_naive(const Signal1D& f, const NlmParams& p, OpCounter* ops = nullptr);

// Same contract as nlm_1d_naive with distances taken from the banded
// kernel; O(N*S) total.
Signal1D nlm_1d_patchlift(const Signal1D& f, const NlmParams& p, OpCounter* ops = nullptr);

// Classical 2D non-local means: per-pixel weighted average over the clipped
// (2S+1)^2 window with full (2K+1)^2 patch distances. Baseline; kept naive
// on purpose. threads <= 0 uses all hardware threads.
Image2D nlm_2d_naive(const Image2D& img, const NlmParams& p,
                     OpCounter* ops = nullptr, int threads = 1);

// One separable pass: 1D PatchLift-NLM applied to every row / column.
Image2D nlm_row_pass(const Image2D& img, const NlmParams& p,
                     OpCounter* ops = nullptr, int threads = 1);
Image2D nlm_col_pass(const Image2D& img, const NlmParams& p,
                     OpCounter* ops = nullptr, int threads = 1);

// Single-order separable NLM: rows then columns / columns then rows.
Image2D snlm_2d_row_col(const Image2D& img, const NlmParams& p,
                        OpCounter* ops = nullptr, int threads = 1);
Image2D snlm_2d_col_row(const Image2D& img, const NlmParams& p,
                        OpCounter* ops = nullptr, int threads = 1);

// Separable NLM: mean of the row-column and column-row results.
Image2D snlm_2d(const Image2D& img, const NlmParams& p,
                OpCounter* ops = nullptr, int threads = 1);

}  // namespace patchlift
