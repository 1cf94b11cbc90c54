#pragma once

#include <iosfwd>
#include <vector>

#include "patchlift/core_types.hpp"
#include "patchlift/op_counter.hpp"

namespace patchlift {

// Moving sums of the signal's self-product along its sub-diagonals,
// restricted to the band |i-j| <= S. Storage is a dense n x (2S+1) grid:
// cell (i, o) holds the value for the pair (i, i+o-S). Cells whose column
// index falls outside [0, n) are undefined and hold a NaN sentinel; they
// must never be read through at().
struct BandedKernel {
  int n = 0;
  int band_radius = 0;
  std::vector<double> values;

  int band_width() const { return 2 * band_radius + 1; }

  bool in_band(int i, int j) const {
    return i >= 0 && i < n && j >= 0 && j < n &&
           (i - j <= band_radius && j - i <= band_radius);
  }

  // Checked band lookup; throws std::out_of_range for pairs outside the band.
  double at(int i, int j) const;

  // Unchecked cell access for pairs already known to be in band.
  double& slot(int i, int j) {
    return values[static_cast<std::size_t>(i) * band_width() + (j - i + band_radius)];
  }
  double slot(int i, int j) const {
    return values[static_cast<std::size_t>(i) * band_width() + (j - i + band_radius)];
  }
};

// The self-product f(i)*f(j). The full n x n product grid is never
// materialized; this accessor is the only view of it. Out-of-range indices
// are a programming error and throw std::out_of_range.
double lift_value(const Signal1D& f, int i, int j);

// Builds the banded kernel for patch radius K over the symmetric extension
// of f: each banded entry equals the sum of 2K+1 products of extended
// samples along a sub-diagonal. One direct sum starts each diagonal; the
// rest of the diagonal is filled by the two-term moving-sum recursion and
// mirrored across the main diagonal bit-for-bit.
BandedKernel compute_banded_kernel(const Signal1D& f, int search_radius,
                                   int patch_radius, OpCounter* ops = nullptr);

// Squared patch distance from three kernel samples:
// kern(i,i) + kern(j,j) - 2*kern(i,j), clamped at zero from below.
// Round-off can drive near-identical patches slightly negative; the clamp
// is recorded through clamp_events when provided.
double kernel_distance_sq(const BandedKernel& kern, int i, int j,
                          std::uint64_t* clamp_events = nullptr);

// Direct O(K) squared patch distance over the symmetric extension. This is
// the brute-force reference the kernel route is checked against.
double patch_distance_sq_naive(const Signal1D& f, int i, int j,
                               int patch_radius, OpCounter* ops = nullptr);

// CSV dump: header "i,j,value", one row per defined band cell with i <= j,
// values with 12 significant digits.
void dump_kernel_csv(const BandedKernel& kern, std::ostream& out);

}  // namespace patchlift
