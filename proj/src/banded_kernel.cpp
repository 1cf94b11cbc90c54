#include "patchlift/banded_kernel.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace patchlift {

double BandedKernel::at(int i, int j) const {
  if (!in_band(i, j)) {
    throw std::out_of_range("pair outside kernel band");
  }
  return slot(i, j);
}

double lift_value(const Signal1D& f, int i, int j) {
  if (i < 0 || i >= f.size() || j < 0 || j >= f.size()) {
    throw std::out_of_range("lift index out of range");
  }
  return f[i] * f[j];
}

BandedKernel compute_banded_kernel(const Signal1D& f, int search_radius,
                                   int patch_radius, OpCounter* ops) {
  const int n = f.size();
  const int S = search_radius;
  const int K = patch_radius;
  validate_geometry(S, K, n);

  const Signal1D extended = extend_symmetric(f, K);
  const std::vector<double>& e = extended.samples;  // e[t+K] is position t

  BandedKernel kern;
  kern.n = n;
  kern.band_radius = S;
  kern.values.assign(static_cast<std::size_t>(n) * kern.band_width(),
                     std::numeric_limits<double>::quiet_NaN());

  std::uint64_t adds = 0;
  std::uint64_t muls = 0;

  // One diagonal per offset d; the mirror offset -d is a bitwise copy.
  const int max_offset = std::min(S, n - 1);
  for (int d = 0; d <= max_offset; ++d) {
    double sum = 0.0;
    for (int k = -K; k <= K; ++k) {
      sum += e[k + K] * e[d + k + K];
    }
    muls += 2 * K + 1;
    adds += 2 * K;
    kern.slot(0, d) = sum;
    kern.slot(d, 0) = sum;

    const int len = n - d;
    for (int i = 1; i < len; ++i) {
      const int j = i + d;
      sum = sum + e[i + 2 * K] * e[j + 2 * K] - e[i - 1] * e[j - 1];
      kern.slot(i, j) = sum;
      kern.slot(j, i) = sum;
    }
    adds += 2 * static_cast<std::uint64_t>(len - 1);
    muls += 2 * static_cast<std::uint64_t>(len - 1);
  }

  if (ops) {
    ops->adds += adds;
    ops->muls += muls;
  }
  return kern;
}

double kernel_distance_sq(const BandedKernel& kern, int i, int j,
                          std::uint64_t* clamp_events) {
  const double d = kern.at(i, i) + kern.at(j, j) - 2.0 * kern.at(i, j);
  if (d < 0.0) {
    if (clamp_events) {
      ++*clamp_events;
    }
    return 0.0;
  }
  return d;
}

double patch_distance_sq_naive(const Signal1D& f, int i, int j,
                               int patch_radius, OpCounter* ops) {
  const int n = f.size();
  const int K = patch_radius;
  validate_geometry(0, K, n);
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::out_of_range("patch index out of range");
  }

  const Signal1D extended = extend_symmetric(f, K);
  const std::vector<double>& e = extended.samples;

  double acc = 0.0;
  for (int k = -K; k <= K; ++k) {
    const double diff = e[i + k + K] - e[j + k + K];
    acc += diff * diff;
  }
  if (ops) {
    ops->adds += 2 * static_cast<std::uint64_t>(2 * K + 1);
    ops->muls += 2 * K + 1;
  }
  return acc;
}

void dump_kernel_csv(const BandedKernel& kern, std::ostream& out) {
  out << "i,j,value\n";
  char buf[64];
  for (int i = 0; i < kern.n; ++i) {
    const int jhi = std::min(kern.n - 1, i + kern.band_radius);
    for (int j = i; j <= jhi; ++j) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%.12g", i, j, kern.slot(i, j));
      out << buf << '\n';
    }
  }
}

}  // namespace patchlift
