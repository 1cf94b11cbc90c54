#include "patchlift/core_types.hpp"

#include <cmath>
#include <utility>

namespace patchlift {

namespace {

void require_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw ValidationError(std::string(what) + " contains a non-finite value");
    }
  }
}

}  // namespace

Signal1D::Signal1D(std::vector<double> values) : samples(std::move(values)) {
  if (samples.empty()) {
    throw ValidationError("signal must contain at least one sample");
  }
  require_finite(samples, "signal");
}

Image2D::Image2D(int rows_, int cols_, double fill)
    : rows(rows_), cols(cols_) {
  if (rows < 1 || cols < 1) {
    throw ValidationError("image dimensions must be at least 1x1");
  }
  if (!std::isfinite(fill)) {
    throw ValidationError("image fill value must be finite");
  }
  data.assign(static_cast<std::size_t>(rows) * cols, fill);
}

Image2D::Image2D(int rows_, int cols_, std::vector<double> values)
    : rows(rows_), cols(cols_), data(std::move(values)) {
  if (rows < 1 || cols < 1) {
    throw ValidationError("image dimensions must be at least 1x1");
  }
  if (data.size() != static_cast<std::size_t>(rows) * cols) {
    throw ValidationError("image data length does not match dimensions");
  }
  require_finite(data, "image");
}

void validate_geometry(int search_radius, int patch_radius, int n) {
  if (n < 1) {
    throw ValidationError("signal length must be at least 1");
  }
  if (search_radius < 0) {
    throw ValidationError("search radius must be nonnegative");
  }
  if (patch_radius < 0) {
    throw ValidationError("patch radius must be nonnegative");
  }
  if (patch_radius > n) {
    throw ValidationError("patch radius exceeds signal length");
  }
}

void validate_params(const NlmParams& p, int n) {
  validate_geometry(p.search_radius, p.patch_radius, n);
  if (!(p.h > 0.0)) {
    throw ValidationError("smoothing parameter h must be positive");
  }
}

Signal1D extend_symmetric(const Signal1D& f, int pad) {
  if (pad < 0) {
    throw ValidationError("pad must be nonnegative");
  }
  const int n = f.size();
  if (pad > n) {
    throw ValidationError("insufficient signal for symmetric extension");
  }
  std::vector<double> ext(static_cast<std::size_t>(n) + 2 * pad);
  for (int t = 0; t < pad; ++t) {
    ext[pad - 1 - t] = f[t];          // position -1-t
    ext[pad + n + t] = f[n - 1 - t];  // position n+t
  }
  for (int i = 0; i < n; ++i) {
    ext[pad + i] = f[i];
  }
  return Signal1D(std::move(ext));
}

Image2D transpose(const Image2D& img) {
  Image2D out(img.cols, img.rows);
  for (int r = 0; r < img.rows; ++r) {
    for (int c = 0; c < img.cols; ++c) {
      out.at(c, r) = img.at(r, c);
    }
  }
  return out;
}

}  // namespace patchlift
