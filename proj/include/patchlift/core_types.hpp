#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace patchlift {

// User-facing precondition failure (bad parameters, malformed data).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// File-level failure (missing, unreadable or malformed files).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A finite sequence of real samples. Nonempty; every sample finite.
struct Signal1D {
  std::vector<double> samples;

  explicit Signal1D(std::vector<double> values);

  int size() const { return static_cast<int>(samples.size()); }
  double operator[](int i) const { return samples[static_cast<std::size_t>(i)]; }
};

// Row-major grid of real intensities, nominal range [0,255] but unclipped.
struct Image2D {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // rows*cols values, row-major

  Image2D(int rows, int cols, double fill = 0.0);
  Image2D(int rows, int cols, std::vector<double> values);

  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// Search radius S, patch radius K, smoothing parameter h of the weights.
struct NlmParams {
  int search_radius = 10;
  int patch_radius = 3;
  double h = 0.0;
};

// Checks S >= 0 and K >= 0 against a signal of length n (K <= n so the
// symmetric extension is well defined). Throws ValidationError.
void validate_geometry(int search_radius, int patch_radius, int n);

// Full parameter check: geometry plus h > 0.
void validate_params(const NlmParams& p, int n);

// Half-sample mirror extension: value at -1-t equals value at t, value at
// n+t equals value at n-1-t, for 0 <= t < pad. Requires pad <= n.
Signal1D extend_symmetric(const Signal1D& f, int pad);

Image2D transpose(const Image2D& img);

}  // namespace patchlift
