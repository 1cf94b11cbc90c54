#pragma once

#include <cstdint>
#include <string>

#include "patchlift/core_types.hpp"

namespace patchlift {

// Fidelity summary for one image pair. Serializes as
// "mse=<v> psnr_db=<v> ssim=<v>" with 6 significant digits, "inf" for +inf.
struct MetricReport {
  double mse = 0.0;
  double psnr_db = 0.0;
  double ssim = 0.0;

  std::string to_line() const;
};

// Adds i.i.d. Gaussian noise of standard deviation sigma, drawn in
// row-major order from a generator seeded with seed. The result is not
// clipped. Identical (img, sigma, seed) give identical output.
Image2D add_awgn(const Image2D& img, double sigma, std::uint64_t seed);

// Mean squared difference over all pixels.
double mse(const Image2D& a, const Image2D& b);

// 10*log10(255^2 / MSE); +inf when the images are identical.
double psnr(const Image2D& a, const Image2D& b);

// Mean structural similarity over fully valid 11x11 window positions,
// Gaussian window sigma 1.5, C1=(0.01*255)^2, C2=(0.03*255)^2.
// Requires both images to be at least 11x11.
double ssim(const Image2D& a, const Image2D& b);

MetricReport compare_images(const Image2D& ref, const Image2D& test);

}  // namespace patchlift
