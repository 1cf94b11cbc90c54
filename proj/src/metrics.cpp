#include "patchlift/metrics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <vector>

namespace patchlift {

namespace {

constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

void require_same_dims(const Image2D& a, const Image2D& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw ValidationError("image dimensions do not match");
  }
}

std::array<double, kSsimWindow> ssim_kernel() {
  std::array<double, kSsimWindow> k{};
  double total = 0.0;
  for (int t = 0; t < kSsimWindow; ++t) {
    const double x = t - (kSsimWindow - 1) / 2;
    k[t] = std::exp(-x * x / (2.0 * kSsimSigma * kSsimSigma));
    total += k[t];
  }
  for (double& v : k) {
    v /= total;
  }
  return k;
}

// Valid-mode separable correlation with the SSIM window: H x W -> (H-10) x (W-10).
std::vector<double> ssim_blur(const std::vector<double>& src, int h, int w,
                              const std::array<double, kSsimWindow>& k) {
  const int wo = w - kSsimWindow + 1;
  const int ho = h - kSsimWindow + 1;
  std::vector<double> tmp(static_cast<std::size_t>(h) * wo);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < wo; ++c) {
      double s = 0.0;
      for (int t = 0; t < kSsimWindow; ++t) {
        s += k[t] * src[static_cast<std::size_t>(r) * w + c + t];
      }
      tmp[static_cast<std::size_t>(r) * wo + c] = s;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(ho) * wo);
  for (int r = 0; r < ho; ++r) {
    for (int c = 0; c < wo; ++c) {
      double s = 0.0;
      for (int t = 0; t < kSsimWindow; ++t) {
        s += k[t] * tmp[static_cast<std::size_t>(r + t) * wo + c];
      }
      out[static_cast<std::size_t>(r) * wo + c] = s;
    }
  }
  return out;
}

std::string format_sig6(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%#.6g", v);
  return buf;
}

}  // namespace

std::string MetricReport::to_line() const {
  return "mse=" + format_sig6(mse) + " psnr_db=" + format_sig6(psnr_db) +
         " ssim=" + format_sig6(ssim);
}

Image2D add_awgn(const Image2D& img, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) {
    throw ValidationError("noise sigma must be nonnegative");
  }
  if (sigma == 0.0) {
    return img;
  }
  Image2D out(img.rows, img.cols);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, sigma);
  for (std::size_t k = 0; k < img.data.size(); ++k) {
    out.data[k] = img.data[k] + gauss(rng);
  }
  return out;
}

double mse(const Image2D& a, const Image2D& b) {
  require_same_dims(a, b);
  double acc = 0.0;
  for (std::size_t k = 0; k < a.data.size(); ++k) {
    const double diff = a.data[k] - b.data[k];
    acc += diff * diff;
  }
  return acc / static_cast<double>(a.data.size());
}

double psnr(const Image2D& a, const Image2D& b) {
  const double m = mse(a, b);
  if (m == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

double ssim(const Image2D& a, const Image2D& b) {
  require_same_dims(a, b);
  if (a.rows < kSsimWindow || a.cols < kSsimWindow) {
    throw ValidationError("image smaller than the 11x11 structural window");
  }
  const int h = a.rows;
  const int w = a.cols;
  const std::size_t count = a.data.size();

  std::vector<double> xx(count);
  std::vector<double> yy(count);
  std::vector<double> xy(count);
  for (std::size_t k = 0; k < count; ++k) {
    xx[k] = a.data[k] * a.data[k];
    yy[k] = b.data[k] * b.data[k];
    xy[k] = a.data[k] * b.data[k];
  }

  const auto kern = ssim_kernel();
  const auto mu_x = ssim_blur(a.data, h, w, kern);
  const auto mu_y = ssim_blur(b.data, h, w, kern);
  const auto e_xx = ssim_blur(xx, h, w, kern);
  const auto e_yy = ssim_blur(yy, h, w, kern);
  const auto e_xy = ssim_blur(xy, h, w, kern);

  double total = 0.0;
  for (std::size_t k = 0; k < mu_x.size(); ++k) {
    const double mx = mu_x[k];
    const double my = mu_y[k];
    const double var_x = e_xx[k] - mx * mx;
    const double var_y = e_yy[k] - my * my;
    const double cov = e_xy[k] - mx * my;
    total += ((2.0 * mx * my + kC1) * (2.0 * cov + kC2)) /
             ((mx * mx + my * my + kC1) * (var_x + var_y + kC2));
  }
  return total / static_cast<double>(mu_x.size());
}

MetricReport compare_images(const Image2D& ref, const Image2D& test) {
  MetricReport report;
  report.mse = mse(ref, test);
  report.psnr_db = psnr(ref, test);
  report.ssim = ssim(ref, test);
  return report;
}

}  // namespace patchlift
