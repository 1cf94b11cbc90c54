#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "patchlift/nlm.hpp"

using namespace patchlift;

namespace {

Signal1D random_uniform_signal(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) {
    x = dist(rng);
  }
  return Signal1D(std::move(v));
}

Image2D random_uniform_image(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  Image2D img(rows, cols);
  for (double& x : img.data) {
    x = dist(rng);
  }
  return img;
}

double clipped_window_mean(const Signal1D& f, int i, int S) {
  const int jlo = std::max(0, i - S);
  const int jhi = std::min(f.size() - 1, i + S);
  double sum = 0.0;
  for (int j = jlo; j <= jhi; ++j) {
    sum += f[j];
  }
  return sum / (jhi - jlo + 1);
}

}  // namespace

TEST_CASE("weight is exp(-rho^2/h^2) with no extra normalization") {
  CHECK(weight(0.0, 10.0) == 1.0);
  CHECK(weight(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(weight(50.0, 5.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(weight(1e9, 1.0) == 0.0);  // underflow is fine
}

TEST_CASE("worked example: f=[0,0,10], K=0, S=1, h=10") {
  const Signal1D f({0, 0, 10});
  const NlmParams p{1, 0, 10.0};
  for (const Signal1D& out : {nlm_1d_naive(f, p), nlm_1d_patchlift(f, p)}) {
    REQUIRE(out.size() == 3);
    // i=1: (0+0+10*e^-1)/(2+e^-1)
    const double e1 = std::exp(-1.0);
    CHECK(out[1] == doctest::Approx(10.0 * e1 / (2.0 + e1)).epsilon(1e-9));
    CHECK(out[1] == doctest::Approx(1.5536253).epsilon(1e-6));
    // i=0 sees only {0,1}, both with distance 0.
    CHECK(out[0] == doctest::Approx(0.0).epsilon(1e-12));
    // i=2 sees {1,2}: (0*e^-1 + 10)/(e^-1 + 1)
    CHECK(out[2] == doctest::Approx(10.0 / (e1 + 1.0)).epsilon(1e-9));
  }
}

TEST_CASE("patchlift filter equals the naive filter on random signals") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> log_h(std::log(15.0), std::log(1000.0));
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 249);
    const int S = static_cast<int>(rng() % 17);
    const int K = static_cast<int>(rng() % 9);
    const double h = std::exp(log_h(rng));
    const Signal1D f = random_uniform_signal(n, rng);
    const NlmParams p{S, K, h};

    const Signal1D naive = nlm_1d_naive(f, p);
    const Signal1D fast = nlm_1d_patchlift(f, p);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(fast[i] - naive[i]) <= 1e-9);
    }
  }
}

TEST_CASE("S=0 leaves the input bit-for-bit") {
  std::mt19937_64 rng(22);
  const Signal1D f = random_uniform_signal(33, rng);
  const NlmParams p{0, 3, 25.0};
  CHECK(nlm_1d_naive(f, p).samples == f.samples);
  CHECK(nlm_1d_patchlift(f, p).samples == f.samples);

  const Image2D img = random_uniform_image(9, 13, rng);
  CHECK(nlm_2d_naive(img, p).data == img.data);
  CHECK(snlm_2d(img, p).data == img.data);
  CHECK(snlm_2d_row_col(img, p).data == img.data);
  CHECK(snlm_2d_col_row(img, p).data == img.data);
}

TEST_CASE("constant inputs are fixed points") {
  for (const double c : {0.0, 0.5, 100.0, 255.0}) {
    const Signal1D f(std::vector<double>(40, c));
    const NlmParams p{5, 2, 30.0};
    CHECK(nlm_1d_naive(f, p).samples == f.samples);
    CHECK(nlm_1d_patchlift(f, p).samples == f.samples);

    const Image2D img(12, 17, c);
    CHECK(nlm_2d_naive(img, p).data == img.data);
    CHECK(snlm_2d(img, p).data == img.data);
  }
}

TEST_CASE("h -> infinity turns the filter into the clipped-window mean") {
  std::mt19937_64 rng(23);
  const Signal1D f = random_uniform_signal(64, rng);
  const NlmParams p{7, 2, 1e9};
  const Signal1D naive = nlm_1d_naive(f, p);
  const Signal1D fast = nlm_1d_patchlift(f, p);
  for (int i = 0; i < f.size(); ++i) {
    const double mean = clipped_window_mean(f, i, p.search_radius);
    CHECK(std::abs(naive[i] - mean) <= 1e-6);
    CHECK(std::abs(fast[i] - mean) <= 1e-6);
  }

  const Image2D img = random_uniform_image(10, 11, rng);
  const Image2D out = nlm_2d_naive(img, {3, 1, 1e9});
  for (int r = 0; r < img.rows; ++r) {
    for (int c = 0; c < img.cols; ++c) {
      double sum = 0.0;
      int count = 0;
      for (int r2 = std::max(0, r - 3); r2 <= std::min(img.rows - 1, r + 3); ++r2) {
        for (int c2 = std::max(0, c - 3); c2 <= std::min(img.cols - 1, c + 3); ++c2) {
          sum += img.at(r2, c2);
          ++count;
        }
      }
      CHECK(std::abs(out.at(r, c) - sum / count) <= 1e-6);
    }
  }
}

TEST_CASE("outputs stay inside the input value range") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 16 + static_cast<int>(rng() % 48);
    const NlmParams p{1 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 4),
                      std::exp(std::uniform_real_distribution<double>(
                          std::log(0.5), std::log(5000.0))(rng))};
    const Signal1D f = random_uniform_signal(n, rng);
    const auto [lo_it, hi_it] = std::minmax_element(f.samples.begin(), f.samples.end());
    const Signal1D out = nlm_1d_patchlift(f, p);
    for (int i = 0; i < n; ++i) {
      CHECK(out[i] >= *lo_it);
      CHECK(out[i] <= *hi_it);
    }
  }
}

TEST_CASE("row-constant images reduce to the 1D filter with rescaled h") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 8;
    const int S = 1 + static_cast<int>(rng() % 4);
    const int K = static_cast<int>(rng() % 3);
    const double h = 20.0 + 180.0 * std::uniform_real_distribution<double>()(rng);
    const Signal1D g = random_uniform_signal(n, rng);

    Image2D img(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        img.at(r, c) = g[c];
      }
    }

    const Image2D out2d = nlm_2d_naive(img, {S, K, h});
    const Signal1D out1d = nlm_1d_naive(g, {S, K, h / std::sqrt(2.0 * K + 1.0)});
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        CHECK(std::abs(out2d.at(r, c) - out1d[c]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("column pass is transpose of row pass on the transpose") {
  std::mt19937_64 rng(26);
  const Image2D img = random_uniform_image(14, 9, rng);
  const NlmParams p{4, 2, 60.0};
  const Image2D direct = nlm_col_pass(img, p);
  const Image2D routed = transpose(nlm_row_pass(transpose(img), p));
  CHECK(direct.data == routed.data);
}

TEST_CASE("snlm is the mean of both pass orders and transposes cleanly") {
  std::mt19937_64 rng(27);
  const Image2D img = random_uniform_image(12, 15, rng);
  const NlmParams p{5, 1, 45.0};

  const Image2D rc = snlm_2d_row_col(img, p);
  const Image2D cr = snlm_2d_col_row(img, p);
  const Image2D both = snlm_2d(img, p);
  REQUIRE(both.rows == img.rows);
  REQUIRE(both.cols == img.cols);
  for (std::size_t k = 0; k < both.data.size(); ++k) {
    CHECK(both.data[k] == (rc.data[k] + cr.data[k]) / 2.0);
  }

  // Exact transpose equivariance: both orders swap under transpose, and the
  // average is order-free.
  const Image2D t_out = snlm_2d(transpose(img), p);
  CHECK(t_out.data == transpose(both).data);
  CHECK(snlm_2d_row_col(transpose(img), p).data == transpose(cr).data);
  CHECK(snlm_2d_col_row(transpose(img), p).data == transpose(rc).data);
}

TEST_CASE("results and op counts are identical for any thread count") {
  std::mt19937_64 rng(28);
  const Image2D img = random_uniform_image(23, 17, rng);
  const NlmParams p{4, 1, 35.0};

  OpCounter ops1, ops4, ops9;
  const Image2D a = nlm_2d_naive(img, p, &ops1, 1);
  const Image2D b = nlm_2d_naive(img, p, &ops4, 4);
  const Image2D c = nlm_2d_naive(img, p, &ops9, 9);
  CHECK(a.data == b.data);
  CHECK(a.data == c.data);
  CHECK(ops1.adds == ops4.adds);
  CHECK(ops1.muls == ops4.muls);
  CHECK(ops1.exps == ops4.exps);
  CHECK(ops1.adds == ops9.adds);

  OpCounter sops1, sops3;
  const Image2D s1 = snlm_2d(img, p, &sops1, 1);
  const Image2D s3 = snlm_2d(img, p, &sops3, 3);
  CHECK(s1.data == s3.data);
  CHECK(sops1.adds == sops3.adds);
  CHECK(sops1.muls == sops3.muls);
  CHECK(sops1.exps == sops3.exps);
  CHECK(sops1.clamps == sops3.clamps);
}

TEST_CASE("both 1D routes see the same number of weights") {
  std::mt19937_64 rng(29);
  const Signal1D f = random_uniform_signal(100, rng);
  const NlmParams p{6, 2, 40.0};
  OpCounter naive_ops, fast_ops;
  nlm_1d_naive(f, p, &naive_ops);
  nlm_1d_patchlift(f, p, &fast_ops);
  CHECK(naive_ops.exps == fast_ops.exps);
  CHECK(naive_ops.exps > 0);
  // The whole point: the kernel route spends far fewer additions per weight.
  CHECK(fast_ops.adds < naive_ops.adds);
}

TEST_CASE("parameter validation propagates through every filter") {
  const Signal1D f({1, 2, 3, 4, 5});
  CHECK_THROWS_AS(nlm_1d_naive(f, {2, 1, 0.0}), ValidationError);
  CHECK_THROWS_AS(nlm_1d_patchlift(f, {-1, 1, 5.0}), ValidationError);
  CHECK_THROWS_AS(nlm_1d_patchlift(f, {2, 6, 5.0}), ValidationError);

  const Image2D img(5, 9, 1.0);
  CHECK_THROWS_AS(nlm_2d_naive(img, {2, 6, 5.0}), ValidationError);   // K > rows
  CHECK_THROWS_AS(snlm_2d(img, {2, 6, 5.0}), ValidationError);        // K > rows
  CHECK_THROWS_AS(snlm_2d(img, {2, 1, -1.0}), ValidationError);
}
