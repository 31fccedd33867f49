#pragma once

#include <cmath>
#include <vector>

#include "qconj/types.hpp"

namespace qconj::detail {

// Mirror index into [0, n): -1 -> 1, n -> n - 2.
inline Eigen::Index reflect(Eigen::Index i, Eigen::Index n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * n - 2 - i;
  }
  return i;
}

// Normalized Gaussian kernel truncated at 3 sigma; empty for sigma <= 0.
inline std::vector<double> gaussian_kernel(double sigma) {
  if (sigma <= 0.0) return {};
  auto radius = static_cast<Eigen::Index>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (Eigen::Index i = -radius; i <= radius; ++i) {
    double v = std::exp(-0.5 * (double(i) / sigma) * (double(i) / sigma));
    k[i + radius] = v;
    sum += v;
  }
  for (auto& v : k) v /= sum;
  return k;
}

// 1D convolution with reflected boundaries.
inline RVec convolve_reflect(const RVec& f, const std::vector<double>& kernel) {
  if (kernel.empty()) return f;
  const Eigen::Index n = f.size();
  const Eigen::Index radius = (Eigen::Index(kernel.size()) - 1) / 2;
  RVec out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Eigen::Index k = -radius; k <= radius; ++k)
      acc += kernel[k + radius] * f(reflect(i + k, n));
    out(i) = acc;
  }
  return out;
}

}  // namespace qconj::detail
