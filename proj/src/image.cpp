#include "qconj/image.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qconj/detail/stencils.hpp"

namespace qconj {

namespace {

using detail::reflect;

RMat smooth2d(const RMat& in, double sigma) {
  auto kernel = detail::gaussian_kernel(sigma);
  if (kernel.empty()) return in;
  const Eigen::Index h = in.rows(), w = in.cols();
  const Eigen::Index radius = (Eigen::Index(kernel.size()) - 1) / 2;
  RMat tmp(h, w), out(h, w);
  for (Eigen::Index y = 0; y < h; ++y)
    for (Eigen::Index x = 0; x < w; ++x) {
      double acc = 0.0;
      for (Eigen::Index k = -radius; k <= radius; ++k)
        acc += kernel[k + radius] * in(y, reflect(x + k, w));
      tmp(y, x) = acc;
    }
  for (Eigen::Index y = 0; y < h; ++y)
    for (Eigen::Index x = 0; x < w; ++x) {
      double acc = 0.0;
      for (Eigen::Index k = -radius; k <= radius; ++k)
        acc += kernel[k + radius] * tmp(reflect(y + k, h), x);
      out(y, x) = acc;
    }
  return out;
}

}  // namespace

void validate_image(const ImageGray& img) {
  if (img.width <= 0 || img.height <= 0)
    throw std::invalid_argument("empty image");
  if (img.pixels.rows() != img.height || img.pixels.cols() != img.width)
    throw std::invalid_argument("pixel buffer does not match dimensions");
  if (img.pixels.minCoeff() < -1e-9 || img.pixels.maxCoeff() > 1.0 + 1e-9)
    throw std::invalid_argument("pixel values must lie in [0,1]");
}

ImageDerivatives image_derivatives(const ImageGray& img,
                                   const SignalLimits& lim,
                                   double presmooth_sigma) {
  validate_image(img);
  validate_limits(lim);
  if (img.width < 5 || img.height < 5)
    throw std::invalid_argument("image too small, need at least 5x5");
  const Eigen::Index h = img.height, w = img.width;
  RMat f = smooth2d(img.pixels, presmooth_sigma);
  ImageDerivatives d;
  d.grad_mag.resize(h, w);
  d.laplacian.resize(h, w);
  for (Eigen::Index y = 0; y < h; ++y) {
    for (Eigen::Index x = 0; x < w; ++x) {
      double fxm = f(y, reflect(x - 1, w)), fxp = f(y, reflect(x + 1, w));
      double fym = f(reflect(y - 1, h), x), fyp = f(reflect(y + 1, h), x);
      double gx = 0.5 * (fxp - fxm);
      double gy = 0.5 * (fyp - fym);
      double lap = fxp + fxm + fyp + fym - 4.0 * f(y, x);
      double g = std::hypot(gx, gy);
      if (g > lim.c1) {
        g = lim.c1;
        ++d.clamped;
      }
      if (lap > lim.c2) {
        lap = lim.c2;
        ++d.clamped;
      } else if (lap < -lim.c2) {
        lap = -lim.c2;
        ++d.clamped;
      }
      d.grad_mag(y, x) = g;
      d.laplacian(y, x) = lap;
    }
  }
  return d;
}

ImageLabelMap label_image(const ImageGray& img, const SignalLimits& lim,
                          Rule rule, double presmooth_sigma, P4Form form) {
  ImageDerivatives d = image_derivatives(img, lim, presmooth_sigma);
  ImageLabelMap map;
  map.width = img.width;
  map.height = img.height;
  map.labels.resize(size_t(img.width) * img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      ConjugateSample s{d.grad_mag(y, x), d.laplacian(y, x)};
      Label l;
      if (rule == Rule::Model) {
        l = classify_model(s, lim);
      } else {
        Qubit psi = conjugate_encode(s, lim);
        l = (rule == Rule::Expectation ? classify_expectation(psi, form)
                                       : classify_distance(psi))
                .label;
      }
      map.labels[size_t(y) * img.width + x] = l;
    }
  }
  return map;
}

namespace {

double window_mean(const RMat& f, Eigen::Index y, Eigen::Index x,
                   Eigen::Index radius) {
  double acc = 0.0;
  for (Eigen::Index dy = -radius; dy <= radius; ++dy)
    for (Eigen::Index dx = -radius; dx <= radius; ++dx)
      acc += f(reflect(y + dy, f.rows()), reflect(x + dx, f.cols()));
  double n = double(2 * radius + 1) * double(2 * radius + 1);
  return acc / n;
}

void check_kernel(const ImageGray& img, int kernel) {
  if (kernel < 3 || kernel % 2 == 0)
    throw std::invalid_argument("kernel must be odd and >= 3");
  if (kernel > img.width || kernel > img.height)
    throw std::invalid_argument("kernel larger than image");
}

}  // namespace

ImageGray adaptive_mean_filter(const ImageGray& img,
                               const ImageLabelMap& labels, int kernel) {
  validate_image(img);
  check_kernel(img, kernel);
  if (labels.width != img.width || labels.height != img.height)
    throw std::invalid_argument("label map does not match image");
  const Eigen::Index radius = kernel / 2;
  ImageGray out = img;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (labels.at(y, x) == Label::Constant)
        out.pixels(y, x) = window_mean(img.pixels, y, x, radius);
  return out;
}

ImageGray uniform_mean_filter(const ImageGray& img, int kernel) {
  validate_image(img);
  check_kernel(img, kernel);
  const Eigen::Index radius = kernel / 2;
  ImageGray out = img;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      out.pixels(y, x) = window_mean(img.pixels, y, x, radius);
  return out;
}

ImageGray synthetic_test_image(int width, int height, uint64_t seed) {
  if (width < 32 || height < 32)
    throw std::invalid_argument("synthetic image must be at least 32x32");
  ImageGray img;
  img.width = width;
  img.height = height;
  img.pixels.resize(height, width);
  // Vertical ramp edge: rises from 0.15 to 0.95 over a 4-pixel band.
  const double ramp_x0 = 0.60 * width;
  const double ramp_width = 4.0;
  // Gaussian blob on the left half.
  const double bx = 0.25 * width, by = 0.30 * height;
  const double blob_sigma = 0.04 * std::min(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double v = 0.15;
      double t = (x - ramp_x0) / ramp_width;
      if (t >= 1.0)
        v = 0.95;
      else if (t > 0.0)
        v = 0.15 + 0.80 * t;
      double dx = x - bx, dy = y - by;
      v += 0.30 * std::exp(-0.5 * (dx * dx + dy * dy) /
                           (blob_sigma * blob_sigma));
      img.pixels(y, x) = v;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      img.pixels(y, x) =
          std::clamp(img.pixels(y, x) + noise(rng), 0.0, 1.0);
  return img;
}

}  // namespace qconj
