#pragma once

// Two-dimensional extension of the conjugate-variable segmentation:
// per-pixel derivative estimation, labeling, and adaptive vs uniform
// box smoothing.

#include <cstdint>
#include <vector>

#include "qconj/segmentation.hpp"
#include "qconj/types.hpp"

namespace qconj {

// Grayscale image with values in [0,1]; pixels(y, x).
struct ImageGray {
  int width = 0, height = 0;
  RMat pixels;  // height x width
};

void validate_image(const ImageGray& img);

struct ImageLabelMap {
  int width = 0, height = 0;
  std::vector<Label> labels;  // row-major
  Label at(int y, int x) const { return labels[size_t(y) * width + x]; }
};

// Per-pixel conjugate pair: f' is the gradient magnitude sqrt(gx^2+gy^2)
// (clamped to [0, c1]), f'' the Laplacian gxx+gyy (clamped to [-c2, c2]).
// Central differences with reflected boundaries.
struct ImageDerivatives {
  RMat grad_mag;
  RMat laplacian;
  int clamped = 0;
};

ImageDerivatives image_derivatives(const ImageGray& img,
                                   const SignalLimits& lim,
                                   double presmooth_sigma);

ImageLabelMap label_image(const ImageGray& img, const SignalLimits& lim,
                          Rule rule, double presmooth_sigma,
                          P4Form form = P4Form::ScaledIdentity);

// Pixels labeled CONSTANT are replaced by the mean of the kernel window
// (reflected borders); every other pixel is copied bit-identically.
ImageGray adaptive_mean_filter(const ImageGray& img,
                               const ImageLabelMap& labels, int kernel);

// Every pixel replaced by the window mean.
ImageGray uniform_mean_filter(const ImageGray& img, int kernel);

// Deterministic synthetic test scene: flat background, a vertical ramp
// edge, a Gaussian blob, and seeded additive uniform noise (amplitude
// 0.05). Stands in for a natural photograph in tests and demos.
ImageGray synthetic_test_image(int width, int height, uint64_t seed);

}  // namespace qconj
