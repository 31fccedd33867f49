#include "qconj/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qconj/detail/stencils.hpp"
#include "qconj/metrics.hpp"
#include "qconj/quantum.hpp"

namespace qconj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

double clamp_counted(double v, double lo, double hi, int& count) {
  if (v < lo) {
    ++count;
    return lo;
  }
  if (v > hi) {
    ++count;
    return hi;
  }
  return v;
}

template <class F>
Label argbest(const std::array<double, 5>& scores, F better) {
  int best = 0;
  for (int i = 1; i < 5; ++i)
    if (better(scores[i], scores[best])) best = i;
  return static_cast<Label>(best);
}

}  // namespace

void validate_limits(const SignalLimits& lim) {
  if (!(lim.c1 > 0.0) || !(lim.c2 > 0.0) || !std::isfinite(lim.c1) ||
      !std::isfinite(lim.c2))
    throw std::invalid_argument("signal limits must be positive and finite");
}

Qubit z_plus() { return {1.0, 0.0}; }
Qubit z_minus() { return {0.0, 1.0}; }
Qubit x_plus() { return {kInvSqrt2, kInvSqrt2}; }
Qubit x_minus() { return {kInvSqrt2, -kInvSqrt2}; }
Qubit y_plus() { return {kInvSqrt2, Complex(0.0, kInvSqrt2)}; }
Qubit y_minus() { return {kInvSqrt2, Complex(0.0, -kInvSqrt2)}; }

Qubit conjugate_encode(ConjugateSample s, const SignalLimits& lim) {
  validate_limits(lim);
  if (!std::isfinite(s.fp) || !std::isfinite(s.fpp))
    throw SignalError("non-finite derivative sample");
  double fp = std::clamp(s.fp, -lim.c1, lim.c1);
  double fpp = std::clamp(s.fpp, -lim.c2, lim.c2);
  double p_plus = std::sqrt((lim.c2 + fpp) / (2.0 * lim.c2));
  double p_minus = std::sqrt((lim.c2 - fpp) / (2.0 * lim.c2));
  Qubit psi;
  psi(0) = p_plus * std::exp(Complex(0.0, kPi * fp / lim.c1));
  psi(1) = p_minus;
  return psi;
}

std::array<QubitOp, 5> projector_set() {
  auto proj = [](const Qubit& k) { return QubitOp(k * k.adjoint()); };
  std::array<QubitOp, 5> p;
  p[0] = proj(z_plus());
  p[1] = proj(z_minus());
  p[2] = kInvSqrt2 * (proj(y_minus()) + proj(x_minus()));
  p[3] = kInvSqrt2 * (proj(y_plus()) + proj(x_minus()));
  p[4] = proj(x_plus());
  return p;
}

Classification classify_expectation(const Qubit& psi, P4Form form) {
  static const std::array<QubitOp, 5> projs = projector_set();
  Classification c;
  for (int i = 0; i < 5; ++i) c.scores[i] = expectation_raw(projs[i], psi);
  if (form == P4Form::ScaledIdentity) c.scores[4] = kInvSqrt2;
  c.label = argbest(c.scores, [](double a, double b) { return a > b; });
  return c;
}

namespace {

// Dominant eigenvector of each projector; for the rank-1 ones this is the
// defining ket.
const std::array<Qubit, 5>& dominant_eigenvectors() {
  static const std::array<Qubit, 5> kets = [] {
    std::array<Qubit, 5> k;
    auto projs = projector_set();
    for (int i = 0; i < 5; ++i) {
      auto eig = eig_hermitian(projs[i]);
      k[i] = eig.eigenvectors.col(eig.eigenvectors.cols() - 1);  // largest
    }
    return k;
  }();
  return kets;
}

}  // namespace

Classification classify_distance(const Qubit& psi) {
  const auto& kets = dominant_eigenvectors();
  Classification c;
  for (int i = 0; i < 5; ++i)
    c.scores[i] = no_name_distance_pure(kets[i], psi);
  c.label = argbest(c.scores, [](double a, double b) { return a < b; });
  return c;
}

Label classify_model(ConjugateSample s, const SignalLimits& lim) {
  double c = std::min(lim.c1, lim.c2);
  if (std::hypot(s.fp, s.fpp) < 0.5 * c) return Label::Constant;
  if (s.fpp >= std::abs(s.fp)) return Label::Min;
  if (-s.fpp >= std::abs(s.fp)) return Label::Max;
  return s.fp > 0.0 ? Label::Rising : Label::Falling;
}

void validate_signal(const SampledSignal& sig) {
  const auto n = sig.ts.size();
  if (n != sig.values.size())
    throw SignalError("time and value vectors differ in length");
  if (n < 5) throw SignalError("at least 5 samples required");
  double dt = sig.ts(1) - sig.ts(0);
  if (!(dt > 0.0)) throw SignalError("time axis must be strictly increasing");
  for (Eigen::Index i = 1; i < n; ++i) {
    double d = sig.ts(i) - sig.ts(i - 1);
    if (std::abs(d - dt) > 1e-9 * std::abs(dt))
      throw SignalError("non-uniform sampling");
  }
}

DerivativeEstimate estimate_derivatives(const SampledSignal& sig,
                                        const SignalLimits& lim,
                                        double presmooth_sigma) {
  validate_signal(sig);
  validate_limits(lim);
  const auto n = sig.ts.size();
  const double dt = sig.ts(1) - sig.ts(0);
  RVec f = detail::convolve_reflect(sig.values,
                                    detail::gaussian_kernel(presmooth_sigma));
  DerivativeEstimate est;
  est.samples.resize(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    double fp, fpp;
    if (i == 0) {
      fp = (f(1) - f(0)) / dt;
      fpp = (f(2) - 2.0 * f(1) + f(0)) / (dt * dt);
    } else if (i == n - 1) {
      fp = (f(n - 1) - f(n - 2)) / dt;
      fpp = (f(n - 1) - 2.0 * f(n - 2) + f(n - 3)) / (dt * dt);
    } else {
      fp = (f(i + 1) - f(i - 1)) / (2.0 * dt);
      fpp = (f(i + 1) - 2.0 * f(i) + f(i - 1)) / (dt * dt);
    }
    est.samples[static_cast<size_t>(i)] = {
        clamp_counted(fp, -lim.c1, lim.c1, est.clamped),
        clamp_counted(fpp, -lim.c2, lim.c2, est.clamped)};
  }
  return est;
}

LabelMap segment_signal(const SampledSignal& sig, const SignalLimits& lim,
                        Rule rule, double presmooth_sigma, P4Form form) {
  LabelMap map;
  map.derivs = estimate_derivatives(sig, lim, presmooth_sigma);
  map.labels.reserve(map.derivs.samples.size());
  map.scores.reserve(map.derivs.samples.size());
  for (const auto& s : map.derivs.samples) {
    if (rule == Rule::Model) {
      map.labels.push_back(classify_model(s, lim));
      map.scores.push_back({0, 0, 0, 0, 0});
      continue;
    }
    Qubit psi = conjugate_encode(s, lim);
    Classification c = rule == Rule::Expectation
                           ? classify_expectation(psi, form)
                           : classify_distance(psi);
    map.labels.push_back(c.label);
    map.scores.push_back(c.scores);
  }
  return map;
}

RegionGrid decision_regions(const SignalLimits& lim, int resolution, Rule rule,
                            P4Form form) {
  validate_limits(lim);
  if (resolution < 16) throw std::invalid_argument("resolution must be >= 16");
  RegionGrid g;
  g.rows = g.cols = resolution;
  g.fp_axis.resize(resolution);
  g.fpp_axis.resize(resolution);
  // Cell centers; the box edges +-c1, +-c2 are never sampled exactly.
  for (int j = 0; j < resolution; ++j)
    g.fp_axis(j) = -lim.c1 + (j + 0.5) * 2.0 * lim.c1 / resolution;
  for (int i = 0; i < resolution; ++i)
    g.fpp_axis(i) = lim.c2 - (i + 0.5) * 2.0 * lim.c2 / resolution;
  g.cells.resize(static_cast<size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      ConjugateSample s{g.fp_axis(j), g.fpp_axis(i)};
      Label l;
      if (rule == Rule::Model) {
        l = classify_model(s, lim);
      } else {
        Qubit psi = conjugate_encode(s, lim);
        l = (rule == Rule::Expectation ? classify_expectation(psi, form)
                                       : classify_distance(psi))
                .label;
      }
      g.cells[static_cast<size_t>(i) * resolution + j] = l;
    }
  }
  return g;
}

RegionDiagnostics region_diagnostics(const RegionGrid& grid,
                                     const SignalLimits& lim, Rule rule) {
  RegionDiagnostics d;
  int j0 = 0, r0 = 0;
  for (int j = 1; j < grid.cols; ++j)
    if (std::abs(grid.fp_axis(j)) < std::abs(grid.fp_axis(j0))) j0 = j;
  for (int i = 1; i < grid.rows; ++i)
    if (std::abs(grid.fpp_axis(i)) < std::abs(grid.fpp_axis(r0))) r0 = i;
  d.measured_radius_fpp = lim.c2;
  for (int i = r0; i >= 0; --i) {
    if (grid.at(i, j0) != Label::Constant) {
      d.measured_radius_fpp = std::abs(grid.fpp_axis(i));
      break;
    }
  }
  d.measured_radius_fp = lim.c1;
  for (int j = j0; j < grid.cols; ++j) {
    if (grid.at(r0, j) != Label::Constant) {
      d.measured_radius_fp = std::abs(grid.fp_axis(j));
      break;
    }
  }
  if (rule == Rule::Model)
    d.closed_form_fpp = 0.5 * std::min(lim.c1, lim.c2);
  else if (rule == Rule::Expectation)
    d.closed_form_fpp = (std::sqrt(2.0) - 1.0) * lim.c2;
  return d;
}

std::array<double, 4> xz_commutator_norms() {
  auto proj = [](const Qubit& k) { return QubitOp(k * k.adjoint()); };
  const QubitOp a[2] = {proj(x_plus()), proj(x_minus())};
  const QubitOp b[2] = {proj(z_plus()), proj(z_minus())};
  std::array<double, 4> norms;
  int k = 0;
  for (const auto& ai : a)
    for (const auto& bi : b) norms[k++] = spectral_norm(commutator(ai, bi));
  return norms;
}

double commutator_maximality_check() {
  auto norms = xz_commutator_norms();
  return *std::max_element(norms.begin(), norms.end());
}

double cosconst_value(double t) {
  return std::abs(t) < 2.0 * kPi ? std::cos(t) : 1.0;
}

ConjugateSample cosconst_derivatives(double t) {
  if (std::abs(t) < 2.0 * kPi) return {-std::sin(t), -std::cos(t)};
  return {0.0, 0.0};
}

SampledSignal cosconst_signal(int n, double t0, double t1) {
  if (n < 5) throw SignalError("at least 5 samples required");
  SampledSignal sig;
  sig.ts = RVec::LinSpaced(n, t0, t1);
  sig.values.resize(n);
  for (int i = 0; i < n; ++i) sig.values(i) = cosconst_value(sig.ts(i));
  return sig;
}

}  // namespace qconj
