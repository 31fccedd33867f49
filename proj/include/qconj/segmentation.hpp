#pragma once

// Conjugate-variable segmentation: encode (f', f'') into a qubit, classify
// against the projector set P0..P4, estimate derivatives from sampled
// signals, and generate decision regions.

#include <array>
#include <vector>

#include "qconj/types.hpp"

namespace qconj {

struct SignalLimits {
  double c1;  // bound on |f'|
  double c2;  // bound on |f''|
};

void validate_limits(const SignalLimits& lim);

struct ConjugateSample {
  double fp;   // f'
  double fpp;  // f''
};

// P4 can be scored either as the rank-1 projector |x+><x+| or as the
// scaled identity (1/sqrt2) I. The two give different expectation
// scores; ScaledIdentity (constant
// 1/sqrt2) is the default as it bounds the CONSTANT decision region.
enum class P4Form { Rank1, ScaledIdentity };

enum class Rule { Expectation, Distance, Model };

// Basis kets of the Bloch axes.
Qubit z_plus();
Qubit z_minus();
Qubit x_plus();
Qubit x_minus();
Qubit y_plus();
Qubit y_minus();

// Encodes a clamped (f', f'') pair as
// |psi> = p+ e^{i pi f'/c1} |z+> + p- |z->,  p+- = sqrt((c2 +- f'')/(2 c2)).
Qubit conjugate_encode(ConjugateSample s, const SignalLimits& lim);

// P0 = |z+><z+|, P1 = |z-><z-|, P2 = (1/sqrt2)(|y-><y-| + |x-><x-|),
// P3 = (1/sqrt2)(|y+><y+| + |x-><x-|), P4 = |x+><x+| (rank-1 ket form).
std::array<QubitOp, 5> projector_set();

struct Classification {
  Label label;
  std::array<double, 5> scores;
};

// argmax_i <psi|P_i|psi>; ties broken by lowest index. With
// P4Form::ScaledIdentity the P4 score is the constant 1/sqrt2.
Classification classify_expectation(const Qubit& psi,
                                    P4Form form = P4Form::ScaledIdentity);

// argmin_i D(chi_i, psi) over the dominant eigenvectors chi_i of P0..P4;
// scores hold the five distances.
Classification classify_distance(const Qubit& psi);

// Model-based rule: CONSTANT inside the circle of radius min(c1,c2)/2,
// otherwise MIN/MAX/RISING/FALLING by the dominant derivative.
Label classify_model(ConjugateSample s, const SignalLimits& lim);

struct SampledSignal {
  RVec ts;      // strictly increasing, uniformly spaced
  RVec values;  // f(t)
};

void validate_signal(const SampledSignal& sig);

struct DerivativeEstimate {
  std::vector<ConjugateSample> samples;
  int clamped = 0;  // number of derivative values clamped to the limits
};

// Optional Gaussian pre-smoothing (sigma in samples, kernel truncated at
// 3 sigma, reflected boundaries), then central differences; endpoints use
// one-sided stencils. Out-of-range derivatives clamp to +-c1 / +-c2.
DerivativeEstimate estimate_derivatives(const SampledSignal& sig,
                                        const SignalLimits& lim,
                                        double presmooth_sigma);

struct LabelMap {
  std::vector<Label> labels;
  std::vector<std::array<double, 5>> scores;
  DerivativeEstimate derivs;
};

LabelMap segment_signal(const SampledSignal& sig, const SignalLimits& lim,
                        Rule rule, double presmooth_sigma,
                        P4Form form = P4Form::ScaledIdentity);

// Label grid over [-c1,c1] x [-c2,c2], sampled at cell centers.
// Cell (i,j): fpp_axis(i) decreasing from +c2 (row 0) to -c2, fp_axis(j)
// increasing from -c1 to +c1.
struct RegionGrid {
  int rows = 0, cols = 0;
  RVec fp_axis, fpp_axis;
  std::vector<Label> cells;  // row-major
  Label at(int row, int col) const { return cells[row * cols + col]; }
};

RegionGrid decision_regions(const SignalLimits& lim, int resolution, Rule rule,
                            P4Form form = P4Form::ScaledIdentity);

// CONSTANT-region extent measured from the grid plus the closed-form
// boundary value implied by the classification rule.
struct RegionDiagnostics {
  double measured_radius_fpp = 0.0;  // along f' = 0, in f'' units
  double measured_radius_fp = 0.0;   // along f'' = 0, in f' units
  double closed_form_fpp = 0.0;      // (sqrt2 - 1) c2 for the expectation rule,
                                     // min(c1,c2)/2 for the model rule
};

RegionDiagnostics region_diagnostics(const RegionGrid& grid,
                                     const SignalLimits& lim, Rule rule);

// Spectral norms of the four commutators [|x+-><x+-|, |z+-><z+-|];
// each equals 1/2.
std::array<double, 4> xz_commutator_norms();

// Maximum of the four norms above.
double commutator_maximality_check();

// The cos/constant test signal: f(t) = cos(t) for |t| < 2 pi, 1 otherwise.
SampledSignal cosconst_signal(int n, double t0 = -2.0 * 3.14159265358979323846,
                              double t1 = 3.0 * 3.14159265358979323846);
double cosconst_value(double t);
ConjugateSample cosconst_derivatives(double t);

}  // namespace qconj
