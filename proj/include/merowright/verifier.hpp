#pragma once

#include <optional>
#include <string>
#include <vector>

#include "merowright/class_v.hpp"
#include "merowright/radii.hpp"

namespace mw {

// Sample set standing in for the punctured disk.
struct SamplingPlan {
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  int angles = 720;
  bool include_real_axis_ramp = true;

  static const std::vector<double>& ramp_radii();  // 1 - 1e-2, 1 - 1e-3, 1 - 1e-4

  // Throws domain error unless every radius is in (0, 1) and angles >= 8.
  void validate() const;
};

struct Sample {
  double radius;
  int angle_index;  // -1 for real-axis ramp points
  Complex z;
  double observed;
  double bound;
};

struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double margin = 0.0;
  std::optional<Sample> worst;
  int samples = 0;
  int singular_samples = 0;
  // Coefficient-side margin of the input when the check is hypothesis-gated
  // (growth, distortion): a negative value means the theorem does not apply.
  std::optional<double> hypothesis_margin;
};

// |q + 2| / |q + 2 alpha| with q = z F''/F', F = W[alpha_1] f. +inf at
// singular samples.
double condition_ratio(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp, Complex z);

// Same ratio for an already transformed F.
double condition_ratio_transformed(const MeroFunction& transformed, double alpha, Complex z);

// Pass iff every sampled ratio is strictly below eta.
VerificationReport verify_membership_analytic(const MeroFunction& f, const ClassParams& cp,
                                              const WrightParams& wp, const SamplingPlan& plan);

VerificationReport verify_growth(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp,
                                 const SamplingPlan& plan, double slack = 1e-12);

VerificationReport verify_distortion(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp,
                                     const SamplingPlan& plan, double slack = 1e-12);

// Condition checked at |z| in {0.5, 0.99} x claimed_radius.
VerificationReport verify_radius(const MeroFunction& f, const RadiusCondition& cond, double claimed_radius,
                                 const SamplingPlan& plan);

}  // namespace mw
