#include "merowright/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "merowright/errors.hpp"

namespace mw {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Keeps the sample with the largest `score`; ties go to the lexicographically
// smaller (radius, angle index).
class WorstTracker {
 public:
  void offer(const Sample& sample, double score) {
    if (std::isnan(score)) score = kInfinity;
    if (!worst_ || score > score_ ||
        (score == score_ && std::pair{sample.radius, sample.angle_index} <
                                std::pair{worst_->radius, worst_->angle_index})) {
      worst_ = sample;
      score_ = score;
    }
  }
  const std::optional<Sample>& worst() const { return worst_; }
  double score() const { return score_; }

 private:
  std::optional<Sample> worst_;
  double score_ = -kInfinity;
};

// Visits (radius, angle index, z) for every circle sample, then the ramp.
template <typename Visit>
void for_each_sample(const SamplingPlan& plan, Visit&& visit) {
  for (double r : plan.radii) {
    for (int j = 0; j < plan.angles; ++j) {
      visit(r, j, std::polar(r, 2.0 * std::numbers::pi * j / plan.angles));
    }
  }
  if (plan.include_real_axis_ramp) {
    for (double r : SamplingPlan::ramp_radii()) visit(r, -1, Complex{r, 0.0});
  }
}

enum class EnvelopeKind { growth, distortion };

VerificationReport verify_envelope(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp,
                                   const SamplingPlan& plan, double slack, EnvelopeKind kind) {
  plan.validate();
  VerificationReport report;
  report.check_name = kind == EnvelopeKind::growth ? "growth" : "distortion";
  if (f.nonnegative()) report.hypothesis_margin = membership_margin(f, cp, wp);

  WorstTracker tracker;
  for_each_sample(plan, [&](double r, int j, Complex z) {
    const auto bounds = kind == EnvelopeKind::growth ? growth_bounds(cp, wp, r) : distortion_bounds(cp, wp, r);
    const double value = std::abs(kind == EnvelopeKind::growth ? evaluate(f, z) : evaluate_d1(f, z));
    const double below = value - bounds.lower;
    const double above = bounds.upper - value;
    const double bound = below < above ? bounds.lower : bounds.upper;
    ++report.samples;
    tracker.offer({r, j, z, value, bound}, -std::min(below, above));
  });
  report.worst = tracker.worst();
  report.margin = -tracker.score();
  report.passed = report.margin >= -slack;
  return report;
}

// sum k (k+1) c_k z^(k-1) and 2(1-alpha)/z^2 + sum k (k-1+2alpha) c_k z^(k-1).
struct RatioParts {
  Complex numerator;
  Complex denominator;
};

RatioParts ratio_parts(const MeroFunction& transformed, double alpha, Complex z) {
  RatioParts parts{{0.0, 0.0}, 2.0 * (1.0 - alpha) / (z * z)};
  Complex power{1.0, 0.0};
  for (int k = 1; k <= transformed.size(); ++k) {
    const double c = transformed.coefficient(k);
    parts.numerator += (k * (k + 1.0) * c) * power;
    parts.denominator += (k * (k - 1.0 + 2.0 * alpha) * c) * power;
    power *= z;
  }
  return parts;
}

}  // namespace

const std::vector<double>& SamplingPlan::ramp_radii() {
  static const std::vector<double> radii{1.0 - 1e-2, 1.0 - 1e-3, 1.0 - 1e-4};
  return radii;
}

void SamplingPlan::validate() const {
  if (angles < 8) throw Error(ErrorCode::domain, "sampling plan needs at least 8 angles");
  if (radii.empty()) throw Error(ErrorCode::domain, "sampling plan needs at least one radius");
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) {
      throw Error(ErrorCode::domain, "sampling radii must lie in (0, 1), got " + std::to_string(r));
    }
  }
}

double condition_ratio_transformed(const MeroFunction& transformed, double alpha, Complex z) {
  // F'(z) = 0 leaves q undefined; F' also validates z.
  if (evaluate_d1(transformed, z) == Complex{0.0, 0.0}) return kInfinity;
  const auto parts = ratio_parts(transformed, alpha, z);
  if (parts.denominator == Complex{0.0, 0.0}) return kInfinity;
  const double ratio = std::abs(parts.numerator) / std::abs(parts.denominator);
  return std::isnan(ratio) ? kInfinity : ratio;
}

double condition_ratio(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp, Complex z) {
  return condition_ratio_transformed(apply_operator(wp, f), cp.alpha(), z);
}

VerificationReport verify_membership_analytic(const MeroFunction& f, const ClassParams& cp,
                                              const WrightParams& wp, const SamplingPlan& plan) {
  plan.validate();
  const MeroFunction transformed = apply_operator(wp, f);
  const double eta = cp.eta();

  VerificationReport report;
  report.check_name = "membership_analytic";
  WorstTracker tracker;
  for_each_sample(plan, [&](double r, int j, Complex z) {
    const double ratio = condition_ratio_transformed(transformed, cp.alpha(), z);
    ++report.samples;
    if (std::isinf(ratio)) ++report.singular_samples;
    tracker.offer({r, j, z, ratio, eta}, ratio);
  });
  report.worst = tracker.worst();
  report.margin = eta - tracker.score();
  report.passed = tracker.score() < eta;
  return report;
}

VerificationReport verify_growth(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp,
                                 const SamplingPlan& plan, double slack) {
  return verify_envelope(f, cp, wp, plan, slack, EnvelopeKind::growth);
}

VerificationReport verify_distortion(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp,
                                     const SamplingPlan& plan, double slack) {
  return verify_envelope(f, cp, wp, plan, slack, EnvelopeKind::distortion);
}

VerificationReport verify_radius(const MeroFunction& f, const RadiusCondition& cond, double claimed_radius,
                                 const SamplingPlan& plan) {
  if (!(claimed_radius > 0.0 && claimed_radius <= 1.0)) {
    throw Error(ErrorCode::domain, "claimed radius must lie in (0, 1]");
  }
  if (plan.angles < 8) throw Error(ErrorCode::domain, "sampling plan needs at least 8 angles");

  VerificationReport report;
  report.check_name = cond.kind == RadiusCondition::Kind::starlike ? "radius_starlike" : "radius_convex";
  const double threshold = cond.threshold();
  WorstTracker tracker;
  for (double scale : {0.5, 0.99}) {
    const double r = scale * claimed_radius;
    for (int j = 0; j < plan.angles; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / plan.angles);
      const double value = condition_value(f, cond, z);
      ++report.samples;
      if (std::isinf(value)) ++report.singular_samples;
      tracker.offer({r, j, z, value, threshold}, value);
    }
  }
  report.worst = tracker.worst();
  report.margin = threshold - tracker.score();
  report.passed = report.margin >= 0.0;
  return report;
}

}  // namespace mw
