#include "merowright/class_v.hpp"

#include <cmath>
#include <string>

#include "merowright/errors.hpp"

namespace mw {
namespace {

void require_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::domain, "r must lie in (0, 1), got " + std::to_string(r));
}

}  // namespace

ClassParams ClassParams::make(double alpha, double eta) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::domain, "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw Error(ErrorCode::domain, "eta must lie in (0, 1], got " + std::to_string(eta));
  }
  return ClassParams(alpha, eta);
}

double ClassParams::bracket(int k) const noexcept {
  return k * (1.0 + eta_) + (1.0 + eta_ * (2.0 * alpha_ - 1.0));
}

double coefficient_weight(const ClassParams& cp, const WrightParams& wp, int k) {
  return sigma_k(wp, k) * cp.bracket(k);
}

double membership_margin(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp) {
  if (!f.nonnegative()) {
    throw Error(ErrorCode::precondition, "membership is only decided for nonnegative coefficients");
  }
  double total = 0.0;
  for (int k = 1; k <= f.size(); ++k) {
    const double a = f.coefficient(k);
    if (a != 0.0) total += coefficient_weight(cp, wp, k) * a;
  }
  return cp.budget() - total;
}

double coefficient_bound(const ClassParams& cp, const WrightParams& wp, int k) {
  return cp.budget() / coefficient_weight(cp, wp, k);
}

MeroFunction extremal_function(const ClassParams& cp, const WrightParams& wp, int k) {
  return MeroFunction::single_term(k, coefficient_bound(cp, wp, k));
}

double envelope_radius_term(const ClassParams& cp, const WrightParams& wp) {
  const double alpha = cp.alpha();
  const double eta = cp.eta();
  return eta * (1.0 - alpha) / (sigma_k(wp, 1) * (1.0 + alpha * eta));
}

Envelope growth_bounds(const ClassParams& cp, const WrightParams& wp, double r) {
  require_radius(r);
  const double b = envelope_radius_term(cp, wp);
  return {1.0 / r - r * b, 1.0 / r + r * b};
}

Envelope distortion_bounds(const ClassParams& cp, const WrightParams& wp, double r) {
  require_radius(r);
  const double b = envelope_radius_term(cp, wp);
  const double inv_r2 = 1.0 / (r * r);
  return {inv_r2 - b, inv_r2 + b};
}

}  // namespace mw
