#pragma once

#include "merowright/gamma_kernel.hpp"
#include "merowright/mero_series.hpp"

namespace mw {

// Order pair (alpha, eta) of the class V(alpha, eta): 0 < alpha < 1 and
// 0 < eta <= 1.
class ClassParams {
 public:
  static ClassParams make(double alpha, double eta);

  double alpha() const noexcept { return alpha_; }
  double eta() const noexcept { return eta_; }

  // Right-hand side of the coefficient inequality, 2 eta (1 - alpha).
  double budget() const noexcept { return 2.0 * eta_ * (1.0 - alpha_); }

  // Bracket k(1+eta) + (1 + eta(2 alpha - 1)).
  double bracket(int k) const noexcept;

 private:
  ClassParams(double alpha, double eta) : alpha_(alpha), eta_(eta) {}

  double alpha_;
  double eta_;
};

// sigma_k * [k(1+eta) + (1 + eta(2 alpha - 1))].
double coefficient_weight(const ClassParams& cp, const WrightParams& wp, int k);

// 2 eta (1 - alpha) - sum_k coefficient_weight(k) a_k. Requires f in Sigma_q.
double membership_margin(const MeroFunction& f, const ClassParams& cp, const WrightParams& wp);

// Largest admissible a_k, 2 eta (1 - alpha) / coefficient_weight(k).
double coefficient_bound(const ClassParams& cp, const WrightParams& wp, int k);

// 1/z + coefficient_bound(k) z^k, which saturates the coefficient inequality.
MeroFunction extremal_function(const ClassParams& cp, const WrightParams& wp, int k);

struct Envelope {
  double lower;
  double upper;
};

// eta (1 - alpha) / (sigma_1 (1 + alpha eta)), the k = 1 extremal coefficient.
double envelope_radius_term(const ClassParams& cp, const WrightParams& wp);

// (1/r - rB, 1/r + rB). The lower value is not clamped at zero.
Envelope growth_bounds(const ClassParams& cp, const WrightParams& wp, double r);

// (1/r^2 - B, 1/r^2 + B).
Envelope distortion_bounds(const ClassParams& cp, const WrightParams& wp, double r);

}  // namespace mw
