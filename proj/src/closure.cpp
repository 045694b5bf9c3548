#include "merowright/closure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "merowright/errors.hpp"

namespace mw {
namespace {

// Per-k order  scale eta^2 (1-alpha)(k+1) / (sigma_k C(k)^2 - scale eta^2 (1-alpha)(k+2alpha-1)).
ClosureOrder closure_order(const ClassParams& cp, const WrightParams& wp, int k_max, double scale) {
  if (k_max < 1) throw Error(ErrorCode::domain, "k_max must be >= 1, got " + std::to_string(k_max));
  const double alpha = cp.alpha();
  const double base = scale * cp.eta() * cp.eta() * (1.0 - alpha);

  ClosureOrder result;
  result.k_max = k_max;
  result.per_k.reserve(static_cast<std::size_t>(k_max));
  double best = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double c = cp.bracket(k);
    const double denominator = sigma_k(wp, k) * c * c - base * (k + 2.0 * alpha - 1.0);
    const double order = base * (k + 1.0) / denominator;
    const bool positive = denominator > 0.0;
    result.per_k.push_back({k, order, denominator, positive, positive && order > 1.0});
    if (!positive && !result.first_bad_k) result.first_bad_k = k;
    best = std::max(best, order);
  }
  if (!result.first_bad_k) result.aggregate = best;
  return result;
}

}  // namespace

ClosureOrder convolution_order(const ClassParams& cp, const WrightParams& wp, int k_max) {
  return closure_order(cp, wp, k_max, 2.0);
}

ClosureOrder quadratic_mean_order(const ClassParams& cp, const WrightParams& wp, int k_max) {
  return closure_order(cp, wp, k_max, 4.0);
}

MeroFunction quadratic_combination(const MeroFunction& f1, const MeroFunction& f2) {
  if (!f1.nonnegative() || !f2.nonnegative()) {
    throw Error(ErrorCode::precondition, "quadratic combination requires nonnegative coefficients");
  }
  const int n = std::max(f1.size(), f2.size());
  std::vector<double> coeffs(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double a1 = f1.coefficient(k);
    const double a2 = f2.coefficient(k);
    coeffs[static_cast<std::size_t>(k - 1)] = a1 * a1 + a2 * a2;
  }
  return MeroFunction(std::move(coeffs));
}

MultipliedFunction bounded_multiplier_convolve(const MeroFunction& f, const BoundedMultiplier& g,
                                               const ClassParams& cp, const WrightParams& wp) {
  if (membership_margin(f, cp, wp) < 0.0) {
    throw Error(ErrorCode::precondition, "bounded multiplier closure requires a class member");
  }
  const int n = std::min(f.size(), g.size());
  std::vector<double> coeffs(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double product = f.coefficient(k) * g.coefficient(k);
    coeffs[static_cast<std::size_t>(k - 1)] = product;
    if (product != 0.0) total += coefficient_weight(cp, wp, k) * std::abs(product);
  }
  return {MeroFunction(std::move(coeffs)), cp.budget() - total};
}

}  // namespace mw
