#include "merowright/radii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "merowright/errors.hpp"

namespace mw {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void require_order(double order, const char* name) {
  if (!(order >= 0.0 && order < 1.0)) {
    throw Error(ErrorCode::domain, std::string(name) + " must lie in [0, 1), got " + std::to_string(order));
  }
}

void require_k_max(int k_max) {
  if (k_max < 1) throw Error(ErrorCode::domain, "k_max must be >= 1, got " + std::to_string(k_max));
}

// (sigma_k * factor)^(1/(k+1)) in log space so that tiny sigma_k stays usable.
double kth_root(const WrightParams& wp, int k, double factor) {
  return std::exp((log_sigma_k(wp, k) + std::log(factor)) / (k + 1.0));
}

TailTrend tail_trend(const std::vector<RadiusResult::Entry>& per_k) {
  const std::size_t n = per_k.size();
  const std::size_t first = n > 5 ? n - 5 : 0;
  bool decreasing = n - first >= 2;
  bool increasing = n - first >= 2;
  for (std::size_t i = first; i + 1 < n; ++i) {
    if (!(per_k[i + 1].candidate < per_k[i].candidate)) decreasing = false;
    if (!(per_k[i + 1].candidate > per_k[i].candidate)) increasing = false;
  }
  if (decreasing) return TailTrend::decreasing;
  if (increasing) return TailTrend::increasing;
  return TailTrend::mixed;
}

void finish(RadiusResult& result) {
  double best = kInfinity;
  for (const auto& e : result.per_k) {
    if (e.candidate < best) {
      best = e.candidate;
      result.attained_k = e.k;
    }
  }
  result.radius = std::min(1.0, best);
  result.tail = tail_trend(result.per_k);
}

// z f'(z) + f(z) = sum (k+1) a_k z^k.
Complex starlike_numerator(const MeroFunction& f, Complex z) {
  Complex sum{0.0, 0.0};
  Complex power = z;
  for (int k = 1; k <= f.size(); ++k) {
    sum += ((k + 1.0) * f.coefficient(k)) * power;
    power *= z;
  }
  return sum;
}

// z f''(z) + 2 f'(z) = sum k (k+1) a_k z^(k-1).
Complex convex_numerator(const MeroFunction& f, Complex z) {
  Complex sum{0.0, 0.0};
  Complex power{1.0, 0.0};
  for (int k = 1; k <= f.size(); ++k) {
    sum += (static_cast<double>(k) * (k + 1.0) * f.coefficient(k)) * power;
    power *= z;
  }
  return sum;
}

}  // namespace

RadiusResult starlike_radius(const ClassParams& cp, const WrightParams& wp, double delta, int k_max) {
  require_order(delta, "delta");
  require_k_max(k_max);
  const double eta = cp.eta();
  const double alpha = cp.alpha();

  RadiusResult result;
  result.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    const double factor = cp.bracket(k) * (1.0 - delta) / (2.0 * eta * (k + 2.0 - delta) * (1.0 - alpha));
    result.per_k.push_back({k, kth_root(wp, k, factor), std::numeric_limits<double>::quiet_NaN()});
  }
  finish(result);
  return result;
}

RadiusResult convex_radius(const ClassParams& cp, const WrightParams& wp, double kappa, int k_max) {
  require_order(kappa, "kappa");
  require_k_max(k_max);
  const double eta = cp.eta();
  const double alpha = cp.alpha();

  RadiusResult result;
  result.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    const double printed = cp.bracket(k) * (1.0 - kappa) / (2.0 * eta * (k + 2.0 - kappa) * (1.0 - alpha));
    result.per_k.push_back({k, kth_root(wp, k, printed / k), kth_root(wp, k, printed)});
  }
  finish(result);
  return result;
}

RadiusCondition RadiusCondition::starlike(double delta) {
  require_order(delta, "delta");
  return {Kind::starlike, delta};
}

RadiusCondition RadiusCondition::convex(double kappa) {
  require_order(kappa, "kappa");
  return {Kind::convex, kappa};
}

double condition_value(const MeroFunction& f, const RadiusCondition& cond, Complex z) {
  if (cond.kind == RadiusCondition::Kind::starlike) {
    const Complex value = evaluate(f, z);
    if (value == Complex{0.0, 0.0}) return kInfinity;
    return std::abs(starlike_numerator(f, z) / value);
  }
  const Complex slope = evaluate_d1(f, z);
  if (slope == Complex{0.0, 0.0}) return kInfinity;
  return std::abs(convex_numerator(f, z) / slope);
}

double condition_sweep(const MeroFunction& f, const RadiusCondition& cond, double r, int angles) {
  double worst = 0.0;
  for (int j = 0; j < angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / angles;
    const double value = condition_value(f, cond, std::polar(r, theta));
    if (!(value <= worst)) worst = std::isnan(value) ? kInfinity : value;
  }
  return worst;
}

double numeric_radius(const MeroFunction& f, const RadiusCondition& cond, double tol, int angles) {
  if (!(tol > 0.0 && tol < 1.0)) throw Error(ErrorCode::domain, "tol must lie in (0, 1)");
  if (angles < 8) throw Error(ErrorCode::domain, "at least 8 angles are required");

  const double threshold = cond.threshold();
  auto holds = [&](double r) { return condition_sweep(f, cond, r, angles) <= threshold; };

  if (holds(1.0 - 0.5 * tol)) return 1.0;
  double lo = std::min(tol, 1e-4);
  if (!holds(lo)) {
    throw Error(ErrorCode::degenerate, "radius condition fails even at r = " + std::to_string(lo));
  }
  double hi = 1.0 - 0.5 * tol;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace mw
