#pragma once

#include <vector>

#include "merowright/class_v.hpp"

namespace mw {

enum class TailTrend { decreasing, increasing, mixed };

struct RadiusResult {
  struct Entry {
    int k;
    double candidate;          // unclamped per-k radius
    double printed_candidate;  // convexity only: the formula without the factor k; NaN otherwise
  };

  double radius = 1.0;  // min(1, min_k candidate)
  int attained_k = 1;
  int k_max = 0;
  std::vector<Entry> per_k;
  TailTrend tail = TailTrend::mixed;  // trend of the last five candidates
};

// Radius of meromorphic starlikeness of order delta:
//   r_k = { sigma_k C(k) (1-delta) / (2 eta (k+2-delta)(1-alpha)) }^{1/(k+1)}
RadiusResult starlike_radius(const ClassParams& cp, const WrightParams& wp, double delta, int k_max);

// Radius of meromorphic convexity of order kappa:
//   r_k = { sigma_k C(k) (1-kappa) / (2 eta k (k+2-kappa)(1-alpha)) }^{1/(k+1)}
RadiusResult convex_radius(const ClassParams& cp, const WrightParams& wp, double kappa, int k_max);

// |z f'/f + 1| <= 1 - order (starlike) or |z f''/f' + 2| <= 1 - order (convex).
struct RadiusCondition {
  enum class Kind { starlike, convex };
  Kind kind;
  double order;

  static RadiusCondition starlike(double delta);
  static RadiusCondition convex(double kappa);

  double threshold() const noexcept { return 1.0 - order; }
};

// Left-hand side of the condition at z; +inf when f (or f') vanishes.
double condition_value(const MeroFunction& f, const RadiusCondition& cond, Complex z);

// Largest sampled max of condition_value over `angles` equally spaced points on |z| = r.
double condition_sweep(const MeroFunction& f, const RadiusCondition& cond, double r, int angles);

// Bisection for the largest r in (0, 1] at which the sampled condition holds,
// to within tol.
double numeric_radius(const MeroFunction& f, const RadiusCondition& cond, double tol, int angles = 720);

}  // namespace mw
