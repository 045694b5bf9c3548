#pragma once

#include <optional>
#include <vector>

#include "merowright/class_v.hpp"

namespace mw {

// Per-k closure orders for Hadamard-type combinations of class members.
struct ClosureOrder {
  struct Entry {
    int k;
    double order;        // numerator / denominator; meaningless when the denominator is <= 0
    double denominator;
    bool denominator_positive;
    bool out_of_range;   // order > 1, so it cannot serve as an eta
  };

  std::vector<Entry> per_k;
  std::optional<double> aggregate;  // max over k when every denominator is positive
  std::optional<int> first_bad_k;   // first k with a non-positive denominator
  int k_max = 0;
};

// Order delta(k) for f * g, f, g in V(alpha, eta):
//
//   delta(k) = 2 eta^2 (1-alpha)(k+1)
//              / (sigma_k C(k)^2 - 2 eta^2 (1-alpha)(k + 2 alpha - 1))
//
// with C(k) the class bracket.
ClosureOrder convolution_order(const ClassParams& cp, const WrightParams& wp, int k_max);

// Order beta(k) for the quadratic combination, 4 eta^2 in place of 2 eta^2.
ClosureOrder quadratic_mean_order(const ClassParams& cp, const WrightParams& wp, int k_max);

// g with coefficients a_{k,1}^2 + a_{k,2}^2. Both inputs must be in Sigma_q.
MeroFunction quadratic_combination(const MeroFunction& f1, const MeroFunction& f2);

struct MultipliedFunction {
  MeroFunction function;  // f * g, signed coefficients a_k b_k
  double margin;          // budget - sum weight_k |a_k b_k|
};

// f * g for a member f and a bounded multiplier g. The margin is computed on
// |a_k b_k| and is never below membership_margin(f).
MultipliedFunction bounded_multiplier_convolve(const MeroFunction& f, const BoundedMultiplier& g,
                                               const ClassParams& cp, const WrightParams& wp);

}  // namespace mw
