#pragma once

#include <complex>
#include <span>
#include <vector>

#include "merowright/gamma_kernel.hpp"

namespace mw {

using Complex = std::complex<double>;

// Truncated meromorphic function f(z) = 1/z + sum_{k=1}^{K} a_k z^k.
//
// The principal part 1/z is implicit. coeffs()[k-1] holds a_k; K = 0 is the
// bare principal part.
class MeroFunction {
 public:
  MeroFunction() = default;
  explicit MeroFunction(std::vector<double> coeffs);

  // f(z) = 1/z + a z^k.
  static MeroFunction single_term(int k, double a);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  int size() const noexcept { return static_cast<int>(coeffs_.size()); }

  // a_k for k >= 1, zero past the truncation.
  double coefficient(int k) const noexcept;

  // All a_k >= 0, i.e. f is in Sigma_q.
  bool nonnegative() const noexcept { return nonnegative_; }

  friend bool operator==(const MeroFunction&, const MeroFunction&) = default;

 private:
  std::vector<double> coeffs_;
  bool nonnegative_ = true;
};

// Multiplier g(z) = 1/z + sum b_k z^k with every |b_k| <= 1.
class BoundedMultiplier {
 public:
  explicit BoundedMultiplier(std::vector<double> coeffs);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  int size() const noexcept { return static_cast<int>(coeffs_.size()); }
  double coefficient(int k) const noexcept;

 private:
  std::vector<double> coeffs_;
};

// Evaluation requires 0 < |z| < 1. Sums run over ascending k.
Complex evaluate(const MeroFunction& f, Complex z);
Complex evaluate_d1(const MeroFunction& f, Complex z);
Complex evaluate_d2(const MeroFunction& f, Complex z);

// Termwise product; the result is truncated at min(K_f, K_g).
MeroFunction hadamard(const MeroFunction& f, const MeroFunction& g);

// W[alpha_1] f: coefficient k scaled by sigma_k(params).
MeroFunction apply_operator(const WrightParams& params, const MeroFunction& f);

}  // namespace mw
