#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mw {

// (alpha_t, A_t) upstairs, (beta_t, B_t) downstairs.
struct ParamPair {
  double value;
  double weight;
};

// Both lists non-empty, values and weights positive and finite,
// 1 + sum(B_t) - sum(A_t) >= 0.
class WrightParams {
 public:
  static WrightParams make(std::vector<ParamPair> upper, std::vector<ParamPair> lower);

  static WrightParams unit(double alpha, double beta);

  std::span<const ParamPair> upper() const noexcept { return upper_; }
  std::span<const ParamPair> lower() const noexcept { return lower_; }

  bool unit_weights() const noexcept;

  // 1 + sum(B_t) - sum(A_t); nonnegative for valid parameters.
  double convergence_slack() const noexcept;

 private:
  WrightParams(std::vector<ParamPair> upper, std::vector<ParamPair> lower)
      : upper_(std::move(upper)), lower_(std::move(lower)) {}

  std::vector<ParamPair> upper_;
  std::vector<ParamPair> lower_;
};

// ln Gamma(x), x > 0. Lanczos (lanczos13m53 coefficients); zeta series for
// ln Gamma(1 + e) within 0.2 of x = 1 and x = 2.
double log_gamma(double x);

double log_omega(const WrightParams& params);

// Omega = prod Gamma(beta_t) / prod Gamma(alpha_t). Throws RangeError when
// the log value cannot be exponentiated.
double omega(const WrightParams& params);

// ln sigma_k, always finite for valid input.
double log_sigma_k(const WrightParams& params, int k);

// sigma_k = Omega prod Gamma(alpha_t + A_t (k+1)) / ((k+1)! prod Gamma(beta_t + B_t (k+1))),
// summed in log space. RangeError (with the log value) when not a normal double.
double sigma_k(const WrightParams& params, int k);

// Rising-factorial product, unit weights only.
double sigma_k_pochhammer(const WrightParams& params, int k);

struct WrightSeriesResult {
  std::complex<double> value;
  double last_term = 0.0;           // |term at n_max|
  bool tail_not_decreasing = false;  // last five term magnitudes not strictly decreasing
};

// Partial sum through n = n_max of the Wright series
//   sum_n prod Gamma(alpha_t + n A_t) / prod Gamma(beta_t + n B_t) z^n / n!
// for |z| < 1.
WrightSeriesResult wright_psi(const WrightParams& params, std::complex<double> z, int n_max);

}  // namespace mw
