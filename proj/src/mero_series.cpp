#include "merowright/mero_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "merowright/errors.hpp"

namespace mw {
namespace {

void require_punctured_disk(Complex z) {
  if (z == Complex{0.0, 0.0}) throw Error(ErrorCode::pole, "evaluation at the pole z = 0");
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::domain, "evaluation requires |z| < 1");
}

}  // namespace

MeroFunction::MeroFunction(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double a : coeffs_) {
    if (!std::isfinite(a)) throw Error(ErrorCode::domain, "coefficients must be finite");
    if (a < 0.0) nonnegative_ = false;
  }
}

MeroFunction MeroFunction::single_term(int k, double a) {
  if (k < 1) throw Error(ErrorCode::domain, "coefficient index must be >= 1");
  std::vector<double> coeffs(static_cast<std::size_t>(k), 0.0);
  coeffs.back() = a;
  return MeroFunction(std::move(coeffs));
}

double MeroFunction::coefficient(int k) const noexcept {
  if (k < 1 || k > size()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k - 1)];
}

BoundedMultiplier::BoundedMultiplier(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double b : coeffs_) {
    if (!(std::abs(b) <= 1.0)) {
      throw Error(ErrorCode::precondition, "multiplier coefficients must satisfy |b_k| <= 1");
    }
  }
}

double BoundedMultiplier::coefficient(int k) const noexcept {
  if (k < 1 || k > size()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k - 1)];
}

Complex evaluate(const MeroFunction& f, Complex z) {
  require_punctured_disk(z);
  Complex sum = 1.0 / z;
  Complex power = z;  // z^k
  for (double a : f.coeffs()) {
    sum += a * power;
    power *= z;
  }
  return sum;
}

Complex evaluate_d1(const MeroFunction& f, Complex z) {
  require_punctured_disk(z);
  Complex sum = -1.0 / (z * z);
  Complex power{1.0, 0.0};  // z^(k-1)
  int k = 1;
  for (double a : f.coeffs()) {
    sum += (k * a) * power;
    power *= z;
    ++k;
  }
  return sum;
}

Complex evaluate_d2(const MeroFunction& f, Complex z) {
  require_punctured_disk(z);
  Complex sum = 2.0 / (z * z * z);
  Complex power{1.0, 0.0};  // z^(k-2)
  for (int k = 2; k <= f.size(); ++k) {
    sum += (static_cast<double>(k) * (k - 1) * f.coefficient(k)) * power;
    power *= z;
  }
  return sum;
}

MeroFunction hadamard(const MeroFunction& f, const MeroFunction& g) {
  const int n = std::min(f.size(), g.size());
  std::vector<double> coeffs(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(k - 1)] = f.coefficient(k) * g.coefficient(k);
  return MeroFunction(std::move(coeffs));
}

MeroFunction apply_operator(const WrightParams& params, const MeroFunction& f) {
  std::vector<double> coeffs(f.coeffs().begin(), f.coeffs().end());
  for (int k = 1; k <= f.size(); ++k) {
    auto& a = coeffs[static_cast<std::size_t>(k - 1)];
    if (a != 0.0) a *= sigma_k(params, k);
  }
  return MeroFunction(std::move(coeffs));
}

}  // namespace mw
