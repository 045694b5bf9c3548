#include "merowright/gamma_kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "merowright/errors.hpp"

namespace mw {
namespace {

// Lanczos N=13, g=6.024680040776729583740234375 (Boost.Math lanczos13m53).
// Gamma(x) = L(x) (x + g - 1/2)^(x - 1/2) exp(-(x + g - 1/2)), L = num/den.
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473, 42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596, 17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,  1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163, 31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599, 186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822, 210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

// x (x+1) ... (x+11) expanded in ascending powers.
constexpr std::array<double, 13> kLanczosDen = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
    2637558.0, 357423.0,   32670.0,     1925.0,      66.0,        1.0,
};

constexpr double kEulerGamma = 0.57721566490153286061;

// zeta(2) .. zeta(30)
constexpr std::array<double, 29> kZeta = {
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381915, 1.0369277551433699263,
    1.0173430619844491397, 1.0083492773819228268, 1.0040773561979443394, 1.0020083928260822144,
    1.0009945751278180853, 1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
    1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519, 1.0000076371976378998,
    1.0000038172932649998, 1.0000019082127165539, 1.0000009539620338728, 1.0000004769329867878,
    1.0000002384505027277, 1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
    1.0000000149015548284, 1.0000000074507117898, 1.0000000037253340248, 1.0000000018626597235,
    1.0000000009313274324,
};

constexpr double kNearZeroWidth = 0.2;

double lanczos_sum(double x) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = kLanczosNum.size(); i-- > 0;) {
    num = num * x + kLanczosNum[i];
    den = den * x + kLanczosDen[i];
  }
  return num / den;
}

// ln Gamma(1 + e) = -gamma e + sum_{n>=2} (-1)^n zeta(n) e^n / n, |e| < 1.
double log_gamma_one_plus(double e) {
  double poly = 0.0;
  for (std::size_t i = kZeta.size(); i-- > 0;) {
    const int n = static_cast<int>(i) + 2;
    const double c = (n % 2 == 0 ? 1.0 : -1.0) * kZeta[i] / n;
    poly = poly * e + c;
  }
  return e * (poly * e - kEulerGamma);
}

double checked_exp(double log_value, const char* what) {
  static const double kMaxLog = std::log(std::numeric_limits<double>::max());
  static const double kMinLog = std::log(std::numeric_limits<double>::min());
  if (!(log_value <= kMaxLog && log_value >= kMinLog)) {
    throw RangeError(std::string(what) + ": log value " + std::to_string(log_value) +
                         " is outside the representable exponent range",
                     log_value);
  }
  return std::exp(log_value);
}

void require_k(int k) {
  if (k < 1) throw Error(ErrorCode::domain, "k must be >= 1, got " + std::to_string(k));
}

bool valid_pair(const ParamPair& p) {
  return std::isfinite(p.value) && std::isfinite(p.weight) && p.value > 0.0 && p.weight > 0.0;
}

}  // namespace

WrightParams WrightParams::make(std::vector<ParamPair> upper, std::vector<ParamPair> lower) {
  if (upper.empty() || lower.empty()) {
    throw Error(ErrorCode::domain, "Wright parameter lists must both be non-empty");
  }
  for (const auto& p : upper) {
    if (!valid_pair(p)) throw Error(ErrorCode::domain, "upper parameters must be finite and positive");
  }
  for (const auto& p : lower) {
    if (!valid_pair(p)) throw Error(ErrorCode::domain, "lower parameters must be finite and positive");
  }
  WrightParams params(std::move(upper), std::move(lower));
  if (params.convergence_slack() < 0.0) {
    throw Error(ErrorCode::domain, "convergence condition 1 + sum(B) - sum(A) >= 0 violated");
  }
  return params;
}

WrightParams WrightParams::unit(double alpha, double beta) {
  return make({{alpha, 1.0}}, {{beta, 1.0}});
}

bool WrightParams::unit_weights() const noexcept {
  for (const auto& p : upper_) {
    if (p.weight != 1.0) return false;
  }
  for (const auto& p : lower_) {
    if (p.weight != 1.0) return false;
  }
  return true;
}

double WrightParams::convergence_slack() const noexcept {
  double slack = 1.0;
  for (const auto& p : lower_) slack += p.weight;
  for (const auto& p : upper_) slack -= p.weight;
  return slack;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::domain, "log_gamma requires a finite x > 0, got " + std::to_string(x));
  }
  if (std::abs(x - 1.0) < kNearZeroWidth) return log_gamma_one_plus(x - 1.0);
  if (std::abs(x - 2.0) < kNearZeroWidth) {
    const double e = x - 2.0;
    return log_gamma_one_plus(e) + std::log1p(e);
  }
  const double shifted = x + kLanczosG - 0.5;
  return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(shifted) - shifted;
}

double log_omega(const WrightParams& params) {
  double result = 0.0;
  for (const auto& p : params.lower()) result += log_gamma(p.value);
  for (const auto& p : params.upper()) result -= log_gamma(p.value);
  return result;
}

double omega(const WrightParams& params) { return checked_exp(log_omega(params), "omega"); }

double log_sigma_k(const WrightParams& params, int k) {
  require_k(k);
  const double n = static_cast<double>(k) + 1.0;
  double result = log_omega(params) - log_gamma(n + 1.0);
  for (const auto& p : params.upper()) result += log_gamma(p.value + p.weight * n);
  for (const auto& p : params.lower()) result -= log_gamma(p.value + p.weight * n);
  return result;
}

double sigma_k(const WrightParams& params, int k) {
  return checked_exp(log_sigma_k(params, k), "sigma_k");
}

double sigma_k_pochhammer(const WrightParams& params, int k) {
  require_k(k);
  if (!params.unit_weights()) {
    throw Error(ErrorCode::unsupported, "sigma_k_pochhammer requires every A_t = B_t = 1");
  }
  double product = 1.0;
  double log_product = 0.0;
  for (int j = 0; j <= k; ++j) {
    double ratio = 1.0 / (j + 1.0);
    for (const auto& p : params.upper()) ratio *= p.value + j;
    for (const auto& p : params.lower()) ratio /= p.value + j;
    product *= ratio;
    log_product += std::log(ratio);
  }
  if (!std::isnormal(product)) {
    throw RangeError("sigma_k_pochhammer: product left the double range", log_product);
  }
  return product;
}

WrightSeriesResult wright_psi(const WrightParams& params, std::complex<double> z, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::domain, "wright_psi requires n_max >= 1");
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::domain, "wright_psi requires |z| < 1");

  WrightSeriesResult result;
  std::array<double, 6> recent{};  // magnitudes of the last six terms, oldest first
  std::complex<double> power{1.0, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    double log_coeff = -log_gamma(n + 1.0);
    for (const auto& p : params.upper()) log_coeff += log_gamma(p.value + n * p.weight);
    for (const auto& p : params.lower()) log_coeff -= log_gamma(p.value + n * p.weight);
    const std::complex<double> term = std::exp(log_coeff) * power;
    result.value += term;

    for (std::size_t i = 0; i + 1 < recent.size(); ++i) recent[i] = recent[i + 1];
    recent.back() = std::abs(term);
    power *= z;
  }
  result.last_term = recent.back();

  const int window = std::min(n_max, 5);
  for (int i = static_cast<int>(recent.size()) - window - 1; i + 1 < static_cast<int>(recent.size()); ++i) {
    if (recent[i] > 0.0 && !(recent[i + 1] < recent[i])) result.tail_not_decreasing = true;
  }
  return result;
}

}  // namespace mw
