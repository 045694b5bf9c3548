#include "merowright/merowright.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "merowright/closure.hpp"
#include "merowright/errors.hpp"
#include "merowright/radii.hpp"
#include "merowright/verifier.hpp"

struct mw_wright {
  mw::WrightParams impl;
};
struct mw_function {
  mw::MeroFunction impl;
};
struct mw_closure_order {
  mw::ClosureOrder impl;
};
struct mw_radius_result {
  mw::RadiusResult impl;
};
struct mw_report {
  mw::VerificationReport impl;
};

namespace {

thread_local std::string last_error;

mw_status to_status(mw::ErrorCode code) {
  switch (code) {
    case mw::ErrorCode::domain: return MW_ERR_DOMAIN;
    case mw::ErrorCode::range: return MW_ERR_RANGE;
    case mw::ErrorCode::unsupported: return MW_ERR_UNSUPPORTED;
    case mw::ErrorCode::precondition: return MW_ERR_PRECONDITION;
    case mw::ErrorCode::pole: return MW_ERR_POLE;
    case mw::ErrorCode::degenerate: return MW_ERR_DEGENERATE;
  }
  return MW_ERR_INTERNAL;
}

template <typename Body>
mw_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return MW_OK;
  } catch (const mw::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MW_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MW_ERR_INTERNAL;
  }
}

mw_status null_argument() {
  last_error = "required argument is NULL";
  return MW_ERR_NULL_ARGUMENT;
}

mw::ClassParams class_params(mw_class_params cp) { return mw::ClassParams::make(cp.alpha, cp.eta); }

std::vector<mw::ParamPair> pairs(const double* data, std::size_t n) {
  std::vector<mw::ParamPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({data[2 * i], data[2 * i + 1]});
  return out;
}

mw::Complex to_cpp(mw_complex z) { return {z.re, z.im}; }
mw_complex to_c(mw::Complex z) { return {z.real(), z.imag()}; }

mw::SamplingPlan to_plan(const mw_sampling_plan* plan) {
  mw::SamplingPlan out;
  if (plan == nullptr) return out;
  if (plan->n_radii > 0 && plan->radii == nullptr) throw mw::Error(mw::ErrorCode::domain, "plan radii missing");
  out.radii.assign(plan->radii, plan->radii + plan->n_radii);
  out.angles = plan->angles;
  out.include_real_axis_ramp = plan->include_ramp != 0;
  return out;
}

mw::RadiusCondition condition(mw_condition_kind kind, double order) {
  switch (kind) {
    case MW_STARLIKE: return mw::RadiusCondition::starlike(order);
    case MW_CONVEX: return mw::RadiusCondition::convex(order);
  }
  throw mw::Error(mw::ErrorCode::domain, "unknown condition kind");
}

}  // namespace

extern "C" {

const char* mw_version(void) { return "1.0.0"; }

const char* mw_status_name(mw_status status) {
  switch (status) {
    case MW_OK: return "ok";
    case MW_ERR_DOMAIN: return "domain";
    case MW_ERR_RANGE: return "range";
    case MW_ERR_UNSUPPORTED: return "unsupported";
    case MW_ERR_PRECONDITION: return "precondition";
    case MW_ERR_POLE: return "pole";
    case MW_ERR_DEGENERATE: return "degenerate";
    case MW_ERR_NULL_ARGUMENT: return "null_argument";
    case MW_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mw_last_error(void) { return last_error.c_str(); }

mw_status mw_wright_create(const double* upper, size_t n_upper, const double* lower, size_t n_lower,
                           mw_wright** out) {
  if (out == nullptr || (n_upper > 0 && upper == nullptr) || (n_lower > 0 && lower == nullptr)) {
    return null_argument();
  }
  return guarded([&] {
    *out = new mw_wright{mw::WrightParams::make(pairs(upper, n_upper), pairs(lower, n_lower))};
  });
}

void mw_wright_destroy(mw_wright* params) { delete params; }

mw_status mw_log_gamma(double x, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = mw::log_gamma(x); });
}

mw_status mw_omega(const mw_wright* params, double* value, double* log_value) {
  if (params == nullptr || value == nullptr) return null_argument();
  return guarded([&] {
    const double log_omega = mw::log_omega(params->impl);
    if (log_value != nullptr) *log_value = log_omega;
    *value = mw::omega(params->impl);
  });
}

mw_status mw_sigma_k(const mw_wright* params, int k, double* value, double* log_value) {
  if (params == nullptr || value == nullptr) return null_argument();
  return guarded([&] {
    const double log_sigma = mw::log_sigma_k(params->impl, k);
    if (log_value != nullptr) *log_value = log_sigma;
    *value = mw::sigma_k(params->impl, k);
  });
}

mw_status mw_sigma_k_pochhammer(const mw_wright* params, int k, double* value) {
  if (params == nullptr || value == nullptr) return null_argument();
  return guarded([&] { *value = mw::sigma_k_pochhammer(params->impl, k); });
}

mw_status mw_wright_psi(const mw_wright* params, mw_complex z, int n_max, mw_complex* value, double* last_term,
                        int* tail_flag) {
  if (params == nullptr || value == nullptr) return null_argument();
  return guarded([&] {
    const auto result = mw::wright_psi(params->impl, to_cpp(z), n_max);
    *value = to_c(result.value);
    if (last_term != nullptr) *last_term = result.last_term;
    if (tail_flag != nullptr) *tail_flag = result.tail_not_decreasing ? 1 : 0;
  });
}

mw_status mw_function_create(const double* coeffs, size_t n, mw_function** out) {
  if (out == nullptr || (n > 0 && coeffs == nullptr)) return null_argument();
  return guarded([&] { *out = new mw_function{mw::MeroFunction(std::vector<double>(coeffs, coeffs + n))}; });
}

void mw_function_destroy(mw_function* f) { delete f; }

size_t mw_function_size(const mw_function* f) { return f == nullptr ? 0 : f->impl.coeffs().size(); }

const double* mw_function_coeffs(const mw_function* f) {
  if (f == nullptr || f->impl.coeffs().empty()) return nullptr;
  return f->impl.coeffs().data();
}

int mw_function_nonnegative(const mw_function* f) { return f != nullptr && f->impl.nonnegative() ? 1 : 0; }

mw_status mw_evaluate(const mw_function* f, mw_complex z, int derivative, mw_complex* out) {
  if (f == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    switch (derivative) {
      case 0: *out = to_c(mw::evaluate(f->impl, to_cpp(z))); break;
      case 1: *out = to_c(mw::evaluate_d1(f->impl, to_cpp(z))); break;
      case 2: *out = to_c(mw::evaluate_d2(f->impl, to_cpp(z))); break;
      default: throw mw::Error(mw::ErrorCode::domain, "derivative order must be 0, 1 or 2");
    }
  });
}

mw_status mw_hadamard(const mw_function* f, const mw_function* g, mw_function** out) {
  if (f == nullptr || g == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new mw_function{mw::hadamard(f->impl, g->impl)}; });
}

mw_status mw_apply_operator(const mw_wright* params, const mw_function* f, mw_function** out) {
  if (params == nullptr || f == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new mw_function{mw::apply_operator(params->impl, f->impl)}; });
}

mw_status mw_class_validate(mw_class_params cp) {
  return guarded([&] { class_params(cp); });
}

mw_status mw_coefficient_weight(mw_class_params cp, const mw_wright* wp, int k, double* out) {
  if (wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = mw::coefficient_weight(class_params(cp), wp->impl, k); });
}

mw_status mw_membership_margin(const mw_function* f, mw_class_params cp, const mw_wright* wp, double* out) {
  if (f == nullptr || wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = mw::membership_margin(f->impl, class_params(cp), wp->impl); });
}

mw_status mw_coefficient_bound(mw_class_params cp, const mw_wright* wp, int k, double* out) {
  if (wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = mw::coefficient_bound(class_params(cp), wp->impl, k); });
}

mw_status mw_extremal_function(mw_class_params cp, const mw_wright* wp, int k, mw_function** out) {
  if (wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new mw_function{mw::extremal_function(class_params(cp), wp->impl, k)}; });
}

mw_status mw_growth_bounds(mw_class_params cp, const mw_wright* wp, double r, double* lower, double* upper) {
  if (wp == nullptr || lower == nullptr || upper == nullptr) return null_argument();
  return guarded([&] {
    const auto env = mw::growth_bounds(class_params(cp), wp->impl, r);
    *lower = env.lower;
    *upper = env.upper;
  });
}

mw_status mw_distortion_bounds(mw_class_params cp, const mw_wright* wp, double r, double* lower, double* upper) {
  if (wp == nullptr || lower == nullptr || upper == nullptr) return null_argument();
  return guarded([&] {
    const auto env = mw::distortion_bounds(class_params(cp), wp->impl, r);
    *lower = env.lower;
    *upper = env.upper;
  });
}

mw_status mw_convolution_order(mw_class_params cp, const mw_wright* wp, int k_max, mw_closure_order** out) {
  if (wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new mw_closure_order{mw::convolution_order(class_params(cp), wp->impl, k_max)}; });
}

mw_status mw_quadratic_mean_order(mw_class_params cp, const mw_wright* wp, int k_max, mw_closure_order** out) {
  if (wp == nullptr || out == nullptr) return null_argument();
  return guarded(
      [&] { *out = new mw_closure_order{mw::quadratic_mean_order(class_params(cp), wp->impl, k_max)}; });
}

void mw_closure_order_destroy(mw_closure_order* order) { delete order; }

size_t mw_closure_order_size(const mw_closure_order* order) {
  return order == nullptr ? 0 : order->impl.per_k.size();
}

mw_status mw_closure_order_entry(const mw_closure_order* order, size_t index, mw_closure_entry* out) {
  if (order == nullptr || out == nullptr) return null_argument();
  if (index >= order->impl.per_k.size()) {
    last_error = "closure order index out of range";
    return MW_ERR_DOMAIN;
  }
  const auto& e = order->impl.per_k[index];
  *out = {e.k, e.order, e.denominator, e.denominator_positive ? 1 : 0, e.out_of_range ? 1 : 0};
  return MW_OK;
}

int mw_closure_order_aggregate(const mw_closure_order* order, double* aggregate, int* first_bad_k) {
  if (order == nullptr) return 0;
  if (order->impl.aggregate) {
    if (aggregate != nullptr) *aggregate = *order->impl.aggregate;
    return 1;
  }
  if (first_bad_k != nullptr) *first_bad_k = order->impl.first_bad_k.value_or(0);
  return 0;
}

mw_status mw_quadratic_combination(const mw_function* f1, const mw_function* f2, mw_function** out) {
  if (f1 == nullptr || f2 == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new mw_function{mw::quadratic_combination(f1->impl, f2->impl)}; });
}

mw_status mw_bounded_multiplier_convolve(const mw_function* f, const double* b, size_t n, mw_class_params cp,
                                         const mw_wright* wp, mw_function** out, double* margin) {
  if (f == nullptr || wp == nullptr || out == nullptr || margin == nullptr || (n > 0 && b == nullptr)) {
    return null_argument();
  }
  return guarded([&] {
    auto result = mw::bounded_multiplier_convolve(f->impl, mw::BoundedMultiplier(std::vector<double>(b, b + n)),
                                                  class_params(cp), wp->impl);
    *out = new mw_function{std::move(result.function)};
    *margin = result.margin;
  });
}

mw_status mw_starlike_radius(mw_class_params cp, const mw_wright* wp, double delta, int k_max,
                             mw_radius_result** out) {
  if (wp == nullptr || out == nullptr) return null_argument();
  return guarded(
      [&] { *out = new mw_radius_result{mw::starlike_radius(class_params(cp), wp->impl, delta, k_max)}; });
}

mw_status mw_convex_radius(mw_class_params cp, const mw_wright* wp, double kappa, int k_max,
                           mw_radius_result** out) {
  if (wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new mw_radius_result{mw::convex_radius(class_params(cp), wp->impl, kappa, k_max)}; });
}

void mw_radius_result_destroy(mw_radius_result* result) { delete result; }
double mw_radius_result_radius(const mw_radius_result* result) {
  return result == nullptr ? std::nan("") : result->impl.radius;
}
int mw_radius_result_attained_k(const mw_radius_result* result) {
  return result == nullptr ? 0 : result->impl.attained_k;
}
int mw_radius_result_k_max(const mw_radius_result* result) { return result == nullptr ? 0 : result->impl.k_max; }

mw_tail_trend mw_radius_result_tail(const mw_radius_result* result) {
  if (result == nullptr) return MW_TAIL_MIXED;
  switch (result->impl.tail) {
    case mw::TailTrend::decreasing: return MW_TAIL_DECREASING;
    case mw::TailTrend::increasing: return MW_TAIL_INCREASING;
    case mw::TailTrend::mixed: return MW_TAIL_MIXED;
  }
  return MW_TAIL_MIXED;
}

size_t mw_radius_result_size(const mw_radius_result* result) {
  return result == nullptr ? 0 : result->impl.per_k.size();
}

mw_status mw_radius_result_entry(const mw_radius_result* result, size_t index, mw_radius_entry* out) {
  if (result == nullptr || out == nullptr) return null_argument();
  if (index >= result->impl.per_k.size()) {
    last_error = "radius table index out of range";
    return MW_ERR_DOMAIN;
  }
  const auto& e = result->impl.per_k[index];
  *out = {e.k, e.candidate, e.printed_candidate};
  return MW_OK;
}

mw_status mw_numeric_radius(const mw_function* f, mw_condition_kind kind, double order, double tol, int angles,
                            double* out) {
  if (f == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = mw::numeric_radius(f->impl, condition(kind, order), tol, angles); });
}

mw_sampling_plan mw_default_plan(void) {
  static const double radii[] = {0.5, 0.9, 0.99, 0.999};
  return {radii, 4, 720, 1};
}

mw_status mw_condition_ratio(const mw_function* f, mw_class_params cp, const mw_wright* wp, mw_complex z,
                             double* out) {
  if (f == nullptr || wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = mw::condition_ratio(f->impl, class_params(cp), wp->impl, to_cpp(z)); });
}

mw_status mw_verify_membership(const mw_function* f, mw_class_params cp, const mw_wright* wp,
                               const mw_sampling_plan* plan, mw_report** out) {
  if (f == nullptr || wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new mw_report{mw::verify_membership_analytic(f->impl, class_params(cp), wp->impl, to_plan(plan))};
  });
}

mw_status mw_verify_growth(const mw_function* f, mw_class_params cp, const mw_wright* wp,
                           const mw_sampling_plan* plan, double slack, mw_report** out) {
  if (f == nullptr || wp == nullptr || out == nullptr) return null_argument();
  return guarded(
      [&] { *out = new mw_report{mw::verify_growth(f->impl, class_params(cp), wp->impl, to_plan(plan), slack)}; });
}

mw_status mw_verify_distortion(const mw_function* f, mw_class_params cp, const mw_wright* wp,
                               const mw_sampling_plan* plan, double slack, mw_report** out) {
  if (f == nullptr || wp == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new mw_report{mw::verify_distortion(f->impl, class_params(cp), wp->impl, to_plan(plan), slack)};
  });
}

mw_status mw_verify_radius(const mw_function* f, mw_condition_kind kind, double order, double claimed_radius,
                           const mw_sampling_plan* plan, mw_report** out) {
  if (f == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new mw_report{mw::verify_radius(f->impl, condition(kind, order), claimed_radius, to_plan(plan))};
  });
}

void mw_report_destroy(mw_report* report) { delete report; }
const char* mw_report_check_name(const mw_report* report) {
  return report == nullptr ? "" : report->impl.check_name.c_str();
}
int mw_report_passed(const mw_report* report) { return report != nullptr && report->impl.passed ? 1 : 0; }
double mw_report_margin(const mw_report* report) { return report == nullptr ? std::nan("") : report->impl.margin; }
int mw_report_samples(const mw_report* report) { return report == nullptr ? 0 : report->impl.samples; }
int mw_report_singular_samples(const mw_report* report) {
  return report == nullptr ? 0 : report->impl.singular_samples;
}

int mw_report_worst(const mw_report* report, mw_sample* out) {
  if (report == nullptr || out == nullptr || !report->impl.worst) return 0;
  const auto& s = *report->impl.worst;
  *out = {s.radius, s.angle_index, to_c(s.z), s.observed, s.bound};
  return 1;
}

int mw_report_hypothesis_margin(const mw_report* report, double* out) {
  if (report == nullptr || out == nullptr || !report->impl.hypothesis_margin) return 0;
  *out = *report->impl.hypothesis_margin;
  return 1;
}

}  // extern "C"
