#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "merowright/merowright.h"

namespace mwcli {

class ApiError : public std::runtime_error {
 public:
  ApiError(mw_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  mw_status status() const { return status_; }

 private:
  mw_status status_;
};

inline void check(mw_status status, const char* context) {
  if (status != MW_OK) {
    throw ApiError(status, std::string(context) + ": " + mw_status_name(status) + ": " + mw_last_error());
  }
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using Wright = std::unique_ptr<mw_wright, Deleter<mw_wright, mw_wright_destroy>>;
using Function = std::unique_ptr<mw_function, Deleter<mw_function, mw_function_destroy>>;
using ClosureOrder = std::unique_ptr<mw_closure_order, Deleter<mw_closure_order, mw_closure_order_destroy>>;
using RadiusResult = std::unique_ptr<mw_radius_result, Deleter<mw_radius_result, mw_radius_result_destroy>>;
using Report = std::unique_ptr<mw_report, Deleter<mw_report, mw_report_destroy>>;

inline Function make_function(const std::vector<double>& coeffs) {
  mw_function* f = nullptr;
  check(mw_function_create(coeffs.data(), coeffs.size(), &f), "function");
  return Function(f);
}

inline std::vector<double> coefficients(const mw_function* f) {
  const double* data = mw_function_coeffs(f);
  if (data == nullptr) return {};
  return {data, data + mw_function_size(f)};
}

}  // namespace mwcli
