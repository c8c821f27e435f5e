#include "repstat/interval.hpp"

namespace repstat {

std::string_view to_string(IntervalKind kind) noexcept {
  switch (kind) {
    case IntervalKind::confidence:
      return "confidence";
    case IntervalKind::prediction:
      return "prediction";
  }
  return "?";
}

std::string_view to_string(IntervalTarget target) noexcept {
  switch (target) {
    case IntervalTarget::parameter_p:
      return "parameter_p";
    case IntervalTarget::statistic_p_N:
      return "statistic_pN";
    case IntervalTarget::statistic_mean_N:
      return "statistic_meanN";
  }
  return "?";
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::wald:
      return "wald";
    case Method::wilson:
      return "wilson";
    case Method::clopper_pearson:
      return "clopper-pearson";
    case Method::wald_fpc:
      return "wald-fpc";
    case Method::conservative:
      return "conservative";
    case Method::quadratic:
      return "quadratic";
    case Method::quadratic_nfree:
      return "quadratic-nfree";
    case Method::mean:
      return "mean";
  }
  return "?";
}

std::optional<Method> method_from_string(std::string_view name) noexcept {
  for (Method m : {Method::wald, Method::wilson, Method::clopper_pearson,
                   Method::wald_fpc, Method::conservative, Method::quadratic,
                   Method::quadratic_nfree, Method::mean}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

bool is_prediction_method(Method method) noexcept {
  switch (method) {
    case Method::wald:
    case Method::wilson:
    case Method::clopper_pearson:
      return false;
    default:
      return true;
  }
}

bool method_requires_rep_size(Method method) noexcept {
  switch (method) {
    case Method::wald_fpc:
    case Method::quadratic:
    case Method::mean:
      return true;
    default:
      return false;
  }
}

}  // namespace repstat
