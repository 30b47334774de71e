#pragma once

#include <stdexcept>
#include <string>

namespace normbundle {

// Reasons an input can be rejected, plus the internal cross-check trips that
// must never fire on valid data.
enum class errc {
  degree_too_small,
  empty_center,
  exponent_out_of_range,
  dimension_too_large,
  missing_endpoints,
  cusp_or_basepoint_forbidden,
  invalid_range,
  malformed_candidate,
  negative_multiplicity,
  count_mismatch,
  cross_check_failure,
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::degree_too_small: return "degree_too_small";
    case errc::empty_center: return "empty_center";
    case errc::exponent_out_of_range: return "exponent_out_of_range";
    case errc::dimension_too_large: return "dimension_too_large";
    case errc::missing_endpoints: return "missing_endpoints";
    case errc::cusp_or_basepoint_forbidden: return "cusp_or_basepoint_forbidden";
    case errc::invalid_range: return "invalid_range";
    case errc::malformed_candidate: return "malformed_candidate";
    case errc::negative_multiplicity: return "negative_multiplicity";
    case errc::count_mismatch: return "count_mismatch";
    case errc::cross_check_failure: return "cross_check_failure";
  }
  return "unknown";
}

// Bad user input.  `detail` carries the offending value where that makes
// sense (the out-of-range exponent, the forbidden exponent, ...).
class validation_error : public std::invalid_argument {
 public:
  validation_error(errc code, const std::string& what, long long detail = 0)
      : std::invalid_argument(what), code_(code), detail_(detail) {}

  errc code() const noexcept { return code_; }
  long long detail() const noexcept { return detail_; }

 private:
  errc code_;
  long long detail_;
};

// Violated internal invariant.  Reaching one of these is a bug in this
// library, not a property of the input.
class internal_error : public std::logic_error {
 public:
  internal_error(errc code, const std::string& what)
      : std::logic_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace normbundle
