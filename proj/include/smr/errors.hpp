#ifndef SMR_ERRORS_HPP
#define SMR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smr {

// Every failure mode the library reports. The CLI maps these to exit codes;
// tests match on the code rather than the message text.
enum class errc {
  non_convergence,
  singular_input,
  kernel_mismatch,
  zero_matrix,
  dimension_mismatch,
  inconsistent,
  indefinite,
  singular,
  stagnation,
  degree_overflow,
  not_commuting,
  barrier_violation,
  param_out_of_range,
  delta_too_large,
  singular_whitening,
  sketch_deficient,
  condition_two_failed,
  oracle_failure,
  iter_cap_exceeded,
  preconditioner_broken,
  not_inverse_m,
  component_inconsistent,
  validation_failed,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_convergence: return "NonConvergence";
    case errc::singular_input: return "SingularInput";
    case errc::kernel_mismatch: return "KernelMismatch";
    case errc::zero_matrix: return "ZeroMatrix";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::inconsistent: return "Inconsistent";
    case errc::indefinite: return "Indefinite";
    case errc::singular: return "Singular";
    case errc::stagnation: return "Stagnation";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::not_commuting: return "NotCommuting";
    case errc::barrier_violation: return "BarrierViolation";
    case errc::param_out_of_range: return "ParamOutOfRange";
    case errc::delta_too_large: return "DeltaTooLarge";
    case errc::singular_whitening: return "SingularWhitening";
    case errc::sketch_deficient: return "SketchDeficient";
    case errc::condition_two_failed: return "ConditionTwoFailed";
    case errc::oracle_failure: return "OracleFailure";
    case errc::iter_cap_exceeded: return "IterCapExceeded";
    case errc::preconditioner_broken: return "PreconditionerBroken";
    case errc::not_inverse_m: return "NotInverseM";
    case errc::component_inconsistent: return "ComponentInconsistent";
    case errc::validation_failed: return "ValidationFailed";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace smr

#endif  // SMR_ERRORS_HPP
