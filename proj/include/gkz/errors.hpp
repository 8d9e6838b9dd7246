#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

// Error categories used across the library.  CLI exit codes: input errors
// map to 1, mathematical precondition failures to 2, verification failures
// to 3.
enum class errc {
  shape_error,
  singular_matrix,
  rank_deficient,
  lattice_not_full,
  not_in_kernel,
  empty_block,
  bad_label,
  non_generic_weight,
  empty_cone,
  domain_error,
  truncation_too_small,
  incomplete_reps,
  hypothesis_violated,
  max_refinement,
  singular_on_path,
  dimension_unsupported,
  parameter_pole,
  convergence_error,
  divergence_detected,
  input_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::shape_error: return "ShapeError";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::rank_deficient: return "RankDeficient";
    case errc::lattice_not_full: return "LatticeNotFull";
    case errc::not_in_kernel: return "NotInKernel";
    case errc::empty_block: return "EmptyBlock";
    case errc::bad_label: return "BadLabel";
    case errc::non_generic_weight: return "NonGenericWeight";
    case errc::empty_cone: return "EmptyCone";
    case errc::domain_error: return "DomainError";
    case errc::truncation_too_small: return "TruncationTooSmall";
    case errc::incomplete_reps: return "IncompleteReps";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::max_refinement: return "MaxRefinement";
    case errc::singular_on_path: return "SingularOnPath";
    case errc::dimension_unsupported: return "DimensionUnsupported";
    case errc::parameter_pole: return "ParameterPole";
    case errc::convergence_error: return "ConvergenceError";
    case errc::divergence_detected: return "DivergenceDetected";
    case errc::input_error: return "InputError";
  }
  return "UnknownError";
}

[[noreturn]] inline void fail(errc c, const std::string& msg) {
  throw error(c, std::string(errc_name(c)) + ": " + msg);
}

}  // namespace gkz
