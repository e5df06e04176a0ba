#pragma once

#include <stdexcept>
#include <string>

namespace popwilf {

enum class errc {
  empty_shape,
  not_weakly_decreasing,
  non_positive_entry,
  not_a_permutation,
  cell_outside_shape,
  unsupported_length,
  syntax_error,
  cycle_detected,
  position_out_of_range,
  shape_has_no_transversals,
  not_a_qk_submatrix,
  not_a_pk_submatrix,
  input_contains_pk,
  input_contains_qk,
  iteration_cap_exceeded,
  consistency_violation,
  selection_incomplete,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace popwilf
