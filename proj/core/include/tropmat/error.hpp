#pragma once

#include <stdexcept>
#include <string>

namespace tropmat {

/// Error conditions raised by precondition and input violations.
/// Mathematical failures (axiom violations, invalid subdivisions) are
/// never exceptions; they travel inside report structs.
enum class Errc {
  empty_entry,
  out_of_range,
  length_mismatch,
  limit_exceeded,
  parameter_mismatch,
  not_subset,
  not_member,
  invalid_parameters,
  not_a_tom,
  not_total,
  not_full_dim,
  dimension_mismatch,
  unsupported_dimension,
  empty_input,
  invalid_subdivision,
  parse_error,
  schema_error,
};

const char* errc_name(Errc code);

class TropmatError : public std::runtime_error {
 public:
  TropmatError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace tropmat
