#include "tropmat/error.hpp"

namespace tropmat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_entry: return "EmptyEntry";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::limit_exceeded: return "LimitExceeded";
    case Errc::parameter_mismatch: return "ParameterMismatch";
    case Errc::not_subset: return "NotSubset";
    case Errc::not_member: return "NotMember";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::not_a_tom: return "NotATom";
    case Errc::not_total: return "NotTotal";
    case Errc::not_full_dim: return "NotFullDim";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::unsupported_dimension: return "UnsupportedDimension";
    case Errc::empty_input: return "EmptyInput";
    case Errc::invalid_subdivision: return "InvalidSubdivision";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
  }
  return "UnknownError";
}

}  // namespace tropmat
