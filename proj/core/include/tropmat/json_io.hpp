#pragma once

#include <string>

#include "tropmat/duality.hpp"
#include "tropmat/mixsd.hpp"
#include "tropmat/realize.hpp"
#include "tropmat/tom.hpp"

namespace tropmat {

/// JSON text forms, all carrying a "format": "tropmat/1" tag. Loaders
/// accept a missing tag but reject a wrong one; malformed documents
/// raise TropmatError(parse_error) and schema violations
/// TropmatError(schema_error).

inline constexpr const char* kJsonFormat = "tropmat/1";

// {"format", "n", "d", "a": [[rational strings]]}
std::string to_json(const WeightMatrix& w);
WeightMatrix weight_matrix_from_json(const std::string& text);

// {"format", "n", "d", "types": [type strings]}
std::string to_json(const TypeCollection& m);
TypeCollection collection_from_json(const std::string& text);

// {"format", "n", "d", "maximal_cells": [...], optional "cells"}.
// Faces are regenerated on load; a present "cells" list must equal the
// regenerated closure.
std::string to_json(const MixedSubdivision& s, bool include_cells = false);
MixedSubdivision subdivision_from_json(const std::string& text);

// {"format", "boundary", ..., "evidence": [...]}
std::string to_json(const AxiomReport& report);

std::string to_json(const ValidationReport& report);

// {"format", "n", "d", "cells", "dual_dims", "bounded"}
std::string to_json(const DualComplex& dual);

// {"format", "i", "cells", "dual_dims", "unbounded"}; i is 1-based.
std::string slice_to_json(const DualComplex& dual,
                          const PseudohyperplaneSlice& slice);

}  // namespace tropmat
