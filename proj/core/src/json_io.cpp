#include "tropmat/json_io.hpp"

#include <json.hpp>

#include "tropmat/error.hpp"

namespace tropmat {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw TropmatError(Errc::parse_error, "malformed JSON");
  }
  return doc;
}

void check_format(const json& doc) {
  if (doc.contains("format") && doc["format"] != kJsonFormat) {
    throw TropmatError(Errc::schema_error, "unknown format tag");
  }
}

int get_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw TropmatError(Errc::schema_error,
                       std::string("missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

std::vector<NdType> get_types(const json& doc, const char* key, int d) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw TropmatError(Errc::schema_error,
                       std::string("missing array field '") + key + "'");
  }
  std::vector<NdType> out;
  for (const json& item : doc[key]) {
    if (!item.is_string()) {
      throw TropmatError(Errc::schema_error, "type entries must be strings");
    }
    out.push_back(NdType::parse(item.get<std::string>(), d));
  }
  return out;
}

json cycle_to_json(const CycleWitness& w) {
  json steps = json::array();
  for (const CycleStep& s : w.steps) {
    steps.push_back(
        {{"from", s.from + 1}, {"to", s.to + 1}, {"directed", s.directed}});
  }
  return steps;
}

}  // namespace

std::string to_json(const WeightMatrix& w) {
  json rows = json::array();
  for (int i = 0; i < w.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < w.d(); ++j) {
      row.push_back(format_rational(w.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  json doc{{"format", kJsonFormat},
           {"n", w.n()},
           {"d", w.d()},
           {"a", std::move(rows)}};
  return doc.dump(2);
}

WeightMatrix weight_matrix_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_format(doc);
  int n = get_int(doc, "n");
  int d = get_int(doc, "d");
  if (!doc.contains("a") || !doc["a"].is_array()) {
    throw TropmatError(Errc::schema_error, "missing matrix field 'a'");
  }
  std::vector<std::vector<Rational>> entries;
  for (const json& row : doc["a"]) {
    if (!row.is_array()) {
      throw TropmatError(Errc::schema_error, "matrix rows must be arrays");
    }
    std::vector<Rational> r;
    for (const json& cell : row) {
      if (cell.is_number_integer()) {
        r.emplace_back(cell.get<long long>());
      } else if (cell.is_string()) {
        r.push_back(parse_rational(cell.get<std::string>()));
      } else {
        throw TropmatError(Errc::schema_error,
                           "matrix entries must be rational strings");
      }
    }
    entries.push_back(std::move(r));
  }
  return WeightMatrix(n, d, std::move(entries));
}

std::string to_json(const TypeCollection& m) {
  json types = json::array();
  for (const NdType& t : m.types()) types.push_back(t.to_string());
  json doc{{"format", kJsonFormat},
           {"n", m.n()},
           {"d", m.d()},
           {"types", std::move(types)}};
  return doc.dump(2);
}

TypeCollection collection_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_format(doc);
  int n = get_int(doc, "n");
  int d = get_int(doc, "d");
  std::vector<NdType> types = get_types(doc, "types", d);
  for (const NdType& t : types) {
    if (t.n() != n) {
      throw TropmatError(Errc::schema_error,
                         "type " + t.to_string() + " does not have n = " +
                             std::to_string(n));
    }
  }
  return TypeCollection(n, d, std::move(types));
}

std::string to_json(const MixedSubdivision& s, bool include_cells) {
  json maximal = json::array();
  for (const NdType& c : s.maximal_cells()) maximal.push_back(c.to_string());
  json doc{{"format", kJsonFormat},
           {"n", s.n()},
           {"d", s.d()},
           {"maximal_cells", std::move(maximal)}};
  if (include_cells) {
    json cells = json::array();
    for (const NdType& c : s.cells()) cells.push_back(c.to_string());
    doc["cells"] = std::move(cells);
  }
  return doc.dump(2);
}

MixedSubdivision subdivision_from_json(const std::string& text) {
  json doc = parse_document(text);
  check_format(doc);
  int n = get_int(doc, "n");
  int d = get_int(doc, "d");
  std::vector<NdType> maximal = get_types(doc, "maximal_cells", d);
  for (const NdType& t : maximal) {
    if (t.n() != n) {
      throw TropmatError(Errc::schema_error,
                         "cell " + t.to_string() + " does not have n = " +
                             std::to_string(n));
    }
  }
  MixedSubdivision s = MixedSubdivision::from_maximal(n, d, std::move(maximal));
  if (doc.contains("cells")) {
    std::vector<NdType> cells = sorted_unique(get_types(doc, "cells", d));
    if (cells != s.cells()) {
      throw TropmatError(Errc::schema_error,
                         "'cells' does not match the regenerated closure");
    }
  }
  return s;
}

std::string to_json(const AxiomReport& report) {
  json evidence = json::array();
  if (!report.boundary.pass && report.boundary.missing) {
    evidence.push_back({{"axiom", "boundary"},
                        {"missing", report.boundary.missing->to_string()}});
  }
  if (!report.comparability.pass && report.comparability.evidence) {
    const auto& e = *report.comparability.evidence;
    evidence.push_back({{"axiom", "comparability"},
                        {"a", e.a.to_string()},
                        {"b", e.b.to_string()},
                        {"cycle", cycle_to_json(e.cycle)}});
  }
  if (!report.elimination.pass && report.elimination.evidence) {
    const auto& e = *report.elimination.evidence;
    evidence.push_back({{"axiom", "elimination"},
                        {"a", e.a.to_string()},
                        {"b", e.b.to_string()},
                        {"position", e.position + 1}});
  }
  if (!report.surrounding.pass && report.surrounding.evidence) {
    const auto& e = *report.surrounding.evidence;
    evidence.push_back({{"axiom", "surrounding"},
                        {"type", e.type.to_string()},
                        {"partition", e.partition.to_string()},
                        {"refinement", e.refinement.to_string()}});
  }
  json doc{{"format", kJsonFormat},
           {"boundary", report.boundary.pass},
           {"comparability", report.comparability.pass},
           {"elimination", report.elimination.pass},
           {"surrounding", report.surrounding.pass},
           {"evidence", std::move(evidence)}};
  return doc.dump(2);
}

std::string to_json(const ValidationReport& report) {
  json evidence = json::array();
  if (!report.face_closure && report.closure_failure) {
    const auto& e = *report.closure_failure;
    evidence.push_back({{"check", "face_closure"},
                        {"cell", e.type.to_string()},
                        {"partition", e.partition.to_string()},
                        {"missing", e.refinement.to_string()}});
  }
  if (!report.comparability && report.incomparable) {
    const auto& e = *report.incomparable;
    evidence.push_back({{"check", "comparability"},
                        {"a", e.a.to_string()},
                        {"b", e.b.to_string()},
                        {"cycle", cycle_to_json(e.cycle)}});
  }
  if (!report.ridge && report.ridge_failure) {
    const auto& e = *report.ridge_failure;
    evidence.push_back({{"check", "ridge"},
                        {"ridge", e.ridge.to_string()},
                        {"incident", e.incident_maximal},
                        {"bounded", e.bounded}});
  }
  if (!report.boundary && report.missing_boundary) {
    evidence.push_back({{"check", "boundary"},
                        {"missing", report.missing_boundary->to_string()}});
  }
  if (!report.connectivity) {
    evidence.push_back({{"check", "connectivity"},
                        {"maximal", report.maximal_count},
                        {"components", report.dual_components}});
  }
  if (report.volume && !*report.volume) {
    evidence.push_back({{"check", "volume"},
                        {"total", report.volume_total},
                        {"expected", report.volume_expected}});
  }
  json doc{{"format", kJsonFormat},
           {"face_closure", report.face_closure},
           {"comparability", report.comparability},
           {"ridge", report.ridge},
           {"boundary", report.boundary},
           {"connectivity", report.connectivity},
           {"evidence", std::move(evidence)}};
  if (report.volume) {
    doc["volume"] = *report.volume;
  } else {
    doc["volume"] = nullptr;
  }
  return doc.dump(2);
}

std::string to_json(const DualComplex& dual) {
  json cells = json::array();
  json dims = json::array();
  json bounded = json::array();
  for (const DualCell& c : dual.cells()) {
    cells.push_back(c.type.to_string());
    dims.push_back(c.dual_dim);
    bounded.push_back(c.bounded);
  }
  json doc{{"format", kJsonFormat},
           {"n", dual.subdivision().n()},
           {"d", dual.subdivision().d()},
           {"cells", std::move(cells)},
           {"dual_dims", std::move(dims)},
           {"bounded", std::move(bounded)}};
  return doc.dump(2);
}

std::string slice_to_json(const DualComplex& dual,
                          const PseudohyperplaneSlice& slice) {
  json cells = json::array();
  json dims = json::array();
  json unbounded = json::array();
  for (int i : slice.members) {
    const DualCell& c = dual.cells()[static_cast<size_t>(i)];
    cells.push_back(c.type.to_string());
    dims.push_back(c.dual_dim);
    unbounded.push_back(!c.bounded);
  }
  json doc{{"format", kJsonFormat},
           {"i", slice.coord + 1},
           {"cells", std::move(cells)},
           {"dual_dims", std::move(dims)},
           {"unbounded", std::move(unbounded)}};
  return doc.dump(2);
}

}  // namespace tropmat
