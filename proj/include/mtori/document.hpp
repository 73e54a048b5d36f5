#pragma once

// Manifold description documents: JSON, schema version "1". Integers that
// can grow (matrix and vector entries, exponents, Euler numbers) are written
// as decimal strings; plain JSON numbers are accepted on input.
//
//   {
//     "version": "1",
//     "fiber": {"type": "torus_bundle", "monodromy": [["2","1"],["1","1"]]},
//     "monodromy": {"type": "identity"},
//     "options": {"max_cover_index": 12}
//   }
//
// See README.md for every fiber and monodromy type.

#include <string>

#include <json.hpp>

#include "mtori/fourfold.hpp"

namespace mtori {

inline constexpr const char* schema_version = "1";

struct ManifoldDoc {
    MappingTorus4 manifold;
    unsigned max_cover_index = default_max_cover_index;
};

/// Malformed JSON raises ParseError with "line L, column C". Schema
/// violations raise ValidationError addressed by JSON pointer; a document that
/// parses but describes an invalid manifold raises ValidationError naming the
/// violated invariant (NotUnimodular, GenusMismatch, ...).
ManifoldDoc parse_document(const std::string& text);

nlohmann::json to_json(const ManifoldDoc& doc);
nlohmann::json to_json(const ThreeManifold& y);
nlohmann::json to_json(const Monodromy4& m);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const IntVector& v);

/// Canonical form: sorted keys, two-space indent, integers as strings.
std::string serialize_document(const ManifoldDoc& doc);

}  // namespace mtori
