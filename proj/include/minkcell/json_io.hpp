#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "minkcell/body.hpp"

namespace minkcell {

using Json = nlohmann::ordered_json;

// Violation of the versioned input format (exit code 1 at the CLI).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSchemaTag = "minkcell/1";

// Body: {"schema": "minkcell/1", "dim": n, "kind": "polytope"|"ball"|"disc_bicone",
//        "vertices": [[..],..] | "facets": [[..],..] | "radius": r | "apex": [..]}.
// Unknown fields are rejected. Geometric invariant violations (asymmetry,
// degenerate input) surface as GeometryError, not SchemaError.
GaugeBody parse_body(const Json& j);

// Lattice: {"schema": "minkcell/1", "basis": [[..],..]}; rows are basis vectors.
Lattice parse_lattice(const Json& j);

// Strict file loader: reads UTF-8 JSON, throws SchemaError on parse failure.
Json load_json_file(const std::string& path);

Json body_to_json(const GaugeBody& body);
Json lattice_to_json(const Lattice& lat);

}  // namespace minkcell
