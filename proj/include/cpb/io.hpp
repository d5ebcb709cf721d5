#pragma once

#include "cpb/complex_structure.hpp"
#include "cpb/measure.hpp"
#include "cpb/polytope.hpp"
#include "cpb/projection_body.hpp"

#include <json.hpp>

#include <string>

namespace cpb {

using Json = nlohmann::json;

/// Input that does not match the expected schema.
class SchemaError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Reads and parses a JSON file; "-" reads standard input.
Json load_json(const std::string& path);

/// {"dim": d, "vertices": [[...], ...]}; the writer adds volume and facets.
Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j, bool allow_lower_dim = false);

/// {"dim": d, "atoms": [{"u": [...], "a": w}, ...], "centered": bool}
Json to_json(const DiscreteMeasure& s);
DiscreteMeasure measure_from_json(const Json& j);

/// {"vertices": [[x, y], ...]}
Json to_json(const PlanarBody& c);
PlanarBody planar_from_json(const Json& j);

/// {"m": m, "re": [[...]], "im": [[...]]}
Json to_json(const ComplexMatrix& g);
ComplexMatrix complex_matrix_from_json(const Json& j);

/// The body (polytope schema, if `with_body`) plus {"trace": [{"u", "a"}...]}.
Json to_json(const ProjectionBodyResult& p, bool with_body = true);

}  // namespace cpb
