#include "minkcell/json_io.hpp"

#include <fstream>
#include <set>
#include <string>
#include <vector>

namespace minkcell {
namespace {

void require_fields(const Json& j, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
  for (const auto& name : required)
    if (!j.contains(name))
      throw SchemaError(std::string(what) + ": missing field \"" + name + "\"");
  for (const auto& item : j.items())
    if (!required.count(item.key()) && !optional.count(item.key()))
      throw SchemaError(std::string(what) + ": unknown field \"" + item.key() + "\"");
}

void check_schema(const Json& j, const char* what) {
  if (!j.at("schema").is_string() || j.at("schema").get<std::string>() != kSchemaTag)
    throw SchemaError(std::string(what) + ": schema must be \"" + kSchemaTag + "\"");
}

Vec parse_vec(const Json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw SchemaError(std::string(what) + ": expected an array of " + std::to_string(dim) +
                      " numbers");
  Vec v = Vec::zero(dim);
  for (int k = 0; k < dim; ++k) {
    if (!j[k].is_number()) throw SchemaError(std::string(what) + ": expected a number");
    v.c[k] = j[k].get<double>();
  }
  return v;
}

std::vector<Vec> parse_vec_list(const Json& j, int dim, const char* what) {
  if (!j.is_array() || j.empty())
    throw SchemaError(std::string(what) + ": expected a non-empty array");
  std::vector<Vec> out;
  for (const auto& row : j) out.push_back(parse_vec(row, dim, what));
  return out;
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (int k = 0; k < v.dim; ++k) a.push_back(v.c[k]);
  return a;
}

}  // namespace

GaugeBody parse_body(const Json& j) {
  require_fields(j, {"schema", "dim", "kind"}, {"vertices", "facets", "radius", "apex"},
                 "body");
  check_schema(j, "body");
  if (!j.at("dim").is_number_integer()) throw SchemaError("body: dim must be an integer");
  const int dim = j.at("dim").get<int>();
  if (dim < 2 || dim > kMaxDim) throw SchemaError("body: dim must be 2, 3 or 4");
  if (!j.at("kind").is_string()) throw SchemaError("body: kind must be a string");
  const std::string kind = j.at("kind").get<std::string>();

  auto forbid = [&](const char* field) {
    if (j.contains(field))
      throw SchemaError("body: field \"" + std::string(field) + "\" does not apply to kind \"" +
                        kind + "\"");
  };

  if (kind == "polytope") {
    forbid("radius");
    forbid("apex");
    if (j.contains("vertices") == j.contains("facets"))
      throw SchemaError("body: polytope needs exactly one of \"vertices\" or \"facets\"");
    if (j.contains("vertices")) {
      if (dim != 2) throw SchemaError("body: vertex polytopes are 2-dimensional");
      return GaugeBody(
          SymmetricPolytope::from_vertices_2d(parse_vec_list(j.at("vertices"), dim, "body")));
    }
    return GaugeBody(
        SymmetricPolytope::from_facets(dim, parse_vec_list(j.at("facets"), dim, "body")));
  }
  if (kind == "ball") {
    forbid("vertices");
    forbid("facets");
    forbid("apex");
    if (!j.contains("radius") || !j.at("radius").is_number())
      throw SchemaError("body: ball needs a numeric \"radius\"");
    const double r = j.at("radius").get<double>();
    if (!(r > 0.0)) throw GeometryError("body: ball radius must be positive");
    return GaugeBody(EuclideanBall{dim, r});
  }
  if (kind == "disc_bicone") {
    forbid("vertices");
    forbid("facets");
    forbid("radius");
    if (dim != 3) throw SchemaError("body: disc_bicone is 3-dimensional");
    if (!j.contains("apex")) throw SchemaError("body: disc_bicone needs an \"apex\"");
    return GaugeBody(DiscBicone::with_apex(parse_vec(j.at("apex"), 3, "body")));
  }
  throw SchemaError("body: unknown kind \"" + kind + "\"");
}

Lattice parse_lattice(const Json& j) {
  require_fields(j, {"schema", "basis"}, {}, "lattice");
  check_schema(j, "lattice");
  const Json& rows = j.at("basis");
  if (!rows.is_array() || rows.empty() || static_cast<int>(rows.size()) > kMaxDim)
    throw SchemaError("lattice: basis must be an n x n matrix, n in 2..4");
  const int n = static_cast<int>(rows.size());
  if (n < 2) throw SchemaError("lattice: basis must be at least 2 x 2");
  Mat basis;
  basis.n = n;
  for (int i = 0; i < n; ++i) basis.set_col(i, parse_vec(rows[i], n, "lattice"));
  return Lattice::from_basis(basis);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw SchemaError("invalid JSON in " + path);
  return j;
}

Json body_to_json(const GaugeBody& body) {
  Json j;
  j["schema"] = kSchemaTag;
  j["dim"] = body.dim();
  if (body.is_polytope()) {
    j["kind"] = "polytope";
    const auto& p = body.poly();
    if (!p.vertices.empty()) {
      Json vs = Json::array();
      for (const Vec& v : p.vertices) vs.push_back(vec_to_json(v));
      j["vertices"] = vs;
    } else {
      Json fs = Json::array();
      for (const Vec& a : p.facets) fs.push_back(vec_to_json(a));
      j["facets"] = fs;
    }
    return j;
  }
  if (body.is_ball()) {
    j["kind"] = "ball";
    j["radius"] = body.ball().radius;
    return j;
  }
  if (std::holds_alternative<DiscBicone>(body.v)) {
    j["kind"] = "disc_bicone";
    j["apex"] = vec_to_json(body.bicone().apex);
    return j;
  }
  throw SchemaError("body: radial bodies have no JSON form");
}

Json lattice_to_json(const Lattice& lat) {
  Json j;
  j["schema"] = kSchemaTag;
  Json rows = Json::array();
  for (int i = 0; i < lat.dim; ++i) rows.push_back(vec_to_json(lat.basis.col(i)));
  j["basis"] = rows;
  return j;
}

}  // namespace minkcell
