// SPDX-License-Identifier: Apache-2.0
#include "linfvd/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace linfvd {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDocument, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

Scalar scalar_of(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
      malformed("bad rational '" + j.get<std::string>() + "'");
    }
  }
  malformed("coordinates must be integers or rational strings, got " + j.dump());
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

Point point_of(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    malformed("expected a point with " + std::to_string(dim) + " coordinates, got " + j.dump());
  }
  Point p(dim);
  for (int k = 0; k < dim; ++k) p[k] = scalar_of(j[static_cast<std::size_t>(k)]);
  return p;
}

Cycle cycle_of(const Json& j) {
  if (!j.is_array()) malformed("a cycle must be an array of points");
  Cycle c;
  for (const auto& p : j) c.push_back(point_of(p, 2));
  return c;
}

Json json_of(const Point& p) {
  Json a = Json::array();
  for (int k = 0; k < p.dim(); ++k) a.push_back(to_string(p[k]));
  return a;
}

Json json_of(const Cycle& c) {
  Json a = Json::array();
  for (const auto& p : c) a.push_back(json_of(p));
  return a;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

OrthogonalShape read_shape(const Json& doc, int expected_dim) {
  const int dim = int_of(field(doc, "dimension"), "dimension");
  if (dim != 2 && dim != 3) malformed("dimension must be 2 or 3");
  if (expected_dim != 0 && dim != expected_dim) {
    throw Error(ErrorCode::DimensionMismatch, "document is " + std::to_string(dim) +
                                                  "D but " + std::to_string(expected_dim) +
                                                  "D was requested");
  }
  if (dim == 2) {
    Cycle outer = cycle_of(field(doc, "outer"));
    std::vector<Cycle> holes;
    if (doc.contains("holes")) {
      const auto& hs = doc["holes"];
      if (!hs.is_array()) malformed("'holes' must be an array");
      for (const auto& h : hs) holes.push_back(cycle_of(h));
    }
    return build_shape_2d(std::move(outer), std::move(holes));
  }
  const auto& fs = field(doc, "facets");
  if (!fs.is_array()) malformed("'facets' must be an array");
  std::vector<FacetSpec> facets;
  for (const auto& f : fs) {
    FacetSpec spec;
    spec.axis = int_of(field(f, "axis"), "axis");
    spec.offset = scalar_of(field(f, "offset"));
    spec.interior_sign = int_of(field(f, "interior_sign"), "interior_sign");
    spec.outer = cycle_of(field(f, "outline"));
    facets.push_back(std::move(spec));
  }
  return build_shape_3d(std::move(facets));
}

VoronoiGraph read_graph(const Json& doc);

}  // namespace

OrthogonalShape read_shape_document(const std::string& text, int expected_dim) {
  Json doc = parse(text);
  try {
    return read_shape(doc, expected_dim);
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

std::string write_shape_document(const OrthogonalShape& shape) {
  Json doc;
  doc["dimension"] = shape.dim;
  if (shape.dim == 2) {
    doc["outer"] = json_of(shape.polygon.front());
    Json holes = Json::array();
    for (std::size_t i = 1; i < shape.polygon.size(); ++i) holes.push_back(json_of(shape.polygon[i]));
    doc["holes"] = holes;
  } else {
    Json fs = Json::array();
    for (const auto& f : shape.facets) {
      Json j;
      j["axis"] = f.axis;
      j["offset"] = to_string(f.offset);
      j["interior_sign"] = f.interior_sign;
      j["outline"] = json_of(f.outer);
      fs.push_back(j);
    }
    doc["facets"] = fs;
  }
  return doc.dump(2) + "\n";
}

VoronoiGraph to_input_frame(const VoronoiGraph& g, const ScaleRecord& scale) {
  VoronoiGraph out = g;
  for (auto& n : out.nodes) n.position = scale.to_input(n.position);
  return out;
}

std::string write_graph_document(const VoronoiGraph& g, const ScaleRecord& scale, bool contracted) {
  Json doc;
  doc["format"] = "linfvd-graph";
  doc["version"] = 1;
  doc["dimension"] = g.dim;
  doc["contracted"] = contracted;
  doc["scale"] = {{"offset", json_of(scale.offset)}, {"factor", to_string(scale.factor)}};
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    Json j;
    j["id"] = n.id;
    j["kind"] = node_kind_name(n.kind);
    j["position"] = json_of(n.position);
    j["labels"] = n.labels;
    j["leaf"] = n.owner;
    nodes.push_back(j);
  }
  doc["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

VoronoiGraph read_graph_document(const std::string& text) {
  Json doc = parse(text);
  try {
    return read_graph(doc);
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

namespace {

VoronoiGraph read_graph(const Json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "linfvd-graph") malformed("not a graph document");
  VoronoiGraph g;
  g.dim = int_of(field(doc, "dimension"), "dimension");
  if (g.dim != 2 && g.dim != 3) malformed("dimension must be 2 or 3");
  const auto& scale = field(doc, "scale");
  point_of(field(scale, "offset"), g.dim);
  scalar_of(field(scale, "factor"));
  for (const auto& j : field(doc, "nodes")) {
    VorNode n;
    n.id = int_of(field(j, "id"), "id");
    if (n.id != static_cast<int>(g.nodes.size())) malformed("node ids must be consecutive");
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "bisector") n.kind = NodeKind::Bisector;
    else if (kind == "skeleton") n.kind = NodeKind::Skeleton;
    else if (kind == "vertex") n.kind = NodeKind::Vertex;
    else malformed("unknown node kind '" + kind + "'");
    n.position = point_of(field(j, "position"), g.dim);
    for (const auto& l : field(j, "labels")) n.labels.push_back(int_of(l, "label"));
    n.owner = int_of(field(j, "leaf"), "leaf");
    g.nodes.push_back(std::move(n));
  }
  for (const auto& e : field(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) malformed("edges must be id pairs");
    const int a = int_of(e[0], "edge end");
    const int b = int_of(e[1], "edge end");
    const int n = static_cast<int>(g.nodes.size());
    if (a < 0 || b < 0 || a >= n || b >= n) malformed("edge refers to a missing node");
    g.edges.emplace_back(a, b);
  }
  return g;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace linfvd
