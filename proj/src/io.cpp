#include "tlab/io.hpp"

#include <fstream>

#include "tlab/error.hpp"

namespace tlab {

json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (!j.is_string()) throw Error(ErrorCode::BadInput, "scalar must be a string");
  return Scalar::from_string(j.get<std::string>());
}

json to_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }
json to_json(const Point3& p) { return json::array({p.x.str(), p.y.str(), p.z.str()}); }

namespace {

Point2 point2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::BadInput, "point2 needs 2 coords");
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

Point3 point3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::BadInput, "point3 needs 3 coords");
  return {scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2])};
}

}  // namespace

json to_json(const ConvexPoly2& k) {
  json verts = json::array();
  for (const auto& v : k.vertices()) verts.push_back(to_json(v));
  return json{{"vertices", verts}};
}

ConvexPoly2 poly2_from_json(const json& j) {
  std::vector<Point2> pts;
  for (const auto& v : j.at("vertices")) pts.push_back(point2_from_json(v));
  // CCW order enforced on load; non-convex inputs are rejected
  return ConvexPoly2::from_vertices(pts);
}

json to_json(const Line2& l) {
  return json{{"slope", l.slope.str()}, {"intercept", l.intercept.str()}};
}

Line2 line2_from_json(const json& j) {
  return Line2{scalar_from_json(j.at("slope")), scalar_from_json(j.at("intercept"))};
}

json to_json(const Line3& l) {
  return json{{"base", to_json(l.base())}, {"dir", to_json(l.dir())}};
}

Line3 line3_from_json(const json& j) {
  return Line3(point3_from_json(j.at("base")), point3_from_json(j.at("dir")));
}

json to_json(const Plane3& h) {
  return json{{"coef", json::array({h.a().str(), h.b().str(), h.c().str(), h.d().str()})}};
}

Plane3 plane3_from_json(const json& j) {
  const auto& c = j.at("coef");
  if (!c.is_array() || c.size() != 4) throw Error(ErrorCode::BadInput, "plane needs 4 coefs");
  return Plane3(scalar_from_json(c[0]), scalar_from_json(c[1]), scalar_from_json(c[2]),
                scalar_from_json(c[3]));
}

json to_json(const Polytope3& k) {
  json verts = json::array();
  for (const auto& v : k.vertices()) verts.push_back(to_json(v));
  return json{{"vertices", verts}, {"dim", k.dim()}};
}

Polytope3 polytope3_from_json(const json& j) {
  std::vector<Point3> pts;
  for (const auto& v : j.at("vertices")) pts.push_back(point3_from_json(v));
  return Polytope3::hull_of(pts);
}

json to_json(const Realization2& r) {
  json lines = json::array();
  for (const auto& l : r.lines) lines.push_back(to_json(l));
  return json{{"kind", r.kind == ChainKind::Cap ? "cap" : "cup"},
              {"lines", lines},
              {"set_ids", r.set_ids}};
}

json to_json(const Instance& inst) {
  json j;
  j["dim"] = inst.dim;
  j["seed"] = inst.seed;
  json sets = json::array();
  if (inst.dim == 2) {
    for (size_t i = 0; i < inst.sets2.size(); ++i) {
      json s = to_json(inst.sets2[i]);
      s["id"] = inst.ids[i];
      sets.push_back(s);
    }
  } else {
    for (size_t i = 0; i < inst.sets3.size(); ++i) {
      json s = to_json(inst.sets3[i]);
      s["id"] = inst.ids.size() > i ? inst.ids[i] : ("S" + std::to_string(i));
      sets.push_back(s);
    }
  }
  j["sets"] = sets;
  j["ids"] = inst.ids;
  if (!inst.lines.empty()) {
    json lines = json::array();
    for (const auto& l : inst.lines) lines.push_back(to_json(l));
    j["lines"] = lines;
  }
  if (inst.family_split >= 0) j["family_split"] = inst.family_split;
  json meta;
  meta["generator"] = inst.generator;
  json params = json::object();
  for (const auto& [k, v] : inst.params) params[k] = v;
  meta["params"] = params;
  meta["certifies"] = inst.certifies;
  j["meta"] = meta;
  return j;
}

Instance instance_from_json(const json& j) {
  Instance inst;
  inst.dim = j.at("dim").get<int>();
  if (inst.dim != 2 && inst.dim != 3) throw Error(ErrorCode::BadInput, "dim must be 2 or 3");
  inst.seed = j.value("seed", 0ull);
  int counter = 0;
  if (j.contains("sets")) {
    for (const auto& s : j.at("sets")) {
      inst.ids.push_back(s.value("id", "S" + std::to_string(counter++)));
      if (inst.dim == 2) inst.sets2.push_back(poly2_from_json(s));
      else inst.sets3.push_back(polytope3_from_json(s));
    }
  }
  if (j.contains("lines"))
    for (const auto& l : j.at("lines")) inst.lines.push_back(line3_from_json(l));
  if (j.contains("ids")) inst.ids = j.at("ids").get<std::vector<std::string>>();
  inst.family_split = j.value("family_split", -1);
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    inst.generator = meta.value("generator", "unknown");
    if (meta.contains("params"))
      for (auto it = meta.at("params").begin(); it != meta.at("params").end(); ++it)
        inst.params.push_back({it.key(), it.value().get<std::string>()});
    if (meta.contains("certifies"))
      inst.certifies = meta.at("certifies").get<std::vector<std::string>>();
  }
  if (inst.ids.empty())
    for (size_t i = 0; i < std::max(inst.set_count(), inst.lines.size()); ++i)
      inst.ids.push_back("S" + std::to_string(i));
  verify_instance(inst);
  return inst;
}

json to_json(const TransversalReport& r) {
  json line;
  if (r.line.vertical()) {
    line["vertical"] = json::array({r.line.vline->x.str(), r.line.vline->y.str()});
  } else {
    line = to_json(*r.line.line);
  }
  json diags = json::object();
  for (const auto& [k, v] : r.diagnostics) diags[k] = v;
  return json{{"line", line},
              {"crossed", r.crossed_ids},
              {"fraction", r.fraction.str()},
              {"stage", r.stage},
              {"diagnostics", diags}};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, "malformed JSON in '" + path + "': " + e.what());
  }
  return instance_from_json(j);
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace tlab
