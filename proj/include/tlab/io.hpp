#pragma once

#include <json.hpp>
#include <string>

#include "tlab/caps.hpp"
#include "tlab/generators.hpp"
#include "tlab/transversal.hpp"

namespace tlab {

using nlohmann::json;

// Scalars travel as canonical "p/q" strings throughout.
json scalar_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Point2& p);
json to_json(const Point3& p);
json to_json(const ConvexPoly2& k);   // {"vertices": [["x","y"], ...]}
ConvexPoly2 poly2_from_json(const json& j);
json to_json(const Line2& l);         // {"slope": ..., "intercept": ...}
Line2 line2_from_json(const json& j);
json to_json(const Line3& l);         // {"base": [...], "dir": [...]}
Line3 line3_from_json(const json& j);
json to_json(const Plane3& h);        // {"coef": [a, b, c, d]}
Plane3 plane3_from_json(const json& j);
json to_json(const Polytope3& k);     // {"vertices": [["x","y","z"], ...], "dim": d}
Polytope3 polytope3_from_json(const json& j);

json to_json(const Realization2& r);  // {"kind", "lines", "set_ids"}
json to_json(const Instance& inst);
Instance instance_from_json(const json& j);  // re-verifies certificates
json to_json(const TransversalReport& r);

Instance load_instance(const std::string& path);
void save_json(const std::string& path, const json& j);

}  // namespace tlab
