#ifndef DEPTH_JSON_IO_HPP
#define DEPTH_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "depth/chartable.hpp"
#include "depth/hopf.hpp"
#include "depth/pipelines.hpp"

namespace depth {

using Json = nlohmann::json;

// integers as JSON numbers, decimal strings above 2^53 − 1
Json int_to_json(const BigInt& v);
BigInt int_from_json(const Json& j);
Json rat_to_json(const BigRat& v);  // canonical "p" / "p/q" string
BigRat rat_from_json(const Json& j);

// {"rows": r, "cols": s, "entries": [[...], ...]}
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// {"degree": n, "generators": [[[1,2],[3,4,5]], ...]}
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j, std::size_t order_cap = PermGroup::kDefaultOrderCap);
// name ("S3", "sym(4)", ...) or inline group JSON / generator list
PermGroup group_from_spec(const std::string& spec, std::size_t order_cap = PermGroup::kDefaultOrderCap);
// generator list relative to a fixed degree; accepts [[1,2]] and [[[1,2],[3,4]]] forms
std::vector<Permutation> generators_from_json(const Json& j, std::size_t degree);

// {"group": ..., "classes": [...], "exponent": e, "irreducibles": [...]}
Json table_to_json(const CharacterTable& t);
CharacterTable table_from_json(const Json& j, std::size_t order_cap = PermGroup::kDefaultOrderCap);

// {"dim": d, "mult": [[[...]]], "unit": [...], "comult": [[[...]]], "counit": [...], "antipode": [[...]]}
Json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);

Json quad_to_json(const DepthQuad& q);
Json report_to_json(const DepthReport& r);
std::string report_to_markdown(const DepthReport& r);

// bipartite Bratteli graph: rows as boxes, columns as circles, multiplicities as labels
std::string bratteli_dot(const IntMatrix& m);

// stable output: two-space indent, keys sorted (nlohmann objects are ordered maps)
std::string dump_stable(const Json& j);

}  // namespace depth

#endif
