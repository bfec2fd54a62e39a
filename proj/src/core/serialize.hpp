#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "diagram.hpp"

namespace psh {

// Order-stable JSON: identical inputs produce byte-identical dumps.
using Json = nlohmann::ordered_json;

// {"rows": r, "cols": c, "data": [["p/q", ...], ...]}
Json mat_to_json(const QMatrix& m);
QMatrix mat_from_json(const Json& j);

// {"degree": d, "generators": [[images], ...]}
Json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const Json& j, int cap = kDefaultCap);

// Sorted member-index list.
Json subgroup_to_json(const Subgroup& h);
Subgroup subgroup_from_json(GroupPtr parent, const Json& j);

// Image array over all source elements, in element order.
Json hom_to_json(const GroupHom& f);
GroupHom hom_from_json(GroupPtr source, GroupPtr target, const Json& j);

// {"points": n, "action": [[per-generator images]], "point_subgroups": ...?}
Json space_to_json(const SpacePtr& s);
SpacePtr space_from_json(GroupPtr g, const Json& j);

Json space_tower_to_json(const SpaceTowerPtr& t);
SpaceTowerPtr space_tower_from_json(const Json& j, int cap = kDefaultCap);

// Self-contained: group, space, stalk dims, point labels, per-generator
// translation matrices. A "weyl" flag is emitted only when the sheaf passes
// the fixedness check, so its presence in a file is a certificate.
Json sheaf_to_json(const EqSheaf& e);
EqSheaf sheaf_from_json(const Json& j, int cap = kDefaultCap);

// Shape-checked load that skips the cocycle check, so damaged files can be
// inspected instead of rejected. trans is the full element table, extended
// from the stored generator rows by the group's word structure.
struct RawSheaf {
  SpacePtr base;
  std::vector<int> stalk_dims;
  std::vector<std::vector<QMatrix>> trans;
  std::vector<std::string> labels;
};
RawSheaf raw_sheaf_from_json(const Json& j, int cap = kDefaultCap);

// First failing instance of trans(g e, x) == trans(g, e x) trans(e, x) with
// g a generator, or nothing when the table is consistent.
struct CocycleWitness {
  int gen;
  int elem;
  int point;
};
std::optional<CocycleWitness> cocycle_witness(const RawSheaf& s);

// Tower plus per-level blocks (translations of the top group acting through
// the composite quotients) and the step restriction matrices.
Json presheaf_to_json(const EqPresheaf& p);
EqPresheaf presheaf_from_json(const Json& j, int cap = kDefaultCap);

// Graphviz rendering of a tower: one cluster per level, points labelled by
// their subgroup order when the level is a subgroup space, step maps as
// edges pointing down the tower.
std::string tower_to_dot(const SpaceTower& t);

}  // namespace psh
