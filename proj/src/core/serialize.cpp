#include "serialize.hpp"

#include <map>
#include <sstream>

#include "weyl.hpp"

namespace psh {

namespace {

int get_int(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key) && j[key].is_number_integer(), Errc::parse_error,
          std::string("expected integer field '") + key + "'");
  return j[key].get<int>();
}

const Json& get_array(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key) && j[key].is_array(), Errc::parse_error,
          std::string("expected array field '") + key + "'");
  return j[key];
}

void require_kind(const Json& j, const char* kind) {
  require(j.is_object() && j.contains("kind") && j["kind"] == kind, Errc::parse_error,
          std::string("expected a file of kind '") + kind + "'");
}

std::vector<int> int_vector(const Json& j) {
  require(j.is_array(), Errc::parse_error, "expected an integer array");
  std::vector<int> out;
  for (const auto& v : j) {
    require(v.is_number_integer(), Errc::parse_error, "expected an integer array");
    out.push_back(v.get<int>());
  }
  return out;
}

// Extends chosen generator rows to the whole group along its word structure.
// Purely definitional: no cocycle identity is assumed or checked here.
std::vector<std::vector<QMatrix>> expand_generator_rows(
    const SpacePtr& base, const std::vector<int>& dims,
    const std::vector<std::vector<QMatrix>>& gen_rows) {
  GroupPtr g = base->group();
  const auto& gi = g->generator_indices();
  require(gen_rows.size() == gi.size(), Errc::wrong_size, "one translation row per generator");

  int n = base->points();
  std::map<int, const std::vector<QMatrix>*> by_elem;
  for (size_t i = 0; i < gi.size(); ++i) {
    require(static_cast<int>(gen_rows[i].size()) == n, Errc::wrong_size,
            "one translation matrix per point");
    for (int x = 0; x < n; ++x) {
      require(gen_rows[i][x].rows() == dims[base->act(gi[i], x)] &&
                  gen_rows[i][x].cols() == dims[x],
              Errc::wrong_size, "translation shape must match the stalk dims");
    }
    by_elem[gi[i]] = &gen_rows[i];
  }

  std::vector<std::vector<QMatrix>> full(g->order());
  full[0].reserve(n);
  for (int x = 0; x < n; ++x) full[0].push_back(QMatrix::identity(dims[x]));
  for (int e : g->bfs_order()) {
    if (e == 0) continue;
    int wg = g->word_gen(e), wr = g->word_rest(e);
    const auto& gen_row = *by_elem.at(wg);
    full[e].reserve(n);
    for (int x = 0; x < n; ++x) full[e].push_back(gen_row[base->act(wr, x)] * full[wr][x]);
  }
  return full;
}

std::vector<std::string> point_labels(const SpacePtr& s) {
  std::vector<std::string> out;
  for (int x = 0; x < s->points(); ++x) {
    std::ostringstream os;
    os << "x" << x;
    if (s->point_subgroups()) os << ":o" << (*s->point_subgroups())[x].order();
    out.push_back(os.str());
  }
  return out;
}

Json translations_to_json(const EqSheaf& e) {
  Json rows = Json::array();
  for (int gidx : e.group()->generator_indices()) {
    Json row = Json::array();
    for (int x = 0; x < e.points(); ++x) row.push_back(mat_to_json(e.trans(gidx, x)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<QMatrix>> translations_from_json(const Json& j, int n_points) {
  require(j.is_array(), Errc::parse_error, "expected translation rows");
  std::vector<std::vector<QMatrix>> rows;
  for (const auto& row : j) {
    require(row.is_array() && static_cast<int>(row.size()) == n_points, Errc::parse_error,
            "one translation matrix per point");
    std::vector<QMatrix> mats;
    for (const auto& m : row) mats.push_back(mat_from_json(m));
    rows.push_back(std::move(mats));
  }
  return rows;
}

}  // namespace

Json mat_to_json(const QMatrix& m) {
  Json data = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

QMatrix mat_from_json(const Json& j) {
  int rows = get_int(j, "rows"), cols = get_int(j, "cols");
  require(rows >= 0 && cols >= 0, Errc::parse_error, "negative matrix shape");
  const Json& data = get_array(j, "data");
  require(static_cast<int>(data.size()) == rows, Errc::parse_error, "matrix row count mismatch");
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = data[r];
    require(row.is_array() && static_cast<int>(row.size()) == cols, Errc::parse_error,
            "matrix column count mismatch");
    for (int c = 0; c < cols; ++c) {
      require(row[c].is_string(), Errc::parse_error, "matrix entries must be rational strings");
      m.at(r, c) = rat_parse(row[c].get<std::string>());
    }
  }
  return m;
}

Json group_to_json(const GroupPtr& g) {
  Json gens = Json::array();
  for (const Perm& p : g->generators()) gens.push_back(p.images());
  return Json{{"degree", g->degree()}, {"generators", std::move(gens)}};
}

GroupPtr group_from_json(const Json& j, int cap) {
  int degree = get_int(j, "degree");
  require(degree > 0, Errc::parse_error, "degree must be positive");
  std::vector<Perm> gens;
  for (const auto& images : get_array(j, "generators")) {
    auto v = int_vector(images);
    require(static_cast<int>(v.size()) == degree, Errc::parse_error,
            "generator image count must equal the degree");
    gens.emplace_back(std::move(v));
  }
  return FiniteGroup::close_generators(degree, std::move(gens), cap);
}

Json subgroup_to_json(const Subgroup& h) { return Json(h.members()); }

Subgroup subgroup_from_json(GroupPtr parent, const Json& j) {
  return Subgroup(std::move(parent), int_vector(j));
}

Json hom_to_json(const GroupHom& f) {
  std::vector<int> images;
  for (int e = 0; e < f.source()->order(); ++e) images.push_back(f.apply(e));
  return Json(images);
}

GroupHom hom_from_json(GroupPtr source, GroupPtr target, const Json& j) {
  return GroupHom(std::move(source), std::move(target), int_vector(j));
}

Json space_to_json(const SpacePtr& s) {
  Json action = Json::array();
  for (int gidx : s->group()->generator_indices()) {
    std::vector<int> images;
    for (int x = 0; x < s->points(); ++x) images.push_back(s->act(gidx, x));
    action.push_back(std::move(images));
  }
  Json out{{"points", s->points()}, {"action", std::move(action)}};
  if (s->point_subgroups()) {
    Json subs = Json::array();
    for (const auto& h : *s->point_subgroups()) subs.push_back(subgroup_to_json(h));
    out["point_subgroups"] = std::move(subs);
  }
  return out;
}

SpacePtr space_from_json(GroupPtr g, const Json& j) {
  int n = get_int(j, "points");
  std::vector<std::vector<int>> action;
  for (const auto& row : get_array(j, "action")) action.push_back(int_vector(row));

  std::optional<std::vector<Subgroup>> subs;
  if (j.contains("point_subgroups")) {
    subs.emplace();
    for (const auto& h : get_array(j, "point_subgroups"))
      subs->push_back(subgroup_from_json(g, h));
  }
  return FiniteGSpace::make(std::move(g), n, std::move(action), std::move(subs));
}

Json space_tower_to_json(const SpaceTowerPtr& t) {
  const GroupTower& gt = *t->groups();
  Json groups = Json::array(), group_steps = Json::array();
  Json spaces = Json::array(), space_steps = Json::array();
  for (int k = 0; k <= t->depth(); ++k) {
    groups.push_back(group_to_json(gt.level(k)));
    spaces.push_back(space_to_json(t->space(k)));
  }
  for (int k = 0; k < t->depth(); ++k) {
    group_steps.push_back(hom_to_json(gt.step(k)));
    std::vector<int> images;
    for (int x = 0; x < t->space(k + 1)->points(); ++x) images.push_back(t->step(k, x));
    space_steps.push_back(std::move(images));
  }
  return Json{{"kind", "tower"},           {"depth", t->depth()},
              {"groups", std::move(groups)}, {"group_steps", std::move(group_steps)},
              {"spaces", std::move(spaces)}, {"space_steps", std::move(space_steps)}};
}

SpaceTowerPtr space_tower_from_json(const Json& j, int cap) {
  require_kind(j, "tower");
  int depth = get_int(j, "depth");
  require(depth >= 0, Errc::parse_error, "negative depth");
  const Json& groups = get_array(j, "groups");
  const Json& group_steps = get_array(j, "group_steps");
  const Json& spaces = get_array(j, "spaces");
  const Json& space_steps = get_array(j, "space_steps");
  require(static_cast<int>(groups.size()) == depth + 1 &&
              static_cast<int>(spaces.size()) == depth + 1 &&
              static_cast<int>(group_steps.size()) == depth &&
              static_cast<int>(space_steps.size()) == depth,
          Errc::parse_error, "tower level counts are inconsistent");

  std::vector<GroupPtr> levels;
  for (const auto& g : groups) levels.push_back(group_from_json(g, cap));
  std::vector<GroupHom> steps;
  for (int k = 0; k < depth; ++k)
    steps.push_back(hom_from_json(levels[k + 1], levels[k], group_steps[k]));
  auto gt = std::make_shared<const GroupTower>(levels, std::move(steps));

  std::vector<SpacePtr> sps;
  for (int k = 0; k <= depth; ++k) sps.push_back(space_from_json(levels[k], spaces[k]));
  std::vector<std::vector<int>> sst;
  for (const auto& row : space_steps) sst.push_back(int_vector(row));
  return std::make_shared<const SpaceTower>(std::move(gt), std::move(sps), std::move(sst));
}

Json sheaf_to_json(const EqSheaf& e) {
  Json out{{"kind", "sheaf"},
           {"group", group_to_json(e.group())},
           {"space", space_to_json(e.base())},
           {"stalk_dims", e.stalk_dims()},
           {"labels", point_labels(e.base())},
           {"translations", translations_to_json(e)}};
  if (e.base()->point_subgroups() && is_weyl(e)) out["weyl"] = true;
  return out;
}

RawSheaf raw_sheaf_from_json(const Json& j, int cap) {
  require_kind(j, "sheaf");
  require(j.contains("group") && j.contains("space"), Errc::parse_error,
          "sheaf file needs a group and a space");
  GroupPtr g = group_from_json(j["group"], cap);
  SpacePtr base = space_from_json(g, j["space"]);

  RawSheaf raw;
  raw.base = base;
  raw.stalk_dims = int_vector(get_array(j, "stalk_dims"));
  require(static_cast<int>(raw.stalk_dims.size()) == base->points(), Errc::wrong_size,
          "one stalk dimension per point");
  for (int d : raw.stalk_dims) require(d >= 0, Errc::parse_error, "negative stalk dimension");
  auto gen_rows = translations_from_json(get_array(j, "translations"), base->points());
  raw.trans = expand_generator_rows(base, raw.stalk_dims, gen_rows);
  if (j.contains("labels")) {
    for (const auto& l : get_array(j, "labels")) {
      require(l.is_string(), Errc::parse_error, "labels must be strings");
      raw.labels.push_back(l.get<std::string>());
    }
    require(raw.labels.size() == static_cast<size_t>(base->points()), Errc::wrong_size,
            "one label per point");
  } else {
    raw.labels = point_labels(base);
  }
  return raw;
}

EqSheaf sheaf_from_json(const Json& j, int cap) {
  RawSheaf raw = raw_sheaf_from_json(j, cap);
  return EqSheaf::make(raw.base, std::move(raw.stalk_dims), std::move(raw.trans));
}

std::optional<CocycleWitness> cocycle_witness(const RawSheaf& s) {
  GroupPtr g = s.base->group();
  for (int gi : g->generator_indices())
    for (int e = 0; e < g->order(); ++e)
      for (int x = 0; x < s.base->points(); ++x)
        if (s.trans[g->mul(gi, e)][x] != s.trans[gi][s.base->act(e, x)] * s.trans[e][x])
          return CocycleWitness{gi, e, x};
  return std::nullopt;
}

Json presheaf_to_json(const EqPresheaf& p) {
  Json levels = Json::array();
  for (int k = 0; k <= p.depth(); ++k) {
    levels.push_back(Json{{"stalk_dims", p.level(k).stalk_dims()},
                          {"translations", translations_to_json(p.level(k))}});
  }
  Json res = Json::array();
  for (int k = 0; k < p.depth(); ++k) {
    Json row = Json::array();
    for (int x = 0; x < p.level(k + 1).points(); ++x) row.push_back(mat_to_json(p.res(k, x)));
    res.push_back(std::move(row));
  }
  return Json{{"kind", "presheaf"},
              {"tower", space_tower_to_json(p.tower())},
              {"levels", std::move(levels)},
              {"restrictions", std::move(res)}};
}

EqPresheaf presheaf_from_json(const Json& j, int cap) {
  require_kind(j, "presheaf");
  require(j.contains("tower"), Errc::parse_error, "presheaf file needs a tower");
  SpaceTowerPtr t = space_tower_from_json(j["tower"], cap);
  const Json& levels = get_array(j, "levels");
  require(static_cast<int>(levels.size()) == t->depth() + 1, Errc::parse_error,
          "one level block per tower level");

  std::vector<std::vector<int>> dims;
  std::vector<std::vector<std::vector<QMatrix>>> trans;
  for (int k = 0; k <= t->depth(); ++k) {
    SpacePtr aux = presheaf_level_space(*t, k);
    auto d = int_vector(get_array(levels[k], "stalk_dims"));
    require(static_cast<int>(d.size()) == aux->points(), Errc::wrong_size,
            "one stalk dimension per point");
    auto gen_rows = translations_from_json(get_array(levels[k], "translations"), aux->points());
    trans.push_back(expand_generator_rows(aux, d, gen_rows));
    dims.push_back(std::move(d));
  }

  const Json& res_rows = get_array(j, "restrictions");
  require(static_cast<int>(res_rows.size()) == t->depth(), Errc::parse_error,
          "one restriction row per step");
  std::vector<std::vector<QMatrix>> res;
  for (const auto& row : res_rows) {
    require(row.is_array(), Errc::parse_error, "expected restriction matrices");
    std::vector<QMatrix> mats;
    for (const auto& m : row) mats.push_back(mat_from_json(m));
    res.push_back(std::move(mats));
  }
  return EqPresheaf::make(std::move(t), std::move(dims), trans, std::move(res));
}

std::string tower_to_dot(const SpaceTower& t) {
  std::ostringstream os;
  os << "digraph tower {\n  rankdir=BT;\n";
  for (int k = 0; k <= t.depth(); ++k) {
    SpacePtr s = t.space(k);
    os << "  subgraph cluster_" << k << " {\n";
    os << "    label=\"level " << k << ", group order " << s->group()->order() << "\";\n";
    auto labels = point_labels(s);
    for (int x = 0; x < s->points(); ++x)
      os << "    n" << k << "_" << x << " [label=\"" << labels[x] << "\"];\n";
    os << "  }\n";
  }
  for (int k = 0; k < t.depth(); ++k)
    for (int x = 0; x < t.space(k + 1)->points(); ++x)
      os << "  n" << k + 1 << "_" << x << " -> n" << k << "_" << t.step(k, x) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace psh
