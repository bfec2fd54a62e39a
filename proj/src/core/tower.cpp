#include "tower.hpp"

#include <algorithm>
#include <map>

namespace psh {

SpacePtr FiniteGSpace::make(GroupPtr group, int n_points,
                            const std::vector<std::vector<int>>& gen_action,
                            std::optional<std::vector<Subgroup>> point_subgroups) {
  require(n_points >= 0, Errc::invalid_argument, "negative point count");
  require(gen_action.size() == group->generators().size(), Errc::wrong_size,
          "one action row per generator required");
  auto s = std::shared_ptr<FiniteGSpace>(new FiniteGSpace());
  s->group_ = group;
  s->n_points_ = n_points;
  s->point_subgroups_ = std::move(point_subgroups);
  if (s->point_subgroups_)
    require(static_cast<int>(s->point_subgroups_->size()) == n_points, Errc::wrong_size,
            "one subgroup per point required");

  int n = group->order();
  s->act_.assign(n, std::vector<int>());
  std::vector<std::vector<int>> gen_row(n);
  const auto& gi = group->generator_indices();
  for (size_t k = 0; k < gi.size(); ++k) {
    const auto& row = gen_action[k];
    require(static_cast<int>(row.size()) == n_points, Errc::wrong_size, "action row size");
    for (int v : row)
      require(v >= 0 && v < n_points, Errc::index_out_of_range, "action image out of range");
    require(gen_row[gi[k]].empty() || gen_row[gi[k]] == row, Errc::not_homomorphism,
            "conflicting action rows for a repeated generator");
    gen_row[gi[k]] = row;
  }
  for (int idx : group->bfs_order()) {
    if (idx == group->identity()) {
      s->act_[idx].resize(n_points);
      for (int x = 0; x < n_points; ++x) s->act_[idx][x] = x;
    } else {
      const auto& g = gen_row[group->word_gen(idx)];
      const auto& r = s->act_[group->word_rest(idx)];
      s->act_[idx].resize(n_points);
      for (int x = 0; x < n_points; ++x) s->act_[idx][x] = g[r[x]];
    }
  }
  // The extension used one factorization per element; check the action is
  // multiplicative for every pair, which also confirms each row is a
  // permutation of the points.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = group->mul(a, b);
      for (int x = 0; x < n_points; ++x)
        require(s->act_[ab][x] == s->act_[a][s->act_[b][x]], Errc::not_homomorphism,
                "action is not a homomorphism");
    }
  return s;
}

Subgroup FiniteGSpace::stabilizer(int x) const {
  std::vector<int> members;
  for (int e = 0; e < group_->order(); ++e)
    if (act_[e][x] == x) members.push_back(e);
  return Subgroup(group_, std::move(members));
}

Subgroup FiniteGSpace::setwise_stabilizer(const std::vector<int>& pts) const {
  std::vector<char> in(n_points_, 0);
  for (int p : pts) in[p] = 1;
  std::vector<int> members;
  for (int e = 0; e < group_->order(); ++e) {
    bool ok = true;
    for (int p : pts)
      if (!in[act_[e][p]]) {
        ok = false;
        break;
      }
    if (ok) members.push_back(e);
  }
  return Subgroup(group_, std::move(members));
}

std::vector<int> FiniteGSpace::orbit_of(int x) const {
  std::vector<char> seen(n_points_, 0);
  for (int e = 0; e < group_->order(); ++e) seen[act_[e][x]] = 1;
  std::vector<int> out;
  for (int p = 0; p < n_points_; ++p)
    if (seen[p]) out.push_back(p);
  return out;
}

std::vector<int> FiniteGSpace::orbit_reps() const {
  std::vector<int> reps;
  std::vector<char> covered(n_points_, 0);
  for (int p = 0; p < n_points_; ++p) {
    if (covered[p]) continue;
    reps.push_back(p);
    for (int q : orbit_of(p)) covered[q] = 1;
  }
  return reps;
}

int FiniteGSpace::orbit_rep(int x) const {
  int best = x;
  for (int e = 0; e < group_->order(); ++e) best = std::min(best, act_[e][x]);
  return best;
}

int FiniteGSpace::transporter(int from, int to) const {
  for (int e = 0; e < group_->order(); ++e)
    if (act_[e][from] == to) return e;
  return -1;
}

GroupTower::GroupTower(std::vector<GroupPtr> levels, std::vector<GroupHom> steps)
    : levels_(std::move(levels)), steps_(std::move(steps)) {
  require(!levels_.empty(), Errc::invalid_argument, "tower needs at least one level");
  require(steps_.size() + 1 == levels_.size(), Errc::wrong_size,
          "tower needs one step per adjacent level pair");
  for (int k = 0; k < depth(); ++k) {
    require(steps_[k].source()->same_group(*levels_[k + 1]) &&
                steps_[k].target()->same_group(*levels_[k]),
            Errc::wrong_group, "step endpoints do not match levels");
    require(steps_[k].is_surjective(), Errc::not_surjective,
            "tower step " + std::to_string(k) + " is not surjective");
  }
  // Composites from the top; the empty composite is the identity. tmp[j]
  // maps the top level to level depth()-j.
  std::vector<GroupHom> tmp;
  tmp.push_back(GroupHom::identity(levels_.back()));
  for (int k = depth() - 1; k >= 0; --k)
    tmp.push_back(GroupHom::compose(steps_[k], tmp.back()));
  from_top_.reserve(levels_.size());
  for (int k = 0; k <= depth(); ++k) from_top_.push_back(std::move(tmp[depth() - k]));
  for (int k = 0; k <= depth(); ++k) kernels_.push_back(from_top_[k].kernel());
}

GroupTowerPtr build_group_tower(std::vector<GroupPtr> levels, std::vector<GroupHom> steps) {
  return std::make_shared<const GroupTower>(std::move(levels), std::move(steps));
}

GroupTowerPtr canonical_group_tower(GroupPtr g, int depth) {
  require(depth >= 1, Errc::invalid_argument, "depth must be at least 1");
  auto chain = canonical_normal_chain(g);  // G = chain[0] > ... > chain[r] = 1
  int r = static_cast<int>(chain.size()) - 1;
  require(depth <= std::max(r, 1), Errc::invalid_argument,
          "depth " + std::to_string(depth) + " exceeds available chain length " +
              std::to_string(std::max(r, 1)));
  // Kernels: G itself, then the depth finest proper chain entries.
  std::vector<Subgroup> kernels{chain[0]};
  for (int j = r - depth + 1; j <= r; ++j) kernels.push_back(chain[j]);
  std::vector<GroupPtr> levels;
  std::vector<GroupHom> projs;
  for (const auto& n : kernels) {
    auto q = quotient(g, n);
    levels.push_back(q.group);
    projs.push_back(std::move(q.proj));
  }
  std::vector<GroupHom> steps;
  for (size_t k = 0; k + 1 < levels.size(); ++k) {
    // Step k: level k+1 -> level k, induced by the identity of g.
    std::vector<int> images(levels[k + 1]->order(), -1);
    for (int e = 0; e < g->order(); ++e) images[projs[k + 1].apply(e)] = projs[k].apply(e);
    steps.emplace_back(levels[k + 1], levels[k], std::move(images));
  }
  return build_group_tower(std::move(levels), std::move(steps));
}

SpaceTower::SpaceTower(GroupTowerPtr groups, std::vector<SpacePtr> spaces,
                       std::vector<std::vector<int>> steps)
    : groups_(std::move(groups)), spaces_(std::move(spaces)), steps_(std::move(steps)) {
  require(spaces_.size() == static_cast<size_t>(groups_->depth()) + 1, Errc::wrong_size,
          "one space per tower level required");
  require(steps_.size() + 1 == spaces_.size(), Errc::wrong_size,
          "one space step per adjacent level pair required");
  for (size_t k = 0; k < spaces_.size(); ++k)
    require(spaces_[k]->group()->same_group(*groups_->level(static_cast<int>(k))),
            Errc::wrong_group, "space group does not match tower level");
  for (int k = 0; k < groups_->depth(); ++k) {
    const auto& upper = *spaces_[k + 1];
    const auto& lower = *spaces_[k];
    const auto& f = steps_[k];
    require(static_cast<int>(f.size()) == upper.points(), Errc::wrong_size,
            "space step size mismatch");
    std::vector<char> hit(lower.points(), 0);
    for (int v : f) {
      require(v >= 0 && v < lower.points(), Errc::index_out_of_range, "space step image");
      hit[v] = 1;
    }
    require(std::all_of(hit.begin(), hit.end(), [](char c) { return c; }),
            Errc::not_surjective, "space step " + std::to_string(k) + " is not surjective");
    // Equivariance square: pushing down then acting equals acting then
    // pushing down, for every element and point.
    const auto& hom = groups_->step(k);
    for (int e = 0; e < upper.group()->order(); ++e)
      for (int x = 0; x < upper.points(); ++x)
        require(f[upper.act(e, x)] == lower.act(hom.apply(e), f[x]), Errc::not_equivariant,
                "space step is not equivariant");
  }
}

std::vector<PointThread> SpaceTower::point_threads() const {
  std::vector<PointThread> out;
  for (int x = 0; x < top_space()->points(); ++x) out.push_back(thread_of_top_point(x));
  return out;
}

PointThread SpaceTower::thread_of_top_point(int x) const {
  PointThread t;
  t.coords.assign(depth() + 1, 0);
  t.coords[depth()] = x;
  for (int k = depth() - 1; k >= 0; --k) t.coords[k] = steps_[k][t.coords[k + 1]];
  return t;
}

std::vector<int> SpaceTower::top_fiber(int k, int x) const {
  std::vector<int> out;
  for (int p = 0; p < top_space()->points(); ++p)
    if (project_point(k, p) == x) out.push_back(p);
  return out;
}

std::vector<int> SpaceTower::step_fiber(int k, int x) const {
  std::vector<int> out;
  for (int p = 0; p < spaces_[k + 1]->points(); ++p)
    if (steps_[k][p] == x) out.push_back(p);
  return out;
}

int SpaceTower::project_point(int k, int x_top) const {
  int x = x_top;
  for (int j = depth() - 1; j >= k; --j) x = steps_[j][x];
  return x;
}

SpacePtr subgroup_space_level(GroupPtr g) {
  auto subs = all_subgroups(g);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < subs.size(); ++i) index[subs[i].members()] = static_cast<int>(i);
  std::vector<std::vector<int>> gen_action;
  for (int gi : g->generator_indices()) {
    std::vector<int> row;
    row.reserve(subs.size());
    for (const auto& s : subs) row.push_back(index.at(conjugate_subgroup(s, gi).members()));
    gen_action.push_back(std::move(row));
  }
  int n_points = static_cast<int>(subs.size());
  return FiniteGSpace::make(g, n_points, gen_action, std::move(subs));
}

SpaceTowerPtr subgroup_space_tower(GroupTowerPtr t) {
  std::vector<SpacePtr> spaces;
  for (int k = 0; k <= t->depth(); ++k) spaces.push_back(subgroup_space_level(t->level(k)));
  std::vector<std::vector<int>> steps;
  for (int k = 0; k < t->depth(); ++k) {
    const auto& upper = spaces[k + 1]->point_subgroups().value();
    const auto& lower = spaces[k]->point_subgroups().value();
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < lower.size(); ++i) index[lower[i].members()] = static_cast<int>(i);
    std::vector<int> f;
    f.reserve(upper.size());
    for (const auto& s : upper)
      f.push_back(index.at(image_subgroup(t->step(k), s).members()));
    steps.push_back(std::move(f));
  }
  return std::make_shared<const SpaceTower>(t, std::move(spaces), std::move(steps));
}

SpaceTowerPtr canonical_subgroup_tower(GroupPtr g, int depth) {
  return subgroup_space_tower(canonical_group_tower(std::move(g), depth));
}

SpaceTowerPtr point_space_tower(GroupTowerPtr t) {
  std::vector<SpacePtr> spaces;
  for (int k = 0; k <= t->depth(); ++k) {
    auto g = t->level(k);
    std::vector<std::vector<int>> gen_action(g->generator_indices().size(),
                                             std::vector<int>{0});
    spaces.push_back(FiniteGSpace::make(g, 1, gen_action));
  }
  std::vector<std::vector<int>> steps(t->depth(), std::vector<int>{0});
  return std::make_shared<const SpaceTower>(t, std::move(spaces), std::move(steps));
}

bool basic_open_contains(const SpaceTower& t, const BasicOpen& b, const PointThread& thread) {
  require(b.level >= 0 && b.level <= t.depth(), Errc::index_out_of_range, "basic open level");
  require(static_cast<int>(thread.coords.size()) == t.depth() + 1, Errc::wrong_size,
          "thread length");
  return thread.coords[b.level] == b.point;
}

std::vector<PointThread> basic_open_threads(const SpaceTower& t, const BasicOpen& b) {
  std::vector<PointThread> out;
  for (const auto& th : t.point_threads())
    if (basic_open_contains(t, b, th)) out.push_back(th);
  return out;
}

Subgroup open_stabilizer(const SpaceTower& t, const BasicOpen& b) {
  require(b.level >= 0 && b.level <= t.depth(), Errc::index_out_of_range, "basic open level");
  require(b.point >= 0 && b.point < t.space(b.level)->points(), Errc::index_out_of_range,
          "basic open point");
  const auto& hom = t.groups()->from_top(b.level);
  const auto& space = *t.space(b.level);
  std::vector<int> members;
  for (int e = 0; e < t.groups()->top()->order(); ++e)
    if (space.act(hom.apply(e), b.point) == b.point) members.push_back(e);
  return Subgroup(t.groups()->top(), std::move(members));
}

}  // namespace psh
