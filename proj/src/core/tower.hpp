#pragma once

#include <optional>

#include "group.hpp"
#include "groupspec.hpp"

namespace psh {

class FiniteGSpace;
using SpacePtr = std::shared_ptr<const FiniteGSpace>;

// Finite discrete space with a group action, stored as the full element-by-
// point image table. Validated exhaustively: the action map is a homomorphism
// to the symmetric group of the point set.
class FiniteGSpace {
public:
  // gen_action[k][x] is where generator k sends point x; extended to all
  // elements along the group's word structure, then checked pairwise.
  static SpacePtr make(GroupPtr group, int n_points,
                       const std::vector<std::vector<int>>& gen_action,
                       std::optional<std::vector<Subgroup>> point_subgroups = std::nullopt);

  const GroupPtr& group() const { return group_; }
  int points() const { return n_points_; }
  int act(int elem, int x) const { return act_[elem][x]; }

  Subgroup stabilizer(int x) const;
  Subgroup setwise_stabilizer(const std::vector<int>& pts) const;
  std::vector<int> orbit_of(int x) const;    // sorted
  std::vector<int> orbit_reps() const;       // least point of each orbit, sorted
  int orbit_rep(int x) const;
  // Least group element carrying `from` to `to`; -1 if in different orbits.
  int transporter(int from, int to) const;

  // Present when the space was built as a subgroup space; point i is the
  // conjugation orbit point of subgroups()[i].
  const std::optional<std::vector<Subgroup>>& point_subgroups() const {
    return point_subgroups_;
  }

private:
  FiniteGSpace() = default;
  GroupPtr group_;
  int n_points_ = 0;
  std::vector<std::vector<int>> act_;  // [elem][point]
  std::optional<std::vector<Subgroup>> point_subgroups_;
};

// Chain of finite groups with surjective steps, truncating an inverse limit.
// steps[k] maps level k+1 onto level k. Level 0 is conventionally trivial.
class GroupTower {
public:
  GroupTower(std::vector<GroupPtr> levels, std::vector<GroupHom> steps);

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const GroupPtr& level(int k) const { return levels_[k]; }
  const GroupHom& step(int k) const { return steps_[k]; }         // k+1 -> k
  const GroupHom& from_top(int k) const { return from_top_[k]; }  // top -> k
  const Subgroup& kernel(int k) const { return kernels_[k]; }     // N_k in top
  const GroupPtr& top() const { return levels_.back(); }

private:
  std::vector<GroupPtr> levels_;
  std::vector<GroupHom> steps_;
  std::vector<GroupHom> from_top_;
  std::vector<Subgroup> kernels_;
};
using GroupTowerPtr = std::shared_ptr<const GroupTower>;

GroupTowerPtr build_group_tower(std::vector<GroupPtr> levels, std::vector<GroupHom> steps);

// Quotient tower of depth `depth` along the canonical normal chain: levels
// are G/N for N running through {G} followed by the `depth` finest chain
// entries, so the top level is G itself and level 0 is trivial.
GroupTowerPtr canonical_group_tower(GroupPtr g, int depth);

// A point of the truncated limit space: one coordinate per level, matched by
// the step maps.
struct PointThread {
  std::vector<int> coords;
  bool operator==(const PointThread&) const = default;
};

// Spaces over each tower level with equivariant surjective connecting maps.
class SpaceTower {
public:
  SpaceTower(GroupTowerPtr groups, std::vector<SpacePtr> spaces,
             std::vector<std::vector<int>> steps);

  const GroupTowerPtr& groups() const { return groups_; }
  int depth() const { return groups_->depth(); }
  const SpacePtr& space(int k) const { return spaces_[k]; }
  const SpacePtr& top_space() const { return spaces_.back(); }
  int step(int k, int x_above) const { return steps_[k][x_above]; }

  std::vector<PointThread> point_threads() const;
  PointThread thread_of_top_point(int x) const;
  // Top points over the level-k point x.
  std::vector<int> top_fiber(int k, int x) const;
  // Level k+1 points over the level-k point x.
  std::vector<int> step_fiber(int k, int x) const;
  // Image of a top point at level k.
  int project_point(int k, int x_top) const;

private:
  GroupTowerPtr groups_;
  std::vector<SpacePtr> spaces_;
  std::vector<std::vector<int>> steps_;
};
using SpaceTowerPtr = std::shared_ptr<const SpaceTower>;

// Subgroup space of one group: points are all subgroups, ordered by (order,
// member list), with conjugation action.
SpacePtr subgroup_space_level(GroupPtr g);

// Levelwise subgroup spaces of a group tower; the connecting map sends a
// subgroup to its image under the step homomorphism.
SpaceTowerPtr subgroup_space_tower(GroupTowerPtr t);

SpaceTowerPtr canonical_subgroup_tower(GroupPtr g, int depth);

// One-point space at every level; sheaves over it are plain modules.
SpaceTowerPtr point_space_tower(GroupTowerPtr t);

// Basic open of the truncated limit space: all threads through one level-k
// point.
struct BasicOpen {
  int level;
  int point;
};

bool basic_open_contains(const SpaceTower& t, const BasicOpen& b, const PointThread& thread);
std::vector<PointThread> basic_open_threads(const SpaceTower& t, const BasicOpen& b);

// Stabilizer in the top group of the basic open as a set of threads; the
// preimage of the level-k point stabilizer.
Subgroup open_stabilizer(const SpaceTower& t, const BasicOpen& b);

}  // namespace psh
