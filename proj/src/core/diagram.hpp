#pragma once

#include "eqsheaf.hpp"
#include "rep.hpp"
#include "tower.hpp"

namespace psh {

// Moving sheaves along one quotient of a tower and along the composite to the
// top, plus the constructions that need the whole tower at once: compatible
// families, truncated colimits, presheaves and their sheafification, products
// of families, and two concrete families used as references throughout.

// Pushforward along a point map covering a group quotient. The stalk at a
// downstairs point is the fixed space of the quotient kernel acting on the
// product of upstairs stalks over the fiber; fixed_basis[y] spans that space
// inside the concatenated fiber coordinates, fiber[y] lists the upstairs
// points ascending, offsets[y][j] is the first coordinate of block j.
struct Pushforward {
  EqSheaf sheaf;
  std::vector<QMatrix> fixed_basis;
  std::vector<std::vector<int>> fiber;
  std::vector<std::vector<int>> offsets;
};

// phi maps the group acting upstairs onto the group acting downstairs and
// pmap covers it on points: pmap[phi-twisted orbit] stays consistent, which
// is checked. low lives on the target space, up on the source space.
EqSheaf pullback_along(SpacePtr hi, const GroupHom& phi, const std::vector<int>& pmap,
                       const EqSheaf& low);
Pushforward pushforward_along(SpacePtr lo, const GroupHom& phi, const std::vector<int>& pmap,
                              const EqSheaf& up);

// The two functors for the single step k <- k+1 of a tower, and the composite
// from the top level straight down to level k.
EqSheaf pullback_step(const SpaceTower& t, int k, const EqSheaf& low);
Pushforward pushforward_step(const SpaceTower& t, int k, const EqSheaf& up);
Pushforward pushforward_from_top(const SpaceTower& t, int k, const EqSheaf& top);

// Functoriality on maps. pushforward_map needs the pushforward data of both
// endpoints, which the caller usually has already.
SheafMap pullback_map(const SpaceTower& t, int k, const SheafMap& f);
SheafMap pushforward_map(const Pushforward& src, const Pushforward& dst, const SheafMap& f);

// Adjunction for one step: pullback is left adjoint to pushforward. The unit
// embeds a downstairs stalk diagonally into the fiber product; it is an iso
// only when the kernel moves every fiber transitively, so in general the
// round trip remembers strictly more than the input.
SheafMap step_unit(const SpaceTower& t, int k, const EqSheaf& low);
SheafMap step_counit(const SpaceTower& t, int k, const EqSheaf& up);

// Iterated stepwise pushforward of a sheaf on the top space. levels[k] lives
// on space k; levels[depth] is the input itself.
struct PushforwardFamily {
  std::vector<EqSheaf> levels;
  std::vector<Pushforward> steps;  // steps[k] built from levels[k+1]
};
PushforwardFamily pushforward_family(const SpaceTower& t, const EqSheaf& top);

// Comparison of the iterated family with the one-shot pushforward from the
// top. compare[k] rewrites the nested fixed bases in top-fiber coordinates;
// every compare[k] is expected to be an iso, which the callers assert.
struct FamilyComparison {
  std::vector<Pushforward> oneshot;
  std::vector<SheafMap> compare;  // levels[k] -> oneshot[k].sheaf
};
FamilyComparison family_vs_oneshot(const SpaceTower& t, const PushforwardFamily& fam);

// Stalk chain of a family along one thread of the tower. maps[k] projects the
// level-k fixed space onto the block of the thread's level-k+1 point.
// stabilized_at is the least level from which every later map is invertible,
// or -1 when even the last map fails, meaning the truncation is too shallow
// to read off the germ.
struct ThreadGerm {
  PointThread thread;
  std::vector<int> dims;
  std::vector<QMatrix> maps;
  int stabilized_at;
};

// Truncated colimit of the family: the top level together with the germ
// report for every thread.
struct ColimitResult {
  EqSheaf top;
  std::vector<ThreadGerm> threads;
};
ColimitResult colim_sheaf(const SpaceTower& t, const PushforwardFamily& fam);

// Sections of a family over a basic open, as a module over the full-group
// stabilizer of the open acting through the tower.
GroupRep open_sections_rep(const SpaceTower& t, const PushforwardFamily& fam,
                           const BasicOpen& b);

// Level k of a tower with the top group acting through the composite
// quotient. Presheaf data lives on these spaces so that one group acts at
// every level. Point subgroups, when the level has them, are replaced by
// their preimages in the top group.
SpacePtr presheaf_level_space(const SpaceTower& t, int k);

// A compatible system of equivariant data on the levels of a tower: a sheaf
// for the top group on every presheaf_level_space plus restriction maps
// res(k, x) from the level-k value under x to the level-k+1 value at x.
// Construction checks every cocycle and every naturality square.
class EqPresheaf {
 public:
  static EqPresheaf make(SpaceTowerPtr t, std::vector<std::vector<int>> dims,
                         const std::vector<std::vector<std::vector<QMatrix>>>& trans,
                         std::vector<std::vector<QMatrix>> res);

  const SpaceTowerPtr& tower() const { return tower_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const EqSheaf& level(int k) const { return levels_[k]; }
  const QMatrix& res(int k, int x_up) const { return res_[k][x_up]; }

  // The top level read as a sheaf on the tower's own top space, where the
  // composite quotient is the identity.
  EqSheaf top_as_sheaf() const;

  bool operator==(const EqPresheaf& o) const;

 private:
  EqPresheaf() = default;
  SpaceTowerPtr tower_;
  std::vector<EqSheaf> levels_;
  std::vector<std::vector<QMatrix>> res_;
};

// Levelwise maps of presheaves; naturality against translations and
// restriction squares are checked on construction.
struct PresheafMap {
  std::vector<std::vector<QMatrix>> comps;
};
PresheafMap make_presheaf_map(const EqPresheaf& src, const EqPresheaf& dst,
                              std::vector<std::vector<QMatrix>> comps);

// The presheaf of sections of a sheaf on the top space: the value at a level-k
// point is the product of top stalks over its fiber, restrictions drop the
// blocks that leave the open.
EqPresheaf presheaf_of_sheaf(SpaceTowerPtr t, const EqSheaf& top);

// Sheafification of a presheaf at this truncation depth: germs along threads
// are taken at the top level, so the sheaf is the top data itself, carried
// around as a sheaf, its pushforward family, and its presheaf of sections.
// unit maps each presheaf value into the sections by stacking the composite
// restrictions along all threads through the point.
struct SheafifyResult {
  EqSheaf top;
  PushforwardFamily family;
  EqPresheaf sections;
  PresheafMap unit;
};
SheafifyResult sheafify(const EqPresheaf& p);

// Product of families represented by their top sheaves: the family of the
// biproduct together with levelwise projections onto the factor families.
struct FamilyProduct {
  PushforwardFamily family;
  std::vector<PushforwardFamily> factors;
  std::vector<std::vector<SheafMap>> proj;  // proj[i][k]
};
FamilyProduct family_product(const SpaceTower& t, const std::vector<EqSheaf>& tops);

// Reference family on a subgroup-space tower: the value at a point is the
// rational coset space of the preimage of its subgroup, translations permute
// cosets through conjugation, restrictions are coset transfer matrices.
EqPresheaf example_group_ring(SpaceTowerPtr t);

// Reference family attached to a module v of the top group: the value at a
// point is the fixed space of the preimage of its subgroup, translations are
// induced by v, restrictions are inclusions of fixed spaces written in the
// canonical bases.
EqPresheaf example_fix(SpaceTowerPtr t, const GroupRep& v);

// Constant family of a module of the top group: every value is the module
// itself, translations come from the module, restrictions are identities.
EqPresheaf example_constant(SpaceTowerPtr t, const GroupRep& v);

}  // namespace psh
