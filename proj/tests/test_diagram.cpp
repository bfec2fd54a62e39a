#include "core/diagram.hpp"

#include <doctest.h>

#include "core/groupspec.hpp"
#include "test_util.hpp"

using namespace psh;

namespace {

EqSheaf rep_as_sheaf(SpacePtr pt_space, const GroupRep& r) {
  int n = pt_space->group()->order();
  std::vector<std::vector<QMatrix>> trans(n);
  for (int e = 0; e < n; ++e) trans[e] = {r.mat(e)};
  return EqSheaf::make(std::move(pt_space), {r.dim()}, std::move(trans));
}

// Subgroup of a cyclic group picked by order; unique, so the choice is total.
Subgroup cyclic_subgroup_of_order(GroupPtr g, int order) {
  for (const auto& s : all_subgroups(g))
    if (s.order() == order) return s;
  FAIL("no subgroup of requested order");
  return full_subgroup(g);
}

}  // namespace

TEST_CASE("iterated pushforward of the regular module matches the fixed-space chain") {
  auto tower = point_space_tower(canonical_group_tower(testutil::cyclic(8), 3));
  auto topg = tower->groups()->top();
  GroupRep reg = regular_rep(topg);
  EqSheaf top = rep_as_sheaf(tower->top_space(), reg);

  PushforwardFamily fam = pushforward_family(*tower, top);
  REQUIRE(fam.levels.size() == 4);
  std::vector<int> want_dims{1, 2, 4, 8};
  for (int k = 0; k <= 3; ++k) CHECK(fam.levels[k].stalk_dim(0) == want_dims[k]);

  DiscFiltration filt = disc_filtration(reg, *tower->groups());
  FamilyComparison cmp = family_vs_oneshot(*tower, fam);
  for (int k = 0; k <= 3; ++k) {
    CHECK(cmp.compare[k].is_iso());
    CHECK(cmp.oneshot[k].fixed_basis[0] == filt.bases[k]);
  }

  ColimitResult col = colim_sheaf(*tower, fam);
  CHECK(col.top == top);
  REQUIRE(col.threads.size() == 1);
  CHECK(col.threads[0].dims == want_dims);
  // Dims keep growing all the way up, so the germ has not settled.
  CHECK(col.threads[0].stabilized_at == -1);
}

TEST_CASE("constant-dimension family stabilizes at the bottom") {
  auto tower = point_space_tower(canonical_group_tower(testutil::cyclic(8), 3));
  EqSheaf top = rep_as_sheaf(tower->top_space(), GroupRep::trivial(tower->groups()->top(), 1));
  ColimitResult col = colim_sheaf(*tower, pushforward_family(*tower, top));
  REQUIRE(col.threads.size() == 1);
  CHECK(col.threads[0].stabilized_at == 0);
  for (const auto& m : col.threads[0].maps) CHECK(m == QMatrix::identity(1));
}

TEST_CASE("adjunction triangles hold on a point tower and the unit is an iso there") {
  auto tower = point_space_tower(canonical_group_tower(testutil::cyclic(8), 3));
  int k = 1;
  EqSheaf low = rep_as_sheaf(tower->space(k), regular_rep(tower->groups()->level(k)));
  EqSheaf up = rep_as_sheaf(tower->space(k + 1), regular_rep(tower->groups()->level(k + 1)));

  SheafMap unit = step_unit(*tower, k, low);
  CHECK(unit.is_iso());  // single-point fibers leave nothing extra to remember

  // counit after pulled-back unit is the identity of the pullback
  EqSheaf pull = pullback_step(*tower, k, low);
  SheafMap tri1 = SheafMap::compose(step_counit(*tower, k, pull), pullback_map(*tower, k, unit));
  CHECK(tri1 == SheafMap::identity(pull));

  // pushed-down counit after the unit of the pushforward is the identity
  Pushforward pp = pushforward_step(*tower, k, up);
  SheafMap counit = step_counit(*tower, k, up);
  Pushforward pp_src = pushforward_step(*tower, k, counit.src());
  SheafMap tri2 =
      SheafMap::compose(pushforward_map(pp_src, pp, counit), step_unit(*tower, k, pp.sheaf));
  CHECK(tri2 == SheafMap::identity(pp.sheaf));
}

TEST_CASE("the unit fails to be an iso when a fiber splits into several kernel orbits") {
  auto tower = canonical_subgroup_tower(testutil::cyclic(4), 2);
  REQUIRE(tower->space(1)->points() == 2);
  REQUIRE(tower->space(2)->points() == 3);

  int n1 = tower->groups()->level(1)->order();
  std::vector<std::vector<QMatrix>> trans(n1,
                                          std::vector<QMatrix>(2, QMatrix::identity(1)));
  EqSheaf low = EqSheaf::make(tower->space(1), {1, 1}, std::move(trans));

  SheafMap unit = step_unit(*tower, 1, low);
  CHECK_FALSE(unit.is_iso());
  // two subgroups upstairs collapse onto the trivial point, and the abelian
  // kernel cannot merge them into one orbit
  CHECK(unit.dst().stalk_dim(0) == 2);
  CHECK(unit.dst().stalk_dim(1) == 1);

  // both triangles still hold
  EqSheaf pull = pullback_step(*tower, 1, low);
  SheafMap tri1 = SheafMap::compose(step_counit(*tower, 1, pull), pullback_map(*tower, 1, unit));
  CHECK(tri1 == SheafMap::identity(pull));

  EqSheaf up = skyscraper(tower->space(2), 1,
                          regular_rep(as_group(tower->space(2)->stabilizer(1))));
  Pushforward pp = pushforward_step(*tower, 1, up);
  SheafMap counit = step_counit(*tower, 1, up);
  Pushforward pp_src = pushforward_step(*tower, 1, counit.src());
  SheafMap tri2 =
      SheafMap::compose(pushforward_map(pp_src, pp, counit), step_unit(*tower, 1, pp.sheaf));
  CHECK(tri2 == SheafMap::identity(pp.sheaf));
}

TEST_CASE("pullback and pushforward have equal hom spaces across one step") {
  auto tower = canonical_subgroup_tower(testutil::sym(3), 2);
  auto space1 = tower->space(1);
  auto space2 = tower->space(2);

  EqSheaf d = biproduct({skyscraper(space1, 0, regular_rep(as_group(space1->stabilizer(0)))),
                         skyscraper(space1, 1, GroupRep::trivial(as_group(space1->stabilizer(1)), 1))})
                  .sheaf;
  EqSheaf e = biproduct({skyscraper(space2, 1, regular_rep(as_group(space2->stabilizer(1)))),
                         skyscraper(space2, 0, GroupRep::trivial(as_group(space2->stabilizer(0)), 1))})
                  .sheaf;

  auto up_homs = sheaf_hom_basis(pullback_step(*tower, 1, d), e);
  auto down_homs = sheaf_hom_basis(d, pushforward_step(*tower, 1, e).sheaf);
  CHECK(up_homs.size() == down_homs.size());
  CHECK(up_homs.size() > 0);
}

TEST_CASE("product of the cyclic coset modules has the expected level dimensions") {
  auto tower = point_space_tower(canonical_group_tower(testutil::cyclic(8), 3));
  auto topg = tower->groups()->top();

  std::vector<EqSheaf> tops;
  for (int n = 0; n <= 3; ++n) {
    Subgroup h = cyclic_subgroup_of_order(topg, 8 >> n);
    tops.push_back(rep_as_sheaf(tower->top_space(), permutation_rep(topg, h)));
  }
  FamilyProduct prod = family_product(*tower, tops);

  std::vector<int> want{4, 7, 11, 15};
  for (int k = 0; k <= 3; ++k) CHECK(prod.family.levels[k].stalk_dim(0) == want[k]);

  // oracle: fixed spaces of the direct sum under the tower kernels
  std::vector<GroupRep> parts;
  for (int n = 0; n <= 3; ++n)
    parts.push_back(permutation_rep(topg, cyclic_subgroup_of_order(topg, 8 >> n)));
  GroupRep big = direct_sum(parts);
  for (int k = 0; k <= 3; ++k) {
    QMatrix fixed = fixed_point_basis(big, tower->groups()->kernel(k));
    CHECK(fixed.cols() == want[k]);
    Pushforward os = pushforward_from_top(*tower, k, prod.family.levels[3]);
    CHECK(os.fixed_basis[0] == fixed);
  }

  // the all-ones diagonal across the four blocks only becomes a section at
  // the deepest level
  QMatrix diag(15, 1);
  for (int idx : {0, 1, 3, 7}) diag.at(idx, 0) = 1;
  for (int k = 0; k <= 3; ++k) {
    Pushforward os = pushforward_from_top(*tower, k, prod.family.levels[3]);
    CHECK(os.fixed_basis[0].solve(diag).has_value() == (k == 3));
  }

  // projections commute with the factor families at every level
  for (size_t i = 0; i < tops.size(); ++i)
    for (int k = 0; k <= 3; ++k) {
      CHECK(prod.proj[i][k].src() == prod.family.levels[k]);
      CHECK(prod.proj[i][k].dst() == prod.factors[i].levels[k]);
    }
}

TEST_CASE("coset-module family over the symmetric subgroup tower") {
  auto tower = canonical_subgroup_tower(testutil::sym(3), 2);
  EqPresheaf p = example_group_ring(tower);

  CHECK(p.level(0).stalk_dims() == std::vector<int>{1});
  CHECK(p.level(1).stalk_dims() == std::vector<int>{2, 1});
  CHECK(p.level(2).stalk_dims() == std::vector<int>{6, 3, 3, 3, 2, 1});

  // restrictions into the top level are coset transfers: entries are 0/1 and
  // each finer coset hits exactly one coarser coset
  for (int x2 = 0; x2 < p.level(2).points(); ++x2) {
    const QMatrix& m = p.res(1, x2);
    for (int i = 0; i < m.rows(); ++i) {
      Rat row_sum = 0;
      for (int j = 0; j < m.cols(); ++j) row_sum += m.at(i, j);
      CHECK(row_sum == Rat(1));
    }
  }

  SheafifyResult sh = sheafify(p);
  CHECK(sh.top.stalk_dims() == std::vector<int>{6, 3, 3, 3, 2, 1});

  // running the sheaf back through its sections changes nothing
  EqPresheaf q = presheaf_of_sheaf(tower, sh.top);
  SheafifyResult sh2 = sheafify(q);
  CHECK(sh2.top == sh.top);
  CHECK(sh2.family.levels == sh.family.levels);
}

TEST_CASE("sections presheaf of a skyscraper sheafifies back to the skyscraper") {
  auto tower = canonical_subgroup_tower(testutil::cyclic(8), 3);
  auto top_space = tower->top_space();
  EqSheaf sky = skyscraper(top_space, 1, regular_rep(as_group(top_space->stabilizer(1))));

  EqPresheaf q = presheaf_of_sheaf(tower, sky);
  SheafifyResult sh = sheafify(q);
  CHECK(sh.top == sky);
  // unit components against the top level are identities: the sections over a
  // top point are its own stalk
  int d = tower->depth();
  for (int x = 0; x < top_space->points(); ++x)
    CHECK(sh.unit.comps[d][x] == QMatrix::identity(q.level(d).stalk_dim(x)));
}

TEST_CASE("fixed-space family of the regular module freezes the expected stalks") {
  auto c8 = canonical_subgroup_tower(testutil::cyclic(8), 3);
  EqPresheaf p8 = example_fix(c8, regular_rep(c8->groups()->top()));
  CHECK(p8.level(3).stalk_dims() == std::vector<int>{8, 4, 2, 1});
  CHECK(p8.level(0).stalk_dims() == std::vector<int>{1});

  auto s3 = canonical_subgroup_tower(testutil::sym(3), 2);
  GroupRep reg = regular_rep(s3->groups()->top());
  EqPresheaf p3 = example_fix(s3, reg);
  // top stalks are the fixed spaces of the point subgroups themselves
  const auto& subs = *s3->top_space()->point_subgroups();
  for (int x = 0; x < s3->top_space()->points(); ++x) {
    CHECK(p3.level(2).stalk_dim(x) == fixed_point_basis(reg, subs[x]).cols());
    CHECK(p3.level(2).stalk_dim(x) == 6 / subs[x].order());
  }

  SheafifyResult sh = sheafify(p3);
  CHECK(sh.top.stalk_dims() == p3.level(2).stalk_dims());
}

TEST_CASE("presheaf construction rejects a broken restriction square") {
  auto tower = canonical_subgroup_tower(testutil::sym(3), 2);
  EqPresheaf p = example_group_ring(tower);

  int d = tower->depth();
  std::vector<std::vector<int>> dims(d + 1);
  std::vector<std::vector<std::vector<QMatrix>>> trans(d + 1);
  std::vector<std::vector<QMatrix>> res(d);
  for (int k = 0; k <= d; ++k) {
    dims[k] = p.level(k).stalk_dims();
    int n = p.level(k).group()->order();
    trans[k].resize(n);
    for (int e = 0; e < n; ++e)
      for (int x = 0; x < p.level(k).points(); ++x) trans[k][e].push_back(p.level(k).trans(e, x));
    if (k < d)
      for (int x2 = 0; x2 < p.level(k + 1).points(); ++x2) res[k].push_back(p.res(k, x2));
  }
  // hit a row that conjugation moves, so the broken square is detectable
  res[1][0].at(1, 0) += 1;
  CHECK_THROWS_AS(EqPresheaf::make(tower, dims, trans, res), Error);
}

TEST_CASE("presheaf maps must respect restrictions") {
  auto tower = canonical_subgroup_tower(testutil::cyclic(4), 2);
  EqPresheaf p = example_group_ring(tower);

  // identity components pass
  std::vector<std::vector<QMatrix>> comps(tower->depth() + 1);
  for (int k = 0; k <= tower->depth(); ++k)
    for (int x = 0; x < p.level(k).points(); ++x)
      comps[k].push_back(QMatrix::identity(p.level(k).stalk_dim(x)));
  CHECK_NOTHROW(make_presheaf_map(p, p, comps));

  // scaling one level only breaks a restriction square
  comps[1][0] = comps[1][0] * Rat(2);
  CHECK_THROWS_AS(make_presheaf_map(p, p, comps), Error);
}

TEST_CASE("sections over a basic open form a module of the open stabilizer") {
  auto tower = point_space_tower(canonical_group_tower(testutil::cyclic(8), 3));
  EqSheaf top = rep_as_sheaf(tower->top_space(), regular_rep(tower->groups()->top()));
  PushforwardFamily fam = pushforward_family(*tower, top);

  GroupRep sec = open_sections_rep(*tower, fam, BasicOpen{1, 0});
  CHECK(sec.group()->order() == 8);
  CHECK(sec.dim() == 2);

  GroupRep bottom = open_sections_rep(*tower, fam, BasicOpen{0, 0});
  CHECK(bottom.dim() == 1);
  for (int e = 0; e < 8; ++e) CHECK(bottom.mat(e) == QMatrix::identity(1));
}
