#include <doctest.h>

#include <set>

#include "core/error.hpp"
#include "core/group.hpp"
#include "core/groupspec.hpp"
#include "test_util.hpp"

using namespace psh;
using testutil::cyclic;
using testutil::sym;

TEST_CASE("closure of a single 4-cycle has order 4") {
  auto g = FiniteGroup::close_generators(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(g->order() == 4);
  CHECK(g->element(0).is_identity());
}

TEST_CASE("closure of a transposition and a 3-cycle has order 6") {
  auto g = FiniteGroup::close_generators(
      3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(g->order() == 6);
}

TEST_CASE("elements are sorted and identity sits at index 0") {
  auto g = sym(4);
  REQUIRE(g->order() == 24);
  CHECK(g->element(0).is_identity());
  for (int i = 0; i + 1 < g->order(); ++i) CHECK(g->element(i) < g->element(i + 1));
}

TEST_CASE("mul and inverse agree with raw permutation arithmetic") {
  auto g = sym(4);
  for (int a = 0; a < g->order(); ++a) {
    CHECK(g->mul(a, g->inv(a)) == 0);
    for (int b = 0; b < g->order(); ++b) {
      CHECK(g->element(g->mul(a, b)) == g->element(a).compose(g->element(b)));
    }
  }
}

TEST_CASE("every element factors as recorded generator times earlier element") {
  auto g = sym(4);
  for (int i = 1; i < g->order(); ++i) {
    int gen = g->word_gen(i);
    int rest = g->word_rest(i);
    CHECK(g->mul(gen, rest) == i);
  }
}

TEST_CASE("closure respects the element cap") {
  CHECK_THROWS_AS(
      FiniteGroup::close_generators(
          5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})}, 100),
      Error);
}

TEST_CASE("subgroup constructor rejects non-closed subsets") {
  auto g = sym(3);
  int t = g->index_of(Perm::from_cycles(3, {{0, 1}}));
  int c = g->index_of(Perm::from_cycles(3, {{0, 1, 2}}));
  CHECK_THROWS_AS(Subgroup(g, {0, t, c}), Error);
  CHECK_THROWS_AS(Subgroup(g, {t}), Error);
  CHECK_NOTHROW(Subgroup(g, {0, t}));
}

TEST_CASE("subgroup enumeration matches the independent oracle") {
  struct Case {
    GroupPtr g;
    int expect;
  };
  auto d4 = group_from_spec("dihedral:4");
  auto klein = FiniteGroup::close_generators(
      4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  auto a4 = FiniteGroup::close_generators(
      4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});
  std::vector<Case> cases{
      {cyclic(4), 3},  {sym(3), 6},  {cyclic(12), 6}, {klein, 5},
      {d4, 10},        {a4, 10},     {sym(4), 30},
  };
  for (const auto& c : cases) {
    auto subs = all_subgroups(c.g);
    CHECK(static_cast<int>(subs.size()) == c.expect);
    auto oracle = testutil::oracle_subgroup_sets(c.g);
    REQUIRE(subs.size() == oracle.size());
    std::set<std::vector<std::vector<int>>> got;
    for (const auto& h : subs) {
      std::vector<std::vector<int>> imgs;
      for (int m : h.members()) imgs.push_back(c.g->element(m).images());
      got.insert(imgs);
    }
    CHECK(got == oracle);
    for (size_t i = 0; i + 1 < subs.size(); ++i) CHECK(subs[i] < subs[i + 1]);
  }
}

TEST_CASE("trivial group has exactly one subgroup") {
  auto subs = all_subgroups(FiniteGroup::trivial(1));
  CHECK(subs.size() == 1);
}

TEST_CASE("subgroup closure of a transposition inside S3") {
  auto g = sym(3);
  int t = g->index_of(Perm::from_cycles(3, {{0, 1}}));
  auto h = subgroup_closure(g, {t});
  CHECK(h.order() == 2);
  CHECK(h.contains(0));
  CHECK(h.contains(t));
}

TEST_CASE("normalizer of a transposition subgroup in S3 is the subgroup itself") {
  auto g = sym(3);
  auto h = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1}}))});
  auto n = normalizer(h);
  CHECK(n == h);
  CHECK_FALSE(is_normal(h));
}

TEST_CASE("core of a transposition subgroup in S3 is trivial") {
  auto g = sym(3);
  auto h = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1}}))});
  CHECK(core_subgroup(h).is_trivial());
}

TEST_CASE("normalizer against brute force over several subgroups of S4") {
  auto g = sym(4);
  auto subs = all_subgroups(g);
  for (size_t si = 0; si < subs.size(); si += 3) {
    const auto& h = subs[si];
    std::vector<int> brute;
    for (int x = 0; x < g->order(); ++x) {
      if (conjugate_subgroup(h, x) == h) brute.push_back(x);
    }
    CHECK(normalizer(h).members() == brute);
  }
}

TEST_CASE("quotient of S3 by A3 has order 2") {
  auto g = sym(3);
  auto a3 = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1, 2}}))});
  REQUIRE(is_normal(a3));
  auto q = quotient(g, a3);
  CHECK(q.group->order() == 2);
  CHECK(q.proj.is_surjective());
  CHECK(q.proj.kernel().members() == a3.members());
}

TEST_CASE("quotient by a non-normal subgroup is rejected") {
  auto g = sym(3);
  auto h = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1}}))});
  CHECK_THROWS_AS(quotient(g, h), Error);
}

TEST_CASE("weyl group of A3 in S3 has order 2") {
  auto g = sym(3);
  auto a3 = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1, 2}}))});
  auto w = weyl_group(a3);
  CHECK(w.weyl->order() == 2);
  CHECK(w.normalizer_group->order() == 6);
  CHECK(w.proj.is_surjective());
}

TEST_CASE("weyl group of a transposition subgroup in S3 is trivial") {
  auto g = sym(3);
  auto h = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1}}))});
  CHECK(weyl_group(h).weyl->order() == 1);
}

TEST_CASE("as_group preserves positional correspondence with members") {
  auto g = sym(4);
  auto h = subgroup_closure(g, {g->index_of(Perm::from_cycles(4, {{0, 1, 2}}))});
  auto hg = as_group(h);
  REQUIRE(hg->order() == h.order());
  for (int i = 0; i < hg->order(); ++i) CHECK(hg->element(i) == g->element(h.members()[i]));
}

TEST_CASE("left cosets use least representatives and partition the group") {
  auto g = sym(3);
  auto h = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1}}))});
  auto ct = left_cosets(g, h);
  REQUIRE(ct.reps.size() == 3);
  CHECK(ct.reps[0] == 0);
  std::vector<int> seen(g->order(), 0);
  for (int x = 0; x < g->order(); ++x) {
    int c = ct.coset_of[x];
    // x lies in reps[c] H and reps[c] is the least member of that coset
    CHECK(ct.reps[c] <= x);
    bool found = false;
    for (int m : h.members())
      if (g->mul(ct.reps[c], m) == x) found = true;
    CHECK(found);
    seen[x] = 1;
  }
  for (int x = 0; x < g->order(); ++x) CHECK(seen[x] == 1);
}

TEST_CASE("hom construction from generator images extends and validates") {
  auto g = cyclic(4);
  auto z2 = cyclic(2);
  int r2 = z2->index_of(Perm::from_cycles(2, {{0, 1}}));
  auto f = GroupHom::from_generator_images(g, z2, {r2});
  CHECK(f.is_surjective());
  CHECK(f.kernel().order() == 2);
  CHECK(f.apply(0) == 0);

  // a 4-cycle cannot land on an order-2 element times nontrivial constraints:
  // sending the generator of Z/4 to itself twisted is fine, but sending the
  // transposition generator of S3 to a 3-cycle is not a homomorphism
  auto s3 = sym(3);
  int t = s3->index_of(Perm::from_cycles(3, {{0, 1}}));
  int c = s3->index_of(Perm::from_cycles(3, {{0, 1, 2}}));
  CHECK_THROWS_AS(GroupHom::from_generator_images(s3, s3, {c, c}), Error);
}

TEST_CASE("hom composition and identity behave") {
  auto g = sym(3);
  auto a3 = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1, 2}}))});
  auto q = quotient(g, a3);
  CHECK(GroupHom::compose(q.proj, GroupHom::identity(g)).images() == q.proj.images());
  CHECK(GroupHom::compose(GroupHom::identity(q.group), q.proj).images() == q.proj.images());
}

TEST_CASE("preimage and image subgroups are inverse-compatible") {
  auto g = sym(3);
  auto a3 = subgroup_closure(g, {g->index_of(Perm::from_cycles(3, {{0, 1, 2}}))});
  auto q = quotient(g, a3);
  auto full_up = preimage(q.proj, full_subgroup(q.group));
  CHECK(full_up.order() == 6);
  auto down = image_subgroup(q.proj, a3);
  CHECK(down.is_trivial());
  auto triv_up = preimage(q.proj, trivial_subgroup(q.group));
  CHECK(triv_up.members() == a3.members());
}

TEST_CASE("intersect matches set intersection") {
  auto g = sym(4);
  auto h1 = subgroup_closure(g, {g->index_of(Perm::from_cycles(4, {{0, 1, 2, 3}}))});
  auto h2 = subgroup_closure(g, {g->index_of(Perm::from_cycles(4, {{0, 2}})),
                                 g->index_of(Perm::from_cycles(4, {{1, 3}}))});
  auto both = intersect(h1, h2);
  for (int m : both.members()) {
    CHECK(h1.contains(m));
    CHECK(h2.contains(m));
  }
  for (int m : h1.members())
    if (h2.contains(m)) CHECK(both.contains(m));
}

TEST_CASE("small generating set regenerates the subgroup") {
  auto g = sym(4);
  for (const auto& h : all_subgroups(g)) {
    auto gens = h.small_generating_set();
    CHECK(subgroup_closure(g, gens) == h);
    CHECK(gens.size() <= 2u + h.order() / 4u);
  }
}

TEST_CASE("group specs produce expected orders") {
  CHECK(group_from_spec("cyclic:1")->order() == 1);
  CHECK(group_from_spec("cyclic:8")->order() == 8);
  CHECK(group_from_spec("sym:3")->order() == 6);
  CHECK(group_from_spec("sym:4")->order() == 24);
  CHECK(group_from_spec("dihedral:4")->order() == 8);
  CHECK(group_from_spec("product:2,3")->order() == 6);
  CHECK_THROWS_AS(group_from_spec("moonshine:1"), Error);
  CHECK_THROWS_AS(group_from_spec("cyclic:0"), Error);
  CHECK_THROWS_AS(group_from_spec("dihedral:2"), Error);
}

TEST_CASE("canonical normal chain of S3 descends through A3") {
  auto g = sym(3);
  auto chain = canonical_normal_chain(g);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0].order() == 6);
  CHECK(chain[1].order() == 3);
  CHECK(chain[2].order() == 1);
}

TEST_CASE("canonical normal chain of Z/8 halves at each step") {
  auto chain = canonical_normal_chain(cyclic(8));
  REQUIRE(chain.size() == 4);
  for (size_t i = 0; i < chain.size(); ++i)
    CHECK(chain[i].order() == 8 >> i);
}
