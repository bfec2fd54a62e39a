#include <doctest.h>

#include "core/checks.hpp"
#include "core/error.hpp"
#include "test_util.hpp"

using namespace psh;
using testutil::cyclic;
using testutil::sym;

TEST_CASE("random instances are deterministic under the seed") {
  auto t = canonical_subgroup_tower(sym(3), 2);
  Rng a(42), b(42), c(7);
  EqSheaf ea = random_sheaf(t->top_space(), a);
  EqSheaf eb = random_sheaf(t->top_space(), b);
  CHECK(ea == eb);
  EqSheaf ec = random_sheaf(t->top_space(), c);
  CHECK(sheaf_to_json(ea).dump() != sheaf_to_json(ec).dump());

  // maps built from the hom basis revalidate cleanly
  EqSheaf fa = random_sheaf(t->top_space(), a);
  SheafMap m = random_map(ea, fa, a);
  SheafMap again = SheafMap::make(ea, fa, m.comps());
  CHECK(again == m);
}

TEST_CASE("random modules respect the dimension budget") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    GroupRep r = random_module(sym(3), rng, 4);
    CHECK(r.dim() >= 1);
    CHECK(r.dim() <= 4);
  }
}

TEST_CASE("presheaf hom dimensions match the orbit-gluing count") {
  auto t = canonical_subgroup_tower(cyclic(4), 2);
  GroupPtr g = t->groups()->top();

  // scalars on a constant family glue along the step graph to one component
  EqPresheaf c1 = example_constant(t, GroupRep::trivial(g, 1));
  CHECK(presheaf_hom_dim(c1, c1) == 1);

  EqPresheaf c2 = example_constant(t, GroupRep::trivial(g, 2));
  CHECK(presheaf_hom_dim(c2, c2) == 4);

  auto ts = canonical_subgroup_tower(sym(3), 2);
  EqPresheaf s1 = example_constant(ts, GroupRep::trivial(ts->groups()->top(), 1));
  CHECK(presheaf_hom_dim(s1, s1) == 1);
}

TEST_CASE("hom dimension into a sections family counts maps out of the top") {
  auto t = canonical_subgroup_tower(sym(3), 2);
  EqPresheaf p = example_group_ring(t);
  Rng rng(11);
  for (int i = 0; i < 3; ++i) {
    EqSheaf f = random_sheaf(t->top_space(), rng);
    int lhs = presheaf_hom_dim(p, presheaf_of_sheaf(t, f));
    int rhs = static_cast<int>(sheaf_hom_basis(p.top_as_sheaf(), f).size());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("every suite passes on the small reference towers") {
  CheckOptions opt;
  opt.tower = canonical_subgroup_tower(cyclic(4), 2);
  opt.seed = 5;
  opt.count = 3;
  for (const std::string& suite : check_suite_names()) {
    INFO(suite);
    auto reports = run_check_suite(suite, opt);
    REQUIRE(!reports.empty());
    for (size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].check <= reports[i].check);
    for (const auto& r : reports) {
      INFO(r.check);
      CHECK(r.pass);
      CHECK(r.witnesses.empty());
      Json j = report_to_json(r);
      CHECK(j["check"] == r.check);
      CHECK(j["pass"] == true);
    }
  }

  CheckOptions opt2;
  opt2.tower = canonical_subgroup_tower(sym(3), 2);
  opt2.seed = 9;
  opt2.count = 2;
  for (const std::string& suite : check_suite_names()) {
    INFO(suite);
    for (const auto& r : run_check_suite(suite, opt2)) {
      INFO(r.check);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("the cocycle suite convicts a damaged file with a located witness") {
  CheckOptions opt;
  opt.tower = canonical_subgroup_tower(sym(3), 2);
  Json file = sheaf_to_json(example_group_ring(opt.tower).top_as_sheaf());
  file["translations"][0][0]["data"][0][0] = "5";
  opt.input = file;

  auto reports = run_check_suite("cocycle", opt);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].check == "cocycle/identity");
  CHECK_FALSE(reports[0].pass);
  REQUIRE(reports[0].witnesses.size() == 1);
  const Json& w = reports[0].witnesses[0];
  CHECK(w.contains("gen"));
  CHECK(w.contains("elem"));
  CHECK(w.contains("point"));
  CHECK(reports[1].check == "cocycle/load");
  CHECK(reports[1].pass);

  // unreadable input turns into a failed load report, not a crash
  opt.input = Json{{"kind", "sheaf"}};
  auto broken = run_check_suite("cocycle", opt);
  REQUIRE(broken.size() == 1);
  CHECK(broken[0].check == "cocycle/load");
  CHECK_FALSE(broken[0].pass);
  CHECK(!broken[0].witnesses.empty());

  CHECK_THROWS_AS(run_check_suite("no-such-suite", opt), Error);
}
