// Exit gate: one line per criterion, nonzero exit when any of them fails.
// Links the core library directly so every check runs on exact rationals.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "core/checks.hpp"
#include "core/diagram.hpp"
#include "core/groupspec.hpp"
#include "core/weyl.hpp"

using namespace psh;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (detail.empty()) {
    std::printf("PASS: %2d %s\n", n, label.c_str());
  } else {
    std::printf("FAIL: %2d %s (%s)\n", n, label.c_str(), detail.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

// Runs one randomized check suite and reports the first failing check.
std::string suite_clean(const std::string& suite, const SpaceTowerPtr& t, uint64_t seed,
                        int count) {
  CheckOptions opt;
  opt.tower = t;
  opt.seed = seed;
  opt.count = count;
  for (const CheckReport& r : run_check_suite(suite, opt))
    if (!r.pass) return r.check + " failed: " + r.witnesses.dump();
  return "";
}

std::string suite_clean_both(const std::string& suite, const SpaceTowerPtr& a,
                             const SpaceTowerPtr& b, uint64_t seed, int count) {
  std::string r = suite_clean(suite, a, seed, count);
  if (!r.empty()) return r;
  return suite_clean(suite, b, seed + 1, count);
}

EqSheaf rep_as_sheaf(SpacePtr pt_space, const GroupRep& r) {
  int n = pt_space->group()->order();
  std::vector<std::vector<QMatrix>> trans(n);
  for (int e = 0; e < n; ++e) trans[e] = {r.mat(e)};
  return EqSheaf::make(std::move(pt_space), {r.dim()}, std::move(trans));
}

// Unique in a cyclic group, so picking by order is total.
Subgroup cyclic_subgroup_of_order(const GroupPtr& g, int order) {
  for (const auto& s : all_subgroups(g))
    if (s.order() == order) return s;
  throw Error(Errc::invalid_argument, "no subgroup of requested order");
}

std::string check_subgroup_counts() {
  for (int p : {2, 3}) {
    int order = 1;
    for (int n = 0; n <= 6; ++n) {
      GroupPtr g = group_from_spec("cyclic:" + std::to_string(order));
      size_t got = all_subgroups(g).size();
      if (got != size_t(n + 1))
        return "cyclic:" + std::to_string(order) + " gave " + std::to_string(got) +
               " subgroups, expected " + std::to_string(n + 1);
      order *= p;
    }
  }
  // coprime cyclic products: the subgroup lattice is the divisor lattice
  struct Pair {
    int a, b, want;
  };
  for (const Pair& c : {Pair{2, 3, 4}, Pair{4, 9, 9}, Pair{8, 9, 12}, Pair{16, 27, 20}}) {
    GroupPtr g =
        group_from_spec("product:" + std::to_string(c.a) + "," + std::to_string(c.b));
    size_t got = all_subgroups(g).size();
    if (got != size_t(c.want))
      return "product:" + std::to_string(c.a) + "," + std::to_string(c.b) + " gave " +
             std::to_string(got) + " subgroups, expected " + std::to_string(c.want);
  }
  return "";
}

std::string check_family_roundtrip(const std::vector<SpaceTowerPtr>& towers) {
  for (const auto& t : towers) {
    Rng rng(303);
    for (int i = 0; i < 10; ++i) {
      EqSheaf e = random_sheaf(t->top_space(), rng);
      PushforwardFamily fam = pushforward_family(*t, e);
      for (int k = 0; k < t->depth(); ++k)
        if (!(fam.steps[k].sheaf == fam.levels[k]))
          return "level " + std::to_string(k) + " is not the pushforward of the next level";
      FamilyComparison cmp = family_vs_oneshot(*t, fam);
      for (int k = 0; k <= t->depth(); ++k)
        if (!cmp.compare[k].is_iso())
          return "one-shot comparison fails to invert at level " + std::to_string(k);
      ColimitResult col = colim_sheaf(*t, fam);
      if (!(col.top == e)) return "reassembled top sheaf differs from the input";
    }
  }
  return "";
}

std::string check_product_diagonal() {
  auto tower = point_space_tower(canonical_group_tower(group_from_spec("cyclic:8"), 3));
  GroupPtr topg = tower->groups()->top();

  std::vector<EqSheaf> tops;
  for (int n = 0; n <= 3; ++n)
    tops.push_back(
        rep_as_sheaf(tower->top_space(), permutation_rep(topg, cyclic_subgroup_of_order(topg, 8 >> n))));
  FamilyProduct prod = family_product(*tower, tops);

  const int want[] = {4, 7, 11, 15};
  for (int k = 0; k <= 3; ++k)
    if (prod.family.levels[k].stalk_dim(0) != want[k])
      return "product section dimension at level " + std::to_string(k) + " is " +
             std::to_string(prod.family.levels[k].stalk_dim(0)) + ", expected " +
             std::to_string(want[k]);

  // the all-ones vector across the four blocks must enter the section space
  // exactly at the deepest level and nowhere earlier
  QMatrix diag(15, 1);
  for (int idx : {0, 1, 3, 7}) diag.at(idx, 0) = 1;
  for (int k = 0; k <= 3; ++k) {
    Pushforward os = pushforward_from_top(*tower, k, prod.family.levels[3]);
    bool solvable = os.fixed_basis[0].solve(diag).has_value();
    if (solvable != (k == 3))
      return "diagonal " + std::string(solvable ? "already" : "never") +
             " a section at level " + std::to_string(k);
  }
  return "";
}

std::string check_fixed_module_stalks(const std::vector<SpaceTowerPtr>& towers) {
  for (const auto& t : towers) {
    GroupPtr topg = t->groups()->top();
    GroupRep v = regular_rep(topg);
    EqPresheaf p = example_fix(t, v);
    EqSheaf e = p.top_as_sheaf();
    const auto& subs = *t->top_space()->point_subgroups();

    for (int x = 0; x < e.points(); ++x) {
      const Subgroup& k = subs[x];
      int index = topg->order() / k.order();
      QMatrix fb = fixed_point_basis(v, k);
      if (fb.cols() != index)
        return "fixed space of the regular module at point " + std::to_string(x) +
               " has dimension " + std::to_string(fb.cols()) + ", expected the index " +
               std::to_string(index);
      if (e.stalk_dim(x) != index)
        return "stalk at point " + std::to_string(x) + " has dimension " +
               std::to_string(e.stalk_dim(x)) + ", expected " + std::to_string(index);
      for (int m : k.members())
        if (!(v.mat(m) * fb == fb)) return "claimed fixed basis moves under the subgroup";
      // the basis matrix is the isomorphism: it intertwines the stalk action
      // with the ambient action on the fixed space
      Subgroup stab = t->top_space()->stabilizer(x);
      for (int m : stab.members()) {
        QMatrix moved = v.mat(m) * fb;
        auto coords = fb.solve(moved);
        if (!coords || !(fb * *coords == moved))
          return "stabilizer action leaves the fixed space at point " + std::to_string(x);
        if (!(*coords == e.trans(m, x)))
          return "stalk action disagrees with the ambient action at point " + std::to_string(x);
      }
    }

    PushforwardFamily fam = pushforward_family(*t, e);
    ColimitResult col = colim_sheaf(*t, fam);
    if (!(col.top == e)) return "family colimit differs from the fixed-module sheaf";
    for (const ThreadGerm& g : col.threads)
      if (g.dims.back() != e.stalk_dim(g.thread.coords.back()))
        return "germ dimension along a thread disagrees with the top stalk";
  }
  return "";
}

}  // namespace

int main() {
  SpaceTowerPtr c8 = canonical_subgroup_tower(group_from_spec("cyclic:8"), 3);
  SpaceTowerPtr s3 = canonical_subgroup_tower(group_from_spec("sym:3"), 2);
  std::vector<SpaceTowerPtr> towers{c8, s3};

  criterion(1, "subgroup counts for cyclic prime powers and coprime products",
            [] { return check_subgroup_counts(); });
  criterion(2, "iterated-vs-direct pushforward is a stalkwise isomorphism, 60 random sheaves",
            [&] { return suite_clean_both("counit", c8, s3, 1001, 30); });
  criterion(3, "pushforward families reconstruct their top sheaf levelwise",
            [&] { return check_family_roundtrip(towers); });
  criterion(4, "sheafification is idempotent and reflects hom spaces exactly",
            [&] { return suite_clean_both("sheafify-idem", c8, s3, 4001, 6); });
  criterion(5, "product sections match the fixed-point oracle; diagonal enters last",
            [&] {
              std::string r = suite_clean_both("disc-product", c8, s3, 5001, 6);
              if (!r.empty()) return r;
              return check_product_diagonal();
            });
  criterion(6, "biproduct, kernel, cokernel, and factorization laws, 120 random maps",
            [&] { return suite_clean_both("abelian", c8, s3, 6001, 60); });
  criterion(7, "triangle identities and hom dimensions for all three adjunctions",
            [&] { return suite_clean_both("adjunctions", c8, s3, 7001, 12); });
  criterion(8, "fixed-part unit and counit, skyscraper and pullback stability",
            [&] { return suite_clean_both("weyl", c8, s3, 8001, 10); });
  criterion(9, "skyscraper embedding is a stalkwise isomorphism with zero cokernel",
            [&] { return suite_clean_both("godement", c8, s3, 9001, 12); });
  criterion(10, "fixed-vector module stalks realize the subgroup fixed spaces",
            [&] { return check_fixed_module_stalks(towers); });

  std::printf("acceptance: %d/10 passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
