#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace psh {

// One verified law. A failed report always carries at least one witness.
struct CheckReport {
  std::string check;
  bool pass = true;
  Json witnesses = Json::array();
  long long ms = 0;
};
Json report_to_json(const CheckReport& r);

// Deterministic source of small randomized instances: the same seed yields
// the same groups, sheaves, and maps on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  int below(int n);  // uniform-ish in [0, n)
  Rat coeff();       // small rational, zero included
 private:
  std::mt19937_64 eng_;
};

// Direct sum of coset modules of random subgroups, conjugated by a random
// unitriangular change of basis. Dimension stays in [1, max_dim] when any
// subgroup of small enough index exists, and the trivial module fills in
// otherwise.
GroupRep random_module(GroupPtr g, Rng& rng, int max_dim);

// Biproduct of skyscrapers at random points on random stabilizer modules.
EqSheaf random_sheaf(const SpacePtr& s, Rng& rng);

// Random rational combination of a hom-space basis.
SheafMap random_map(const EqSheaf& src, const EqSheaf& dst, Rng& rng);

// Dimension of the space of presheaf maps src -> dst, by solving the
// naturality and restriction-square constraints directly.
int presheaf_hom_dim(const EqPresheaf& src, const EqPresheaf& dst);

const std::vector<std::string>& check_suite_names();

struct CheckOptions {
  SpaceTowerPtr tower;
  uint64_t seed = 1;
  int count = 10;
  std::optional<Json> input;  // cocycle: a sheaf file to audit
};

// Runs one named suite; reports come back sorted by check name.
std::vector<CheckReport> run_check_suite(const std::string& suite, const CheckOptions& opt);

}  // namespace psh
