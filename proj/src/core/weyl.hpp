#pragma once

#include <optional>

#include "eqsheaf.hpp"
#include "rep.hpp"

namespace psh {

// Sheaves whose point subgroups act as the identity on their own stalks, and
// the reflection onto that subcategory. Every routine here needs a base with
// point subgroups, each contained in its point's stabilizer.

// A point together with a member of its subgroup that moves the stalk.
struct WeylWitness {
  int point;
  int elem;
};
std::optional<WeylWitness> weyl_obstruction(const EqSheaf& e);
bool is_weyl(const EqSheaf& e);

// Stalkwise fixed part under the point subgroups, with its inclusion. The
// inclusion is the counit of the reflection; on an already-fixed sheaf it is
// the identity.
struct WeylPart {
  EqSheaf sheaf;
  SheafMap incl;
};
WeylPart weyl_part(const EqSheaf& e);

// Rewrites f through the fixed part of its target. Well-defined whenever the
// source is fixed, because naturality then forces the image into the fixed
// subspaces.
SheafMap weyl_corestrict(const WeylPart& w, const SheafMap& f);

// Skyscraper with prescribed fixed action. The module may belong to the
// quotient of the point's normalizer by the point subgroup, which gets
// inflated, or to the normalizer itself, in which case the subgroup must
// already act as the identity.
EqSheaf weyl_skyscraper(SpacePtr base, int point, const GroupRep& a);

// Biproduct followed by the fixed part; on fixed factors this is the product
// in the subcategory and the projections restrict accordingly.
struct WeylProduct {
  EqSheaf sheaf;
  std::vector<SheafMap> proj;
};
WeylProduct weyl_product(const std::vector<EqSheaf>& parts);

}  // namespace psh
