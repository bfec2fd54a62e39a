#pragma once

#include "rep.hpp"
#include "tower.hpp"

namespace psh {

// Sheaf on a finite G-space: one rational stalk per point and a translation
// matrix per (element, point) moving stalks along the action. The cocycle
// trans(g'g, x) == trans(g', g x) * trans(g, x) is validated at construction,
// on generator-element pairs, which forces it for all pairs.
class EqSheaf {
public:
  static EqSheaf make(SpacePtr base, std::vector<int> stalk_dims,
                      std::vector<std::vector<QMatrix>> trans);
  // gen_trans[i][x] acts for generator i; other elements follow from the
  // group's word structure.
  static EqSheaf from_generators(SpacePtr base, std::vector<int> stalk_dims,
                                 const std::vector<std::vector<QMatrix>>& gen_trans);
  static EqSheaf zero(SpacePtr base);

  const SpacePtr& base() const { return base_; }
  const GroupPtr& group() const { return base_->group(); }
  int points() const { return base_->points(); }
  int stalk_dim(int x) const { return stalk_dims_[x]; }
  const std::vector<int>& stalk_dims() const { return stalk_dims_; }
  int total_dim() const;
  // stalk_x -> stalk_{elem . x}
  const QMatrix& trans(int elem, int x) const { return trans_[elem][x]; }

  // Action of the stabilizer of x on the stalk at x.
  GroupRep stalk_rep(int x) const;

  bool operator==(const EqSheaf& o) const = default;

private:
  EqSheaf() = default;
  SpacePtr base_;
  std::vector<int> stalk_dims_;
  std::vector<std::vector<QMatrix>> trans_;  // [elem][point]
};

// Map of sheaves over one base: a matrix per point commuting with the
// translations. Naturality is validated on generators, which suffices.
class SheafMap {
public:
  static SheafMap make(EqSheaf src, EqSheaf dst, std::vector<QMatrix> comps);
  static SheafMap identity(const EqSheaf& e);
  static SheafMap zero(EqSheaf src, EqSheaf dst);

  const EqSheaf& src() const { return *src_; }
  const EqSheaf& dst() const { return *dst_; }
  const QMatrix& at(int x) const { return comps_[x]; }
  const std::vector<QMatrix>& comps() const { return comps_; }

  bool is_zero() const;
  bool is_iso() const;

  SheafMap operator+(const SheafMap& o) const;
  SheafMap operator*(const Rat& s) const;
  static SheafMap compose(const SheafMap& outer, const SheafMap& inner);

  bool operator==(const SheafMap& o) const;

private:
  SheafMap() = default;
  std::shared_ptr<const EqSheaf> src_, dst_;
  std::vector<QMatrix> comps_;
};

// Biproduct with its structure maps: proj[i] o inj[j] is the identity for
// i == j and zero otherwise, and the injections jointly cover the sum.
struct SheafBiproduct {
  EqSheaf sheaf;
  std::vector<SheafMap> inj;
  std::vector<SheafMap> proj;
};
SheafBiproduct biproduct(const std::vector<EqSheaf>& parts);

// Stalkwise canonical kernel, image, cokernel, and coimage of a map, with
// the invertible comparison from coimage to image. All six maps are genuine
// sheaf maps; f == im_incl o iso o coim_proj exactly.
struct SheafFactorization {
  EqSheaf kernel;
  SheafMap ker_incl;  // kernel -> source
  EqSheaf coim;
  SheafMap coim_proj;  // source -> coim
  EqSheaf image;
  SheafMap im_incl;  // image -> target
  EqSheaf coker;
  SheafMap coker_proj;  // target -> coker
  SheafMap iso;         // coim -> image
};
SheafFactorization sheaf_factorization(const SheafMap& f);

// Skyscraper at the orbit of `point` with value the stabilizer module m,
// spread over the orbit by least transporters. Stalks off the orbit vanish.
EqSheaf skyscraper(SpacePtr base, int point, const GroupRep& m);

// Unit of the stalk-skyscraper adjunction: the map from e into the
// skyscraper of its own stalk at `point`.
SheafMap sky_unit(const EqSheaf& e, int point);

// Basis of the space of sheaf maps from e to f, canonical order.
std::vector<SheafMap> sheaf_hom_basis(const EqSheaf& e, const EqSheaf& f);

// Global sections as a representation: the direct sum of all stalks with the
// permute-and-translate action.
GroupRep sections_rep(const EqSheaf& e);

// One skyscraper per orbit on the stalk of its least point, with the
// canonical map of e into the sum. The map is an isomorphism on every stalk.
struct SkyEmbedding {
  SheafBiproduct target;
  SheafMap embed;
};
SkyEmbedding embed_into_skyscrapers(const EqSheaf& e);

}  // namespace psh
