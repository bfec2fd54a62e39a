#pragma once

#include "qmatrix.hpp"
#include "tower.hpp"

namespace psh {

// Guard against accidentally materializing huge representation tables:
// order * dim^2 must stay below this.
inline constexpr long kRepEntryCap = 4'000'000;

// Rational representation stored as the full element-to-matrix table.
// Multiplicativity is validated on generator-times-element pairs, which
// together with the identity matrix at index 0 forces it everywhere.
class GroupRep {
public:
  GroupRep(GroupPtr g, const std::vector<QMatrix>& gen_mats);
  static GroupRep trivial(GroupPtr g, int dim);
  static GroupRep from_element_matrices(GroupPtr g, std::vector<QMatrix> mats);

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const QMatrix& mat(int elem) const { return mats_[elem]; }

  bool operator==(const GroupRep& o) const {
    return group_->same_group(*o.group_) && mats_ == o.mats_;
  }

private:
  GroupRep() = default;
  GroupPtr group_;
  int dim_ = 0;
  std::vector<QMatrix> mats_;
};

// Left translation on left cosets of h: the permutation module Q[G/H].
GroupRep permutation_rep(GroupPtr g, const Subgroup& h);
GroupRep regular_rep(GroupPtr g);

GroupRep direct_sum(const std::vector<GroupRep>& parts);
GroupRep conjugate_rep(const GroupRep& r, const QMatrix& p);  // p rho p^-1
// Representation of as_group(h) picking out the subgroup's matrices.
GroupRep restrict_rep(const GroupRep& r, const Subgroup& h);

// Canonical basis of the subspace fixed by every element of h, as columns.
QMatrix fixed_point_basis(const GroupRep& r, const Subgroup& h);

// Induction along h <= parent from a representation of as_group(h). Blocks
// are indexed by left cosets; the block at (i, j) for an element e is
// m(rep_i^-1 e rep_j) when that element lies in h and zero otherwise.
GroupRep induced_rep(const Subgroup& h, const GroupRep& m);

// Canonical pieces of a linear map f with the exact identities
// f == image * iso * coim_proj, coim_proj * kernel == 0, coker_proj * image
// == 0, coim_proj * coim_sec == identity. iso is invertible.
struct MapFactorization {
  QMatrix kernel;      // source-side basis of ker f
  QMatrix coim_proj;   // source dim -> rank
  QMatrix coim_sec;    // rank -> source dim, section of coim_proj
  QMatrix image;       // target-side basis of im f
  QMatrix coker_proj;  // target dim -> target dim - rank
  QMatrix iso;         // rank x rank
};
MapFactorization map_factorization(const QMatrix& f);

// Basis of the matrices F with w(e) F == F v(e) for every listed element.
std::vector<QMatrix> intertwiner_basis(const GroupRep& v, const GroupRep& w,
                                       const std::vector<int>& elems);

// Chain of fixed subspaces under the tower kernels N_k, growing with k: the
// basis at k spans the vectors fixed by everything that dies by level k.
// incls[k] expresses basis k inside basis k+1.
struct DiscFiltration {
  std::vector<QMatrix> bases;
  std::vector<QMatrix> incls;
};
DiscFiltration disc_filtration(const GroupRep& top_rep, const GroupTower& t);

}  // namespace psh
