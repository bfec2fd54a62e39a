#include "weyl.hpp"

#include <algorithm>

namespace psh {

namespace {

const std::vector<Subgroup>& point_subs(const EqSheaf& e) {
  const auto& subs = e.base()->point_subgroups();
  require(subs.has_value(), Errc::invalid_argument, "base carries no point subgroups");
  for (int x = 0; x < e.points(); ++x)
    for (int k : subs->at(x).members())
      require(e.base()->act(k, x) == x, Errc::not_invariant,
              "point subgroup must fix its point");
  return *subs;
}

}  // namespace

std::optional<WeylWitness> weyl_obstruction(const EqSheaf& e) {
  const auto& subs = point_subs(e);
  for (int x = 0; x < e.points(); ++x)
    for (int k : subs[x].members())
      if (!e.trans(k, x).is_identity()) return WeylWitness{x, k};
  return std::nullopt;
}

bool is_weyl(const EqSheaf& e) { return !weyl_obstruction(e).has_value(); }

WeylPart weyl_part(const EqSheaf& e) {
  const auto& subs = point_subs(e);
  int n_pts = e.points();
  std::vector<QMatrix> fb;
  fb.reserve(n_pts);
  for (int x = 0; x < n_pts; ++x) {
    auto gens = subs[x].small_generating_set();
    if (gens.empty()) {
      fb.push_back(QMatrix::identity(e.stalk_dim(x)));
      continue;
    }
    QMatrix rows(0, e.stalk_dim(x));
    for (int k : gens)
      rows = QMatrix::vstack(rows, e.trans(k, x) - QMatrix::identity(e.stalk_dim(x)));
    fb.push_back(rows.kernel_basis());
  }

  std::vector<int> dims(n_pts);
  for (int x = 0; x < n_pts; ++x) dims[x] = fb[x].cols();
  int n = e.group()->order();
  std::vector<std::vector<QMatrix>> trans(n);
  for (int el = 0; el < n; ++el) {
    trans[el].reserve(n_pts);
    for (int x = 0; x < n_pts; ++x) {
      int x2 = e.base()->act(el, x);
      trans[el].push_back(coords_in_basis(fb[x2], e.trans(el, x) * fb[x]));
    }
  }
  EqSheaf part = EqSheaf::make(e.base(), std::move(dims), std::move(trans));
  SheafMap incl = SheafMap::make(part, e, std::move(fb));
  return {std::move(part), std::move(incl)};
}

SheafMap weyl_corestrict(const WeylPart& w, const SheafMap& f) {
  require(f.dst() == w.incl.dst(), Errc::wrong_base, "target does not match the fixed part");
  std::vector<QMatrix> comps;
  comps.reserve(f.src().points());
  for (int x = 0; x < f.src().points(); ++x)
    comps.push_back(coords_in_basis(w.incl.at(x), f.at(x)));
  return SheafMap::make(f.src(), w.sheaf, std::move(comps));
}

EqSheaf weyl_skyscraper(SpacePtr base, int point, const GroupRep& a) {
  const auto& subs = base->point_subgroups();
  require(subs.has_value(), Errc::invalid_argument, "base carries no point subgroups");
  require(point >= 0 && point < base->points(), Errc::index_out_of_range, "skyscraper point");
  const Subgroup& k = subs->at(point);
  Subgroup nk = normalizer(k);
  require(base->stabilizer(point).members() == nk.members(), Errc::wrong_group,
          "point stabilizer must be the subgroup's normalizer");
  WeylResult wr = weyl_group(k);

  if (a.group()->same_group(*wr.weyl)) {
    std::vector<QMatrix> mats;
    mats.reserve(wr.normalizer_group->order());
    for (int i = 0; i < wr.normalizer_group->order(); ++i) mats.push_back(a.mat(wr.proj.apply(i)));
    return skyscraper(std::move(base), point,
                      GroupRep::from_element_matrices(wr.normalizer_group, std::move(mats)));
  }
  require(a.group()->same_group(*wr.normalizer_group), Errc::wrong_group,
          "module must belong to the normalizer or its quotient");
  for (int idx : to_subgroup_indices(nk, k.members()))
    require(a.mat(idx).is_identity(), Errc::not_k_fixed,
            "point subgroup must act as the identity");
  return skyscraper(std::move(base), point, a);
}

WeylProduct weyl_product(const std::vector<EqSheaf>& parts) {
  SheafBiproduct bp = biproduct(parts);
  WeylPart w = weyl_part(bp.sheaf);
  std::vector<SheafMap> proj;
  proj.reserve(parts.size());
  for (const auto& p : bp.proj) proj.push_back(SheafMap::compose(p, w.incl));
  return {std::move(w.sheaf), std::move(proj)};
}

}  // namespace psh
