#include "diagram.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace psh {

namespace {

// pmap must intertwine the upstairs action with the downstairs action through
// phi. Generators suffice: both sides extend multiplicatively.
void check_cover(const FiniteGSpace& hi, const GroupHom& phi, const std::vector<int>& pmap,
                 const FiniteGSpace& lo) {
  require(phi.source()->same_group(*hi.group()), Errc::wrong_group, "quotient source group");
  require(phi.target()->same_group(*lo.group()), Errc::wrong_group, "quotient target group");
  require(static_cast<int>(pmap.size()) == hi.points(), Errc::wrong_size, "point map size");
  for (int v : pmap)
    require(v >= 0 && v < lo.points(), Errc::index_out_of_range, "point map image");
  for (int gi : hi.group()->generator_indices())
    for (int x = 0; x < hi.points(); ++x)
      require(pmap[hi.act(gi, x)] == lo.act(phi.apply(gi), pmap[x]), Errc::not_equivariant,
              "point map does not cover the quotient");
}

std::vector<int> step_point_map(const SpaceTower& t, int k) {
  std::vector<int> pmap(t.space(k + 1)->points());
  for (int x = 0; x < static_cast<int>(pmap.size()); ++x) pmap[x] = t.step(k, x);
  return pmap;
}

int fiber_position(const std::vector<int>& fiber, int x) {
  auto it = std::lower_bound(fiber.begin(), fiber.end(), x);
  require(it != fiber.end() && *it == x, Errc::index_out_of_range, "point not in fiber");
  return static_cast<int>(it - fiber.begin());
}

}  // namespace

EqSheaf pullback_along(SpacePtr hi, const GroupHom& phi, const std::vector<int>& pmap,
                       const EqSheaf& low) {
  check_cover(*hi, phi, pmap, *low.base());
  int n_pts = hi->points();
  std::vector<int> dims(n_pts);
  for (int x = 0; x < n_pts; ++x) dims[x] = low.stalk_dim(pmap[x]);
  int n = hi->group()->order();
  std::vector<std::vector<QMatrix>> trans(n);
  for (int e = 0; e < n; ++e) {
    trans[e].reserve(n_pts);
    for (int x = 0; x < n_pts; ++x) trans[e].push_back(low.trans(phi.apply(e), pmap[x]));
  }
  return EqSheaf::make(std::move(hi), std::move(dims), std::move(trans));
}

Pushforward pushforward_along(SpacePtr lo, const GroupHom& phi, const std::vector<int>& pmap,
                              const EqSheaf& up) {
  const FiniteGSpace& hi = *up.base();
  check_cover(hi, phi, pmap, *lo);
  require(phi.is_surjective(), Errc::not_surjective, "quotient must be onto");

  int lo_pts = lo->points();
  std::vector<std::vector<int>> fiber(lo_pts);
  for (int x = 0; x < hi.points(); ++x) fiber[pmap[x]].push_back(x);
  std::vector<std::vector<int>> offsets(lo_pts);
  std::vector<int> total(lo_pts, 0);
  for (int y = 0; y < lo_pts; ++y) {
    int off = 0;
    for (int x : fiber[y]) {
      offsets[y].push_back(off);
      off += up.stalk_dim(x);
    }
    total[y] = off;
  }

  // One upstairs element, acting from the fiber over y to the fiber over the
  // image of y: a block per fiber point, each block a stalk translation.
  auto fiber_block = [&](int elem, int y) {
    int y2 = lo->act(phi.apply(elem), y);
    QMatrix b(total[y2], total[y]);
    for (size_t j = 0; j < fiber[y].size(); ++j) {
      int x = fiber[y][j];
      int x2 = hi.act(elem, x);
      int i = fiber_position(fiber[y2], x2);
      const QMatrix& m = up.trans(elem, x);
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) b.at(offsets[y2][i] + r, offsets[y][j] + c) = m.at(r, c);
    }
    return b;
  };

  Subgroup ker = phi.kernel();
  auto kgens = ker.small_generating_set();
  std::vector<QMatrix> fixed;
  fixed.reserve(lo_pts);
  for (int y = 0; y < lo_pts; ++y) {
    if (kgens.empty()) {
      fixed.push_back(QMatrix::identity(total[y]));
      continue;
    }
    QMatrix rows(0, total[y]);
    for (int ng : kgens)
      rows = QMatrix::vstack(rows, fiber_block(ng, y) - QMatrix::identity(total[y]));
    fixed.push_back(rows.kernel_basis());
  }

  // Least lift of each downstairs element; on the fixed spaces the choice
  // does not matter, and the least one keeps everything reproducible.
  std::vector<int> lift(lo->group()->order(), -1);
  for (int e2 = 0; e2 < phi.source()->order(); ++e2) {
    int e = phi.apply(e2);
    if (lift[e] < 0) lift[e] = e2;
  }

  std::vector<int> dims(lo_pts);
  for (int y = 0; y < lo_pts; ++y) dims[y] = fixed[y].cols();
  int n_lo = lo->group()->order();
  std::vector<std::vector<QMatrix>> trans(n_lo);
  for (int e = 0; e < n_lo; ++e) {
    trans[e].reserve(lo_pts);
    for (int y = 0; y < lo_pts; ++y) {
      int y2 = lo->act(e, y);
      trans[e].push_back(coords_in_basis(fixed[y2], fiber_block(lift[e], y) * fixed[y]));
    }
  }
  EqSheaf sheaf = EqSheaf::make(lo, std::move(dims), std::move(trans));
  return {std::move(sheaf), std::move(fixed), std::move(fiber), std::move(offsets)};
}

EqSheaf pullback_step(const SpaceTower& t, int k, const EqSheaf& low) {
  require(k >= 0 && k < t.depth(), Errc::index_out_of_range, "step index");
  require(low.base() == t.space(k), Errc::wrong_base, "sheaf must live on the lower level");
  return pullback_along(t.space(k + 1), t.groups()->step(k), step_point_map(t, k), low);
}

Pushforward pushforward_step(const SpaceTower& t, int k, const EqSheaf& up) {
  require(k >= 0 && k < t.depth(), Errc::index_out_of_range, "step index");
  require(up.base() == t.space(k + 1), Errc::wrong_base, "sheaf must live on the upper level");
  return pushforward_along(t.space(k), t.groups()->step(k), step_point_map(t, k), up);
}

Pushforward pushforward_from_top(const SpaceTower& t, int k, const EqSheaf& top) {
  require(k >= 0 && k <= t.depth(), Errc::index_out_of_range, "level index");
  require(top.base() == t.top_space(), Errc::wrong_base, "sheaf must live on the top space");
  std::vector<int> pmap(t.top_space()->points());
  for (int x = 0; x < static_cast<int>(pmap.size()); ++x) pmap[x] = t.project_point(k, x);
  return pushforward_along(t.space(k), t.groups()->from_top(k), pmap, top);
}

SheafMap pullback_map(const SpaceTower& t, int k, const SheafMap& f) {
  EqSheaf src = pullback_step(t, k, f.src());
  EqSheaf dst = pullback_step(t, k, f.dst());
  auto pmap = step_point_map(t, k);
  std::vector<QMatrix> comps;
  comps.reserve(pmap.size());
  for (int x : pmap) comps.push_back(f.at(x));
  return SheafMap::make(std::move(src), std::move(dst), std::move(comps));
}

SheafMap pushforward_map(const Pushforward& src, const Pushforward& dst, const SheafMap& f) {
  require(src.fiber == dst.fiber, Errc::wrong_base, "pushforwards over different covers");
  int lo_pts = src.sheaf.points();
  std::vector<QMatrix> comps;
  comps.reserve(lo_pts);
  for (int y = 0; y < lo_pts; ++y) {
    std::vector<QMatrix> blocks;
    blocks.reserve(src.fiber[y].size());
    for (int x : src.fiber[y]) blocks.push_back(f.at(x));
    comps.push_back(
        coords_in_basis(dst.fixed_basis[y], QMatrix::block_diag(blocks) * src.fixed_basis[y]));
  }
  return SheafMap::make(src.sheaf, dst.sheaf, std::move(comps));
}

SheafMap step_unit(const SpaceTower& t, int k, const EqSheaf& low) {
  EqSheaf pull = pullback_step(t, k, low);
  Pushforward pp = pushforward_step(t, k, pull);
  int lo_pts = low.points();
  std::vector<QMatrix> comps;
  comps.reserve(lo_pts);
  for (int y = 0; y < lo_pts; ++y) {
    int d = low.stalk_dim(y);
    QMatrix diag(pp.fixed_basis[y].rows(), d);
    for (size_t j = 0; j < pp.fiber[y].size(); ++j)
      for (int r = 0; r < d; ++r) diag.at(pp.offsets[y][j] + r, r) = 1;
    comps.push_back(coords_in_basis(pp.fixed_basis[y], diag));
  }
  return SheafMap::make(low, std::move(pp.sheaf), std::move(comps));
}

SheafMap step_counit(const SpaceTower& t, int k, const EqSheaf& up) {
  Pushforward pp = pushforward_step(t, k, up);
  EqSheaf pull = pullback_step(t, k, pp.sheaf);
  int hi_pts = up.points();
  std::vector<QMatrix> comps;
  comps.reserve(hi_pts);
  for (int x = 0; x < hi_pts; ++x) {
    int y = t.step(k, x);
    int j = fiber_position(pp.fiber[y], x);
    int off = pp.offsets[y][j];
    comps.push_back(pp.fixed_basis[y].row_slice(off, off + up.stalk_dim(x)));
  }
  return SheafMap::make(std::move(pull), up, std::move(comps));
}

PushforwardFamily pushforward_family(const SpaceTower& t, const EqSheaf& top) {
  require(top.base() == t.top_space(), Errc::wrong_base, "family starts on the top space");
  std::vector<EqSheaf> levels;
  std::vector<Pushforward> steps;
  levels.push_back(top);
  for (int k = t.depth() - 1; k >= 0; --k) {
    steps.push_back(pushforward_step(t, k, levels.back()));
    levels.push_back(steps.back().sheaf);
  }
  std::reverse(levels.begin(), levels.end());
  std::reverse(steps.begin(), steps.end());
  return {std::move(levels), std::move(steps)};
}

FamilyComparison family_vs_oneshot(const SpaceTower& t, const PushforwardFamily& fam) {
  int d = t.depth();
  require(static_cast<int>(fam.levels.size()) == d + 1, Errc::wrong_size, "family level count");
  const EqSheaf& top = fam.levels[d];

  // expand[k][y] rewrites the iterated fixed basis at y in the coordinates of
  // the full top fiber, blocks ordered by ascending top point, which is the
  // ambient the one-shot pushforward uses.
  std::vector<std::vector<QMatrix>> expand(d + 1);
  expand[d].reserve(top.points());
  for (int x = 0; x < top.points(); ++x)
    expand[d].push_back(QMatrix::identity(top.stalk_dim(x)));

  std::vector<Pushforward> oneshot;
  std::vector<SheafMap> compare;
  for (int k = d; k >= 0; --k) {
    if (k < d) {
      const Pushforward& st = fam.steps[k];
      int pts = t.space(k)->points();
      expand[k].reserve(pts);
      for (int y = 0; y < pts; ++y) {
        QMatrix stacked(0, fam.levels[k].stalk_dim(y));
        std::vector<std::pair<int, int>> concat;  // (top point, stalk dim)
        for (size_t j = 0; j < st.fiber[y].size(); ++j) {
          int x = st.fiber[y][j];
          int off = st.offsets[y][j];
          QMatrix slice = st.fixed_basis[y].row_slice(off, off + fam.levels[k + 1].stalk_dim(x));
          stacked = QMatrix::vstack(stacked, expand[k + 1][x] * slice);
          for (int p : t.top_fiber(k + 1, x)) concat.emplace_back(p, top.stalk_dim(p));
        }
        std::map<int, int> src_off;
        int o = 0;
        for (auto [p, dim] : concat) {
          src_off[p] = o;
          o += dim;
        }
        QMatrix perm(o, o);
        int to = 0;
        for (int p : t.top_fiber(k, y)) {
          int dim = top.stalk_dim(p);
          int so = src_off.at(p);
          for (int r = 0; r < dim; ++r) perm.at(to + r, so + r) = 1;
          to += dim;
        }
        expand[k].push_back(perm * stacked);
      }
    }
    Pushforward os = pushforward_from_top(t, k, top);
    std::vector<QMatrix> comps;
    comps.reserve(t.space(k)->points());
    for (int y = 0; y < t.space(k)->points(); ++y)
      comps.push_back(coords_in_basis(os.fixed_basis[y], expand[k][y]));
    compare.push_back(SheafMap::make(fam.levels[k], os.sheaf, std::move(comps)));
    oneshot.push_back(std::move(os));
  }
  std::reverse(oneshot.begin(), oneshot.end());
  std::reverse(compare.begin(), compare.end());
  return {std::move(oneshot), std::move(compare)};
}

ColimitResult colim_sheaf(const SpaceTower& t, const PushforwardFamily& fam) {
  int d = t.depth();
  require(static_cast<int>(fam.levels.size()) == d + 1, Errc::wrong_size, "family level count");
  ColimitResult out{fam.levels[d], {}};
  for (const auto& th : t.point_threads()) {
    ThreadGerm germ{th, {}, {}, 0};
    for (int k = 0; k <= d; ++k) germ.dims.push_back(fam.levels[k].stalk_dim(th.coords[k]));
    for (int k = 0; k < d; ++k) {
      const Pushforward& st = fam.steps[k];
      int y = th.coords[k];
      int j = fiber_position(st.fiber[y], th.coords[k + 1]);
      int off = st.offsets[y][j];
      germ.maps.push_back(st.fixed_basis[y].row_slice(off, off + germ.dims[k + 1]));
    }
    if (d == 0) {
      germ.stabilized_at = 0;
    } else if (!germ.maps.back().is_invertible()) {
      germ.stabilized_at = -1;
    } else {
      int k0 = d - 1;
      while (k0 > 0 && germ.maps[k0 - 1].is_invertible()) --k0;
      germ.stabilized_at = k0;
    }
    out.threads.push_back(std::move(germ));
  }
  return out;
}

GroupRep open_sections_rep(const SpaceTower& t, const PushforwardFamily& fam,
                           const BasicOpen& b) {
  require(static_cast<int>(fam.levels.size()) == t.depth() + 1, Errc::wrong_size,
          "family level count");
  Subgroup stab = open_stabilizer(t, b);
  const GroupHom& phi = t.groups()->from_top(b.level);
  std::vector<QMatrix> mats;
  mats.reserve(stab.order());
  for (int e : stab.members()) mats.push_back(fam.levels[b.level].trans(phi.apply(e), b.point));
  return GroupRep::from_element_matrices(as_group(stab), std::move(mats));
}

SpacePtr presheaf_level_space(const SpaceTower& t, int k) {
  require(k >= 0 && k <= t.depth(), Errc::index_out_of_range, "level index");
  GroupPtr top = t.groups()->top();
  const GroupHom& phi = t.groups()->from_top(k);
  const auto& sp = t.space(k);
  std::vector<std::vector<int>> rows;
  rows.reserve(top->generator_indices().size());
  for (int gi : top->generator_indices()) {
    std::vector<int> row(sp->points());
    for (int x = 0; x < sp->points(); ++x) row[x] = sp->act(phi.apply(gi), x);
    rows.push_back(std::move(row));
  }
  std::optional<std::vector<Subgroup>> subs;
  if (sp->point_subgroups()) {
    subs.emplace();
    subs->reserve(sp->points());
    for (const auto& s : *sp->point_subgroups()) subs->push_back(preimage(phi, s));
  }
  return FiniteGSpace::make(std::move(top), sp->points(), rows, std::move(subs));
}

EqPresheaf EqPresheaf::make(SpaceTowerPtr t, std::vector<std::vector<int>> dims,
                            const std::vector<std::vector<std::vector<QMatrix>>>& trans,
                            std::vector<std::vector<QMatrix>> res) {
  int d = t->depth();
  require(static_cast<int>(dims.size()) == d + 1, Errc::wrong_size, "one dim row per level");
  require(static_cast<int>(trans.size()) == d + 1, Errc::wrong_size,
          "one translation table per level");
  require(static_cast<int>(res.size()) == d, Errc::wrong_size, "one restriction row per step");

  EqPresheaf p;
  p.tower_ = t;
  for (int k = 0; k <= d; ++k)
    p.levels_.push_back(
        EqSheaf::make(presheaf_level_space(*t, k), std::move(dims[k]), trans[k]));

  // A restriction row is a sheaf map from the pulled-back lower level, which
  // settles shapes and every naturality square in one place.
  GroupHom ident = GroupHom::identity(t->groups()->top());
  for (int k = 0; k < d; ++k) {
    EqSheaf pull =
        pullback_along(p.levels_[k + 1].base(), ident, step_point_map(*t, k), p.levels_[k]);
    SheafMap::make(std::move(pull), p.levels_[k + 1], res[k]);
  }
  p.res_ = std::move(res);
  return p;
}

EqSheaf EqPresheaf::top_as_sheaf() const {
  const EqSheaf& topl = levels_.back();
  int n = topl.group()->order();
  std::vector<std::vector<QMatrix>> trans(n);
  for (int e = 0; e < n; ++e) {
    trans[e].reserve(topl.points());
    for (int x = 0; x < topl.points(); ++x) trans[e].push_back(topl.trans(e, x));
  }
  return EqSheaf::make(tower_->top_space(), topl.stalk_dims(), std::move(trans));
}

bool EqPresheaf::operator==(const EqPresheaf& o) const {
  if (tower_ != o.tower_ || levels_.size() != o.levels_.size()) return false;
  for (size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].stalk_dims() != o.levels_[k].stalk_dims()) return false;
    int n = levels_[k].group()->order();
    for (int e = 0; e < n; ++e)
      for (int x = 0; x < levels_[k].points(); ++x)
        if (levels_[k].trans(e, x) != o.levels_[k].trans(e, x)) return false;
  }
  return res_ == o.res_;
}

PresheafMap make_presheaf_map(const EqPresheaf& src, const EqPresheaf& dst,
                              std::vector<std::vector<QMatrix>> comps) {
  require(src.tower() == dst.tower(), Errc::wrong_base, "presheaf maps need a shared tower");
  const SpaceTower& t = *src.tower();
  int d = src.depth();
  require(static_cast<int>(comps.size()) == d + 1, Errc::wrong_size, "one component row per level");
  for (int k = 0; k <= d; ++k) {
    const EqSheaf& a = src.level(k);
    const EqSheaf& b = dst.level(k);
    require(static_cast<int>(comps[k].size()) == a.points(), Errc::wrong_size,
            "one component per point");
    for (int x = 0; x < a.points(); ++x)
      require(comps[k][x].rows() == b.stalk_dim(x) && comps[k][x].cols() == a.stalk_dim(x),
              Errc::wrong_size, "component shape");
    for (int gi : a.group()->generator_indices())
      for (int x = 0; x < a.points(); ++x) {
        int x2 = a.base()->act(gi, x);
        require(comps[k][x2] * a.trans(gi, x) == b.trans(gi, x) * comps[k][x],
                Errc::not_equivariant, "presheaf map is not natural");
      }
  }
  for (int k = 0; k < d; ++k)
    for (int x2 = 0; x2 < src.level(k + 1).points(); ++x2) {
      int x = t.step(k, x2);
      require(comps[k + 1][x2] * src.res(k, x2) == dst.res(k, x2) * comps[k][x],
              Errc::not_equivariant, "presheaf map breaks restriction");
    }
  return PresheafMap{std::move(comps)};
}

EqPresheaf presheaf_of_sheaf(SpaceTowerPtr t, const EqSheaf& top) {
  require(top.base() == t->top_space(), Errc::wrong_base, "sheaf must live on the top space");
  int d = t->depth();
  int n = top.group()->order();

  std::vector<std::vector<std::vector<int>>> fibers(d + 1);
  std::vector<std::vector<std::vector<int>>> offs(d + 1);
  std::vector<std::vector<int>> dims(d + 1);
  for (int k = 0; k <= d; ++k) {
    int pts = t->space(k)->points();
    for (int x = 0; x < pts; ++x) {
      fibers[k].push_back(t->top_fiber(k, x));
      std::vector<int> off;
      int o = 0;
      for (int p : fibers[k][x]) {
        off.push_back(o);
        o += top.stalk_dim(p);
      }
      offs[k].push_back(std::move(off));
      dims[k].push_back(o);
    }
  }

  std::vector<std::vector<std::vector<QMatrix>>> trans(d + 1);
  for (int k = 0; k <= d; ++k) {
    int pts = t->space(k)->points();
    const GroupHom& phi = t->groups()->from_top(k);
    trans[k].assign(n, {});
    for (int e = 0; e < n; ++e) {
      trans[k][e].reserve(pts);
      for (int x = 0; x < pts; ++x) {
        int x2 = t->space(k)->act(phi.apply(e), x);
        QMatrix m(dims[k][x2], dims[k][x]);
        for (size_t j = 0; j < fibers[k][x].size(); ++j) {
          int p = fibers[k][x][j];
          int q = t->top_space()->act(e, p);
          int i = fiber_position(fibers[k][x2], q);
          const QMatrix& blk = top.trans(e, p);
          for (int r = 0; r < blk.rows(); ++r)
            for (int c = 0; c < blk.cols(); ++c)
              m.at(offs[k][x2][i] + r, offs[k][x][j] + c) = blk.at(r, c);
        }
        trans[k][e].push_back(std::move(m));
      }
    }
  }

  std::vector<std::vector<QMatrix>> res(d);
  for (int k = 0; k < d; ++k) {
    int pts = t->space(k + 1)->points();
    res[k].reserve(pts);
    for (int x2 = 0; x2 < pts; ++x2) {
      int x = t->step(k, x2);
      QMatrix m(dims[k + 1][x2], dims[k][x]);
      for (size_t i = 0; i < fibers[k + 1][x2].size(); ++i) {
        int p = fibers[k + 1][x2][i];
        int j = fiber_position(fibers[k][x], p);
        for (int r = 0; r < top.stalk_dim(p); ++r)
          m.at(offs[k + 1][x2][i] + r, offs[k][x][j] + r) = 1;
      }
      res[k].push_back(std::move(m));
    }
  }
  return EqPresheaf::make(std::move(t), std::move(dims), trans, std::move(res));
}

SheafifyResult sheafify(const EqPresheaf& p) {
  const SpaceTowerPtr& t = p.tower();
  int d = p.depth();
  EqSheaf top = p.top_as_sheaf();
  PushforwardFamily family = pushforward_family(*t, top);
  EqPresheaf sections = presheaf_of_sheaf(t, top);

  // comp[k][p] is the composite restriction from the level-k value under a
  // top point all the way up its thread.
  int top_pts = t->top_space()->points();
  std::vector<std::vector<QMatrix>> comp(d + 1);
  comp[d].reserve(top_pts);
  for (int x = 0; x < top_pts; ++x)
    comp[d].push_back(QMatrix::identity(p.level(d).stalk_dim(x)));
  for (int k = d - 1; k >= 0; --k) {
    comp[k].reserve(top_pts);
    for (int x = 0; x < top_pts; ++x)
      comp[k].push_back(comp[k + 1][x] * p.res(k, t->project_point(k + 1, x)));
  }

  std::vector<std::vector<QMatrix>> comps(d + 1);
  for (int k = 0; k <= d; ++k) {
    int pts = t->space(k)->points();
    comps[k].reserve(pts);
    for (int x = 0; x < pts; ++x) {
      QMatrix stacked(0, p.level(k).stalk_dim(x));
      for (int q : t->top_fiber(k, x)) stacked = QMatrix::vstack(stacked, comp[k][q]);
      comps[k].push_back(std::move(stacked));
    }
  }
  PresheafMap unit = make_presheaf_map(p, sections, std::move(comps));
  return {std::move(top), std::move(family), std::move(sections), std::move(unit)};
}

FamilyProduct family_product(const SpaceTower& t, const std::vector<EqSheaf>& tops) {
  require(!tops.empty(), Errc::invalid_argument, "empty product");
  for (const auto& e : tops)
    require(e.base() == t.top_space(), Errc::wrong_base, "factors must live on the top space");
  SheafBiproduct bp = biproduct(tops);
  PushforwardFamily family = pushforward_family(t, bp.sheaf);
  std::vector<PushforwardFamily> factors;
  factors.reserve(tops.size());
  for (const auto& e : tops) factors.push_back(pushforward_family(t, e));

  std::vector<std::vector<SheafMap>> proj;
  proj.reserve(tops.size());
  for (size_t i = 0; i < tops.size(); ++i) {
    std::vector<SheafMap> pr;
    pr.push_back(bp.proj[i]);
    for (int k = t.depth() - 1; k >= 0; --k)
      pr.push_back(pushforward_map(family.steps[k], factors[i].steps[k], pr.back()));
    std::reverse(pr.begin(), pr.end());
    proj.push_back(std::move(pr));
  }
  return {std::move(family), std::move(factors), std::move(proj)};
}

EqPresheaf example_group_ring(SpaceTowerPtr t) {
  int d = t->depth();
  GroupPtr top = t->groups()->top();
  for (int k = 0; k <= d; ++k)
    require(t->space(k)->point_subgroups().has_value(), Errc::invalid_argument,
            "needs a subgroup-space tower");

  std::vector<std::vector<CosetTable>> ct(d + 1);
  std::vector<std::vector<int>> dims(d + 1);
  for (int k = 0; k <= d; ++k) {
    const GroupHom& phi = t->groups()->from_top(k);
    for (const auto& s : *t->space(k)->point_subgroups()) {
      ct[k].push_back(left_cosets(top, preimage(phi, s)));
      dims[k].push_back(static_cast<int>(ct[k].back().reps.size()));
    }
  }

  int n = top->order();
  std::vector<std::vector<std::vector<QMatrix>>> trans(d + 1);
  for (int k = 0; k <= d; ++k) {
    int pts = t->space(k)->points();
    const GroupHom& phi = t->groups()->from_top(k);
    trans[k].assign(n, {});
    for (int e = 0; e < n; ++e) {
      for (int x = 0; x < pts; ++x) {
        int x2 = t->space(k)->act(phi.apply(e), x);
        QMatrix m(dims[k][x2], dims[k][x]);
        for (int j = 0; j < dims[k][x]; ++j)
          m.at(ct[k][x2].coset_of[top->conj(e, ct[k][x].reps[j])], j) = 1;
        trans[k][e].push_back(std::move(m));
      }
    }
  }

  // Each finer coset sits inside exactly one coarser coset; the restriction
  // marks that incidence.
  std::vector<std::vector<QMatrix>> res(d);
  for (int k = 0; k < d; ++k) {
    int pts = t->space(k + 1)->points();
    for (int x2 = 0; x2 < pts; ++x2) {
      int x = t->step(k, x2);
      QMatrix m(dims[k + 1][x2], dims[k][x]);
      for (int i = 0; i < dims[k + 1][x2]; ++i)
        m.at(i, ct[k][x].coset_of[ct[k + 1][x2].reps[i]]) = 1;
      res[k].push_back(std::move(m));
    }
  }
  return EqPresheaf::make(std::move(t), std::move(dims), trans, std::move(res));
}

EqPresheaf example_fix(SpaceTowerPtr t, const GroupRep& v) {
  int d = t->depth();
  GroupPtr top = t->groups()->top();
  require(v.group()->same_group(*top), Errc::wrong_group, "module must belong to the top group");
  for (int k = 0; k <= d; ++k)
    require(t->space(k)->point_subgroups().has_value(), Errc::invalid_argument,
            "needs a subgroup-space tower");

  std::vector<std::vector<QMatrix>> fb(d + 1);
  std::vector<std::vector<int>> dims(d + 1);
  for (int k = 0; k <= d; ++k) {
    const GroupHom& phi = t->groups()->from_top(k);
    for (const auto& s : *t->space(k)->point_subgroups()) {
      fb[k].push_back(fixed_point_basis(v, preimage(phi, s)));
      dims[k].push_back(fb[k].back().cols());
    }
  }

  int n = top->order();
  std::vector<std::vector<std::vector<QMatrix>>> trans(d + 1);
  for (int k = 0; k <= d; ++k) {
    int pts = t->space(k)->points();
    const GroupHom& phi = t->groups()->from_top(k);
    trans[k].assign(n, {});
    for (int e = 0; e < n; ++e)
      for (int x = 0; x < pts; ++x) {
        int x2 = t->space(k)->act(phi.apply(e), x);
        trans[k][e].push_back(coords_in_basis(fb[k][x2], v.mat(e) * fb[k][x]));
      }
  }

  std::vector<std::vector<QMatrix>> res(d);
  for (int k = 0; k < d; ++k) {
    int pts = t->space(k + 1)->points();
    for (int x2 = 0; x2 < pts; ++x2)
      res[k].push_back(coords_in_basis(fb[k + 1][x2], fb[k][t->step(k, x2)]));
  }
  return EqPresheaf::make(std::move(t), std::move(dims), trans, std::move(res));
}

EqPresheaf example_constant(SpaceTowerPtr t, const GroupRep& v) {
  int d = t->depth();
  GroupPtr top = t->groups()->top();
  require(v.group()->same_group(*top), Errc::wrong_group, "module must belong to the top group");

  int n = top->order();
  std::vector<std::vector<int>> dims(d + 1);
  std::vector<std::vector<std::vector<QMatrix>>> trans(d + 1);
  std::vector<std::vector<QMatrix>> res(d);
  for (int k = 0; k <= d; ++k) {
    int pts = t->space(k)->points();
    dims[k].assign(pts, v.dim());
    trans[k].resize(n);
    for (int e = 0; e < n; ++e) trans[k][e].assign(pts, v.mat(e));
    if (k < d) res[k].assign(t->space(k + 1)->points(), QMatrix::identity(v.dim()));
  }
  return EqPresheaf::make(std::move(t), std::move(dims), trans, std::move(res));
}

}  // namespace psh
