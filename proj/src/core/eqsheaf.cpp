#include "eqsheaf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "error.hpp"

namespace psh {

namespace {

long sheaf_entry_count(const FiniteGroup& g, const std::vector<int>& dims) {
  long per_elem = 0;
  for (int d : dims) per_elem += static_cast<long>(d) * d;
  return per_elem * g.order();
}

}  // namespace

EqSheaf EqSheaf::make(SpacePtr base, std::vector<int> stalk_dims,
                      std::vector<std::vector<QMatrix>> trans) {
  require(base != nullptr, Errc::invalid_argument, "sheaf needs a base space");
  const auto& g = *base->group();
  int n = base->points();
  require(static_cast<int>(stalk_dims.size()) == n, Errc::wrong_size,
          "one stalk dimension per point required");
  for (int d : stalk_dims) require(d >= 0, Errc::invalid_argument, "negative stalk dimension");
  require(sheaf_entry_count(g, stalk_dims) <= 2 * kRepEntryCap, Errc::cap_exceeded,
          "translation table too large");
  require(static_cast<int>(trans.size()) == g.order(), Errc::wrong_size,
          "one translation row per group element required");
  for (int e = 0; e < g.order(); ++e) {
    require(static_cast<int>(trans[e].size()) == n, Errc::wrong_size,
            "one translation per point required");
    for (int x = 0; x < n; ++x) {
      require(trans[e][x].rows() == stalk_dims[base->act(e, x)] &&
                  trans[e][x].cols() == stalk_dims[x],
              Errc::wrong_size, "translation shape mismatch");
    }
  }
  for (int x = 0; x < n; ++x)
    require(trans[0][x].is_identity(), Errc::cocycle_violation,
            "identity element must translate trivially");
  for (int gi : g.generator_indices()) {
    for (int e = 0; e < g.order(); ++e) {
      for (int x = 0; x < n; ++x) {
        require(trans[g.mul(gi, e)][x] == trans[gi][base->act(e, x)] * trans[e][x],
                Errc::cocycle_violation, "translations break the cocycle rule");
      }
    }
  }
  EqSheaf s;
  s.base_ = std::move(base);
  s.stalk_dims_ = std::move(stalk_dims);
  s.trans_ = std::move(trans);
  return s;
}

EqSheaf EqSheaf::from_generators(SpacePtr base, std::vector<int> stalk_dims,
                                 const std::vector<std::vector<QMatrix>>& gen_trans) {
  const auto& g = *base->group();
  require(gen_trans.size() == g.generators().size(), Errc::wrong_size,
          "one translation row per generator required");
  std::map<int, const std::vector<QMatrix>*> by_elem;
  for (size_t i = 0; i < gen_trans.size(); ++i) {
    int idx = g.generator_indices()[i];
    auto [it, fresh] = by_elem.emplace(idx, &gen_trans[i]);
    require(fresh || *it->second == gen_trans[i], Errc::invalid_argument,
            "repeated generator with conflicting translations");
  }
  int n = base->points();
  std::vector<std::vector<QMatrix>> trans(g.order(), std::vector<QMatrix>(n));
  for (int x = 0; x < n; ++x) trans[0][x] = QMatrix::identity(stalk_dims[x]);
  for (int idx : g.bfs_order()) {
    if (idx == 0) continue;
    const auto& gen_row = *by_elem.at(g.word_gen(idx));
    int rest = g.word_rest(idx);
    for (int x = 0; x < n; ++x)
      trans[idx][x] = gen_row[base->act(rest, x)] * trans[rest][x];
  }
  return make(std::move(base), std::move(stalk_dims), std::move(trans));
}

EqSheaf EqSheaf::zero(SpacePtr base) {
  const auto& g = *base->group();
  int n = base->points();
  std::vector<std::vector<QMatrix>> trans(g.order(), std::vector<QMatrix>(n));
  return make(std::move(base), std::vector<int>(n, 0), std::move(trans));
}

int EqSheaf::total_dim() const { return std::accumulate(stalk_dims_.begin(), stalk_dims_.end(), 0); }

GroupRep EqSheaf::stalk_rep(int x) const {
  auto stab = base_->stabilizer(x);
  std::vector<QMatrix> mats;
  for (int s : stab.members()) mats.push_back(trans_[s][x]);
  return GroupRep::from_element_matrices(as_group(stab), std::move(mats));
}

SheafMap SheafMap::make(EqSheaf src, EqSheaf dst, std::vector<QMatrix> comps) {
  require(src.base() == dst.base(), Errc::wrong_base, "sheaf map needs a shared base");
  int n = src.points();
  require(static_cast<int>(comps.size()) == n, Errc::wrong_size,
          "one component per point required");
  for (int x = 0; x < n; ++x)
    require(comps[x].rows() == dst.stalk_dim(x) && comps[x].cols() == src.stalk_dim(x),
            Errc::wrong_size, "component shape mismatch");
  const auto& g = *src.group();
  for (int gi : g.generator_indices()) {
    for (int x = 0; x < n; ++x) {
      require(comps[src.base()->act(gi, x)] * src.trans(gi, x) == dst.trans(gi, x) * comps[x],
              Errc::not_equivariant, "components do not commute with translations");
    }
  }
  SheafMap m;
  m.src_ = std::make_shared<const EqSheaf>(std::move(src));
  m.dst_ = std::make_shared<const EqSheaf>(std::move(dst));
  m.comps_ = std::move(comps);
  return m;
}

SheafMap SheafMap::identity(const EqSheaf& e) {
  std::vector<QMatrix> comps;
  for (int x = 0; x < e.points(); ++x) comps.push_back(QMatrix::identity(e.stalk_dim(x)));
  return make(e, e, std::move(comps));
}

SheafMap SheafMap::zero(EqSheaf src, EqSheaf dst) {
  std::vector<QMatrix> comps;
  for (int x = 0; x < src.points(); ++x)
    comps.emplace_back(dst.stalk_dim(x), src.stalk_dim(x));
  return make(std::move(src), std::move(dst), std::move(comps));
}

bool SheafMap::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool SheafMap::is_iso() const {
  for (const auto& c : comps_)
    if (!c.is_invertible()) return false;
  return true;
}

SheafMap SheafMap::operator+(const SheafMap& o) const {
  require(*src_ == *o.src_ && *dst_ == *o.dst_, Errc::wrong_base,
          "sum of maps with different ends");
  std::vector<QMatrix> comps;
  for (size_t x = 0; x < comps_.size(); ++x) comps.push_back(comps_[x] + o.comps_[x]);
  return make(*src_, *dst_, std::move(comps));
}

SheafMap SheafMap::operator*(const Rat& s) const {
  std::vector<QMatrix> comps;
  for (const auto& c : comps_) comps.push_back(c * s);
  return make(*src_, *dst_, std::move(comps));
}

SheafMap SheafMap::compose(const SheafMap& outer, const SheafMap& inner) {
  require(*outer.src_ == *inner.dst_, Errc::wrong_base, "composition ends do not meet");
  std::vector<QMatrix> comps;
  for (size_t x = 0; x < inner.comps_.size(); ++x)
    comps.push_back(outer.comps_[x] * inner.comps_[x]);
  return make(*inner.src_, *outer.dst_, std::move(comps));
}

bool SheafMap::operator==(const SheafMap& o) const {
  return *src_ == *o.src_ && *dst_ == *o.dst_ && comps_ == o.comps_;
}

SheafBiproduct biproduct(const std::vector<EqSheaf>& parts) {
  require(!parts.empty(), Errc::invalid_argument, "biproduct of nothing");
  auto base = parts[0].base();
  int n = base->points();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts) {
    require(p.base() == base, Errc::wrong_base, "biproduct needs a shared base");
    for (int x = 0; x < n; ++x) dims[x] += p.stalk_dim(x);
  }
  const auto& g = *base->group();
  std::vector<std::vector<QMatrix>> trans(g.order(), std::vector<QMatrix>(n));
  for (int e = 0; e < g.order(); ++e) {
    for (int x = 0; x < n; ++x) {
      std::vector<QMatrix> blocks;
      for (const auto& p : parts) blocks.push_back(p.trans(e, x));
      trans[e][x] = QMatrix::block_diag(blocks);
    }
  }
  SheafBiproduct out{EqSheaf::make(base, dims, std::move(trans)), {}, {}};
  // inclusion and projection at each point use the running offset of the
  // i-th summand inside the stacked stalk
  std::vector<std::vector<int>> start(parts.size(), std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x) {
    int run = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      start[i][x] = run;
      run += parts[i].stalk_dim(x);
    }
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<QMatrix> inj, proj;
    for (int x = 0; x < n; ++x) {
      int d = parts[i].stalk_dim(x);
      QMatrix in(dims[x], d), pr(d, dims[x]);
      for (int a = 0; a < d; ++a) {
        in.at(start[i][x] + a, a) = 1;
        pr.at(a, start[i][x] + a) = 1;
      }
      inj.push_back(std::move(in));
      proj.push_back(std::move(pr));
    }
    out.inj.push_back(SheafMap::make(parts[i], out.sheaf, std::move(inj)));
    out.proj.push_back(SheafMap::make(out.sheaf, parts[i], std::move(proj)));
  }
  return out;
}

SheafFactorization sheaf_factorization(const SheafMap& f) {
  const EqSheaf& e = f.src();
  const EqSheaf& d = f.dst();
  auto base = e.base();
  const auto& g = *base->group();
  int n = base->points();
  std::vector<MapFactorization> mf;
  mf.reserve(n);
  for (int x = 0; x < n; ++x) mf.push_back(map_factorization(f.at(x)));

  std::vector<int> kdims(n), rdims(n), cdims(n);
  for (int x = 0; x < n; ++x) {
    kdims[x] = mf[x].kernel.cols();
    rdims[x] = mf[x].image.cols();
    cdims[x] = mf[x].coker_proj.rows();
  }
  std::vector<QMatrix> coker_sec(n);
  for (int x = 0; x < n; ++x)
    coker_sec[x] = split_off_subspace(mf[x].image, d.stalk_dim(x)).complement;
  std::vector<std::vector<QMatrix>> kt(g.order(), std::vector<QMatrix>(n));
  std::vector<std::vector<QMatrix>> imt(g.order(), std::vector<QMatrix>(n));
  std::vector<std::vector<QMatrix>> cot(g.order(), std::vector<QMatrix>(n));
  std::vector<std::vector<QMatrix>> cit(g.order(), std::vector<QMatrix>(n));
  for (int el = 0; el < g.order(); ++el) {
    for (int x = 0; x < n; ++x) {
      int y = base->act(el, x);
      // translations restrict to the kernel and image and descend to the
      // quotients; the quotient formulas are independent of the section
      // because the projections kill what the section misses
      kt[el][x] = coords_in_basis(mf[y].kernel, e.trans(el, x) * mf[x].kernel);
      imt[el][x] = coords_in_basis(mf[y].image, d.trans(el, x) * mf[x].image);
      cot[el][x] = mf[y].coker_proj * d.trans(el, x) * coker_sec[x];
      cit[el][x] = mf[y].coim_proj * e.trans(el, x) * mf[x].coim_sec;
    }
  }
  EqSheaf ker = EqSheaf::make(base, kdims, std::move(kt));
  EqSheaf coim = EqSheaf::make(base, rdims, std::move(cit));
  EqSheaf img = EqSheaf::make(base, rdims, std::move(imt));
  EqSheaf cok = EqSheaf::make(base, cdims, std::move(cot));
  std::vector<QMatrix> kin, cpr, iin, copr, iso;
  for (int x = 0; x < n; ++x) {
    kin.push_back(mf[x].kernel);
    cpr.push_back(mf[x].coim_proj);
    iin.push_back(mf[x].image);
    copr.push_back(mf[x].coker_proj);
    iso.push_back(mf[x].iso);
  }
  SheafMap ker_incl = SheafMap::make(ker, e, std::move(kin));
  SheafMap coim_proj = SheafMap::make(e, coim, std::move(cpr));
  SheafMap im_incl = SheafMap::make(img, d, std::move(iin));
  SheafMap coker_proj = SheafMap::make(d, cok, std::move(copr));
  SheafMap comparison = SheafMap::make(coim, img, std::move(iso));
  return {std::move(ker),  std::move(ker_incl),   std::move(coim), std::move(coim_proj),
          std::move(img),  std::move(im_incl),    std::move(cok),  std::move(coker_proj),
          std::move(comparison)};
}

EqSheaf skyscraper(SpacePtr base, int point, const GroupRep& m) {
  const auto& g = *base->group();
  auto stab = base->stabilizer(point);
  require(m.group()->same_group(*as_group(stab)), Errc::wrong_group,
          "skyscraper value must be a stabilizer module");
  auto orbit = base->orbit_of(point);
  int n = base->points();
  std::vector<int> dims(n, 0);
  for (int y : orbit) dims[y] = m.dim();
  const auto& members = stab.members();
  auto stab_index = [&](int parent_elem) {
    auto it = std::lower_bound(members.begin(), members.end(), parent_elem);
    require(it != members.end() && *it == parent_elem, Errc::index_out_of_range,
            "transporter combination escaped the stabilizer");
    return static_cast<int>(it - members.begin());
  };
  std::vector<std::vector<QMatrix>> trans(g.order(), std::vector<QMatrix>(n));
  for (int e = 0; e < g.order(); ++e) {
    for (int x = 0; x < n; ++x) {
      if (dims[x] == 0) {
        trans[e][x] = QMatrix(dims[base->act(e, x)], 0);
        continue;
      }
      int y = base->act(e, x);
      int tx = base->transporter(point, x);
      int ty = base->transporter(point, y);
      trans[e][x] = m.mat(stab_index(g.mul(g.inv(ty), g.mul(e, tx))));
    }
  }
  return EqSheaf::make(std::move(base), std::move(dims), std::move(trans));
}

SheafMap sky_unit(const EqSheaf& e, int point) {
  auto sky = skyscraper(e.base(), point, e.stalk_rep(point));
  const auto& g = *e.group();
  std::vector<QMatrix> comps;
  for (int x = 0; x < e.points(); ++x) {
    int t = e.base()->transporter(point, x);
    if (t < 0) {
      comps.emplace_back(0, e.stalk_dim(x));
    } else {
      comps.push_back(e.trans(g.inv(t), x));
    }
  }
  return SheafMap::make(e, std::move(sky), std::move(comps));
}

std::vector<SheafMap> sheaf_hom_basis(const EqSheaf& e, const EqSheaf& f) {
  require(e.base() == f.base(), Errc::wrong_base, "hom needs a shared base");
  const auto& g = *e.group();
  int n = e.points();
  BlockSystem sys;
  std::vector<int> blk(n);
  for (int x = 0; x < n; ++x) blk[x] = sys.add_block(f.stalk_dim(x), e.stalk_dim(x));
  for (int gi : g.generator_indices()) {
    for (int x = 0; x < n; ++x) {
      int y = e.base()->act(gi, x);
      sys.add_zero_equation(
          {{blk[y], QMatrix::identity(f.stalk_dim(y)), e.trans(gi, x)},
           {blk[x], f.trans(gi, x) * Rat(-1), QMatrix::identity(e.stalk_dim(x))}});
    }
  }
  QMatrix sols = sys.solution_basis();
  std::vector<SheafMap> out;
  for (int c = 0; c < sols.cols(); ++c) {
    std::vector<QMatrix> comps;
    for (int x = 0; x < n; ++x) comps.push_back(sys.unpack(sols, c, blk[x]));
    out.push_back(SheafMap::make(e, f, std::move(comps)));
  }
  return out;
}

GroupRep sections_rep(const EqSheaf& e) {
  const auto& g = *e.group();
  int n = e.points();
  std::vector<int> offset(n + 1, 0);
  for (int x = 0; x < n; ++x) offset[x + 1] = offset[x] + e.stalk_dim(x);
  int total = offset[n];
  std::vector<QMatrix> mats;
  mats.reserve(g.order());
  for (int el = 0; el < g.order(); ++el) {
    QMatrix m(total, total);
    for (int x = 0; x < n; ++x) {
      int y = e.base()->act(el, x);
      const QMatrix& t = e.trans(el, x);
      for (int a = 0; a < t.rows(); ++a)
        for (int b = 0; b < t.cols(); ++b) m.at(offset[y] + a, offset[x] + b) = t.at(a, b);
    }
    mats.push_back(std::move(m));
  }
  return GroupRep::from_element_matrices(e.group(), std::move(mats));
}

SkyEmbedding embed_into_skyscrapers(const EqSheaf& e) {
  auto reps = e.base()->orbit_reps();
  std::vector<EqSheaf> skies;
  std::vector<SheafMap> units;
  for (int r : reps) {
    units.push_back(sky_unit(e, r));
    skies.push_back(units.back().dst());
  }
  auto bi = biproduct(skies);
  SheafMap total = SheafMap::compose(bi.inj[0], units[0]);
  for (size_t i = 1; i < skies.size(); ++i)
    total = total + SheafMap::compose(bi.inj[i], units[i]);
  return {std::move(bi), std::move(total)};
}

}  // namespace psh
