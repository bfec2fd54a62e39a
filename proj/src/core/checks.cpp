#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "weyl.hpp"

namespace psh {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  }
};

CheckReport finish(std::string name, bool pass, Json witnesses, const Timer& t) {
  if (!pass && witnesses.empty()) witnesses.push_back(Json{{"note", "no witness captured"}});
  CheckReport r;
  r.check = std::move(name);
  r.pass = pass;
  r.witnesses = std::move(witnesses);
  r.ms = t.ms();
  return r;
}

}  // namespace

Json report_to_json(const CheckReport& r) {
  return Json{{"check", r.check}, {"pass", r.pass}, {"witnesses", r.witnesses}, {"ms", r.ms}};
}

int Rng::below(int n) {
  require(n > 0, Errc::invalid_argument, "empty range");
  return static_cast<int>(eng_() % static_cast<uint64_t>(n));
}

Rat Rng::coeff() {
  Rat q(below(7) - 3, 1 + below(2));
  q.canonicalize();
  return q;
}

GroupRep random_module(GroupPtr g, Rng& rng, int max_dim) {
  auto subs = all_subgroups(g);
  std::vector<GroupRep> parts;
  int dim = 0;
  int tries = 3;
  while (tries-- > 0 && dim < max_dim) {
    const Subgroup& h = subs[rng.below(static_cast<int>(subs.size()))];
    int index = g->order() / h.order();
    if (index == 0 || dim + index > max_dim) continue;
    parts.push_back(permutation_rep(g, h));
    dim += index;
  }
  if (parts.empty()) {
    parts.push_back(GroupRep::trivial(g, 1));
    dim = 1;
  }
  GroupRep r = direct_sum(parts);

  QMatrix p = QMatrix::identity(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) p.at(i, j) = rng.below(5) - 2;
  return conjugate_rep(r, p);
}

EqSheaf random_sheaf(const SpacePtr& s, Rng& rng) {
  int n_parts = 1 + rng.below(2);
  std::vector<EqSheaf> parts;
  for (int i = 0; i < n_parts; ++i) {
    int x = rng.below(s->points());
    GroupPtr stab = as_group(s->stabilizer(x));
    parts.push_back(skyscraper(s, x, random_module(stab, rng, 3)));
  }
  return biproduct(parts).sheaf;
}

SheafMap random_map(const EqSheaf& src, const EqSheaf& dst, Rng& rng) {
  SheafMap f = SheafMap::zero(src, dst);
  for (const SheafMap& b : sheaf_hom_basis(src, dst)) f = f + b * rng.coeff();
  return f;
}

int presheaf_hom_dim(const EqPresheaf& src, const EqPresheaf& dst) {
  require(src.tower() == dst.tower(), Errc::wrong_base, "hom needs a shared tower");
  const SpaceTower& t = *src.tower();
  int d = t.depth();

  // A presheaf map is a level sheaf map per level subject to the restriction
  // squares, so solve for coefficients over the levelwise hom bases. Each
  // presheaf carries its own copy of the level spaces, so the dst levels are
  // rebuilt over the src spaces first.
  std::vector<std::vector<SheafMap>> bases;
  std::vector<int> offset{0};
  for (int k = 0; k <= d; ++k) {
    EqSheaf dl = dst.level(k);
    if (dl.base() != src.level(k).base()) {
      std::vector<std::vector<QMatrix>> trans;
      for (int e = 0; e < dl.group()->order(); ++e) {
        trans.emplace_back();
        for (int x = 0; x < dl.points(); ++x) trans.back().push_back(dl.trans(e, x));
      }
      dl = EqSheaf::make(src.level(k).base(), dl.stalk_dims(), std::move(trans));
    }
    bases.push_back(sheaf_hom_basis(src.level(k), dl));
    offset.push_back(offset.back() + static_cast<int>(bases.back().size()));
  }
  int vars = offset.back();
  if (vars == 0) return 0;

  std::vector<std::vector<Rat>> rows;
  for (int k = 0; k < d; ++k) {
    for (int x = 0; x < t.space(k + 1)->points(); ++x) {
      int sx = t.step(k, x);
      // sum_j a_{k+1,j} (B_j(x) R_src) - sum_j a_{k,j} (R_dst B_j(sx)) == 0
      std::vector<QMatrix> hi, lo;
      for (const auto& b : bases[k + 1]) hi.push_back(b.at(x) * src.res(k, x));
      for (const auto& b : bases[k]) lo.push_back(dst.res(k, x) * b.at(sx));
      int r_dim = dst.level(k + 1).stalk_dim(x);
      int c_dim = src.level(k).stalk_dim(sx);
      for (int r = 0; r < r_dim; ++r) {
        for (int c = 0; c < c_dim; ++c) {
          std::vector<Rat> row(vars, Rat(0));
          for (size_t j = 0; j < hi.size(); ++j) row[offset[k + 1] + j] = hi[j].at(r, c);
          for (size_t j = 0; j < lo.size(); ++j) row[offset[k] + j] = -lo[j].at(r, c);
          rows.push_back(std::move(row));
        }
      }
    }
  }

  QMatrix a(static_cast<int>(rows.size()), vars);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < vars; ++c) a.at(static_cast<int>(r), c) = rows[r][c];
  return vars - a.rank();
}

namespace {

// Fixed dimension of the kernel acting on the stacked fiber stalks, computed
// through the representation machinery rather than the pushforward code.
int fiber_fixed_dim_oracle(const SpaceTower& t, int k, const EqSheaf& top, int y) {
  const Subgroup& n = t.groups()->kernel(k);
  std::vector<int> fiber = t.top_fiber(k, y);
  std::map<int, int> pos;
  std::vector<int> off{0};
  for (size_t j = 0; j < fiber.size(); ++j) {
    pos[fiber[j]] = static_cast<int>(j);
    off.push_back(off.back() + top.stalk_dim(fiber[j]));
  }
  int total = off.back();

  std::vector<QMatrix> mats;
  for (int m : n.members()) {
    QMatrix big(total, total);
    for (size_t j = 0; j < fiber.size(); ++j) {
      int img = t.top_space()->act(m, fiber[j]);
      int i = pos.at(img);
      const QMatrix& blk = top.trans(m, fiber[j]);
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) big.at(off[i] + r, off[j] + c) = blk.at(r, c);
    }
    mats.push_back(std::move(big));
  }
  GroupPtr ng = as_group(n);
  GroupRep rep = GroupRep::from_element_matrices(ng, std::move(mats));
  return fixed_point_basis(rep, full_subgroup(ng)).cols();
}

std::vector<CheckReport> suite_cocycle(const CheckOptions& opt) {
  std::vector<CheckReport> out;
  Timer t_load;
  RawSheaf raw;
  if (opt.input) {
    try {
      raw = raw_sheaf_from_json(*opt.input);
    } catch (const Error& e) {
      out.push_back(finish("cocycle/load", false,
                           Json::array({Json{{"error", e.what()}, {"code", errc_name(e.code())}}}),
                           t_load));
      return out;
    }
  } else {
    raw = raw_sheaf_from_json(sheaf_to_json(example_group_ring(opt.tower).top_as_sheaf()));
  }
  out.push_back(finish("cocycle/load", true, Json::array(), t_load));

  Timer t_id;
  auto w = cocycle_witness(raw);
  Json wit = Json::array();
  if (w) {
    GroupPtr g = raw.base->group();
    wit.push_back(Json{{"gen", w->gen},
                       {"elem", w->elem},
                       {"point", w->point},
                       {"gen_perm", g->element(w->gen).cycle_str()},
                       {"elem_perm", g->element(w->elem).cycle_str()},
                       {"label", raw.labels[w->point]}});
  }
  out.push_back(finish("cocycle/identity", !w.has_value(), std::move(wit), t_id));
  return out;
}

std::vector<CheckReport> suite_abelian(const CheckOptions& opt) {
  Rng rng(opt.seed);
  SpacePtr s = opt.tower->top_space();
  Json w_fac = Json::array(), w_ker = Json::array(), w_coker = Json::array(),
       w_bi = Json::array();
  Timer t;
  for (int i = 0; i < opt.count; ++i) {
    EqSheaf e = random_sheaf(s, rng);
    EqSheaf f = random_sheaf(s, rng);
    SheafMap m = random_map(e, f, rng);
    SheafFactorization fac = sheaf_factorization(m);

    if (!(fac.iso.is_iso() &&
          m == SheafMap::compose(fac.im_incl, SheafMap::compose(fac.iso, fac.coim_proj))))
      w_fac.push_back(Json{{"instance", i}});

    bool ker_ok = SheafMap::compose(m, fac.ker_incl).is_zero();
    for (int x = 0; x < e.points() && ker_ok; ++x) {
      ker_ok = fac.ker_incl.at(x).rank() == fac.kernel.stalk_dim(x) &&
               fac.kernel.stalk_dim(x) + fac.image.stalk_dim(x) == e.stalk_dim(x);
    }
    if (!ker_ok) w_ker.push_back(Json{{"instance", i}});

    bool coker_ok = SheafMap::compose(fac.coker_proj, m).is_zero();
    for (int x = 0; x < f.points() && coker_ok; ++x) {
      coker_ok = fac.coker_proj.at(x).rank() == fac.coker.stalk_dim(x) &&
                 fac.coker.stalk_dim(x) + fac.image.stalk_dim(x) == f.stalk_dim(x);
    }
    if (!coker_ok) w_coker.push_back(Json{{"instance", i}});

    SheafBiproduct bp = biproduct({e, f});
    bool bi_ok = true;
    for (int a = 0; a < 2 && bi_ok; ++a)
      for (int b = 0; b < 2 && bi_ok; ++b) {
        SheafMap pi = SheafMap::compose(bp.proj[a], bp.inj[b]);
        bi_ok = (a == b) ? pi == SheafMap::identity(pi.src()) : pi.is_zero();
      }
    if (bi_ok) {
      SheafMap total = SheafMap::compose(bp.inj[0], bp.proj[0]) +
                       SheafMap::compose(bp.inj[1], bp.proj[1]);
      bi_ok = total == SheafMap::identity(bp.sheaf);
    }
    if (!bi_ok) w_bi.push_back(Json{{"instance", i}});
  }
  std::vector<CheckReport> out;
  out.push_back(finish("abelian/biproduct", w_bi.empty(), std::move(w_bi), t));
  out.push_back(finish("abelian/cokernel", w_coker.empty(), std::move(w_coker), t));
  out.push_back(finish("abelian/factorization", w_fac.empty(), std::move(w_fac), t));
  out.push_back(finish("abelian/kernel", w_ker.empty(), std::move(w_ker), t));
  return out;
}

std::vector<CheckReport> suite_adjunctions(const CheckOptions& opt) {
  Rng rng(opt.seed);
  const SpaceTower& t = *opt.tower;
  require(t.depth() > 0, Errc::invalid_argument, "step adjunctions need a tower with a step");
  SpacePtr top = t.top_space();
  Json w_sky = Json::array(), w_step = Json::array(), w_weyl = Json::array();
  Timer timer;

  for (int i = 0; i < opt.count; ++i) {
    // stalk against skyscraper
    {
      int x = rng.below(top->points());
      EqSheaf e = random_sheaf(top, rng);
      GroupPtr stab = as_group(top->stabilizer(x));
      GroupRep m = random_module(stab, rng, 2);
      EqSheaf sky = skyscraper(top, x, m);

      std::vector<int> elems(stab->order());
      for (int j = 0; j < stab->order(); ++j) elems[j] = j;
      int lhs = static_cast<int>(sheaf_hom_basis(e, sky).size());
      int rhs = static_cast<int>(intertwiner_basis(e.stalk_rep(x), m, elems).size());

      SheafMap u = sky_unit(e, x);
      SheafMap u2 = sky_unit(sky, x);
      bool ok = lhs == rhs && u.at(x).is_identity() && u2.dst() == sky &&
                u2 == SheafMap::identity(sky);
      if (!ok) w_sky.push_back(Json{{"instance", i}, {"point", x}, {"lhs", lhs}, {"rhs", rhs}});
    }

    // pullback against pushforward across one tower step
    {
      int k = rng.below(t.depth());
      EqSheaf low = random_sheaf(t.space(k), rng);
      EqSheaf up = random_sheaf(t.space(k + 1), rng);

      EqSheaf pull = pullback_step(t, k, low);
      Pushforward push = pushforward_step(t, k, up);
      int lhs = static_cast<int>(sheaf_hom_basis(pull, up).size());
      int rhs = static_cast<int>(sheaf_hom_basis(low, push.sheaf).size());

      SheafMap unit = step_unit(t, k, low);
      SheafMap tri1 =
          SheafMap::compose(step_counit(t, k, pull), pullback_map(t, k, unit));
      SheafMap counit = step_counit(t, k, up);
      Pushforward push_src = pushforward_step(t, k, counit.src());
      SheafMap tri2 = SheafMap::compose(pushforward_map(push_src, push, counit),
                                        step_unit(t, k, push.sheaf));
      bool ok = lhs == rhs && tri1 == SheafMap::identity(pull) &&
                tri2 == SheafMap::identity(push.sheaf);
      if (!ok) w_step.push_back(Json{{"instance", i}, {"step", k}, {"lhs", lhs}, {"rhs", rhs}});
    }

    // inclusion of fixed sheaves against the fixed part
    {
      EqSheaf e = random_sheaf(top, rng);
      WeylPart w = weyl_part(e);
      bool ok = weyl_corestrict(w, w.incl) == SheafMap::identity(w.sheaf);
      int lhs = static_cast<int>(sheaf_hom_basis(w.sheaf, e).size());
      int rhs = static_cast<int>(sheaf_hom_basis(w.sheaf, w.sheaf).size());
      ok = ok && lhs == rhs;
      if (ok) {
        for (const SheafMap& f : sheaf_hom_basis(w.sheaf, e)) {
          if (SheafMap::compose(w.incl, weyl_corestrict(w, f)) != f) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) w_weyl.push_back(Json{{"instance", i}, {"lhs", lhs}, {"rhs", rhs}});
    }
  }

  std::vector<CheckReport> out;
  out.push_back(finish("adjunctions/sky", w_sky.empty(), std::move(w_sky), timer));
  out.push_back(finish("adjunctions/step", w_step.empty(), std::move(w_step), timer));
  out.push_back(finish("adjunctions/weyl", w_weyl.empty(), std::move(w_weyl), timer));
  return out;
}

std::vector<CheckReport> suite_counit(const CheckOptions& opt) {
  Rng rng(opt.seed);
  const SpaceTower& t = *opt.tower;
  Json w_iso = Json::array(), w_top = Json::array();
  Timer timer;
  for (int i = 0; i < opt.count; ++i) {
    EqSheaf e = random_sheaf(t.top_space(), rng);
    PushforwardFamily fam = pushforward_family(t, e);
    FamilyComparison cmp = family_vs_oneshot(t, fam);
    for (int k = 0; k <= t.depth(); ++k)
      if (!cmp.compare[k].is_iso()) w_iso.push_back(Json{{"instance", i}, {"level", k}});
    ColimitResult col = colim_sheaf(t, fam);
    if (!(col.top == e)) w_top.push_back(Json{{"instance", i}});
  }
  std::vector<CheckReport> out;
  out.push_back(finish("counit/oneshot-iso", w_iso.empty(), std::move(w_iso), timer));
  out.push_back(finish("counit/top-identity", w_top.empty(), std::move(w_top), timer));
  return out;
}

std::vector<CheckReport> suite_sheafify_idem(const CheckOptions& opt) {
  Rng rng(opt.seed);
  SpaceTowerPtr t = opt.tower;
  GroupPtr top_group = t->groups()->top();
  Json w_idem = Json::array(), w_refl = Json::array();
  Timer timer;
  for (int i = 0; i < opt.count; ++i) {
    EqPresheaf p = [&]() {
      switch (i % 4) {
        case 0: return example_group_ring(t);
        case 1: return example_fix(t, random_module(top_group, rng, 4));
        case 2: return example_constant(t, random_module(top_group, rng, 3));
        default: return presheaf_of_sheaf(t, random_sheaf(t->top_space(), rng));
      }
    }();

    SheafifyResult sh = sheafify(p);
    SheafifyResult again = sheafify(sh.sections);
    if (!(again.top == sh.top && again.sections == sh.sections))
      w_idem.push_back(Json{{"instance", i}});

    EqSheaf f = random_sheaf(t->top_space(), rng);
    int lhs = presheaf_hom_dim(p, presheaf_of_sheaf(t, f));
    int rhs = static_cast<int>(sheaf_hom_basis(p.top_as_sheaf(), f).size());
    if (lhs != rhs) w_refl.push_back(Json{{"instance", i}, {"lhs", lhs}, {"rhs", rhs}});
  }
  std::vector<CheckReport> out;
  out.push_back(finish("sheafify-idem/idempotent", w_idem.empty(), std::move(w_idem), timer));
  out.push_back(finish("sheafify-idem/reflection", w_refl.empty(), std::move(w_refl), timer));
  return out;
}

std::vector<CheckReport> suite_weyl(const CheckOptions& opt) {
  Rng rng(opt.seed);
  const SpaceTower& t = *opt.tower;
  SpacePtr top = t.top_space();
  require(top->point_subgroups().has_value(), Errc::invalid_argument,
          "fixedness checks need a subgroup-space tower");
  Json w_fixed = Json::array(), w_unit = Json::array(), w_mono = Json::array(),
       w_sky = Json::array(), w_pull = Json::array();
  Timer timer;
  for (int i = 0; i < opt.count; ++i) {
    EqSheaf e = random_sheaf(top, rng);
    WeylPart w = weyl_part(e);
    if (!is_weyl(w.sheaf)) w_fixed.push_back(Json{{"instance", i}});
    if (!(weyl_corestrict(w, w.incl) == SheafMap::identity(w.sheaf)))
      w_unit.push_back(Json{{"instance", i}});
    for (int x = 0; x < top->points(); ++x)
      if (w.incl.at(x).rank() != w.sheaf.stalk_dim(x))
        w_mono.push_back(Json{{"instance", i}, {"point", x}});

    int x = rng.below(top->points());
    WeylResult wr = weyl_group((*top->point_subgroups())[x]);
    EqSheaf sky = weyl_skyscraper(top, x, random_module(wr.weyl, rng, 2));
    if (!is_weyl(sky)) w_sky.push_back(Json{{"instance", i}, {"point", x}});

    if (t.depth() > 0) {
      int k = t.depth() - 1;
      Pushforward down = pushforward_step(t, k, e);
      WeylPart wd = weyl_part(down.sheaf);
      if (!is_weyl(pullback_step(t, k, wd.sheaf)))
        w_pull.push_back(Json{{"instance", i}, {"step", k}});
    }
  }
  std::vector<CheckReport> out;
  out.push_back(finish("weyl/counit-mono", w_mono.empty(), std::move(w_mono), timer));
  out.push_back(finish("weyl/fixed-part", w_fixed.empty(), std::move(w_fixed), timer));
  out.push_back(finish("weyl/pullback", w_pull.empty(), std::move(w_pull), timer));
  out.push_back(finish("weyl/skyscraper", w_sky.empty(), std::move(w_sky), timer));
  out.push_back(finish("weyl/unit", w_unit.empty(), std::move(w_unit), timer));
  return out;
}

std::vector<CheckReport> suite_godement(const CheckOptions& opt) {
  Rng rng(opt.seed);
  SpacePtr top = opt.tower->top_space();
  Json w_inj = Json::array(), w_term = Json::array();
  Timer timer;
  for (int i = 0; i < opt.count; ++i) {
    EqSheaf e = random_sheaf(top, rng);
    SkyEmbedding emb = embed_into_skyscrapers(e);
    for (int x = 0; x < e.points(); ++x)
      if (emb.embed.at(x).rank() != e.stalk_dim(x))
        w_inj.push_back(Json{{"instance", i}, {"point", x}});
    if (sheaf_factorization(emb.embed).coker.total_dim() != 0)
      w_term.push_back(Json{{"instance", i}});
  }
  std::vector<CheckReport> out;
  out.push_back(finish("godement/injective", w_inj.empty(), std::move(w_inj), timer));
  out.push_back(finish("godement/terminates", w_term.empty(), std::move(w_term), timer));
  return out;
}

std::vector<CheckReport> suite_disc_product(const CheckOptions& opt) {
  Rng rng(opt.seed);
  const SpaceTower& t = *opt.tower;
  Json w_sec = Json::array(), w_joint = Json::array();
  Timer timer;
  for (int i = 0; i < opt.count; ++i) {
    std::vector<EqSheaf> tops{random_sheaf(t.top_space(), rng), random_sheaf(t.top_space(), rng)};
    EqSheaf sum = biproduct(tops).sheaf;
    FamilyProduct fp = family_product(t, tops);
    for (int k = 0; k <= t.depth(); ++k) {
      for (int y = 0; y < t.space(k)->points(); ++y) {
        if (fp.family.levels[k].stalk_dim(y) != fiber_fixed_dim_oracle(t, k, sum, y))
          w_sec.push_back(Json{{"instance", i}, {"level", k}, {"point", y}});
        QMatrix stack = fp.proj[0][k].at(y);
        for (size_t f = 1; f < tops.size(); ++f)
          stack = QMatrix::vstack(stack, fp.proj[f][k].at(y));
        if (!stack.is_invertible())
          w_joint.push_back(Json{{"instance", i}, {"level", k}, {"point", y}});
      }
    }
  }
  std::vector<CheckReport> out;
  out.push_back(finish("disc-product/joint-iso", w_joint.empty(), std::move(w_joint), timer));
  out.push_back(finish("disc-product/sections", w_sec.empty(), std::move(w_sec), timer));
  return out;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names{"abelian",       "adjunctions", "cocycle",
                                              "counit",        "disc-product", "godement",
                                              "sheafify-idem", "weyl"};
  return names;
}

std::vector<CheckReport> run_check_suite(const std::string& suite, const CheckOptions& opt) {
  require(opt.tower != nullptr, Errc::invalid_argument, "check suites need a tower");
  std::vector<CheckReport> out;
  if (suite == "cocycle") out = suite_cocycle(opt);
  else if (suite == "abelian") out = suite_abelian(opt);
  else if (suite == "adjunctions") out = suite_adjunctions(opt);
  else if (suite == "counit") out = suite_counit(opt);
  else if (suite == "sheafify-idem") out = suite_sheafify_idem(opt);
  else if (suite == "weyl") out = suite_weyl(opt);
  else if (suite == "godement") out = suite_godement(opt);
  else if (suite == "disc-product") out = suite_disc_product(opt);
  else fail(Errc::invalid_argument, "unknown suite '" + suite + "'");

  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return out;
}

}  // namespace psh
