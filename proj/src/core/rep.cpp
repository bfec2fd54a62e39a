#include "rep.hpp"

#include <map>

#include "error.hpp"

namespace psh {

namespace {

void check_entry_cap(const FiniteGroup& g, int dim) {
  long need = static_cast<long>(g.order()) * dim * dim;
  require(need <= kRepEntryCap, Errc::cap_exceeded, "representation table too large");
}

}  // namespace

GroupRep GroupRep::from_element_matrices(GroupPtr g, std::vector<QMatrix> mats) {
  require(static_cast<int>(mats.size()) == g->order(), Errc::wrong_size,
          "one matrix per group element required");
  int dim = mats.empty() ? 0 : mats[0].rows();
  for (const auto& m : mats)
    require(m.rows() == dim && m.cols() == dim, Errc::wrong_size,
            "representation matrices must share a square shape");
  check_entry_cap(*g, dim);
  require(mats[0].is_identity(), Errc::not_homomorphism, "identity must act as the identity");
  for (int gi : g->generator_indices()) {
    for (int b = 0; b < g->order(); ++b) {
      require(mats[g->mul(gi, b)] == mats[gi] * mats[b], Errc::not_homomorphism,
              "matrices do not respect the group product");
    }
  }
  // the pair grid is re-checked when it costs little
  long full_cost = static_cast<long>(g->order()) * g->order() * dim * dim * dim;
  if (full_cost <= 2'000'000) {
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b)
        require(mats[g->mul(a, b)] == mats[a] * mats[b], Errc::not_homomorphism,
                "matrices do not respect the group product");
  }
  GroupRep r;
  r.group_ = std::move(g);
  r.dim_ = dim;
  r.mats_ = std::move(mats);
  return r;
}

GroupRep::GroupRep(GroupPtr g, const std::vector<QMatrix>& gen_mats) {
  require(gen_mats.size() == g->generators().size(), Errc::wrong_size,
          "one matrix per generator required");
  int dim = 0;
  if (!gen_mats.empty()) dim = gen_mats[0].rows();
  std::map<int, QMatrix> by_elem;
  for (size_t i = 0; i < gen_mats.size(); ++i) {
    int idx = g->generator_indices()[i];
    auto [it, fresh] = by_elem.emplace(idx, gen_mats[i]);
    require(fresh || it->second == gen_mats[i], Errc::invalid_argument,
            "repeated generator with conflicting matrices");
  }
  std::vector<QMatrix> mats(g->order());
  mats[0] = QMatrix::identity(dim);
  for (int idx : g->bfs_order()) {
    if (idx == 0) continue;
    mats[idx] = by_elem.at(g->word_gen(idx)) * mats[g->word_rest(idx)];
  }
  *this = from_element_matrices(std::move(g), std::move(mats));
}

GroupRep GroupRep::trivial(GroupPtr g, int dim) {
  std::vector<QMatrix> mats(g->order(), QMatrix::identity(dim));
  return from_element_matrices(std::move(g), std::move(mats));
}

GroupRep permutation_rep(GroupPtr g, const Subgroup& h) {
  require(h.parent()->same_group(*g), Errc::wrong_group, "subgroup of a different group");
  auto ct = left_cosets(g, h);
  int n = static_cast<int>(ct.reps.size());
  check_entry_cap(*g, n);
  std::vector<QMatrix> mats;
  mats.reserve(g->order());
  for (int e = 0; e < g->order(); ++e) {
    QMatrix m(n, n);
    for (int j = 0; j < n; ++j) m.at(ct.coset_of[g->mul(e, ct.reps[j])], j) = 1;
    mats.push_back(std::move(m));
  }
  return GroupRep::from_element_matrices(g, std::move(mats));
}

GroupRep regular_rep(GroupPtr g) { return permutation_rep(g, trivial_subgroup(g)); }

GroupRep direct_sum(const std::vector<GroupRep>& parts) {
  require(!parts.empty(), Errc::invalid_argument, "direct sum of nothing");
  auto g = parts[0].group();
  std::vector<QMatrix> mats;
  for (int e = 0; e < g->order(); ++e) {
    std::vector<QMatrix> blocks;
    for (const auto& p : parts) {
      require(p.group()->same_group(*g), Errc::wrong_group, "summands over different groups");
      blocks.push_back(p.mat(e));
    }
    mats.push_back(QMatrix::block_diag(blocks));
  }
  return GroupRep::from_element_matrices(g, std::move(mats));
}

GroupRep conjugate_rep(const GroupRep& r, const QMatrix& p) {
  require(p.rows() == r.dim() && p.cols() == r.dim(), Errc::wrong_size,
          "conjugator shape mismatch");
  QMatrix pinv = p.inverse();
  std::vector<QMatrix> mats;
  for (int e = 0; e < r.group()->order(); ++e) mats.push_back(p * r.mat(e) * pinv);
  return GroupRep::from_element_matrices(r.group(), std::move(mats));
}

GroupRep restrict_rep(const GroupRep& r, const Subgroup& h) {
  require(h.parent()->same_group(*r.group()), Errc::wrong_group,
          "subgroup of a different group");
  auto hg = as_group(h);
  std::vector<QMatrix> mats;
  for (int m : h.members()) mats.push_back(r.mat(m));
  return GroupRep::from_element_matrices(hg, std::move(mats));
}

QMatrix fixed_point_basis(const GroupRep& r, const Subgroup& h) {
  require(h.parent()->same_group(*r.group()), Errc::wrong_group,
          "subgroup of a different group");
  auto gens = h.small_generating_set();
  QMatrix stack(0, r.dim());
  for (int e : gens) stack = QMatrix::vstack(stack, r.mat(e) - QMatrix::identity(r.dim()));
  return stack.kernel_basis();
}

GroupRep induced_rep(const Subgroup& h, const GroupRep& m) {
  auto g = h.parent();
  auto hg = as_group(h);
  require(m.group()->same_group(*hg), Errc::wrong_group,
          "inducing from a representation of a different subgroup");
  auto ct = left_cosets(g, h);
  int n = static_cast<int>(ct.reps.size());
  int d = m.dim();
  check_entry_cap(*g, n * d);
  const auto& members = h.members();
  auto sub_index = [&](int parent_elem) {
    auto it = std::lower_bound(members.begin(), members.end(), parent_elem);
    require(it != members.end() && *it == parent_elem, Errc::index_out_of_range,
            "element escaped the subgroup");
    return static_cast<int>(it - members.begin());
  };
  std::vector<QMatrix> mats;
  mats.reserve(g->order());
  for (int e = 0; e < g->order(); ++e) {
    QMatrix big(n * d, n * d);
    for (int j = 0; j < n; ++j) {
      int t = g->mul(e, ct.reps[j]);
      int i = ct.coset_of[t];
      const QMatrix& blk = m.mat(sub_index(g->mul(g->inv(ct.reps[i]), t)));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) big.at(i * d + a, j * d + b) = blk.at(a, b);
    }
    mats.push_back(std::move(big));
  }
  return GroupRep::from_element_matrices(g, std::move(mats));
}

MapFactorization map_factorization(const QMatrix& f) {
  MapFactorization out;
  out.kernel = f.kernel_basis();
  out.image = f.column_space_basis();
  auto coim = split_off_subspace(out.kernel, f.cols());
  out.coim_proj = coim.projection;
  out.coim_sec = coim.complement;
  auto coker = split_off_subspace(out.image, f.rows());
  out.coker_proj = coker.projection;
  out.iso = coords_in_basis(out.image, f * out.coim_sec);
  return out;
}

std::vector<QMatrix> intertwiner_basis(const GroupRep& v, const GroupRep& w,
                                       const std::vector<int>& elems) {
  require(w.group()->same_group(*v.group()), Errc::wrong_group,
          "intertwiners need a shared group");
  BlockSystem sys;
  int b = sys.add_block(w.dim(), v.dim());
  QMatrix iv = QMatrix::identity(v.dim());
  QMatrix iw = QMatrix::identity(w.dim());
  for (int e : elems) {
    sys.add_zero_equation({{b, w.mat(e), iv}, {b, iw * Rat(-1), v.mat(e)}});
  }
  QMatrix sols = sys.solution_basis();
  std::vector<QMatrix> out;
  for (int c = 0; c < sols.cols(); ++c) out.push_back(sys.unpack(sols, c, b));
  return out;
}

DiscFiltration disc_filtration(const GroupRep& top_rep, const GroupTower& t) {
  require(top_rep.group()->same_group(*t.top()), Errc::wrong_group,
          "filtration needs a representation of the top group");
  DiscFiltration out;
  for (int k = 0; k <= t.depth(); ++k)
    out.bases.push_back(fixed_point_basis(top_rep, t.kernel(k)));
  for (int k = 0; k < t.depth(); ++k)
    out.incls.push_back(coords_in_basis(out.bases[k + 1], out.bases[k]));
  return out;
}

}  // namespace psh
