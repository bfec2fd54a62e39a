#include "group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace psh {

GroupPtr FiniteGroup::close_generators(int degree, std::vector<Perm> gens, int cap) {
  require(degree >= 1, Errc::invalid_argument, "degree must be positive");
  for (const auto& g : gens)
    require(g.degree() == degree, Errc::wrong_size, "generator degree mismatch");

  // BFS from the identity, left-multiplying by generators; records for each
  // element one factorization gen * earlier.
  std::vector<Perm> elems{Perm::identity(degree)};
  std::map<std::vector<int>, int> index{{elems[0].images(), 0}};
  std::vector<int> parent{-1}, via{-1};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = gens[gi].compose(elems[head]);
      auto [it, fresh] = index.try_emplace(next.images(), static_cast<int>(elems.size()));
      if (!fresh) continue;
      require(static_cast<int>(elems.size()) < cap, Errc::cap_exceeded,
              "group order exceeds cap " + std::to_string(cap));
      elems.push_back(std::move(next));
      parent.push_back(static_cast<int>(head));
      via.push_back(static_cast<int>(gi));
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->degree_ = degree;
  g->gens_ = std::move(gens);

  // Sort elements; identity lands at index 0 since it is lexicographically
  // least among permutations.
  std::vector<int> order_of(elems.size());
  {
    std::vector<int> by_rank(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) by_rank[i] = static_cast<int>(i);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](int a, int b) { return elems[a] < elems[b]; });
    g->elements_.reserve(elems.size());
    for (size_t i = 0; i < by_rank.size(); ++i) {
      order_of[by_rank[i]] = static_cast<int>(i);
      g->elements_.push_back(elems[by_rank[i]]);
    }
  }
  g->word_gen_.assign(elems.size(), -1);
  g->word_rest_.assign(elems.size(), -1);
  g->bfs_order_.reserve(elems.size());
  g->gen_idx_.reserve(g->gens_.size());
  for (const auto& gen : g->gens_) g->gen_idx_.push_back(order_of[index.at(gen.images())]);
  for (size_t i = 0; i < elems.size(); ++i) {
    int ni = order_of[i];
    g->bfs_order_.push_back(ni);
    if (parent[i] >= 0) {
      g->word_gen_[ni] = g->gen_idx_[via[i]];
      g->word_rest_[ni] = order_of[parent[i]];
    }
  }
  g->finish_construction();
  return g;
}

GroupPtr FiniteGroup::trivial(int degree) { return close_generators(degree, {}, 2); }

void FiniteGroup::finish_construction() {
  int n = order();
  inverse_.resize(n);
  for (int i = 0; i < n; ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    require(inverse_[i] >= 0, Errc::not_closed, "inverse escaped element list");
  }
  if (n <= kTableLimit) {
    table_.assign(static_cast<size_t>(n) * n, 0);
    // Generator rows by direct composition, the rest through the word
    // factorization: (gen*rest)*e = gen*(rest*e).
    std::vector<bool> done(n, false);
    for (int gi : gen_idx_) {
      if (done[gi]) continue;
      for (int j = 0; j < n; ++j)
        table_[static_cast<size_t>(gi) * n + j] = index_of(elements_[gi].compose(elements_[j]));
      done[gi] = true;
    }
    for (int idx : bfs_order_) {
      if (done[idx]) continue;
      if (idx == 0) {
        for (int j = 0; j < n; ++j) table_[j] = j;
        done[0] = true;
        continue;
      }
      const int32_t* grow = &table_[static_cast<size_t>(word_gen_[idx]) * n];
      const int32_t* rrow = &table_[static_cast<size_t>(word_rest_[idx]) * n];
      int32_t* row = &table_[static_cast<size_t>(idx) * n];
      for (int j = 0; j < n; ++j) row[j] = grow[rrow[j]];
      done[idx] = true;
    }
  }
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<size_t>(a) * order() + b];
  return index_of(elements_[a].compose(elements_[b]));
}

bool FiniteGroup::same_group(const FiniteGroup& o) const {
  return degree_ == o.degree_ && elements_ == o.elements_;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  require(parent_ != nullptr, Errc::invalid_argument, "null parent");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  require(!members_.empty() && members_[0] == parent_->identity(), Errc::not_closed,
          "subgroup must contain the identity");
  for (int m : members_)
    require(m >= 0 && m < parent_->order(), Errc::index_out_of_range, "member out of range");
  for (int a : members_)
    for (int b : members_)
      require(contains(parent_->mul(a, b)), Errc::not_closed, "subgroup not closed");
}

bool Subgroup::contains(int elem) const {
  return std::binary_search(members_.begin(), members_.end(), elem);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

std::vector<int> Subgroup::small_generating_set() const {
  std::vector<int> gens;
  std::vector<int> closure{parent_->identity()};
  while (static_cast<int>(closure.size()) < order()) {
    int pick = -1;
    for (int m : members_)
      if (!std::binary_search(closure.begin(), closure.end(), m)) {
        pick = m;
        break;
      }
    gens.push_back(pick);
    auto seed = closure;
    seed.push_back(pick);
    closure = subgroup_closure(parent_, seed).members();
  }
  return gens;
}

bool Subgroup::operator==(const Subgroup& o) const {
  return parent_->same_group(*o.parent_) && members_ == o.members_;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return members_ < o.members_;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  require(static_cast<int>(images_.size()) == source_->order(), Errc::wrong_size,
          "image table size mismatch");
  for (int v : images_)
    require(v >= 0 && v < target_->order(), Errc::index_out_of_range, "image out of range");
  int n = source_->order();
  require(images_[source_->identity()] == target_->identity(), Errc::not_homomorphism,
          "identity not preserved");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      require(images_[source_->mul(a, b)] == target_->mul(images_[a], images_[b]),
              Errc::not_homomorphism, "multiplicativity fails");
}

GroupHom GroupHom::from_generator_images(GroupPtr source, GroupPtr target,
                                         const std::vector<int>& gen_images) {
  require(gen_images.size() == source->generators().size(), Errc::wrong_size,
          "one image per generator required");
  std::vector<int> gen_img_of_elem(source->order(), -1);
  const auto& gi = source->generator_indices();
  for (size_t k = 0; k < gi.size(); ++k) {
    require(gen_img_of_elem[gi[k]] < 0 || gen_img_of_elem[gi[k]] == gen_images[k],
            Errc::not_homomorphism, "conflicting images for a repeated generator");
    gen_img_of_elem[gi[k]] = gen_images[k];
  }
  std::vector<int> images(source->order(), -1);
  for (int idx : source->bfs_order()) {
    if (idx == source->identity())
      images[idx] = target->identity();
    else
      images[idx] =
          target->mul(gen_img_of_elem[source->word_gen(idx)], images[source->word_rest(idx)]);
  }
  return GroupHom(std::move(source), std::move(target), std::move(images));
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<int> images(g->order());
  for (int i = 0; i < g->order(); ++i) images[i] = i;
  return GroupHom(g, g, std::move(images));
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target_->order(), 0);
  int count = 0;
  for (int v : images_)
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  return count == target_->order();
}

Subgroup GroupHom::kernel() const {
  std::vector<int> members;
  for (int i = 0; i < source_->order(); ++i)
    if (images_[i] == target_->identity()) members.push_back(i);
  return Subgroup(source_, std::move(members));
}

Subgroup GroupHom::image() const {
  std::vector<int> members(images_.begin(), images_.end());
  return Subgroup(target_, std::move(members));
}

GroupHom GroupHom::compose(const GroupHom& outer, const GroupHom& inner) {
  require(inner.target_->same_group(*outer.source_), Errc::wrong_group,
          "composition target/source mismatch");
  std::vector<int> images(inner.source_->order());
  for (int i = 0; i < inner.source_->order(); ++i) images[i] = outer.apply(inner.apply(i));
  return GroupHom(inner.source_, outer.target_, std::move(images));
}

Subgroup trivial_subgroup(GroupPtr g) {
  return Subgroup(std::move(g), {0});
}

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup(std::move(g), std::move(all));
}

Subgroup subgroup_closure(GroupPtr g, const std::vector<int>& seed) {
  std::vector<char> in(g->order(), 0);
  std::vector<int> members{g->identity()};
  in[g->identity()] = 1;
  std::vector<int> worklist;
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      worklist.push_back(s);
    }
  while (!worklist.empty()) {
    int x = worklist.back();
    worklist.pop_back();
    size_t snapshot = members.size();
    for (size_t i = 0; i < snapshot; ++i) {
      for (int prod : {g->mul(x, members[i]), g->mul(members[i], x)}) {
        if (!in[prod]) {
          in[prod] = 1;
          members.push_back(prod);
          worklist.push_back(prod);
        }
      }
    }
  }
  return Subgroup(std::move(g), std::move(members));
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  const auto& G = h.parent();
  std::vector<int> members;
  members.reserve(h.order());
  for (int m : h.members()) members.push_back(G->conj(g, m));
  return Subgroup(G, std::move(members));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require(a.parent()->same_group(*b.parent()), Errc::wrong_group, "different parents");
  std::vector<int> members;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(members));
  return Subgroup(a.parent(), std::move(members));
}

Subgroup preimage(const GroupHom& f, const Subgroup& of_target) {
  std::vector<int> members;
  for (int i = 0; i < f.source()->order(); ++i)
    if (of_target.contains(f.apply(i))) members.push_back(i);
  return Subgroup(f.source(), std::move(members));
}

Subgroup image_subgroup(const GroupHom& f, const Subgroup& of_source) {
  std::vector<int> members;
  for (int m : of_source.members()) members.push_back(f.apply(m));
  return Subgroup(f.target(), std::move(members));
}

bool is_normal(const Subgroup& h) {
  const auto& g = h.parent();
  for (int x = 0; x < g->order(); ++x)
    for (int m : h.members())
      if (!h.contains(g->conj(x, m))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(GroupPtr g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> cyclics;
  for (int e = 0; e < g->order(); ++e) {
    std::vector<int> members{g->identity()};
    int x = e;
    while (x != g->identity()) {
      members.push_back(x);
      x = g->mul(x, e);
    }
    std::sort(members.begin(), members.end());
    if (seen.insert(members).second) cyclics.push_back(members);
  }
  // Join closure: every subgroup is generated by the cyclic subgroups inside
  // it, so saturating known subgroups against cyclic ones finds everything.
  std::vector<std::vector<int>> known(cyclics);
  std::vector<std::vector<int>> frontier(cyclics);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclics) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        std::vector<int> seed(h);
        seed.insert(seed.end(), c.begin(), c.end());
        auto join = subgroup_closure(g, seed);
        if (seen.insert(join.members()).second) {
          known.push_back(join.members());
          next.push_back(join.members());
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (auto& members : known) out.emplace_back(g, std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<int> members;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int m : h.members())
      if (!h.contains(g->conj(x, m))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup core_subgroup(const Subgroup& h) {
  // Intersection of all conjugates: an element survives iff every conjugate
  // of it stays inside h.
  const auto& g = h.parent();
  std::vector<int> members;
  for (int m : h.members()) {
    bool ok = true;
    for (int x = 0; x < g->order() && ok; ++x) ok = h.contains(g->conj(x, m));
    if (ok) members.push_back(m);
  }
  return Subgroup(g, std::move(members));
}

GroupPtr as_group(const Subgroup& h) {
  const auto& parent = h.parent();
  std::vector<Perm> gens;
  for (int m : h.small_generating_set()) gens.push_back(parent->element(m));
  auto g = FiniteGroup::close_generators(parent->degree(), std::move(gens),
                                         parent->order() + 1);
  require(g->order() == h.order(), Errc::not_closed, "subgroup realization mismatch");
  return g;
}

std::vector<int> to_subgroup_indices(const Subgroup& h, const std::vector<int>& parent_elems) {
  // Members are sorted by parent index, parent elements are sorted by image
  // array, and as_group sorts the same way, so position in the member list is
  // the element index inside the realized subgroup.
  std::vector<int> out;
  out.reserve(parent_elems.size());
  const auto& m = h.members();
  for (int p : parent_elems) {
    auto it = std::lower_bound(m.begin(), m.end(), p);
    require(it != m.end() && *it == p, Errc::index_out_of_range, "element not in subgroup");
    out.push_back(static_cast<int>(it - m.begin()));
  }
  return out;
}

CosetTable left_cosets(GroupPtr g, const Subgroup& h) {
  CosetTable t;
  t.coset_of.assign(g->order(), -1);
  for (int e = 0; e < g->order(); ++e) {
    if (t.coset_of[e] >= 0) continue;
    int c = static_cast<int>(t.reps.size());
    t.reps.push_back(e);  // least member first since e runs in increasing order
    for (int m : h.members()) t.coset_of[g->mul(e, m)] = c;
  }
  return t;
}

QuotientResult quotient(GroupPtr g, const Subgroup& n) {
  require(n.parent()->same_group(*g), Errc::wrong_group, "subgroup of a different group");
  require(is_normal(n), Errc::not_normal, "quotient by a non-normal subgroup");
  CosetTable cosets = left_cosets(g, n);
  int nc = static_cast<int>(cosets.reps.size());
  auto coset_perm = [&](int elem) {
    std::vector<int> img(nc);
    for (int c = 0; c < nc; ++c) img[c] = cosets.coset_of[g->mul(elem, cosets.reps[c])];
    return Perm(std::move(img));
  };
  std::vector<Perm> qgens;
  for (int gi : g->generator_indices()) qgens.push_back(coset_perm(gi));
  auto q = FiniteGroup::close_generators(std::max(nc, 1), std::move(qgens), nc + 1);
  require(q->order() == nc, Errc::not_closed, "quotient order mismatch");
  std::vector<int> images(g->order());
  for (int e = 0; e < g->order(); ++e) {
    images[e] = q->index_of(coset_perm(e));
    require(images[e] >= 0, Errc::not_homomorphism, "projection image missing");
  }
  return {q, GroupHom(g, q, std::move(images))};
}

WeylResult weyl_group(const Subgroup& k) {
  Subgroup n = normalizer(k);
  GroupPtr ng = as_group(n);
  std::vector<int> k_in_n = to_subgroup_indices(n, k.members());
  auto q = quotient(ng, Subgroup(ng, std::move(k_in_n)));
  return {ng, q.group, std::move(q.proj)};
}

}  // namespace psh
