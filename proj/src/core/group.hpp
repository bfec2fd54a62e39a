#pragma once

#include <memory>
#include <vector>

#include "perm.hpp"

namespace psh {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultCap = 5000;  // element enumeration cap
inline constexpr int kTableLimit = 4096;  // orders up to this get a product table

// Finite permutation group given by exhaustive element enumeration. Immutable
// after construction. Elements are sorted lexicographically by image array, so
// the identity is always element 0 and indices are canonical.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
  static GroupPtr close_generators(int degree, std::vector<Perm> gens, int cap = kDefaultCap);
  static GroupPtr trivial(int degree);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  int index_of(const Perm& p) const;  // -1 if not a member
  int identity() const { return 0; }

  int mul(int a, int b) const;  // element(a) composed after element(b)
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1

  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  // Every non-identity element i factors as element(word_gen(i)) after
  // element(word_rest(i)) with word_rest discovered earlier in bfs_order.
  // Extending generator data along bfs_order covers the whole group.
  int word_gen(int i) const { return word_gen_[i]; }
  int word_rest(int i) const { return word_rest_[i]; }
  const std::vector<int>& bfs_order() const { return bfs_order_; }

  bool same_group(const FiniteGroup& o) const;  // same degree and element set

private:
  FiniteGroup() = default;
  void finish_construction();

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<int> gen_idx_;
  std::vector<Perm> elements_;
  std::vector<int> inverse_;
  std::vector<int> word_gen_, word_rest_, bfs_order_;
  std::vector<int32_t> table_;  // order x order, empty over kTableLimit
};

// Subgroup as a sorted list of parent element indices. Contains the identity;
// closure is validated at construction.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<int> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int elem) const;
  bool contains_all(const Subgroup& other) const;
  bool is_trivial() const { return order() == 1; }
  bool is_full() const { return order() == parent_->order(); }

  // Greedy minimal-ish generating set, deterministic: repeatedly adjoin the
  // least member outside the running closure.
  std::vector<int> small_generating_set() const;

  bool operator==(const Subgroup& o) const;
  bool operator<(const Subgroup& o) const;  // by (order, member list)

private:
  GroupPtr parent_;
  std::vector<int> members_;
};

// Group homomorphism as the full element-to-element image table.
// Multiplicativity is validated exhaustively at construction.
class GroupHom {
public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images);
  static GroupHom from_generator_images(GroupPtr source, GroupPtr target,
                                        const std::vector<int>& gen_images);
  static GroupHom identity(GroupPtr g);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  int apply(int elem) const { return images_[elem]; }
  const std::vector<int>& images() const { return images_; }

  bool is_surjective() const;
  Subgroup kernel() const;
  Subgroup image() const;

  static GroupHom compose(const GroupHom& outer, const GroupHom& inner);

private:
  GroupPtr source_, target_;
  std::vector<int> images_;
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup subgroup_closure(GroupPtr g, const std::vector<int>& seed);
Subgroup conjugate_subgroup(const Subgroup& h, int g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup preimage(const GroupHom& f, const Subgroup& of_target);
Subgroup image_subgroup(const GroupHom& f, const Subgroup& of_source);
bool is_normal(const Subgroup& h);

// All subgroups, sorted by (order, member list). Every subgroup arises as a
// closure of cyclic subgroups, which is how the enumeration proceeds.
std::vector<Subgroup> all_subgroups(GroupPtr g);

Subgroup normalizer(const Subgroup& h);
Subgroup core_subgroup(const Subgroup& h);  // largest normal subgroup inside h

// Realizes a subgroup as a FiniteGroup of the same degree. Element i of the
// result is parent->element(h.members()[i]); the positional correspondence is
// load-bearing for translating indices back and forth.
GroupPtr as_group(const Subgroup& h);
std::vector<int> to_subgroup_indices(const Subgroup& h, const std::vector<int>& parent_elems);

struct QuotientResult {
  GroupPtr group;     // permutation group on left cosets
  GroupHom proj;      // parent -> quotient
};
QuotientResult quotient(GroupPtr g, const Subgroup& normal_subgroup);

struct WeylResult {
  GroupPtr normalizer_group;  // as_group(normalizer(k))
  GroupPtr weyl;              // normalizer / k
  GroupHom proj;              // normalizer_group -> weyl
};
WeylResult weyl_group(const Subgroup& k);

// Left cosets g*h, each named by its least element index, sorted. coset_of
// maps element index to position in the rep list.
struct CosetTable {
  std::vector<int> reps;
  std::vector<int> coset_of;
};
CosetTable left_cosets(GroupPtr g, const Subgroup& h);

}  // namespace psh
