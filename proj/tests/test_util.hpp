#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "core/group.hpp"

namespace psh::testutil {

// Independent subgroup oracle working on raw permutations, no FiniteGroup
// internals: close every pair of elements, then keep extending known
// subgroups by single elements until nothing new appears.
inline std::set<std::vector<std::vector<int>>> oracle_subgroup_sets(const GroupPtr& g) {
  auto closure = [](std::vector<Perm> seed) {
    std::set<std::vector<int>> have;
    std::vector<Perm> elems;
    auto add = [&](const Perm& p) {
      if (have.insert(p.images()).second) {
        elems.push_back(p);
        return true;
      }
      return false;
    };
    add(Perm::identity(seed.front().degree()));
    for (const auto& p : seed) add(p);
    bool grew = true;
    while (grew) {
      grew = false;
      size_t n = elems.size();
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (add(elems[i].compose(elems[j]))) grew = true;
    }
    std::vector<std::vector<int>> out(have.begin(), have.end());
    return out;
  };

  std::set<std::vector<std::vector<int>>> found;
  const auto& elems = g->elements();
  for (const auto& a : elems)
    for (const auto& b : elems) found.insert(closure({a, b}));
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = found;
    for (const auto& sub : snapshot) {
      for (const auto& c : elems) {
        std::vector<Perm> seed;
        for (const auto& img : sub) seed.emplace_back(img);
        seed.push_back(c);
        if (found.insert(closure(seed)).second) grew = true;
      }
    }
  }
  return found;
}

inline GroupPtr sym(int n) {
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<std::vector<int>> cyc(1);
    for (int i = 0; i < n; ++i) cyc[0].push_back(i);
    gens.push_back(Perm::from_cycles(n, cyc));
  }
  return FiniteGroup::close_generators(n, gens);
}

inline GroupPtr cyclic(int n) {
  std::vector<std::vector<int>> cyc(1);
  for (int i = 0; i < n; ++i) cyc[0].push_back(i);
  return FiniteGroup::close_generators(n, {Perm::from_cycles(n, cyc)});
}

}  // namespace psh::testutil
