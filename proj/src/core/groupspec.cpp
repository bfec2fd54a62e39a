#include "groupspec.hpp"

#include <algorithm>

namespace psh {

namespace {

int parse_positive(const std::string& s, const std::string& what) {
  require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
          Errc::parse_error, "bad " + what + " '" + s + "'");
  long v = std::stol(s);
  require(v >= 1 && v <= 1000000, Errc::parse_error, what + " out of range");
  return static_cast<int>(v);
}

Perm cycle_on(int degree, int from, int len) {
  std::vector<std::vector<int>> cyc(1);
  for (int i = 0; i < len; ++i) cyc[0].push_back(from + i);
  return Perm::from_cycles(degree, cyc);
}

}  // namespace

GroupPtr group_from_spec(const std::string& spec, int cap) {
  auto colon = spec.find(':');
  require(colon != std::string::npos, Errc::parse_error,
          "group spec must look like kind:params, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string params = spec.substr(colon + 1);
  if (kind == "cyclic") {
    int n = parse_positive(params, "cyclic order");
    if (n == 1) return FiniteGroup::trivial(1);
    return FiniteGroup::close_generators(n, {cycle_on(n, 0, n)}, cap);
  }
  if (kind == "sym") {
    int n = parse_positive(params, "symmetric degree");
    if (n == 1) return FiniteGroup::trivial(1);
    std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
    if (n > 2) gens.push_back(cycle_on(n, 0, n));
    return FiniteGroup::close_generators(n, std::move(gens), cap);
  }
  if (kind == "dihedral") {
    int n = parse_positive(params, "dihedral degree");
    require(n >= 3, Errc::parse_error, "dihedral:n needs n >= 3");
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return FiniteGroup::close_generators(n, {cycle_on(n, 0, n), Perm(std::move(refl))}, cap);
  }
  if (kind == "product") {
    auto comma = params.find(',');
    require(comma != std::string::npos, Errc::parse_error, "product:a,b needs two orders");
    int a = parse_positive(params.substr(0, comma), "product order");
    int b = parse_positive(params.substr(comma + 1), "product order");
    int degree = a + b;
    std::vector<Perm> gens;
    if (a > 1) gens.push_back(cycle_on(degree, 0, a));
    if (b > 1) gens.push_back(cycle_on(degree, a, b));
    if (gens.empty()) return FiniteGroup::trivial(degree);
    return FiniteGroup::close_generators(degree, std::move(gens), cap);
  }
  fail(Errc::parse_error, "unknown group kind '" + kind + "'");
}

std::vector<Subgroup> canonical_normal_chain(GroupPtr g) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> normals;
  for (const auto& s : subs)
    if (is_normal(s)) normals.push_back(s);
  // all_subgroups sorts ascending by (order, members); walk greedily downward.
  std::vector<Subgroup> chain{full_subgroup(g)};
  while (!chain.back().is_trivial()) {
    const Subgroup& cur = chain.back();
    const Subgroup* best = nullptr;
    for (const auto& n : normals) {
      if (n.order() >= cur.order() || !cur.contains_all(n)) continue;
      if (!best || n.order() > best->order()) best = &n;
    }
    chain.push_back(*best);  // the trivial subgroup is always a candidate
  }
  return chain;
}

}  // namespace psh
