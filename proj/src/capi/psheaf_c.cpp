#include "psheaf.h"

#include <cstdlib>
#include <cstring>

#include "core/checks.hpp"
#include "core/groupspec.hpp"
#include "core/serialize.hpp"

using namespace psh;

struct psh_tower {
  SpaceTowerPtr t;
};

namespace {

thread_local std::string g_last_error;

psh_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
      return PSH_ERR_PARSE;
    case Errc::cap_exceeded:
    case Errc::max_len_exceeded:
      return PSH_ERR_CAP;
    case Errc::invalid_argument:
    case Errc::index_out_of_range:
      return PSH_ERR_INVALID;
    default:
      return PSH_ERR_CHECK;
  }
}

template <typename Fn>
psh_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return PSH_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PSH_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

psh_status output_string(const std::string& s, char** out) {
  *out = copy_out(s);
  if (!*out) {
    g_last_error = "out of memory";
    return PSH_ERR_INTERNAL;
  }
  return PSH_OK;
}

psh_status need(bool ok, const char* msg) {
  if (!ok) {
    g_last_error = msg;
    return PSH_ERR_INVALID;
  }
  return PSH_OK;
}

EqPresheaf build_example(const psh_tower* t, const std::string& name, int dim) {
  if (name == "group-ring") return example_group_ring(t->t);
  GroupPtr top = t->t->groups()->top();
  if (name == "fix") return example_fix(t->t, regular_rep(top));
  if (name == "constant") {
    require(dim >= 0, Errc::invalid_argument, "constant family needs dim >= 0");
    return example_constant(t->t, GroupRep::trivial(top, dim));
  }
  fail(Errc::invalid_argument, "unknown example '" + name + "'");
}

}  // namespace

extern "C" {

const char* psh_last_error(void) { return g_last_error.c_str(); }

const char* psh_version(void) { return "0.1.0"; }

void psh_string_free(char* s) { std::free(s); }

psh_status psh_tower_build(const char* spec, int depth, int cap, psh_tower** out) {
  if (need(spec && out, "spec and out must be non-null") != PSH_OK) return PSH_ERR_INVALID;
  return guarded([&] {
    int use_cap = cap > 0 ? cap : kDefaultCap;
    GroupPtr g = group_from_spec(spec, use_cap);
    int max_depth = static_cast<int>(canonical_normal_chain(g).size()) - 1;
    int use_depth = depth < 0 ? max_depth : depth;
    *out = new psh_tower{canonical_subgroup_tower(std::move(g), use_depth)};
    return PSH_OK;
  });
}

psh_status psh_tower_from_json(const char* json_text, int cap, psh_tower** out) {
  if (need(json_text && out, "json_text and out must be non-null") != PSH_OK)
    return PSH_ERR_INVALID;
  return guarded([&] {
    Json j = Json::parse(json_text);
    *out = new psh_tower{space_tower_from_json(j, cap > 0 ? cap : kDefaultCap)};
    return PSH_OK;
  });
}

void psh_tower_free(psh_tower* t) { delete t; }

int psh_tower_depth(const psh_tower* t) { return t ? t->t->depth() : -1; }

int psh_tower_level_points(const psh_tower* t, int level) {
  if (!t || level < 0 || level > t->t->depth()) return -1;
  return t->t->space(level)->points();
}

int psh_tower_level_orbits(const psh_tower* t, int level) {
  if (!t || level < 0 || level > t->t->depth()) return -1;
  return static_cast<int>(t->t->space(level)->orbit_reps().size());
}

psh_status psh_tower_json(const psh_tower* t, char** out) {
  if (need(t && out, "tower and out must be non-null") != PSH_OK) return PSH_ERR_INVALID;
  return guarded([&] { return output_string(space_tower_to_json(t->t).dump(2), out); });
}

psh_status psh_tower_dot(const psh_tower* t, char** out) {
  if (need(t && out, "tower and out must be non-null") != PSH_OK) return PSH_ERR_INVALID;
  return guarded([&] { return output_string(tower_to_dot(*t->t), out); });
}

psh_status psh_example_json(const psh_tower* t, const char* name, int dim, char** out) {
  if (need(t && name && out, "tower, name, and out must be non-null") != PSH_OK)
    return PSH_ERR_INVALID;
  return guarded(
      [&] { return output_string(presheaf_to_json(build_example(t, name, dim)).dump(2), out); });
}

psh_status psh_example_top_json(const psh_tower* t, const char* name, int dim, char** out) {
  if (need(t && name && out, "tower, name, and out must be non-null") != PSH_OK)
    return PSH_ERR_INVALID;
  return guarded([&] {
    return output_string(sheaf_to_json(build_example(t, name, dim).top_as_sheaf()).dump(2), out);
  });
}

const char* psh_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : check_suite_names()) {
      if (!s.empty()) s += '\n';
      s += n;
    }
    return s;
  }();
  return names.c_str();
}

psh_status psh_check(const psh_tower* t, const char* suite, uint64_t seed, int count,
                     const char* input_json, char** reports_out, int* all_pass) {
  if (need(t && suite && reports_out && all_pass, "tower, suite, and outputs must be non-null") !=
      PSH_OK)
    return PSH_ERR_INVALID;
  return guarded([&] {
    CheckOptions opt;
    opt.tower = t->t;
    opt.seed = seed;
    opt.count = count > 0 ? count : 10;
    if (input_json) opt.input = Json::parse(input_json);

    std::string lines;
    int ok = 1;
    for (const CheckReport& r : run_check_suite(suite, opt)) {
      lines += report_to_json(r).dump();
      lines += '\n';
      if (!r.pass) ok = 0;
    }
    *all_pass = ok;
    return output_string(lines, reports_out);
  });
}

}  // extern "C"
