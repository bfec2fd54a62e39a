// Command-line front end. Talks to the library exclusively through the C
// surface so it doubles as a smoke test of the shared-library boundary.

#include <CLI11.hpp>
#include <json.hpp>
#include <psheaf.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& context) {
  std::cerr << "psheaf: " << context << ": " << psh_last_error() << "\n";
  std::exit(kExitError);
}

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { psh_string_free(s); }
};

struct OwnedTower {
  psh_tower* t = nullptr;
  ~OwnedTower() { psh_tower_free(t); }
};

struct TowerArgs {
  std::string group;
  std::string tower_file;
  int depth = -1;
  int cap = 0;
};

void add_tower_options(CLI::App* cmd, TowerArgs& args) {
  auto* g = cmd->add_option("--group", args.group,
                            "group spec: cyclic:n, sym:n, dihedral:n, product:a,b");
  auto* t = cmd->add_option("--tower", args.tower_file, "tower JSON file written earlier");
  g->excludes(t);
  cmd->add_option("--depth", args.depth, "tower depth; -1 takes the maximal canonical depth");
  cmd->add_option("--cap", args.cap, "element enumeration cap; 0 takes the default");
}

void build_tower(const TowerArgs& args, OwnedTower& out) {
  if (!args.tower_file.empty()) {
    std::ifstream in(args.tower_file);
    if (!in) {
      std::cerr << "psheaf: cannot open '" << args.tower_file << "'\n";
      std::exit(kExitError);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (psh_tower_from_json(buf.str().c_str(), args.cap, &out.t) != PSH_OK)
      die("loading tower from '" + args.tower_file + "'");
    return;
  }
  if (args.group.empty()) {
    std::cerr << "psheaf: provide --group or --tower\n";
    std::exit(kExitError);
  }
  if (psh_tower_build(args.group.c_str(), args.depth, args.cap, &out.t) != PSH_OK)
    die("building tower for '" + args.group + "'");
}

void write_artifact(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "psheaf: cannot write '" << out_path << "'\n";
    std::exit(kExitError);
  }
  out << text;
}

int cmd_subgroup_space(const TowerArgs& targs, const std::string& out_path,
                       const std::string& format) {
  OwnedTower tower;
  build_tower(targs, tower);
  int depth = psh_tower_depth(tower.t);
  for (int k = 0; k <= depth; ++k) {
    std::cout << "level " << k << ": " << psh_tower_level_points(tower.t, k) << " points, "
              << psh_tower_level_orbits(tower.t, k) << " orbits\n";
  }
  if (!out_path.empty()) {
    OwnedString text;
    if (format == "dot") {
      if (psh_tower_dot(tower.t, &text.s) != PSH_OK) die("rendering tower");
    } else {
      if (psh_tower_json(tower.t, &text.s) != PSH_OK) die("serializing tower");
    }
    write_artifact(text.s, out_path);
  }
  return 0;
}

int cmd_example(const TowerArgs& targs, const std::string& name, int dim, bool top_only,
                const std::string& out_path) {
  OwnedTower tower;
  build_tower(targs, tower);
  OwnedString text;
  psh_status st = top_only ? psh_example_top_json(tower.t, name.c_str(), dim, &text.s)
                           : psh_example_json(tower.t, name.c_str(), dim, &text.s);
  if (st != PSH_OK) die("building example '" + name + "'");

  Json j = Json::parse(text.s);
  if (top_only) {
    std::cerr << "top dims: " << j["stalk_dims"].dump() << "\n";
  } else {
    for (size_t k = 0; k < j["levels"].size(); ++k)
      std::cerr << "level " << k << " dims: " << j["levels"][k]["stalk_dims"].dump() << "\n";
  }
  write_artifact(std::string(text.s) + "\n", out_path);
  return 0;
}

int cmd_check(const TowerArgs& targs, const std::string& suite, uint64_t seed, int count,
              const std::string& in_path, const std::string& out_path) {
  OwnedTower tower;
  build_tower(targs, tower);

  std::optional<std::string> input;
  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in) {
      std::cerr << "psheaf: cannot open '" << in_path << "'\n";
      return kExitError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    input = buf.str();
  }

  OwnedString reports;
  int all_pass = 0;
  if (psh_check(tower.t, suite.c_str(), seed, count, input ? input->c_str() : nullptr,
                &reports.s, &all_pass) != PSH_OK)
    die("running suite '" + suite + "'");
  write_artifact(reports.s, out_path);
  return all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant sheaf computations on towers of finite quotients"};
  app.set_version_flag("--version", psh_version());
  app.require_subcommand(1);

  TowerArgs sa;
  std::string s_out, s_format = "json";
  auto* sub = app.add_subcommand("subgroup-space",
                                 "build the tower of subgroup spaces and print level sizes");
  add_tower_options(sub, sa);
  sub->add_option("--out", s_out, "write the tower artifact here");
  sub->add_option("--format", s_format, "artifact format")
      ->check(CLI::IsMember({"json", "dot"}));

  TowerArgs ea;
  std::string e_name, e_out;
  int e_dim = 1;
  bool e_top = false;
  auto* ex = app.add_subcommand("example", "materialize a reference family as JSON");
  add_tower_options(ex, ea);
  ex->add_option("--name", e_name, "group-ring, fix, or constant")
      ->required()
      ->check(CLI::IsMember({"group-ring", "fix", "constant"}));
  ex->add_option("--dim", e_dim, "dimension of the constant module");
  ex->add_flag("--top", e_top, "emit only the top level as sheaf JSON");
  ex->add_option("--out", e_out, "write the artifact here instead of stdout");

  TowerArgs ca;
  std::string c_suite, c_in, c_out;
  uint64_t c_seed = 1;
  int c_count = 10;
  auto* ck = app.add_subcommand("check", "run a property suite and emit JSON-line reports");
  add_tower_options(ck, ca);
  std::vector<std::string> suites;
  {
    std::istringstream names(psh_suite_names());
    for (std::string line; std::getline(names, line);) suites.push_back(line);
  }
  ck->add_option("--suite", c_suite, "suite name")->required()->check(CLI::IsMember(suites));
  ck->add_option("--seed", c_seed, "seed for randomized instances");
  ck->add_option("--count", c_count, "number of randomized instances");
  ck->add_option("--in", c_in, "sheaf JSON audited by the cocycle suite");
  ck->add_option("--out", c_out, "write reports here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (sub->parsed()) return cmd_subgroup_space(sa, s_out, s_format);
  if (ex->parsed()) return cmd_example(ea, e_name, e_dim, e_top, e_out);
  if (ck->parsed()) return cmd_check(ca, c_suite, c_seed, c_count, c_in, c_out);
  return kExitError;
}
