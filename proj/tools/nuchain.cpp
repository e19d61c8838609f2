#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nuchain/bisim.hpp"
#include "nuchain/chain.hpp"
#include "nuchain/omega.hpp"
#include "nuchain/props.hpp"
#include "nuchain/system.hpp"
#include "nuchain/trees.hpp"

namespace {

using namespace nuchain;

using AnySystem = std::variant<PointedSystem, GenSystem>;

// Builtins: dead, v<k>, z<k>, vset:{...}, vomega; anything else is a JSON
// file path.
AnySystem load_system(const std::string& arg) {
  if (arg == "dead") return dead_system();
  if (arg == "vomega") return von_omega();
  if (arg.size() > 1 && (arg[0] == 'v' || arg[0] == 'z') &&
      arg.find_first_not_of("0123456789", 1) == std::string::npos) {
    unsigned k = static_cast<unsigned>(std::stoul(arg.substr(1)));
    return arg[0] == 'v' ? von_neumann(k) : zermelo(k);
  }
  if (arg.rfind("vset:", 0) == 0) {
    std::string body = arg.substr(5);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
      throw ParseError("vset expects vset:{k1,k2,...}");
    std::set<unsigned> r;
    std::stringstream ss(body.substr(1, body.size() - 2));
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) r.insert(static_cast<unsigned>(std::stoul(item)));
    return von_set(r);
  }
  std::ifstream in(arg);
  if (!in) throw SystemError("cannot open system file: " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return system_from_json_text(buf.str());
}

PointedSystem need_finite(const AnySystem& s, const std::string& what) {
  if (const auto* x = std::get_if<PointedSystem>(&s)) return *x;
  throw SystemError(what + " needs a finite system");
}

OmegaBranch to_branch(const AnySystem& s) {
  if (const auto* x = std::get_if<PointedSystem>(&s)) return branch_of(*x);
  return branch_of(std::get<GenSystem>(s));
}

std::string branch_lines(Arena& arena, const OmegaBranch& b, unsigned depth) {
  std::string out = "[";
  auto lv = b.display(arena, depth);
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + lv[i] + "\"";
  }
  return out + "]";
}

int cmd_levels(unsigned n, bool count_only) {
  Arena arena;
  std::uint64_t count = 0;
  arena.for_each_level(n, [&](Elem e) {
    ++count;
    if (!count_only) std::cout << arena.text(e) << "\n";
  });
  std::cout << "count: " << count << "\n";
  return 0;
}

int cmd_project(const std::string& sys, unsigned n, bool as_json) {
  Arena arena;
  AnySystem s = load_system(sys);
  Elem e = std::holds_alternative<PointedSystem>(s)
               ? arena.project(std::get<PointedSystem>(s), n)
               : arena.project(std::get<GenSystem>(s), n);
  if (as_json) {
    nlohmann::json j;
    j["level"] = n;
    j["elem"] = arena.text(e);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << arena.text(e) << "\n";
  }
  return 0;
}

int cmd_bisim(const std::string& xa, const std::string& ya,
              std::optional<unsigned> level) {
  auto x = need_finite(load_system(xa), "bisim");
  auto y = need_finite(load_system(ya), "bisim");
  auto v = sim_level(x, y);
  if (level) {
    bool same = !v.level || *v.level > *level;
    if (same) {
      std::cout << "equivalent at level " << *level << "\n";
      return 0;
    }
    std::cout << "distinguished at level " << *v.level << "\n"
              << "witness: " << v.witness_text() << "\n";
    return 1;
  }
  if (!v.level) {
    std::cout << "bisimilar\n";
    return 0;
  }
  std::cout << "distinguished at level " << *v.level << "\n"
            << "witness: " << v.witness_text() << "\n";
  return 1;
}

int cmd_audit(unsigned j, unsigned i) {
  Arena arena;
  auto rep = arena.audit(j, i);
  std::cout << "sigma_{" << j << "," << i << "} : nu_" << i << " -> nu_" << j
            << "\n";
  std::cout << "surjective: " << (rep.surjective ? "yes" : "no");
  if (rep.missed) std::cout << "  (missed " << arena.text(*rep.missed) << ")";
  std::cout << "\ninjective: " << (rep.injective ? "yes" : "no");
  if (rep.collision)
    std::cout << "  (" << arena.text(rep.collision->first) << " and "
              << arena.text(rep.collision->second) << " both map to "
              << arena.text(*rep.collision_image) << ")";
  std::cout << "\n";
  return 0;
}

int cmd_succ(const std::string& arg, unsigned depth, bool as_json) {
  Arena arena;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '(')) {
    Elem e = arena.parse(arg);
    if (arena.is_token(e)) {
      std::cout << "()\n(self-transition at level 0)\n";
      return 0;
    }
    for (Elem b : arena.transition_successors(e))
      std::cout << arena.text(b) << "\n";
    return 0;
  }
  AnySystem s = load_system(arg);
  if (const auto* x = std::get_if<PointedSystem>(&s)) {
    auto a = branch_of(*x);
    auto succs = branch_successors(arena, a, depth);
    std::cout << "successor branches (exact): " << succs.size() << "\n";
    for (const auto& b : succs) {
      std::cout << branch_lines(arena, b, std::min(depth, 6u));
      if (as_json) std::cout << "  " << succ_check(arena, a, b, depth).json();
      std::cout << "\n";
    }
    return 0;
  }
  const auto& g = std::get<GenSystem>(s);
  auto a = branch_of(g);
  auto cov = g.cover(g.root, depth);
  std::cout << "successor branch candidates via cover at depth " << depth
            << " (generator; set may be infinite):\n";
  for (GenState y : cov) {
    auto b = branch_of(rerooted(g, y));
    std::cout << branch_lines(arena, b, std::min(depth, 6u));
    if (as_json) std::cout << "  " << succ_check(arena, a, b, depth).json();
    std::cout << "\n";
  }
  return 0;
}

int cmd_encode(const std::string& bits) {
  std::cout << ordinal_set_text(bits_encode(bits)) << "\n";
  return 0;
}

int cmd_konig(const std::vector<std::string>& spec, unsigned depth,
              bool as_json) {
  Arena arena;
  if (spec.size() == 1 && spec[0] == "vomega") {
    auto b = konig_extract(arena, von_omega(), depth);
    std::cout << "extracted: " << b.describe() << "\n"
              << branch_lines(arena, b, std::min(depth, 8u)) << "\n";
    if (as_json)
      std::cout << branch_eq(arena, b, branch_of(von_omega()), depth).json()
                << "\n";
    return 0;
  }
  std::vector<OmegaBranch> raw;
  for (const auto& a : spec) raw.push_back(to_branch(load_system(a)));
  auto u = make_branch_set(arena, std::move(raw), depth);
  auto b = konig_extract(arena, u, depth);
  std::cout << "extracted member: " << b.describe() << "\n"
            << branch_lines(arena, b, std::min(depth, 8u)) << "\n";
  if (as_json) {
    for (const auto& m : u.members) {
      auto v = branch_eq(arena, b, m, depth);
      if (v.holds()) {
        std::cout << v.json() << "\n";
        break;
      }
    }
  }
  return 0;
}

int cmd_embed_beta(unsigned depth, bool as_json) {
  Arena arena;
  auto beta = beta_embedding(arena, depth);
  nlohmann::json j;
  j["index_map"] = nlohmann::json::array();
  for (unsigned i = 0; i < depth; ++i)
    j["index_map"].push_back({i, beta.index_map(i)});
  j["levels"] = nlohmann::json::array();
  for (unsigned i = 0; i < depth; ++i) {
    nlohmann::json lvl;
    lvl["index"] = i;
    lvl["map"] = nlohmann::json::array();
    auto strings = *beta.source.level(i);
    for (const auto& c : strings)
      lvl["map"].push_back({c, arena.text(beta.level_map(i, c))});
    j["levels"].push_back(lvl);
  }
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_props(const std::string& only, const PropsConfig& cfg) {
  bool all_pass = true;
  for (const auto& name : suite_names()) {
    if (!only.empty() && only != name) continue;
    auto r = run_suite(name, cfg);
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << " (" << r.detail
              << ", " << r.seconds << "s)\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_dot(const std::vector<std::string>& spec, unsigned depth) {
  Arena arena;
  if (spec.empty()) throw ParseError("dot needs an object");
  const std::string& kind = spec[0];
  if (kind == "binary") {
    unsigned lv = spec.size() > 1 ? std::stoul(spec[1]) : 3;
    std::cout << to_dot(complete_binary(lv));
    return 0;
  }
  if (kind == "pad") {
    std::vector<unsigned> subseq;
    for (std::size_t k = 1; k < spec.size(); ++k)
      subseq.push_back(static_cast<unsigned>(std::stoul(spec[k])));
    auto e = pad_embedding(subseq);
    auto img = channel_image(e, self_channel(e.source));
    std::cout << to_dot(e.target, &img);
    return 0;
  }
  if (kind == "beta") {
    unsigned d = spec.size() > 1 ? std::stoul(spec[1]) : 3;
    if (d > 3) throw LevelTooLarge("dot beta renders levels up to 3");
    auto e = beta_embedding(arena, d);
    auto img = channel_image(e, self_channel(e.source));
    std::cout << to_dot(e.target, &img);
    return 0;
  }
  if (kind == "range") {
    std::vector<OmegaBranch> raw;
    for (std::size_t k = 1; k < spec.size(); ++k)
      raw.push_back(to_branch(load_system(spec[k])));
    auto u = make_branch_set(arena, std::move(raw), depth);
    auto ch = range(arena, u);
    // Channel nodes only; every node is a member.
    InverseChain<Elem> view = ch.chain;
    view.max_index = depth;
    auto lv = ch.level;
    view.level = [lv](unsigned i) -> std::optional<std::vector<Elem>> {
      return lv(i);
    };
    Channel<Elem> hl{view, lv};
    std::cout << to_dot(view, &hl, depth);
    return 0;
  }
  throw ParseError("unknown dot object: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"final-chain workbench for the finite powerset functor"};
  app.require_subcommand(1);

  unsigned n = 0, j = 0, i = 0, depth = kDefaultDepth;
  bool count_only = false, as_json = false;
  std::string sysa, sysb, elem_or_sys, bits, suite;
  std::optional<unsigned> level;
  std::vector<std::string> spec;
  PropsConfig cfg;

  auto* levels = app.add_subcommand("levels", "enumerate nu_n (n <= 4)");
  levels->add_option("n", n, "level index")->required();
  levels->add_flag("--count", count_only, "print only the count");

  auto* project = app.add_subcommand("project", "coalgebra projection p_n");
  project->add_option("system", sysa, "builtin or JSON file")->required();
  project->add_option("n", n, "level")->required();
  project->add_flag("--json", as_json, "JSON output");

  auto* bisim = app.add_subcommand("bisim", "bisimilarity / approximants");
  bisim->add_option("x", sysa)->required();
  bisim->add_option("y", sysb)->required();
  unsigned level_val = 0;
  auto* lopt = bisim->add_option("--level", level_val, "check ~_k only");

  auto* audit = app.add_subcommand("audit", "connecting map sigma_{j,i}");
  audit->add_option("j", j)->required();
  audit->add_option("i", i)->required();

  auto* succ = app.add_subcommand("succ", "transition successors");
  succ->add_option("elem", elem_or_sys, "level element text or system")
      ->required();
  succ->add_option("--depth", depth, "verification depth");
  succ->add_flag("--json", as_json, "append tagged verdicts");

  auto* encode = app.add_subcommand("encode", "bit-string ordinal encoding");
  encode->add_option("bits", bits)->required();

  auto* konig = app.add_subcommand("konig", "branch extraction");
  konig->add_option("spec", spec, "vomega | systems for a range channel")
      ->required();
  konig->add_option("--depth", depth, "probe depth");
  konig->add_flag("--json", as_json, "append the verification verdict");

  auto* embed = app.add_subcommand("embed", "cofinal embeddings");
  std::string which;
  embed->add_option("which", which, "beta")->required();
  unsigned embed_depth = 8;
  embed->add_option("--depth", embed_depth, "levels to emit");
  embed->add_flag("--json", as_json, "compact JSON");

  auto* props = app.add_subcommand("props", "proposition suites");
  props->add_option("--suite", suite, "run one suite");
  props->add_option("--seed", cfg.seed, "RNG seed");
  props->add_option("--samples", cfg.samples, "sample count");
  props->add_option("--depth", cfg.depth, "verification depth");

  auto* dot = app.add_subcommand("dot", "DOT export of chains/channels");
  dot->add_option("object", spec, "binary d | pad i0 i1.. | beta d | range s..")
      ->required();
  dot->add_option("--depth", depth, "levels to draw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*levels) return cmd_levels(n, count_only);
    if (*project) return cmd_project(sysa, n, as_json);
    if (*bisim) {
      if (lopt->count()) level = level_val;
      return cmd_bisim(sysa, sysb, level);
    }
    if (*audit) return cmd_audit(j, i);
    if (*succ) return cmd_succ(elem_or_sys, depth, as_json);
    if (*encode) return cmd_encode(bits);
    if (*konig) return cmd_konig(spec, depth, as_json);
    if (*embed) {
      if (which != "beta") throw ParseError("only the beta embedding is wired");
      return cmd_embed_beta(embed_depth, as_json);
    }
    if (*props) return cmd_props(suite, cfg);
    if (*dot) return cmd_dot(spec, depth);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
