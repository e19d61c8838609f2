#include "nuchain/system.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace nuchain {

FinSystem FinSystem::make(std::vector<std::string> names,
                          std::vector<std::vector<State>> succ) {
  if (succ.size() != names.size())
    throw SystemError("state/successor table size mismatch");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw SystemError("duplicate state name: " + n);
  for (std::size_t s = 0; s < succ.size(); ++s) {
    std::unordered_set<State> dup;
    for (State t : succ[s]) {
      if (t >= names.size())
        throw SystemError("successor out of range in state " + names[s]);
      if (!dup.insert(t).second)
        throw SystemError("duplicate successor " + names[t] + " of state " +
                          names[s]);
    }
  }
  FinSystem sys;
  sys.names_ = std::move(names);
  sys.succ_ = std::move(succ);
  return sys;
}

std::optional<State> FinSystem::find(std::string_view name) const {
  for (State s = 0; s < names_.size(); ++s)
    if (names_[s] == name) return s;
  return std::nullopt;
}

PointedSystem system_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("states") || !j.contains("root"))
    throw SystemError("system JSON needs \"states\" and \"root\"");
  std::vector<std::string> names;
  for (const auto& s : j.at("states")) names.push_back(s.get<std::string>());
  std::unordered_map<std::string, State> index;
  for (State s = 0; s < names.size(); ++s) index[names[s]] = s;
  std::vector<std::vector<State>> succ(names.size());
  if (j.contains("succ")) {
    for (const auto& [from, tos] : j.at("succ").items()) {
      auto it = index.find(from);
      if (it == index.end())
        throw SystemError("succ key is not a state: " + from);
      for (const auto& to : tos) {
        auto jt = index.find(to.get<std::string>());
        if (jt == index.end())
          throw SystemError("successor is not a state: " +
                            to.get<std::string>());
        succ[it->second].push_back(jt->second);
      }
    }
  }
  auto sys = FinSystem::make(std::move(names), std::move(succ));
  auto root = sys.find(j.at("root").get<std::string>());
  if (!root) throw SystemError("root is not a state");
  return PointedSystem{std::move(sys), *root};
}

std::string system_to_json_text(const PointedSystem& x) {
  nlohmann::json j;
  j["states"] = nlohmann::json::array();
  for (State s = 0; s < x.sys.size(); ++s) j["states"].push_back(x.sys.name(s));
  j["succ"] = nlohmann::json::object();
  for (State s = 0; s < x.sys.size(); ++s) {
    if (x.sys.dead(s)) continue;
    auto& lst = j["succ"][x.sys.name(s)];
    for (State t : x.sys.succs(s)) lst.push_back(x.sys.name(t));
  }
  j["root"] = x.sys.name(x.root);
  return j.dump();
}

PointedSystem parent(std::span<const PointedSystem> children) {
  std::vector<std::string> names{"r"};
  std::vector<std::vector<State>> succ{{}};
  for (std::size_t i = 0; i < children.size(); ++i) {
    const auto& c = children[i];
    State base = static_cast<State>(names.size());
    for (State s = 0; s < c.sys.size(); ++s)
      names.push_back(std::to_string(i) + "." + c.sys.name(s));
    for (State s = 0; s < c.sys.size(); ++s) {
      std::vector<State> row;
      for (State t : c.sys.succs(s)) row.push_back(base + t);
      succ.push_back(std::move(row));
    }
    succ[0].push_back(base + c.root);
  }
  return PointedSystem{FinSystem::make(std::move(names), std::move(succ)), 0};
}

PointedSystem parent(std::initializer_list<PointedSystem> children) {
  return parent(std::span<const PointedSystem>(children.begin(), children.size()));
}

PointedSystem dead_system() {
  return PointedSystem{FinSystem::make({"d"}, {{}}), 0};
}

PointedSystem von_neumann(unsigned i) {
  std::vector<std::string> names;
  std::vector<std::vector<State>> succ;
  for (unsigned k = 0; k <= i; ++k) {
    names.push_back("v" + std::to_string(k));
    std::vector<State> row(k);
    for (unsigned j = 0; j < k; ++j) row[j] = j;
    succ.push_back(std::move(row));
  }
  return PointedSystem{FinSystem::make(std::move(names), std::move(succ)),
                       static_cast<State>(i)};
}

PointedSystem von_set(const std::set<unsigned>& r) {
  unsigned top = r.empty() ? 0 : *r.rbegin() + 1;
  std::vector<std::string> names;
  std::vector<std::vector<State>> succ;
  for (unsigned k = 0; k < top; ++k) {
    names.push_back("v" + std::to_string(k));
    std::vector<State> row(k);
    for (unsigned j = 0; j < k; ++j) row[j] = j;
    succ.push_back(std::move(row));
  }
  names.push_back("vset");
  std::vector<State> roots(r.begin(), r.end());
  succ.push_back(std::move(roots));
  return PointedSystem{FinSystem::make(std::move(names), std::move(succ)),
                       static_cast<State>(top)};
}

PointedSystem zermelo(unsigned m) {
  std::vector<std::string> names;
  std::vector<std::vector<State>> succ;
  for (unsigned k = 0; k <= m; ++k) {
    names.push_back("z" + std::to_string(k));
    if (k == 0)
      succ.push_back({});
    else
      succ.push_back({static_cast<State>(k - 1)});
  }
  return PointedSystem{FinSystem::make(std::move(names), std::move(succ)),
                       static_cast<State>(m)};
}

GenSystem von_omega() {
  GenSystem g;
  g.name = "vomega";
  g.root = -1;
  g.enumerate = [](GenState s, std::size_t k) -> std::optional<GenState> {
    if (s < 0) return static_cast<GenState>(k);
    if (k < static_cast<std::size_t>(s)) return static_cast<GenState>(k);
    return std::nullopt;
  };
  g.cover = [](GenState s, unsigned n) {
    std::vector<GenState> out;
    if (s < 0) {
      for (unsigned k = 0; k <= n; ++k) out.push_back(k);
    } else {
      for (GenState k = 0; k < s; ++k) out.push_back(k);
    }
    return out;
  };
  return g;
}

GenSystem rerooted(const GenSystem& g, GenState root) {
  GenSystem h = g;
  h.root = root;
  h.name = g.name + "@" + std::to_string(root);
  return h;
}

GenSystem as_gen(const PointedSystem& x, std::string name) {
  auto shared = std::make_shared<const PointedSystem>(x);
  GenSystem g;
  g.name = std::move(name);
  g.root = shared->root;
  g.enumerate = [shared](GenState s, std::size_t k) -> std::optional<GenState> {
    auto row = shared->sys.succs(static_cast<State>(s));
    if (k < row.size()) return static_cast<GenState>(row[k]);
    return std::nullopt;
  };
  g.cover = [shared](GenState s, unsigned) {
    std::vector<GenState> out;
    for (State t : shared->sys.succs(static_cast<State>(s))) out.push_back(t);
    return out;
  };
  return g;
}

std::pair<FinSystem, State> disjoint_union(const FinSystem& a,
                                           const FinSystem& b) {
  std::vector<std::string> names;
  std::vector<std::vector<State>> succ;
  for (State s = 0; s < a.size(); ++s) {
    names.push_back("L." + a.name(s));
    succ.emplace_back(a.succs(s).begin(), a.succs(s).end());
  }
  State offset = static_cast<State>(a.size());
  for (State s = 0; s < b.size(); ++s) {
    names.push_back("R." + b.name(s));
    std::vector<State> row;
    for (State t : b.succs(s)) row.push_back(offset + t);
    succ.push_back(std::move(row));
  }
  return {FinSystem::make(std::move(names), std::move(succ)), offset};
}

}  // namespace nuchain
