#include "nuchain/omega.hpp"

#include <algorithm>
#include <set>

namespace nuchain {

struct OmegaBranch::Cache {
  const Arena* arena = nullptr;
  std::vector<std::optional<Elem>> levels;
};

OmegaBranch::OmegaBranch(PointedSystem x)
    : backing_(std::make_shared<const std::variant<PointedSystem, GenSystem>>(
          std::move(x))),
      cache_(std::make_shared<Cache>()) {}

OmegaBranch::OmegaBranch(GenSystem g)
    : backing_(std::make_shared<const std::variant<PointedSystem, GenSystem>>(
          std::move(g))),
      cache_(std::make_shared<Cache>()) {}

bool OmegaBranch::finite() const {
  return std::holds_alternative<PointedSystem>(*backing_);
}

const PointedSystem* OmegaBranch::fin() const {
  return std::get_if<PointedSystem>(backing_.get());
}

const GenSystem* OmegaBranch::gen() const {
  return std::get_if<GenSystem>(backing_.get());
}

unsigned OmegaBranch::max_depth() const {
  if (const auto* g = gen()) return g->max_depth;
  return std::numeric_limits<unsigned>::max();
}

std::string OmegaBranch::describe() const {
  if (const auto* g = gen()) return g->name;
  const auto* x = fin();
  return x->sys.name(x->root) + " (" + std::to_string(x->sys.size()) +
         " states)";
}

Elem OmegaBranch::level(Arena& arena, unsigned n) const {
  if (cache_->arena != &arena) {
    cache_->arena = &arena;
    cache_->levels.clear();
  }
  if (cache_->levels.size() <= n) cache_->levels.resize(n + 1);
  if (!cache_->levels[n]) {
    if (const auto* g = gen())
      cache_->levels[n] = arena.project(*g, n);
    else
      cache_->levels[n] = arena.project(*fin(), n);
  }
  return *cache_->levels[n];
}

std::vector<std::string> OmegaBranch::display(Arena& arena,
                                              unsigned upto) const {
  std::vector<std::string> out;
  for (unsigned n = 0; n <= upto; ++n) out.push_back(arena.text(level(arena, n)));
  return out;
}

OmegaBranch branch_of(PointedSystem x) { return OmegaBranch(std::move(x)); }
OmegaBranch branch_of(GenSystem g) { return OmegaBranch(std::move(g)); }

std::string EqVerdict::text() const {
  switch (kind) {
    case Kind::Equal:
      return "equal";
    case Kind::EqualUpTo:
      return "equal up to depth " + std::to_string(depth);
    case Kind::DistinguishedAt:
      return "distinguished at level " + std::to_string(depth);
  }
  return {};
}

std::string EqVerdict::json() const {
  switch (kind) {
    case Kind::Equal:
      return R"({"kind":"equal","exact":true})";
    case Kind::EqualUpTo:
      return R"({"kind":"equal_up_to","depth":)" + std::to_string(depth) + "}";
    case Kind::DistinguishedAt:
      return R"({"kind":"distinguished_at","level":)" + std::to_string(depth) +
             "}";
  }
  return {};
}

EqVerdict branch_eq(Arena& arena, const OmegaBranch& b, const OmegaBranch& c,
                    unsigned depth) {
  if (b.finite() && c.finite()) {
    auto v = sim_level(*b.fin(), *c.fin());
    if (!v.level) return {EqVerdict::Kind::Equal, 0, true};
    return {EqVerdict::Kind::DistinguishedAt, *v.level, true};
  }
  for (unsigned n = 0; n <= depth; ++n) {
    if (!(b.level(arena, n) == c.level(arena, n)))
      return {EqVerdict::Kind::DistinguishedAt, n, true};
  }
  return {EqVerdict::Kind::EqualUpTo, depth, false};
}

BranchSet make_branch_set(Arena& arena, std::vector<OmegaBranch> branches,
                          unsigned depth) {
  BranchSet out;
  out.dedup_depth = depth;
  for (auto& b : branches) {
    bool dup = false;
    for (const auto& kept : out.members) {
      auto v = branch_eq(arena, kept, b, depth);
      if (!v.exact) out.exact = false;
      if (v.holds()) {
        dup = true;
        break;
      }
    }
    if (!dup) out.members.push_back(std::move(b));
  }
  return out;
}

std::string SuccVerdict::text() const {
  switch (kind) {
    case Kind::Successor:
      return "successor (exact)";
    case Kind::NotSuccessor:
      return "not a successor (exact)";
    case Kind::FailsAt:
      return "fails at level " + std::to_string(index);
    case Kind::ConsistentUpTo:
      return "consistent up to depth " + std::to_string(index);
  }
  return {};
}

std::string SuccVerdict::json() const {
  switch (kind) {
    case Kind::Successor:
      return R"({"kind":"successor","exact":true})";
    case Kind::NotSuccessor:
      return R"({"kind":"not_successor","exact":true})";
    case Kind::FailsAt:
      return R"({"kind":"fails_at","level":)" + std::to_string(index) + "}";
    case Kind::ConsistentUpTo:
      return R"({"kind":"consistent_up_to","depth":)" +
             std::to_string(index) + "}";
  }
  return {};
}

SuccVerdict succ_check(Arena& arena, const OmegaBranch& a, const OmegaBranch& b,
                       unsigned depth) {
  // b_j in a_{j+1} for all j < depth.
  for (unsigned j = 0; j < depth; ++j) {
    if (!arena.contains(a.level(arena, j + 1), b.level(arena, j)))
      return {SuccVerdict::Kind::FailsAt, j};
  }
  if (a.finite()) {
    // The successor set of p_omega(x) is {p_omega(y) | x ~> y}; test b
    // against each.
    const auto* x = a.fin();
    bool all_exact = true;
    for (State y : x->sys.succs(x->root)) {
      auto v = branch_eq(arena, b, branch_of(PointedSystem{x->sys, y}), depth);
      if (v.kind == EqVerdict::Kind::Equal)
        return {SuccVerdict::Kind::Successor, 0};
      if (!v.exact) all_exact = false;
    }
    if (all_exact) return {SuccVerdict::Kind::NotSuccessor, 0};
  }
  return {SuccVerdict::Kind::ConsistentUpTo, depth};
}

std::vector<OmegaBranch> branch_successors(Arena& arena, const OmegaBranch& a,
                                           unsigned depth) {
  const auto* x = a.fin();
  if (!x)
    throw std::invalid_argument(
        "exact successor sets need a finite backing");
  std::vector<OmegaBranch> raw;
  for (State y : x->sys.succs(x->root))
    raw.push_back(branch_of(PointedSystem{x->sys, y}));
  return make_branch_set(arena, std::move(raw), depth).members;
}

Channel<Elem> range(Arena& arena, const BranchSet& u) {
  Channel<Elem> c;
  c.chain = final_chain_view(arena, std::nullopt);
  Arena* a = &arena;
  auto members = u.members;
  c.level = [a, members](unsigned n) {
    std::vector<Elem> out;
    for (const auto& b : members) {
      Elem e = b.level(*a, n);
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
  };
  return c;
}

Channel<Elem> cover_channel(Arena& arena, const GenSystem& g) {
  Channel<Elem> c;
  c.chain = final_chain_view(arena, std::nullopt);
  Arena* a = &arena;
  GenSystem gc = g;
  c.level = [a, gc](unsigned n) {
    std::vector<Elem> out;
    for (GenState y : gc.cover(gc.root, n)) {
      Elem e = a->project_state(gc, y, n);
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
  };
  return c;
}

namespace {

// Walk a channel with finite levels up to `depth`, picking at each level the
// canonically greatest development that still has a development at the
// deepest probed level.
std::vector<Elem> konig_walk(Arena& arena,
                             const std::function<std::vector<Elem>(unsigned)>& level,
                             unsigned depth) {
  std::vector<std::vector<Elem>> lvls;
  for (unsigned n = 0; n <= depth; ++n) {
    lvls.push_back(level(n));
    if (lvls.back().empty())
      throw EmptyChannel("channel level " + std::to_string(n) + " is empty");
  }
  auto viable = [&](Elem x, unsigned n) {
    for (Elem top : lvls[depth])
      if (arena.connect(top, n) == x) return true;
    return false;
  };
  std::vector<Elem> walk{arena.token()};
  for (unsigned n = 0; n < depth; ++n) {
    std::optional<Elem> pick;
    for (Elem x : lvls[n + 1]) {
      if (!(arena.connect(x, n) == walk[n])) continue;
      if (!viable(x, n + 1)) continue;
      if (!pick || arena.compare(*pick, x) == std::strong_ordering::less)
        pick = x;
    }
    if (!pick)
      throw EmptyChannel("no development at level " + std::to_string(n + 1));
    walk.push_back(*pick);
  }
  return walk;
}

bool matches(Arena& arena, const OmegaBranch& b, const std::vector<Elem>& walk) {
  for (unsigned n = 0; n < walk.size(); ++n)
    if (!(b.level(arena, n) == walk[n])) return false;
  return true;
}

}  // namespace

OmegaBranch konig_extract(Arena& arena, const BranchSet& u, unsigned depth) {
  if (u.members.empty()) throw EmptyChannel("empty branch set has empty range");
  auto c = range(arena, u);
  auto walk = konig_walk(arena, c.level, depth);
  for (const auto& b : u.members)
    if (matches(arena, b, walk)) return b;
  throw std::logic_error("extracted branch matches no member");
}

OmegaBranch konig_extract(Arena& arena, const GenSystem& g, unsigned depth) {
  auto c = cover_channel(arena, g);
  auto walk = konig_walk(arena, c.level, depth);
  auto whole = branch_of(g);
  if (matches(arena, whole, walk)) return whole;
  for (GenState y : g.cover(g.root, depth)) {
    auto b = branch_of(rerooted(g, y));
    if (matches(arena, b, walk)) return b;
  }
  throw std::invalid_argument(
      "extraction does not match any presentable branch of the generator");
}

bool branching_at_depth(const PointedSystem&, unsigned) {
  return true;  // finite systems branch finitely everywhere
}

bool branching_at_depth(const GenSystem& g, unsigned i, unsigned probe) {
  std::set<GenState> frontier{g.root};
  std::set<GenState> seen{g.root};
  for (unsigned step = 0; step < i; ++step) {
    std::set<GenState> next;
    for (GenState s : frontier) {
      if (g.enumerate(s, probe))
        return false;  // more than `probe` successors: treated as infinite
      for (std::size_t k = 0; k < probe; ++k) {
        auto t = g.enumerate(s, k);
        if (!t) break;
        if (seen.insert(*t).second) next.insert(*t);
      }
    }
    frontier = std::move(next);
  }
  return true;
}

bool cover_sound(Arena& arena, const GenSystem& g, GenState s, unsigned n,
                 unsigned probe) {
  std::vector<Elem> classes;
  for (GenState c : g.cover(s, n)) classes.push_back(arena.project_state(g, c, n));
  for (std::size_t k = 0; k < probe; ++k) {
    auto t = g.enumerate(s, k);
    if (!t) break;
    Elem p = arena.project_state(g, *t, n);
    if (std::find(classes.begin(), classes.end(), p) == classes.end())
      return false;
  }
  return true;
}

}  // namespace nuchain
