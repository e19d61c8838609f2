#include "nuchain/chain.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace nuchain {

Arena::Arena() {
  nodes_.push_back(Node{0, {}});  // the root token ()
}

bool Arena::contains(Elem set, Elem x) const {
  const auto& kids = nodes_[set.id].kids;
  return std::find(kids.begin(), kids.end(), x) != kids.end();
}

std::strong_ordering Arena::compare(Elem a, Elem b) const {
  if (a.id == b.id) return std::strong_ordering::equal;
  const auto& ka = nodes_[a.id].kids;
  const auto& kb = nodes_[b.id].kids;
  // Children are stored ascending; walk from the largest down.
  std::size_t ia = ka.size(), ib = kb.size();
  while (ia > 0 && ib > 0) {
    Elem ca = ka[ia - 1], cb = kb[ib - 1];
    if (ca.id != cb.id) {
      auto c = compare(ca, cb);
      if (c != std::strong_ordering::equal) return c;
    }
    --ia;
    --ib;
  }
  if (ia == ib) return std::strong_ordering::equal;  // unreachable: a != b
  return ia < ib ? std::strong_ordering::less : std::strong_ordering::greater;
}

Elem Arena::intern(unsigned level, std::vector<Elem> kids) {
  std::vector<std::uint32_t> key;
  key.reserve(kids.size() + 1);
  key.push_back(level);
  for (Elem k : kids) key.push_back(k.id);
  auto it = table_.find(key);
  if (it != table_.end()) return Elem{it->second};
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{level, std::move(kids)});
  table_.emplace(std::move(key), id);
  return Elem{id};
}

Elem Arena::make_set(unsigned level, std::vector<Elem> kids) {
  if (level == 0) throw std::invalid_argument("level 0 holds only the token ()");
  for (Elem k : kids) {
    if (level_of(k) != level - 1)
      throw std::invalid_argument("member level must be one below the set level");
  }
  std::sort(kids.begin(), kids.end(),
            [](Elem a, Elem b) { return a.id < b.id; });
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  std::sort(kids.begin(), kids.end(), [this](Elem a, Elem b) {
    return compare(a, b) == std::strong_ordering::less;
  });
  return intern(level, std::move(kids));
}

Elem Arena::zero(unsigned n) {
  if (n == 0) return token();
  return make_set(n, {});
}

Elem Arena::connect(Elem a, unsigned j) {
  unsigned i = level_of(a);
  if (j > i) throw IndexOrder("connect goes downward: j <= i required");
  if (j == i) return a;
  if (j == 0) return token();
  std::uint64_t key = (static_cast<std::uint64_t>(a.id) << 16) | j;
  auto it = connect_memo_.find(key);
  if (it != connect_memo_.end()) return it->second;
  std::vector<Elem> kids;
  kids.reserve(members(a).size());
  for (Elem b : members(a)) kids.push_back(connect(b, j - 1));
  Elem r = make_set(j, std::move(kids));
  connect_memo_.emplace(key, r);
  return r;
}

Elem Arena::singleton_tower(Elem a, unsigned m) {
  unsigned lvl = level_of(a);
  if (lvl + m > kMaxLevel)
    throw LevelTooLarge("singleton tower would leave materialized levels");
  Elem cur = a;
  for (unsigned t = 1; t <= m; ++t) cur = make_set(lvl + t, {cur});
  return cur;
}

std::vector<Elem> Arena::transition_successors(Elem a) const {
  if (level_of(a) == 0)
    throw NoPredecessorLevel(
        "level 0 has only the self-transition () ~>_0 ()");
  const auto& kids = nodes_[a.id].kids;
  return {kids.begin(), kids.end()};
}

std::uint64_t Arena::level_count(unsigned n) {
  if (n > kMaxLevel) throw LevelTooLarge("|nu_n| only materialized for n <= 4");
  std::uint64_t t = 1;
  for (unsigned k = 0; k < n; ++k) t = std::uint64_t{1} << t;
  return t;
}

void Arena::for_each_level(unsigned n, const std::function<void(Elem)>& fn) {
  if (n > kMaxLevel) throw LevelTooLarge("nu_n only materialized for n <= 4");
  if (n == 0) {
    fn(token());
    return;
  }
  const auto& prev = level(n - 1);
  std::uint64_t count = std::uint64_t{1} << prev.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Elem> kids;
    for (std::size_t b = 0; b < prev.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) kids.push_back(prev[b]);
    fn(make_set(n, std::move(kids)));
  }
}

const std::vector<Elem>& Arena::level(unsigned n) {
  if (n > kMaxLevel) throw LevelTooLarge("nu_n only materialized for n <= 4");
  if (levels_.size() > n && !levels_[n].empty()) return levels_[n];
  if (levels_.size() <= n) levels_.resize(n + 1);
  std::vector<Elem> out;
  out.reserve(level_count(n));
  for_each_level(n, [&](Elem e) { out.push_back(e); });
  levels_[n] = std::move(out);
  return levels_[n];
}

std::vector<Elem> Arena::project_states(const FinSystem& sys, unsigned n) {
  std::vector<Elem> cur(sys.size(), token());
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<Elem> next(sys.size());
    for (State s = 0; s < sys.size(); ++s) {
      std::vector<Elem> kids;
      for (State t : sys.succs(s)) kids.push_back(cur[t]);
      next[s] = make_set(k, std::move(kids));
    }
    cur = std::move(next);
  }
  return cur;
}

Elem Arena::project(const PointedSystem& x, unsigned n) {
  return project_states(x.sys, n)[x.root];
}

Elem Arena::project_state(const GenSystem& g, GenState s, unsigned n) {
  if (n > g.max_depth)
    throw DepthUnsupported("generator does not support this depth");
  std::map<std::pair<GenState, unsigned>, Elem> memo;
  std::function<Elem(GenState, unsigned)> rec = [&](GenState st,
                                                    unsigned k) -> Elem {
    if (k == 0) return token();
    auto it = memo.find({st, k});
    if (it != memo.end()) return it->second;
    std::vector<Elem> kids;
    for (GenState t : g.cover(st, k - 1)) kids.push_back(rec(t, k - 1));
    Elem r = make_set(k, std::move(kids));
    memo.emplace(std::make_pair(st, k), r);
    return r;
  };
  return rec(s, n);
}

Elem Arena::project(const GenSystem& g, unsigned n) {
  return project_state(g, g.root, n);
}

PointedSystem Arena::to_system(Elem a) const {
  std::vector<Elem> order;
  std::unordered_map<std::uint32_t, State> index;
  std::function<void(Elem)> visit = [&](Elem e) {
    if (index.count(e.id)) return;
    index.emplace(e.id, static_cast<State>(order.size()));
    order.push_back(e);
    for (Elem k : nodes_[e.id].kids) visit(k);
  };
  visit(a);
  std::vector<std::string> names;
  std::vector<std::vector<State>> succ;
  for (Elem e : order) {
    names.push_back("n" + std::to_string(e.id));
    std::vector<State> row;
    if (is_token(e)) {
      row.push_back(index.at(e.id));  // () ~>_0 ()
    } else {
      for (Elem k : nodes_[e.id].kids) row.push_back(index.at(k.id));
    }
    succ.push_back(std::move(row));
  }
  return PointedSystem{FinSystem::make(std::move(names), std::move(succ)),
                       index.at(a.id)};
}

AuditReport Arena::audit(unsigned j, unsigned i) {
  if (j > i) throw IndexOrder("audit needs j <= i");
  if (i > kMaxLevel) throw LevelTooLarge("audit only over materialized levels");
  AuditReport rep;
  rep.j = j;
  rep.i = i;
  rep.injective = true;
  std::unordered_map<std::uint32_t, Elem> preimage;
  level(j);  // ensure target level exists before streaming sources
  for_each_level(i, [&](Elem a) {
    Elem img = connect(a, j);
    auto [it, fresh] = preimage.emplace(img.id, a);
    if (!fresh && rep.injective) {
      rep.injective = false;
      rep.collision = {it->second, a};
      rep.collision_image = img;
    }
  });
  rep.surjective = true;
  for (Elem b : level(j)) {
    if (!preimage.count(b.id)) {
      rep.surjective = false;
      rep.missed = b;
      break;
    }
  }
  return rep;
}

std::string Arena::text(Elem e, bool level_suffix) const {
  if (is_token(e)) return "()";
  std::string out = "{";
  bool first = true;
  for (Elem k : nodes_[e.id].kids) {
    if (!first) out += ",";
    first = false;
    out += text(k, false);
  }
  out += "}";
  if (level_suffix) out += "@" + std::to_string(level_of(e));
  return out;
}

namespace {

struct RawNode {
  bool token = false;
  std::vector<RawNode> kids;
};

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos));
  }

  RawNode node() {
    skip_ws();
    if (eat('(')) {
      if (!eat(')')) fail("expected ')'");
      return RawNode{true, {}};
    }
    if (!eat('{')) fail("expected '{' or '()'");
    RawNode n;
    skip_ws();
    if (eat('}')) return n;
    for (;;) {
      n.kids.push_back(node());
      if (eat(',')) continue;
      if (eat('}')) break;
      fail("expected ',' or '}'");
    }
    return n;
  }
};

}  // namespace

Elem Arena::parse(std::string_view s) {
  Parser p{s};
  RawNode root = p.node();
  p.skip_ws();
  unsigned level = 0;
  if (root.token) {
    if (p.pos != s.size()) p.fail("trailing input after '()'");
    return token();
  }
  if (!p.eat('@')) p.fail("set needs an explicit '@level' suffix");
  p.skip_ws();
  std::size_t start = p.pos;
  while (p.pos < s.size() && s[p.pos] >= '0' && s[p.pos] <= '9') ++p.pos;
  if (p.pos == start) p.fail("expected level number");
  try {
    level = static_cast<unsigned>(
        std::stoul(std::string(s.substr(start, p.pos - start))));
  } catch (const std::out_of_range&) {
    p.fail("level number out of range");
  }
  p.skip_ws();
  if (p.pos != s.size()) p.fail("trailing input after level suffix");
  if (level == 0) throw ParseError("a set cannot sit at level 0");

  std::function<Elem(const RawNode&, unsigned)> build =
      [&](const RawNode& n, unsigned lvl) -> Elem {
    if (n.token) {
      if (lvl != 0) throw ParseError("token () below the stated level");
      return token();
    }
    if (lvl == 0) throw ParseError("set nested too deep for the stated level");
    std::vector<Elem> kids;
    for (const auto& k : n.kids) kids.push_back(build(k, lvl - 1));
    return make_set(lvl, std::move(kids));
  };
  return build(root, level);
}

}  // namespace nuchain
