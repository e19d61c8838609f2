#include "nuchain/bisim.hpp"

#include <algorithm>
#include <map>

namespace nuchain {

namespace {

Partition canonical(std::vector<std::uint32_t> block_of, std::size_t n) {
  // Renumber so blocks appear by smallest member.
  std::vector<std::int64_t> remap(n, -1);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (remap[block_of[s]] < 0) remap[block_of[s]] = next++;
    out[s] = static_cast<std::uint32_t>(remap[block_of[s]]);
  }
  Partition p;
  p.block_of = std::move(out);
  p.blocks.resize(next);
  for (std::size_t s = 0; s < n; ++s)
    p.blocks[p.block_of[s]].push_back(static_cast<State>(s));
  return p;
}

}  // namespace

Refinement::Refinement(const FinSystem& sys) {
  const std::size_t n = sys.size();
  rounds_.push_back(canonical(std::vector<std::uint32_t>(n, 0), n));
  for (;;) {
    const Partition& cur = rounds_.back();
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_block;
    std::vector<std::uint32_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> sig;
      for (State t : sys.succs(static_cast<State>(s)))
        sig.push_back(cur.block_of[t]);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      auto [it, fresh] =
          sig_block.emplace(std::move(sig), static_cast<std::uint32_t>(sig_block.size()));
      (void)fresh;
      next[s] = it->second;
    }
    Partition p = canonical(std::move(next), n);
    if (p.block_of == cur.block_of) break;
    rounds_.push_back(std::move(p));
  }
}

std::optional<unsigned> Refinement::split_level(State s, State t) const {
  for (unsigned k = 0; k < rounds_.size(); ++k)
    if (!rounds_[k].same(s, t)) return k;
  return std::nullopt;
}

Partition approximant(const FinSystem& sys, unsigned k) {
  return Refinement(sys).at(k);
}

bool bisim_at(const PointedSystem& x, const PointedSystem& y, unsigned k) {
  auto [joint, off] = disjoint_union(x.sys, y.sys);
  return Refinement(joint).same_at(x.root, off + y.root, k);
}

bool bisimilar(const PointedSystem& x, const PointedSystem& y) {
  auto [joint, off] = disjoint_union(x.sys, y.sys);
  Refinement r(joint);
  return r.same_at(x.root, off + y.root, r.fixpoint_round());
}

namespace {

// split_level as an ordinal where nullopt (bisimilar) is top.
unsigned level_or_top(const Refinement& r, State s, State t, unsigned top) {
  auto l = r.split_level(s, t);
  return l ? *l : top;
}

}  // namespace

SimVerdict sim_level(const PointedSystem& x, const PointedSystem& y) {
  auto [joint, off] = disjoint_union(x.sys, y.sys);
  Refinement r(joint);
  SimVerdict v;
  v.joint = joint;
  v.left_root = x.root;
  v.right_root = off + y.root;
  auto level = r.split_level(v.left_root, v.right_root);
  v.level = level;
  if (!level) return v;

  const unsigned top = r.fixpoint_round() + 2;
  State lcur = v.left_root, rcur = v.right_root;
  for (unsigned l = *level; l >= 1;) {
    // Attacker: a move every reply to which fails at level < l; ties go to
    // the lowest destination state across both sides.
    bool att_left = false;
    State att_to = 0;
    bool found = false;
    for (int side = 0; side < 2; ++side) {
      State from = side == 0 ? lcur : rcur;
      State opp = side == 0 ? rcur : lcur;
      for (State to : joint.succs(from)) {
        bool wins = true;
        for (State reply : joint.succs(opp)) {
          if (level_or_top(r, to, reply, top) >= l) {
            wins = false;
            break;
          }
        }
        if (wins && (!found || to < att_to)) {
          att_left = side == 0;
          att_to = to;
          found = true;
        }
      }
    }
    if (!found) break;  // cannot happen when split_level is correct
    State att_from = att_left ? lcur : rcur;
    State def_from = att_left ? rcur : lcur;
    v.witness.push_back({att_left, att_from, att_to});
    if (l == 1) break;  // opponent is dead, trace complete
    // Defender: the longest-surviving reply (it reaches exactly l-1), ties
    // to the lowest state.
    State best = 0;
    unsigned best_level = 0;
    bool have = false;
    for (State reply : joint.succs(def_from)) {
      unsigned lv = level_or_top(r, att_to, reply, top);
      if (!have || lv > best_level || (lv == best_level && reply < best)) {
        have = true;
        best = reply;
        best_level = lv;
      }
    }
    v.witness.push_back({!att_left, def_from, best});
    lcur = att_left ? att_to : best;
    rcur = att_left ? best : att_to;
    l = best_level;
  }
  return v;
}

std::string SimVerdict::witness_text() const {
  std::string out;
  for (const Move& m : witness) {
    if (!out.empty()) out += "; ";
    out += m.left ? "L " : "R ";
    out += joint.name(m.from) + " -> " + joint.name(m.to);
  }
  if (!witness.empty()) {
    out += witness.back().left ? "; R stuck" : "; L stuck";
  }
  return out;
}

}  // namespace nuchain
