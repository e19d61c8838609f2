#ifndef NUCHAIN_BISIM_HPP
#define NUCHAIN_BISIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuchain/system.hpp"

namespace nuchain {

// Kernel of an approximant ~_k: blocks are disjoint, nonempty, cover all
// states, and are listed by smallest member.
struct Partition {
  std::vector<std::vector<State>> blocks;
  std::vector<std::uint32_t> block_of;

  bool same(State s, State t) const { return block_of[s] == block_of[t]; }
};

// Full refinement history of a system: rounds[k] is the kernel of ~_k, and
// the last round is the fixpoint (bisimilarity).  Global signature
// splitting per round; signatures are successor block *sets* (deduplicated,
// powerset not bag).
class Refinement {
 public:
  explicit Refinement(const FinSystem& sys);

  unsigned fixpoint_round() const {
    return static_cast<unsigned>(rounds_.size()) - 1;
  }
  // Kernel of ~_k; constant from the fixpoint round on.
  const Partition& at(unsigned k) const {
    return rounds_[k < rounds_.size() ? k : rounds_.size() - 1];
  }
  bool same_at(State s, State t, unsigned k) const { return at(k).same(s, t); }
  // Least k with s !~_k t, nullopt when bisimilar.
  std::optional<unsigned> split_level(State s, State t) const;

 private:
  std::vector<Partition> rounds_;
};

// Kernel of ~_k on a (possibly joint) system.
Partition approximant(const FinSystem& sys, unsigned k);

bool bisim_at(const PointedSystem& x, const PointedSystem& y, unsigned k);
bool bisimilar(const PointedSystem& x, const PointedSystem& y);

// One move of a distinguishing trace; states index the joint system.
struct Move {
  bool left;
  State from;
  State to;
};

// Verdict of sim_level: least k with x !~_k y (nullopt = bisimilar).  The
// witness alternates attacker and defender moves over the joint system and
// ends with the attacker entering a dead opponent position; it has
// 2*level - 1 moves.  Ties in move choice go to the lowest state index.
struct SimVerdict {
  std::optional<unsigned> level;
  FinSystem joint;
  State left_root = 0;
  State right_root = 0;
  std::vector<Move> witness;

  std::string witness_text() const;
};

SimVerdict sim_level(const PointedSystem& x, const PointedSystem& y);

}  // namespace nuchain

#endif
