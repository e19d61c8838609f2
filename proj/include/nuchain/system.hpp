#ifndef NUCHAIN_SYSTEM_HPP
#define NUCHAIN_SYSTEM_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nuchain/errors.hpp"

namespace nuchain {

using State = std::uint32_t;

// Finite transition system over named states.  Successor lists carry no
// duplicates ("listed without repetition").  Immutable after construction.
class FinSystem {
 public:
  FinSystem() = default;

  // `succ[s]` lists the successors of state s by index.  Throws SystemError
  // on duplicate names, duplicate successors, or out-of-range indices.
  static FinSystem make(std::vector<std::string> names,
                        std::vector<std::vector<State>> succ);

  std::size_t size() const { return names_.size(); }
  const std::string& name(State s) const { return names_[s]; }
  std::optional<State> find(std::string_view name) const;
  std::span<const State> succs(State s) const { return succ_[s]; }
  bool dead(State s) const { return succ_[s].empty(); }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<State>> succ_;
};

struct PointedSystem {
  FinSystem sys;
  State root = 0;
};

// JSON wire format:
//   {"states":["s0",...], "succ":{"s0":["s1",...]}, "root":"s0"}
// States absent from "succ" have no successors.  Duplicate successors are
// rejected.
PointedSystem system_from_json_text(std::string_view text);
std::string system_to_json_text(const PointedSystem& x);

// A parent of the given family: fresh root with one successor per child,
// each an embedded disjoint copy of that child.  The root's successors
// appear in family order, so succs(root)[i] is the embedded root of
// children[i].
PointedSystem parent(std::span<const PointedSystem> children);
PointedSystem parent(std::initializer_list<PointedSystem> children);

PointedSystem dead_system();

// v_i with state sharing: states 0..i, k ~> 0..k-1, root i.  The naive
// disjoint parent construction would need 2^i states.
PointedSystem von_neumann(unsigned i);

// v{R}: a parent of (v_r)_{r in R}, shared states.
PointedSystem von_set(const std::set<unsigned>& r);

// Zermelo numeral: a chain of m+1 states, root ~>^m dead.
PointedSystem zermelo(unsigned m);

// --- finitely presented infinite-branching systems -------------------------

using GenState = std::int64_t;

// A pointed system presented by an enumerator plus per-depth finite covers:
// cover(s, n) lists successors such that every enumerated successor is
// ~_n-equivalent to some cover member.
struct GenSystem {
  std::string name;
  GenState root = 0;
  // enumerate(s, k): k-th successor of s, nullopt once exhausted.
  std::function<std::optional<GenState>(GenState, std::size_t)> enumerate;
  std::function<std::vector<GenState>(GenState, unsigned)> cover;
  unsigned max_depth = std::numeric_limits<unsigned>::max();
};

// v_omega: root ~> v_0, v_1, v_2, ...; cover(root, n) = [v_0..v_n].
// State -1 is the root; state k >= 0 plays v_k (k ~> 0..k-1).
GenSystem von_omega();

// Same system re-rooted at one of its states.
GenSystem rerooted(const GenSystem& g, GenState root);

// View a finite pointed system through the generator interface.
GenSystem as_gen(const PointedSystem& x, std::string name);

// Union with disjoint state spaces; returns the offset of b's states.
std::pair<FinSystem, State> disjoint_union(const FinSystem& a, const FinSystem& b);

}  // namespace nuchain

#endif
