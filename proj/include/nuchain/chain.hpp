#ifndef NUCHAIN_CHAIN_HPP
#define NUCHAIN_CHAIN_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nuchain/errors.hpp"
#include "nuchain/system.hpp"

namespace nuchain {

// Handle into an Arena: an element of nu_n with explicit level n.  Equal ids
// mean structural equality at equal level, within one arena.  Handles from
// different arenas must not be mixed.
struct Elem {
  std::uint32_t id = 0;
  friend bool operator==(Elem, Elem) = default;
};

struct AuditReport {
  unsigned j = 0;
  unsigned i = 0;
  bool injective = false;
  bool surjective = false;
  // Two distinct sources with equal image, when not injective.
  std::optional<std::pair<Elem, Elem>> collision;
  std::optional<Elem> collision_image;
  // A target with empty preimage, when not surjective.
  std::optional<Elem> missed;
};

// Session-scoped interning arena for the materialized final chain of the
// finite powerset functor.  Ids are stable within a session; across sessions
// only structural equality (text form) is meaningful.  Not thread-safe:
// confine one arena to one task.
class Arena {
 public:
  static constexpr unsigned kMaxLevel = 4;  // |nu_5| = 2^65536

  Arena();

  // --- structure ------------------------------------------------------

  Elem token() const { return Elem{0}; }  // ()@0
  bool is_token(Elem e) const { return e.id == 0; }
  unsigned level_of(Elem e) const { return nodes_[e.id].level; }
  // Members in canonical order (empty for the token).
  std::span<const Elem> members(Elem e) const { return nodes_[e.id].kids; }
  bool contains(Elem set, Elem x) const;
  // Canonical set at `level` with the given members (level-1 elements);
  // deduplicates and orders.
  Elem make_set(unsigned level, std::vector<Elem> kids);

  // Session-independent total order on same-level elements: compare child
  // sequences largest-first; a strict prefix is smaller.  At materialized
  // levels this is exactly the subset-bitmask order used by enumeration.
  std::strong_ordering compare(Elem a, Elem b) const;

  // --- chain operations -------------------------------------------------

  // 0(n): () at 0, the empty set at n >= 1.
  Elem zero(unsigned n);
  // sigma_{j,i} for i = level_of(a); identity at j = i.  Throws IndexOrder
  // when j > i.
  Elem connect(Elem a, unsigned j);
  // m-fold b |-> {b}; result level must stay materialized (<= kMaxLevel).
  Elem singleton_tower(Elem a, unsigned m);
  // a ~>_{n} b for n = level_of(a) >= 1: the member set.  At level 0 the
  // relation is the self-transition () ~>_0 (), not reachable through this
  // operation (NoPredecessorLevel).
  std::vector<Elem> transition_successors(Elem a) const;
  static std::vector<Elem> transition_successors_at_zero() { return {Elem{0}}; }

  // --- levels -----------------------------------------------------------

  // All of nu_n in canonical (enumeration) order; n <= kMaxLevel.
  const std::vector<Elem>& level(unsigned n);
  void for_each_level(unsigned n, const std::function<void(Elem)>& fn);
  static std::uint64_t level_count(unsigned n);  // t(0)=1, t(n+1)=2^t(n)

  // --- coalgebra projections ---------------------------------------------

  // p_n per state: p_0 = (), p_{k+1}(s) = {p_k(t) | s ~> t}.
  std::vector<Elem> project_states(const FinSystem& sys, unsigned n);
  Elem project(const PointedSystem& x, unsigned n);
  // For generators, p_{k+1}(s) is taken over cover(s, k).
  Elem project(const GenSystem& g, unsigned n);
  Elem project_state(const GenSystem& g, GenState s, unsigned n);

  // The element as a pointed system: states are its distinct sub-elements,
  // transitions are membership plus the () self-loop.
  PointedSystem to_system(Elem a) const;

  // Exhaustive injectivity/surjectivity of sigma_{j,i} : nu_i -> nu_j.
  AuditReport audit(unsigned j, unsigned i);

  // --- text form ----------------------------------------------------------

  // "()" for the token; "{e1,e2,...}@n" otherwise, children in canonical
  // order without nested suffixes.
  std::string text(Elem e, bool level_suffix = true) const;
  Elem parse(std::string_view s);

 private:
  struct Node {
    unsigned level;
    std::vector<Elem> kids;
  };

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };

  Elem intern(unsigned level, std::vector<Elem> kids);

  std::vector<Node> nodes_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> table_;
  std::unordered_map<std::uint64_t, Elem> connect_memo_;
  std::vector<std::vector<Elem>> levels_;
};

}  // namespace nuchain

#endif
