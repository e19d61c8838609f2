#ifndef NUCHAIN_OMEGA_HPP
#define NUCHAIN_OMEGA_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nuchain/bisim.hpp"
#include "nuchain/chain.hpp"
#include "nuchain/system.hpp"
#include "nuchain/trees.hpp"

namespace nuchain {

inline constexpr unsigned kDefaultDepth = 12;
inline constexpr unsigned kDefaultProbe = 64;

// An element of nu_omega: the full branch (p_n(x))_n of a backing system,
// levels computed on demand and cached per arena.  Projection is pure, so
// recomputation is idempotent; confine an arena and the branches evaluated
// against it to one task, as with Arena itself.
class OmegaBranch {
 public:
  explicit OmegaBranch(PointedSystem x);
  explicit OmegaBranch(GenSystem g);

  bool finite() const;
  const PointedSystem* fin() const;
  const GenSystem* gen() const;
  unsigned max_depth() const;
  std::string describe() const;

  Elem level(Arena& arena, unsigned n) const;
  std::vector<std::string> display(Arena& arena, unsigned upto) const;

 private:
  struct Cache;
  std::shared_ptr<const std::variant<PointedSystem, GenSystem>> backing_;
  std::shared_ptr<Cache> cache_;
};

OmegaBranch branch_of(PointedSystem x);
OmegaBranch branch_of(GenSystem g);

// Equality of full branches (Prop on projection kernels): exact for finite
// backings via bisimilarity, else decided up to a depth.
struct EqVerdict {
  enum class Kind { Equal, EqualUpTo, DistinguishedAt } kind;
  unsigned depth = 0;  // probe depth or first distinguishing level
  bool exact = false;  // DistinguishedAt is always exact

  bool holds() const { return kind != Kind::DistinguishedAt; }
  std::string text() const;
  std::string json() const;  // tagged form, e.g. {"kind":"distinguished_at","level":3}
};

EqVerdict branch_eq(Arena& arena, const OmegaBranch& b, const OmegaBranch& c,
                    unsigned depth = kDefaultDepth);

// A finite subset of nu_omega.  Members are pairwise distinguished —
// exactly when all backings are finite, otherwise at or below dedup_depth.
struct BranchSet {
  std::vector<OmegaBranch> members;
  bool exact = true;
  unsigned dedup_depth = 0;
};

BranchSet make_branch_set(Arena& arena, std::vector<OmegaBranch> branches,
                          unsigned depth = kDefaultDepth);

// a ~>_omega b: b_j in a_{j+1} for all j.
struct SuccVerdict {
  enum class Kind {
    Successor,       // exact yes (finite backing, per-successor match)
    NotSuccessor,    // exact no via per-successor comparison
    FailsAt,         // exact no: membership fails at `index`
    ConsistentUpTo,  // membership holds for all j < `index`
  } kind;
  unsigned index = 0;

  bool exact() const { return kind != Kind::ConsistentUpTo; }
  bool holds() const {
    return kind == Kind::Successor || kind == Kind::ConsistentUpTo;
  }
  std::string text() const;
  std::string json() const;
};

SuccVerdict succ_check(Arena& arena, const OmegaBranch& a, const OmegaBranch& b,
                       unsigned depth = kDefaultDepth);

// Exact successor set of a finitely backed branch: branches of the backing
// root's successors, deduplicated.
std::vector<OmegaBranch> branch_successors(Arena& arena, const OmegaBranch& a,
                                           unsigned depth = kDefaultDepth);

// The range channel of a branch set: level i is {b_i | b in U}.
Channel<Elem> range(Arena& arena, const BranchSet& u);

// The cover-projection channel of a generator: level n is
// {p_n(y) | y in cover(root, n)}.
Channel<Elem> cover_channel(Arena& arena, const GenSystem& g);

// Tree-property extraction at aleph_0 (König): walk the channel picking, at
// each level, a development that still has developments at every probed
// deeper level; finite levels plus the backing guarantee extendability.
// The range mode returns a member of U.
OmegaBranch konig_extract(Arena& arena, const BranchSet& u,
                          unsigned depth = kDefaultDepth);
OmegaBranch konig_extract(Arena& arena, const GenSystem& g,
                          unsigned depth = kDefaultDepth);

// <kappa-branching at depth < i for kappa = aleph_0: every state reachable
// in fewer than i steps has finitely many successors.  Trivially true for
// finite systems; generators are probed: an enumerator still alive after
// `probe` successors counts as infinite.
bool branching_at_depth(const PointedSystem& x, unsigned i);
bool branching_at_depth(const GenSystem& g, unsigned i,
                        unsigned probe = kDefaultProbe);

// Cover soundness probe: the first `probe` enumerated successors of s are
// each ~_n-equivalent to some member of cover(s, n).
bool cover_sound(Arena& arena, const GenSystem& g, GenState s, unsigned n,
                 unsigned probe = kDefaultProbe);

}  // namespace nuchain

#endif
