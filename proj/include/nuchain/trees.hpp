#ifndef NUCHAIN_TREES_HPP
#define NUCHAIN_TREES_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nuchain/chain.hpp"
#include "nuchain/errors.hpp"

namespace nuchain {

// Inverse chain over indices 0..max_index, or over omega when max_index is
// empty.  `level` may decline to enumerate an index (e.g. final-chain levels
// beyond 4); operations that need full levels reject such indices.
template <class Node>
struct InverseChain {
  std::optional<unsigned> max_index;
  std::function<std::optional<std::vector<Node>>(unsigned)> level;
  std::function<Node(unsigned j, unsigned i, const Node&)> connect;
  std::function<std::string(const Node&)> show;
};

// Levelwise subsets of a chain, downward closed and extendable upward.
template <class Node>
struct Channel {
  InverseChain<Node> chain;
  std::function<std::vector<Node>(unsigned)> level;
};

template <class S, class T>
struct CofinalEmbedding {
  InverseChain<S> source;
  InverseChain<T> target;
  std::function<unsigned(unsigned)> index_map;
  std::function<T(unsigned, const S&)> level_map;
};

namespace detail {

template <class Node>
std::vector<Node> need_level(const InverseChain<Node>& d, unsigned i) {
  auto l = d.level(i);
  if (!l)
    throw std::invalid_argument("chain level " + std::to_string(i) +
                                " is not enumerable");
  return *l;
}

// Highest index to inspect: the chain's own for finite chains, else the probe.
template <class Node>
unsigned probe_top(const InverseChain<Node>& d, unsigned probe) {
  return d.max_index ? *d.max_index : probe;
}

}  // namespace detail

// The complete binary tree: level j holds all bit strings of length j,
// connecting maps restrict to a prefix.  `levels` counts the levels
// (indices 0..levels-1); empty means omega.
InverseChain<std::string> complete_binary(std::optional<unsigned> levels);

// {0,1}^i encoded as a set of ordinals: the 1-positions plus the length.
std::vector<unsigned> bits_encode(std::string_view bits);
std::string ordinal_set_text(const std::vector<unsigned>& s);

// The materialized final chain as an inverse chain; levels above
// Arena::kMaxLevel are not enumerable but still connect.  The arena must
// outlive the returned object.
InverseChain<Elem> final_chain_view(Arena& arena,
                                    std::optional<unsigned> max_index);

struct TidyReport {
  bool tidy = false;
  // Failure site: (level, node text) of an element with no development, or
  // level of a malformed root level.
  std::optional<std::pair<unsigned, std::string>> failure;
  std::string limit_note;
};

// Levelwise surjectivity of connecting maps plus root uniqueness.  The
// limit-extension clause is vacuous for finite chains and for omega (no
// limit index inside the index set) and is reported, not assumed.
template <class Node>
TidyReport is_tidy(const InverseChain<Node>& d, unsigned probe = 8) {
  TidyReport rep;
  rep.limit_note = "limit-extension clause not applicable below omega";
  unsigned top = detail::probe_top(d, probe);
  auto roots = detail::need_level(d, 0);
  if (roots.size() != 1) {
    rep.failure = {0u, roots.empty() ? "(empty level)" : "(multiple roots)"};
    return rep;
  }
  for (unsigned j = 0; j + 1 <= top; ++j) {
    auto lo = detail::need_level(d, j);
    auto hi = detail::need_level(d, j + 1);
    for (const Node& x : lo) {
      bool extended = false;
      for (const Node& y : hi) {
        if (d.connect(j, j + 1, y) == x) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        rep.failure = {j, d.show ? d.show(x) : std::string("(node)")};
        return rep;
      }
    }
  }
  rep.tidy = true;
  return rep;
}

struct ChannelReport {
  bool ok = false;
  std::string detail;
};

// Downward closure and extendability, checked on adjacent levels (the
// general laws follow by composition).  Probes 0..N over omega.
template <class Node>
ChannelReport check_channel(const Channel<Node>& c, unsigned probe = 8) {
  ChannelReport rep;
  unsigned top = detail::probe_top(c.chain, probe);
  for (unsigned j = 0; j + 1 <= top; ++j) {
    auto lo = c.level(j);
    auto hi = c.level(j + 1);
    for (const Node& x : hi) {
      Node down = c.chain.connect(j, j + 1, x);
      if (std::find(lo.begin(), lo.end(), down) == lo.end()) {
        rep.detail = "not downward closed at level " + std::to_string(j + 1);
        return rep;
      }
    }
    for (const Node& y : lo) {
      bool ext = false;
      for (const Node& x : hi) {
        if (c.chain.connect(j, j + 1, x) == y) {
          ext = true;
          break;
        }
      }
      if (!ext) {
        rep.detail = "not extendable from level " + std::to_string(j);
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

// A tidy finite chain is a channel through itself.
template <class Node>
Channel<Node> self_channel(const InverseChain<Node>& d) {
  Channel<Node> c;
  c.chain = d;
  c.level = [d](unsigned i) { return detail::need_level(d, i); };
  return c;
}

struct EmbedReport {
  bool ok = false;
  std::string detail;
};

// Exhaustive check of the cofinal-embedding laws on source levels 0..upto:
// monotone cofinal index map, injective level maps, naturality on adjacent
// indices.
template <class S, class T>
EmbedReport verify_embedding(const CofinalEmbedding<S, T>& e, unsigned probe = 8) {
  EmbedReport rep;
  unsigned top = detail::probe_top(e.source, probe);
  for (unsigned i = 0; i + 1 <= top; ++i) {
    if (e.index_map(i) > e.index_map(i + 1)) {
      rep.detail = "index map not monotone at " + std::to_string(i);
      return rep;
    }
  }
  if (e.source.max_index && e.target.max_index &&
      e.index_map(*e.source.max_index) < *e.target.max_index) {
    rep.detail = "index map not cofinal";
    return rep;
  }
  for (unsigned i = 0; i <= top; ++i) {
    auto lvl = detail::need_level(e.source, i);
    std::vector<T> seen;
    for (const S& x : lvl) {
      T y = e.level_map(i, x);
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) {
        rep.detail = "level map not injective at index " + std::to_string(i);
        return rep;
      }
      seen.push_back(y);
    }
  }
  for (unsigned i = 0; i + 1 <= top; ++i) {
    auto hi = detail::need_level(e.source, i + 1);
    for (const S& y : hi) {
      S x = e.source.connect(i, i + 1, y);
      T lhs = e.target.connect(e.index_map(i), e.index_map(i + 1),
                               e.level_map(i + 1, y));
      if (!(lhs == e.level_map(i, x))) {
        rep.detail = "naturality fails at index " + std::to_string(i + 1);
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

template <class S, class T, class U>
CofinalEmbedding<S, U> compose(const CofinalEmbedding<T, U>& outer,
                               const CofinalEmbedding<S, T>& inner) {
  CofinalEmbedding<S, U> e;
  e.source = inner.source;
  e.target = outer.target;
  auto fi = inner.index_map;
  auto fo = outer.index_map;
  e.index_map = [fi, fo](unsigned i) { return fo(fi(i)); };
  auto li = inner.level_map;
  auto lo = outer.level_map;
  e.level_map = [fi, li, lo](unsigned i, const S& x) {
    return lo(fi(i), li(i, x));
  };
  return e;
}

// Image of a channel under an embedding: level f(i) is the pointwise image
// of B_i; an index between mapped indices takes the connect-image of the
// least mapped index above it (the unique channel satisfying the
// definition).  Throws NotAChannel if B violates the channel laws.
template <class S, class T>
Channel<T> channel_image(const CofinalEmbedding<S, T>& e, const Channel<S>& b,
                         unsigned probe = 8) {
  auto rep = check_channel(b, probe);
  if (!rep.ok) throw NotAChannel("channel_image: " + rep.detail);
  Channel<T> c;
  c.chain = e.target;
  unsigned src_top = detail::probe_top(e.source, probe);
  c.level = [e, b, src_top](unsigned t) {
    std::optional<unsigned> src;
    for (unsigned i = 0; i <= src_top; ++i) {
      if (e.index_map(i) >= t) {
        src = i;
        break;
      }
    }
    if (!src)
      throw NotAChannel("no mapped index at or above " + std::to_string(t));
    std::vector<T> out;
    for (const S& x : b.level(*src)) {
      T y = e.level_map(*src, x);
      if (e.index_map(*src) != t) y = e.target.connect(t, e.index_map(*src), y);
      if (std::find(out.begin(), out.end(), y) == out.end())
        out.push_back(std::move(y));
    }
    return out;
  };
  return c;
}

// Full branches of a channel over a finite chain.  A branch is determined
// by its top-level element; lower components are its connects.
template <class Node>
std::vector<std::vector<Node>> full_branches(const Channel<Node>& c) {
  if (!c.chain.max_index)
    throw std::invalid_argument("full branches only enumerated over finite chains");
  unsigned top = *c.chain.max_index;
  std::vector<std::vector<Node>> out;
  for (const Node& x : c.level(top)) {
    std::vector<Node> branch;
    for (unsigned j = 0; j <= top; ++j) branch.push_back(c.chain.connect(j, top, x));
    out.push_back(std::move(branch));
  }
  return out;
}

// Zero-padding embedding along a strictly increasing index sequence
// i_0 < ... < i_m: the complete binary (m+1)-tree into the complete binary
// (i_m+1)-tree; bit c_k lands at position i_k, zeros elsewhere.
CofinalEmbedding<std::string, std::string> pad_embedding(
    const std::vector<unsigned>& subseq);

// beta: the complete binary tree into the final chain, index map j |-> j+1,
// c |-> p_{j+1}(v{<c>}).  Injectivity and naturality are verified
// exhaustively on construction.
CofinalEmbedding<std::string, Elem> beta_embedding(Arena& arena, unsigned depth);

struct RestrictReport {
  bool ok = false;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
};

// For all j <= jmax, i <= imax with j <= i and all c in {0,1}^j,
// d in {0,1}^i: (c = d restricted to j) iff v{<c>} ~_{j+1} v{<d>}.
RestrictReport restrict_lemma_check(unsigned jmax, unsigned imax);

// DOT rendering: nodes grouped by level, connect edges drawn downward,
// channel members highlighted.
template <class Node>
std::string to_dot(const InverseChain<Node>& d,
                   const Channel<Node>* highlight = nullptr,
                   unsigned probe = 8) {
  unsigned top = detail::probe_top(d, probe);
  std::string out = "digraph chain {\n  rankdir=BT;\n  node [shape=box];\n";
  std::vector<std::vector<Node>> lvls;
  for (unsigned i = 0; i <= top; ++i) lvls.push_back(detail::need_level(d, i));
  auto node_id = [](unsigned i, std::size_t k) {
    return "l" + std::to_string(i) + "_" + std::to_string(k);
  };
  for (unsigned i = 0; i <= top; ++i) {
    std::vector<Node> hl;
    if (highlight) hl = highlight->level(i);
    out += "  { rank=same;";
    for (std::size_t k = 0; k < lvls[i].size(); ++k) {
      std::string label = d.show ? d.show(lvls[i][k]) : std::string("·");
      bool mark = std::find(hl.begin(), hl.end(), lvls[i][k]) != hl.end();
      out += " " + node_id(i, k) + " [label=\"" + label + "\"" +
             (mark ? ",style=filled,fillcolor=lightblue" : "") + "];";
    }
    out += " }\n";
  }
  for (unsigned i = 1; i <= top; ++i) {
    for (std::size_t k = 0; k < lvls[i].size(); ++k) {
      Node down = d.connect(i - 1, i, lvls[i][k]);
      auto it = std::find(lvls[i - 1].begin(), lvls[i - 1].end(), down);
      std::size_t dk = static_cast<std::size_t>(it - lvls[i - 1].begin());
      out += "  " + node_id(i, k) + " -> " + node_id(i - 1, dk) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace nuchain

#endif
