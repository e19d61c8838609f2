#include "nuchain/trees.hpp"

#include <set>

#include "nuchain/bisim.hpp"

namespace nuchain {

InverseChain<std::string> complete_binary(std::optional<unsigned> levels) {
  if (levels && *levels == 0)
    throw std::invalid_argument("complete binary tree needs at least one level");
  InverseChain<std::string> d;
  d.max_index = levels ? std::optional<unsigned>(*levels - 1) : std::nullopt;
  d.level = [](unsigned j) -> std::optional<std::vector<std::string>> {
    if (j > 20) throw LevelTooLarge("2^j strings is too many to enumerate");
    std::vector<std::string> out;
    out.reserve(std::size_t{1} << j);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << j); ++m) {
      std::string s(j, '0');
      for (unsigned b = 0; b < j; ++b)
        if (m & (std::uint64_t{1} << (j - 1 - b))) s[b] = '1';
      out.push_back(std::move(s));
    }
    return out;
  };
  d.connect = [](unsigned j, unsigned i, const std::string& x) {
    if (j > i || x.size() != i)
      throw IndexOrder("prefix restriction needs j <= i = |x|");
    return x.substr(0, j);
  };
  d.show = [](const std::string& x) { return x.empty() ? "ε" : x; };
  return d;
}

std::vector<unsigned> bits_encode(std::string_view bits) {
  std::vector<unsigned> out;
  for (unsigned j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1')
      out.push_back(j);
    else if (bits[j] != '0')
      throw ParseError("bit strings contain only 0 and 1");
  }
  out.push_back(static_cast<unsigned>(bits.size()));
  return out;
}

std::string ordinal_set_text(const std::vector<unsigned>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

InverseChain<Elem> final_chain_view(Arena& arena,
                                    std::optional<unsigned> max_index) {
  InverseChain<Elem> d;
  d.max_index = max_index;
  Arena* a = &arena;
  d.level = [a](unsigned i) -> std::optional<std::vector<Elem>> {
    if (i > Arena::kMaxLevel) return std::nullopt;
    return a->level(i);
  };
  d.connect = [a](unsigned j, unsigned i, const Elem& x) {
    if (a->level_of(x) != i) throw IndexOrder("node level does not match index");
    return a->connect(x, j);
  };
  d.show = [a](const Elem& x) { return a->text(x); };
  return d;
}

CofinalEmbedding<std::string, std::string> pad_embedding(
    const std::vector<unsigned>& subseq) {
  if (subseq.empty()) throw NotIncreasing("empty index sequence");
  for (std::size_t k = 0; k + 1 < subseq.size(); ++k)
    if (subseq[k] >= subseq[k + 1])
      throw NotIncreasing("index sequence must be strictly increasing");
  CofinalEmbedding<std::string, std::string> e;
  unsigned m = static_cast<unsigned>(subseq.size()) - 1;
  e.source = complete_binary(m + 1);
  e.target = complete_binary(subseq.back() + 1);
  e.index_map = [subseq](unsigned n) { return subseq.at(n); };
  e.level_map = [subseq](unsigned n, const std::string& c) {
    std::string d(subseq.at(n), '0');
    for (unsigned k = 0; k < n; ++k) d[subseq[k]] = c[k];
    return d;
  };
  return e;
}

CofinalEmbedding<std::string, Elem> beta_embedding(Arena& arena, unsigned depth) {
  if (depth == 0 || depth > 12)
    throw LevelTooLarge("beta embedding supported for 1..12 levels");
  CofinalEmbedding<std::string, Elem> e;
  e.source = complete_binary(depth);
  e.target = final_chain_view(arena, depth);
  e.index_map = [](unsigned j) { return j + 1; };
  Arena* a = &arena;
  e.level_map = [a](unsigned j, const std::string& c) {
    auto enc = bits_encode(c);
    return a->project(von_set(std::set<unsigned>(enc.begin(), enc.end())),
                      j + 1);
  };
  auto rep = verify_embedding(e, depth - 1);
  if (!rep.ok)
    throw std::logic_error("beta embedding failed verification: " + rep.detail);
  return e;
}

RestrictReport restrict_lemma_check(unsigned jmax, unsigned imax) {
  if (jmax > imax || imax > 6)
    throw std::invalid_argument("restrict lemma check needs jmax <= imax <= 6");
  RestrictReport rep;
  auto binary = complete_binary(imax + 1);
  auto vs = [](const std::string& bits) {
    auto enc = bits_encode(bits);
    return von_set(std::set<unsigned>(enc.begin(), enc.end()));
  };
  for (unsigned j = 0; j <= jmax; ++j) {
    auto cs = *binary.level(j);
    for (unsigned i = j; i <= imax; ++i) {
      auto ds = *binary.level(i);
      for (const auto& c : cs) {
        auto xc = vs(c);
        for (const auto& d : ds) {
          bool prefix = d.compare(0, j, c) == 0;
          bool simi = bisim_at(xc, vs(d), j + 1);
          ++rep.checked;
          if (prefix != simi) {
            rep.violations.push_back("j=" + std::to_string(j) +
                                     " i=" + std::to_string(i) + " c=" + c +
                                     " d=" + d);
          }
        }
      }
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace nuchain
