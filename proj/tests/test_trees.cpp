#include "doctest.h"

#include <set>

#include "nuchain/bisim.hpp"
#include "nuchain/chain.hpp"
#include "nuchain/system.hpp"
#include "nuchain/trees.hpp"

using namespace nuchain;

TEST_CASE("complete binary tree levels and restriction") {
  auto bin = complete_binary(5u);
  CHECK(bin.level(0)->size() == 1);
  CHECK((*bin.level(0))[0] == "");
  CHECK(bin.level(3)->size() == 8);
  CHECK(bin.connect(2, 3, "101") == "10");
  CHECK_THROWS_AS(bin.connect(3, 2, "10"), IndexOrder);

  auto lazy = complete_binary(std::nullopt);
  CHECK_FALSE(lazy.max_index.has_value());
  CHECK(lazy.level(4)->size() == 16);
}

TEST_CASE("bit-string encoding") {
  CHECK(bits_encode("") == std::vector<unsigned>{0});
  CHECK(bits_encode("101") == std::vector<unsigned>{0, 2, 3});
  CHECK(bits_encode("000") == std::vector<unsigned>{3});
  CHECK(ordinal_set_text(bits_encode("101")) == "{0,2,3}");
  CHECK_THROWS_AS(bits_encode("102"), ParseError);
  // size and maximum follow the definition
  for (const std::string c : {"", "1", "0110", "11111"}) {
    auto enc = bits_encode(c);
    std::size_t ones = 0;
    for (char b : c) ones += b == '1';
    CHECK(enc.size() == ones + 1);
    CHECK(enc.back() == c.size());
  }
}

TEST_CASE("tidy checks") {
  CHECK(is_tidy(complete_binary(5u)).tidy);

  InverseChain<std::string> broken;
  broken.max_index = 2;
  broken.level = [](unsigned i) -> std::optional<std::vector<std::string>> {
    if (i == 0) return std::vector<std::string>{"r"};
    if (i == 1) return std::vector<std::string>{"a", "b"};
    return std::vector<std::string>{"aa"};
  };
  broken.connect = [](unsigned j, unsigned, const std::string& x) {
    if (j == 0) return std::string("r");
    return x == "aa" ? std::string("a") : x;
  };
  broken.show = [](const std::string& x) { return x; };
  auto rep = is_tidy(broken);
  CHECK_FALSE(rep.tidy);
  REQUIRE(rep.failure.has_value());
  CHECK(rep.failure->first == 1);
  CHECK(rep.failure->second == "b");
  CHECK(rep.limit_note.find("not applicable") != std::string::npos);

  InverseChain<std::string> hollow = broken;
  hollow.level = [](unsigned i) -> std::optional<std::vector<std::string>> {
    if (i == 1) return std::vector<std::string>{};
    if (i == 0) return std::vector<std::string>{"r"};
    return std::vector<std::string>{"aa"};
  };
  CHECK_FALSE(is_tidy(hollow).tidy);

  CHECK(check_channel(self_channel(complete_binary(4u))).ok);
}

TEST_CASE("beta embedding values and laws") {
  Arena arena;
  auto beta = beta_embedding(arena, 4);
  CHECK(arena.text(beta.level_map(0, "")) == "{()}@1");

  // injectivity at length 3, all 8x8 pairs
  auto lvl3 = *beta.source.level(3);
  for (const auto& c : lvl3)
    for (const auto& d : lvl3)
      CHECK((beta.level_map(3, c) == beta.level_map(3, d)) == (c == d));

  // naturality: restriction downstairs, connecting map upstairs
  CHECK(arena.connect(beta.level_map(3, "101"), 3) == beta.level_map(2, "10"));
  CHECK(verify_embedding(beta).ok);
  CHECK_THROWS_AS(beta_embedding(arena, 0), LevelTooLarge);
}

TEST_CASE("restrict lemma spot values and report") {
  // j=1: "1" is a prefix of "10" and the encoded systems agree at ~_2
  CHECK(bisim_at(von_set({0, 1}), von_set({0, 2}), 2));
  // "0" is not a prefix of "10" and the encoded systems differ at ~_2
  CHECK_FALSE(bisim_at(von_set({1}), von_set({0, 2}), 2));

  auto rep = restrict_lemma_check(4, 4);
  CHECK(rep.ok);
  CHECK(rep.checked > 0);
  CHECK_THROWS_AS(restrict_lemma_check(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(restrict_lemma_check(5, 4), std::invalid_argument);
}

TEST_CASE("pad embedding") {
  auto alpha = pad_embedding({0, 2, 4});
  CHECK(alpha.index_map(2) == 4);
  CHECK(alpha.level_map(2, "10") == "1000");
  CHECK(alpha.level_map(2, "00") == "0000");
  CHECK(alpha.level_map(0, "") == "");
  CHECK(verify_embedding(alpha).ok);
  CHECK_THROWS_AS(pad_embedding({2, 2}), NotIncreasing);
  CHECK_THROWS_AS(pad_embedding({3, 1}), NotIncreasing);

  Arena arena;
  auto beta = beta_embedding(arena, 5);
  CHECK(verify_embedding(compose(beta, alpha)).ok);
}

TEST_CASE("channel image sizes and branches") {
  Arena arena;
  auto beta = beta_embedding(arena, 3);
  auto full = self_channel(complete_binary(3u));
  auto img = channel_image(beta, full, 2);
  CHECK(img.level(0).size() == 1);
  CHECK(img.level(1).size() == 1);
  CHECK(img.level(2).size() == 2);
  CHECK(img.level(3).size() == 4);
  CHECK(check_channel(img, 3).ok);
  CHECK(full_branches(img).size() == full_branches(full).size());

  // the image of a one-branch channel has one branch
  Channel<std::string> single{
      complete_binary(3u),
      [](unsigned j) { return std::vector<std::string>{std::string(j, '1')}; }};
  CHECK(full_branches(channel_image(beta, single, 2)).size() == 1);

  // a non-channel input is rejected
  Channel<std::string> bogus{
      complete_binary(3u),
      [](unsigned j) -> std::vector<std::string> {
        if (j == 1) return {"0", "1"};
        return {std::string(j, '0')};
      }};
  CHECK_THROWS_AS(channel_image(beta, bogus, 2), NotAChannel);
}

TEST_CASE("dot export shape") {
  auto bin = complete_binary(3u);
  auto img = channel_image(pad_embedding({0, 2}),
                           self_channel(complete_binary(2u)), 1);
  auto dot = to_dot(img.chain, &img);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("lightblue") != std::string::npos);
  CHECK(to_dot(bin).find("lightblue") == std::string::npos);
}
