#include "doctest.h"

#include <set>

#include "nuchain/bisim.hpp"
#include "nuchain/system.hpp"

using namespace nuchain;

namespace {

void check_partition_shape(const Partition& p, std::size_t n) {
  std::set<State> seen;
  for (const auto& block : p.blocks) {
    REQUIRE(!block.empty());
    for (State s : block) {
      CHECK(!seen.count(s));
      seen.insert(s);
      CHECK(p.block_of[s] ==
            static_cast<std::uint32_t>(&block - p.blocks.data()));
    }
  }
  CHECK(seen.size() == n);
}

// Replays a distinguishing trace: attacker and defender alternate (the
// defender answers on the opposite side), every move is a real transition
// from the current pair, the length is 2k-1, the final attacker faces a dead
// opponent, and the pair really is ~_{k-1} but not ~_k.
void check_witness(const SimVerdict& v) {
  REQUIRE(v.level.has_value());
  unsigned k = *v.level;
  REQUIRE(v.witness.size() == 2 * k - 1);
  State cur_l = v.left_root, cur_r = v.right_root;
  for (std::size_t m = 0; m < v.witness.size(); ++m) {
    const Move& mv = v.witness[m];
    State expected_from = mv.left ? cur_l : cur_r;
    CHECK(mv.from == expected_from);
    bool real = false;
    for (State t : v.joint.succs(mv.from)) real = real || t == mv.to;
    CHECK(real);
    if (m % 2 == 1) CHECK(v.witness[m - 1].left != mv.left);  // reply side
    (mv.left ? cur_l : cur_r) = mv.to;
  }
  const Move& last = v.witness.back();
  CHECK(v.joint.dead(last.left ? cur_r : cur_l));
  Refinement r(v.joint);
  CHECK(r.same_at(v.left_root, v.right_root, k - 1));
  CHECK_FALSE(r.same_at(v.left_root, v.right_root, k));
}

}  // namespace

TEST_CASE("approximant at zero is the single block") {
  auto [joint, off] = disjoint_union(von_neumann(3).sys, zermelo(4).sys);
  (void)off;
  auto p = approximant(joint, 0);
  CHECK(p.blocks.size() == 1);
  check_partition_shape(p, joint.size());
}

TEST_CASE("kernel of ~_3 on v_3 against itself has four blocks") {
  auto v3 = von_neumann(3);
  auto [joint, off] = disjoint_union(v3.sys, v3.sys);
  auto p = approximant(joint, 3);
  CHECK(p.blocks.size() == 4);
  check_partition_shape(p, joint.size());
  for (State s = 0; s < v3.sys.size(); ++s) CHECK(p.same(s, off + s));
}

TEST_CASE("v_2 and z_2 share a block at round one and split at two") {
  auto v2 = von_neumann(2);
  auto z2 = zermelo(2);
  auto [joint, off] = disjoint_union(v2.sys, z2.sys);
  Refinement r(joint);
  CHECK(r.same_at(v2.root, off + z2.root, 1));
  CHECK_FALSE(r.same_at(v2.root, off + z2.root, 2));
}

TEST_CASE("bisimilar basics") {
  for (unsigned i = 0; i <= 5; ++i)
    CHECK(bisimilar(von_neumann(i), von_neumann(i)));
  CHECK_FALSE(bisimilar(von_neumann(2), von_neumann(3)));
  CHECK(bisimilar(zermelo(1), von_neumann(1)));
}

TEST_CASE("sim_level of consecutive ordinals") {
  for (unsigned i = 0; i <= 6; ++i) {
    auto v = sim_level(von_neumann(i), von_neumann(i + 1));
    REQUIRE(v.level.has_value());
    CHECK(*v.level == i + 1);
    check_witness(v);
    CHECK(bisim_at(von_neumann(i), von_neumann(i + 1), i));  // tight below
  }
}

TEST_CASE("sim_level on equal and on split pairs") {
  auto self = sim_level(von_set({0, 2}), von_set({0, 2}));
  CHECK_FALSE(self.level.has_value());
  CHECK(self.witness.empty());

  auto v = sim_level(von_neumann(2), zermelo(2));
  REQUIRE(v.level.has_value());
  CHECK(*v.level == 2);
  check_witness(v);
  CHECK(!v.witness_text().empty());
}

TEST_CASE("witnesses replay on asymmetric systems") {
  auto x = system_from_json_text(
      R"({"states":["a","b","c"],"succ":{"a":["b"],"b":["c"]},"root":"a"})");
  auto y = system_from_json_text(
      R"({"states":["p","q"],"succ":{"p":["q"]},"root":"p"})");
  auto v = sim_level(x, y);
  REQUIRE(v.level.has_value());
  CHECK(*v.level == 2);
  check_witness(v);
  CHECK(bisim_at(x, y, *v.level - 1));
}

TEST_CASE("approximants stabilize within the state bound") {
  auto x = von_set({0, 1, 3});
  Refinement r(x.sys);
  CHECK(r.fixpoint_round() <= x.sys.size());
  auto beyond = approximant(x.sys, 40);
  CHECK(beyond.block_of == r.at(r.fixpoint_round()).block_of);
}
