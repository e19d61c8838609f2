#include "doctest.h"

#include "nuchain/bisim.hpp"
#include "nuchain/chain.hpp"
#include "nuchain/omega.hpp"
#include "nuchain/system.hpp"
#include "nuchain/trees.hpp"

using namespace nuchain;

TEST_CASE("branches of basic systems") {
  Arena arena;
  auto d = branch_of(dead_system());
  for (unsigned n = 0; n <= 12; ++n) CHECK(d.level(arena, n) == arena.zero(n));

  auto vw = branch_of(von_omega());
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(vw.level(arena, n) == arena.project(von_neumann(n), n));

  auto a = branch_of(von_neumann(3));
  auto b = branch_of(von_set({0, 1, 2}));
  for (unsigned n = 0; n <= 12; ++n)
    CHECK(a.level(arena, n) == b.level(arena, n));

  auto shown = branch_of(von_neumann(1)).display(arena, 2);
  CHECK(shown == std::vector<std::string>{"()", "{()}@1", "{{}}@2"});
}

TEST_CASE("branch equality verdicts") {
  Arena arena;
  auto v2 = branch_of(von_neumann(2));
  auto v3 = branch_of(von_neumann(3));
  auto e23 = branch_eq(arena, v2, v3);
  CHECK(e23.kind == EqVerdict::Kind::DistinguishedAt);
  CHECK(e23.depth == 3);
  CHECK(e23.exact);

  auto self = branch_eq(arena, v3, v3);
  CHECK(self.kind == EqVerdict::Kind::Equal);
  CHECK(self.exact);

  auto vw = branch_of(von_omega());
  auto w5 = branch_eq(arena, vw, branch_of(von_neumann(5)));
  CHECK(w5.kind == EqVerdict::Kind::DistinguishedAt);
  CHECK(w5.depth == 6);

  auto ww = branch_eq(arena, vw, branch_of(von_omega()), 10);
  CHECK(ww.kind == EqVerdict::Kind::EqualUpTo);
  CHECK(ww.depth == 10);
  CHECK_FALSE(ww.exact);
}

TEST_CASE("branch set deduplication") {
  Arena arena;
  auto u = make_branch_set(
      arena, {branch_of(von_neumann(0)), branch_of(zermelo(0)),
              branch_of(von_neumann(1)), branch_of(zermelo(1)),
              branch_of(von_neumann(2))});
  CHECK(u.members.size() == 3);
  CHECK(u.exact);

  auto w = make_branch_set(arena, {branch_of(von_omega()),
                                   branch_of(von_omega())});
  CHECK(w.members.size() == 1);
  CHECK_FALSE(w.exact);
}

TEST_CASE("successor checks") {
  Arena arena;
  auto vw = branch_of(von_omega());
  auto s5 = succ_check(arena, vw, branch_of(von_neumann(5)), 12);
  CHECK(s5.kind == SuccVerdict::Kind::ConsistentUpTo);
  CHECK(s5.index == 12);

  auto dead = succ_check(arena, branch_of(dead_system()),
                         branch_of(von_neumann(1)), 1);
  CHECK(dead.kind == SuccVerdict::Kind::FailsAt);
  CHECK(dead.index == 0);

  // finite backing decides exactly
  auto v3 = branch_of(von_neumann(3));
  auto yes = succ_check(arena, v3, branch_of(von_neumann(2)), 12);
  CHECK(yes.kind == SuccVerdict::Kind::Successor);
  auto no = succ_check(arena, v3, branch_of(von_neumann(3)), 12);
  CHECK(no.kind == SuccVerdict::Kind::FailsAt);
  CHECK(no.index == 3);  // p_j(v_3) = p_j(v_k) for some k < 3 iff j <= 2
  auto no2 = succ_check(arena, v3, branch_of(zermelo(3)), 12);
  CHECK_FALSE(no2.holds());
  CHECK(no2.exact());
  auto z2 = succ_check(arena, branch_of(zermelo(3)), branch_of(zermelo(2)), 12);
  CHECK(z2.kind == SuccVerdict::Kind::Successor);
}

TEST_CASE("exact successor branch sets") {
  Arena arena;
  auto succs = branch_successors(arena, branch_of(von_neumann(3)));
  CHECK(succs.size() == 3);
  auto unique = branch_successors(arena, branch_of(zermelo(4)));
  REQUIRE(unique.size() == 1);
  CHECK(branch_eq(arena, unique[0], branch_of(zermelo(3))).kind ==
        EqVerdict::Kind::Equal);
  CHECK_THROWS_AS(branch_successors(arena, branch_of(von_omega())),
                  std::invalid_argument);
}

TEST_CASE("range channels") {
  Arena arena;
  auto singleton = make_branch_set(arena, {branch_of(dead_system())});
  auto ch = range(arena, singleton);
  for (unsigned n = 0; n <= 10; ++n) {
    auto lvl = ch.level(n);
    REQUIRE(lvl.size() == 1);
    CHECK(lvl[0] == arena.zero(n));
  }

  auto u = make_branch_set(
      arena, {branch_of(von_neumann(0)), branch_of(von_neumann(1))});
  auto ru = range(arena, u);
  CHECK(ru.level(0) == std::vector<Elem>{arena.token()});
  auto l1 = ru.level(1);
  CHECK(l1.size() == 2);
  // frozen level values, unfolding the projections by hand
  auto texts = [&](unsigned n) {
    std::vector<std::string> out;
    for (Elem e : ru.level(n)) out.push_back(arena.text(e));
    return out;
  };
  CHECK(texts(1) == std::vector<std::string>{"{}@1", "{()}@1"});
  CHECK(texts(2) == std::vector<std::string>{"{}@2", "{{}}@2"});
  CHECK(texts(3) == std::vector<std::string>{"{}@3", "{{}}@3"});
  CHECK(check_channel(ru, 10).ok);
}

TEST_CASE("konig extraction") {
  Arena arena;
  auto single = make_branch_set(arena, {branch_of(von_neumann(2))});
  auto got = konig_extract(arena, single);
  CHECK(branch_eq(arena, got, branch_of(von_neumann(2))).kind ==
        EqVerdict::Kind::Equal);

  auto pair = make_branch_set(
      arena, {branch_of(von_neumann(0)), branch_of(von_neumann(1))});
  auto member = konig_extract(arena, pair);
  bool in = false;
  for (const auto& b : pair.members)
    in = in ||
         branch_eq(arena, member, b).kind == EqVerdict::Kind::Equal;
  CHECK(in);

  auto diag = konig_extract(arena, von_omega(), 12);
  auto same = branch_eq(arena, diag, branch_of(von_omega()), 12);
  CHECK(same.holds());

  BranchSet empty;
  CHECK_THROWS_AS(konig_extract(arena, empty), EmptyChannel);
}

TEST_CASE("branching probes") {
  Arena arena;
  CHECK(branching_at_depth(von_neumann(6), 3));
  CHECK(branching_at_depth(parent({von_neumann(3)}), 12));
  auto vw = von_omega();
  CHECK(branching_at_depth(vw, 0));
  CHECK_FALSE(branching_at_depth(vw, 1));
  CHECK(branching_at_depth(as_gen(zermelo(4), "z4"), 12));
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(cover_sound(arena, vw, vw.root, n));
}

TEST_CASE("verdict serialization text") {
  Arena arena;
  auto v = branch_eq(arena, branch_of(von_neumann(2)),
                     branch_of(von_neumann(3)));
  CHECK(v.text() == "distinguished at level 3");
  auto s = succ_check(arena, branch_of(dead_system()),
                      branch_of(von_neumann(1)), 3);
  CHECK(s.text() == "fails at level 0");
}
