#include "doctest.h"

#include "nuchain/bisim.hpp"
#include "nuchain/chain.hpp"
#include "nuchain/system.hpp"

using namespace nuchain;

TEST_CASE("parent of the empty family is a dead point") {
  auto p = parent({});
  CHECK(p.sys.size() == 1);
  CHECK(p.sys.dead(p.root));
}

TEST_CASE("parent of a single dead child is the two-state chain") {
  auto p = parent({parent({})});
  CHECK(p.sys.size() == 2);
  REQUIRE(p.sys.succs(p.root).size() == 1);
  CHECK(p.sys.dead(p.sys.succs(p.root)[0]));
}

TEST_CASE("parent duplicates a repeated child into distinct states") {
  auto x = von_neumann(1);
  auto p = parent({x, x});
  auto r = p.sys.succs(p.root);
  REQUIRE(r.size() == 2);
  CHECK(r[0] != r[1]);
  CHECK(bisimilar(PointedSystem{p.sys, r[0]}, PointedSystem{p.sys, r[1]}));
}

TEST_CASE("embedded children stay bisimilar to the originals") {
  std::vector<PointedSystem> kids{von_neumann(2), zermelo(3), von_set({1, 2})};
  auto p = parent(kids);
  auto r = p.sys.succs(p.root);
  REQUIRE(r.size() == kids.size());
  for (std::size_t k = 0; k < kids.size(); ++k)
    CHECK(bisimilar(PointedSystem{p.sys, r[k]}, kids[k]));
}

TEST_CASE("von neumann systems") {
  CHECK(von_neumann(0).sys.dead(von_neumann(0).root));
  auto v3 = von_neumann(3);
  REQUIRE(v3.sys.succs(v3.root).size() == 3);
  for (unsigned k = 0; k < 3; ++k)
    CHECK(bisimilar(PointedSystem{v3.sys, v3.sys.succs(v3.root)[k]},
                    von_neumann(k)));
  CHECK(v3.sys.size() == 4);  // sharing: states 0..3

  auto v = sim_level(von_neumann(2), von_neumann(3));
  REQUIRE(v.level.has_value());
  CHECK(*v.level == 3);
}

TEST_CASE("von set systems") {
  CHECK(von_set({}).sys.dead(von_set({}).root));
  auto s = von_set({0, 2});
  auto r = s.sys.succs(s.root);
  REQUIRE(r.size() == 2);
  CHECK(bisimilar(PointedSystem{s.sys, r[0]}, von_neumann(0)));
  CHECK(bisimilar(PointedSystem{s.sys, r[1]}, von_neumann(2)));
  CHECK_FALSE(bisimilar(von_set({1}), von_neumann(2)));
}

TEST_CASE("zermelo numerals") {
  CHECK(zermelo(0).sys.dead(zermelo(0).root));
  CHECK(bisimilar(zermelo(1), von_neumann(1)));
  auto v = sim_level(zermelo(2), von_neumann(2));
  REQUIRE(v.level.has_value());
  CHECK(*v.level == 2);
  auto z = zermelo(5);
  for (State s = 0; s < z.sys.size(); ++s)
    CHECK(z.sys.succs(s).size() <= 1);
}

TEST_CASE("von omega projections agree with the diagonal") {
  Arena arena;
  auto vw = von_omega();
  CHECK(arena.text(arena.project(vw, 1)) == "{()}@1");
  CHECK(arena.text(arena.project(vw, 2)) == "{{},{()}}@2");
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(arena.project(vw, n) == arena.project(von_neumann(n), n));
}

TEST_CASE("json round trip and validation") {
  const char* text =
      R"({"states":["s0","s1","s2"],"succ":{"s0":["s1","s2"],"s1":["s1"]},"root":"s0"})";
  auto x = system_from_json_text(text);
  CHECK(x.sys.size() == 3);
  CHECK(x.sys.succs(x.root).size() == 2);
  auto again = system_from_json_text(system_to_json_text(x));
  CHECK(bisimilar(x, again));
  CHECK(again.sys.name(again.root) == "s0");

  CHECK_THROWS_AS(system_from_json_text(
                      R"({"states":["a"],"succ":{"a":["a","a"]},"root":"a"})"),
                  SystemError);  // duplicates are rejected
  CHECK_THROWS_AS(system_from_json_text(
                      R"({"states":["a"],"succ":{"a":["b"]},"root":"a"})"),
                  SystemError);  // successor outside the state set
  CHECK_THROWS_AS(
      system_from_json_text(R"({"states":["a"],"succ":{},"root":"b"})"),
      SystemError);  // root outside the state set
  CHECK_THROWS_AS(
      system_from_json_text(R"({"states":["a","a"],"succ":{},"root":"a"})"),
      SystemError);  // duplicate state names
  CHECK_THROWS_AS(system_from_json_text("not json"), ParseError);
}

TEST_CASE("disjoint union keeps both halves intact") {
  auto a = von_neumann(2);
  auto b = zermelo(2);
  auto [joint, off] = disjoint_union(a.sys, b.sys);
  CHECK(joint.size() == a.sys.size() + b.sys.size());
  for (State s = 0; s < a.sys.size(); ++s)
    CHECK(joint.succs(s).size() == a.sys.succs(s).size());
  for (State s = 0; s < b.sys.size(); ++s) {
    auto row = joint.succs(off + s);
    REQUIRE(row.size() == b.sys.succs(s).size());
    for (std::size_t k = 0; k < row.size(); ++k)
      CHECK(row[k] == off + b.sys.succs(s)[k]);
  }
}

TEST_CASE("generator interface over a finite system") {
  auto g = as_gen(zermelo(2), "z2");
  CHECK(g.enumerate(g.root, 0).has_value());
  CHECK_FALSE(g.enumerate(g.root, 1).has_value());
  Arena arena;
  CHECK(arena.project(g, 4) == arena.project(zermelo(2), 4));
}
