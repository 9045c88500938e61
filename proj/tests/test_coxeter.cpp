#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dualbraid/coxeter.hpp"

using namespace dualbraid;

namespace {

// BFS distance in the Cayley graph over all reflections: the definitional
// reflection length, independent of the fixed-space shortcut.
std::map<ElemId, int> bfs_lengths(const CoxeterGroup& g) {
  std::map<ElemId, int> dist{{g.identity(), 0}};
  std::vector<ElemId> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<ElemId> next;
    for (ElemId w : frontier)
      for (int t = 0; t < g.num_reflections(); ++t) {
        ElemId wt = g.mul(w, g.reflection_element(t));
        if (dist.emplace(wt, dist[w] + 1).second) next.push_back(wt);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_CASE("group spec parsing") {
  GroupSpec s = GroupSpec::parse("B3:1,3,2");
  CHECK(s.family == Family::B);
  CHECK(s.rank == 3);
  CHECK(s.coxeter_word == std::vector<int>{1, 3, 2});
  CHECK(s.str() == "B3:1,3,2");
  CHECK(GroupSpec::parse("G2").coxeter_word == std::vector<int>{1, 2});
  CHECK_THROWS_AS(GroupSpec::parse("A0:"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("A8:1,2,3,4,5,6,7,8"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("A3:1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("A3:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("D3:1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("H3:1,2,3"), std::invalid_argument);
}

TEST_CASE("build_group: reflection counts and Coxeter elements") {
  CoxeterGroup a3(GroupSpec::parse("A3:1,2,3"));
  CHECK(a3.num_reflections() == 6);
  CHECK(a_family_permutation(a3, a3.coxeter_element()) ==
        std::vector<int>{2, 3, 4, 1});  // the 4-cycle (1,2,3,4)
  CHECK(element_name(a3, a3.coxeter_element()) == "(1,2,3,4)");

  CoxeterGroup a1(GroupSpec::parse("A1:1"));
  CHECK(a1.num_reflections() == 1);
  CHECK(a1.coxeter_element() == a1.reflection_element(0));

  CoxeterGroup b3(GroupSpec::parse("B3:1,2,3"));
  CHECK(b3.num_reflections() == 9);
  CHECK(b3.coxeter_order() == 6);
  // brute-force closure of the simple reflections under conjugation
  std::set<ElemId> closure;
  for (int i = 0; i < 3; ++i)
    closure.insert(b3.reflection_element(b3.simple_reflection(i)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<ElemId> next = closure;
    for (ElemId t : closure)
      for (ElemId u : closure)
        if (next.insert(b3.mul(b3.mul(u, t), u)).second) grew = true;
    closure = next;
  }
  CHECK(closure.size() == 9);

  CHECK(CoxeterGroup(GroupSpec::parse("D4:1,2,3,4")).num_reflections() == 12);
  CHECK(CoxeterGroup(GroupSpec::parse("G2:1,2")).num_reflections() == 6);
  CHECK(CoxeterGroup(GroupSpec::parse("F4:1,2,3,4")).num_reflections() == 24);
  CHECK(CoxeterGroup(GroupSpec::parse("E6:1,2,3,4,5,6")).num_reflections() == 36);
}

TEST_CASE("conjugation of reflections") {
  CoxeterGroup g(GroupSpec::parse("A3:1,2,3"));
  ReflId t12 = reflection_by_name(g, "(1,2)");
  ReflId t23 = reflection_by_name(g, "(2,3)");
  CHECK(g.conjugate(t12, g.identity()) == t12);
  CHECK(g.conjugate(t12, g.reflection_element(t12)) == t12);
  CHECK(g.conjugate(t12, g.reflection_element(t23)) ==
        reflection_by_name(g, "(1,3)"));

  // t^{w1 w2} = (t^{w1})^{w2}, and conjugation permutes the table
  std::mt19937_64 rng(7);
  std::vector<ElemId> pool{g.identity(), g.coxeter_element()};
  for (int t = 0; t < g.num_reflections(); ++t)
    pool.push_back(g.reflection_element(t));
  for (int k = 0; k < 50; ++k) {
    ElemId w1 = g.mul(pool[rng() % pool.size()], pool[rng() % pool.size()]);
    ElemId w2 = pool[rng() % pool.size()];
    for (int t = 0; t < g.num_reflections(); ++t)
      CHECK(g.conjugate(t, g.mul(w1, w2)) ==
            g.conjugate(g.conjugate(t, w1), w2));
    std::set<ReflId> image;
    for (int t = 0; t < g.num_reflections(); ++t)
      image.insert(g.conjugate(t, w1));
    CHECK(static_cast<int>(image.size()) == g.num_reflections());
  }
}

TEST_CASE("reflection length agrees with the Cayley-graph distance") {
  for (const char* name : {"A3:1,2,3", "B3:1,2,3"}) {
    CoxeterGroup g(GroupSpec::parse(name));
    auto dist = bfs_lengths(g);
    for (const auto& [w, d] : dist) CHECK(g.reflection_length(w) == d);
    CHECK(g.reflection_length(g.identity()) == 0);
    CHECK(g.reflection_length(g.coxeter_element()) == g.rank());
  }
  // random sample of A4 and D4
  for (const char* name : {"A4:1,2,3,4", "D4:1,2,3,4"}) {
    CoxeterGroup g(GroupSpec::parse(name));
    auto dist = bfs_lengths(g);
    std::mt19937_64 rng(11);
    std::vector<ElemId> all;
    for (const auto& [w, d] : dist) all.push_back(w);
    for (int k = 0; k < 500; ++k) {
      ElemId w = all[rng() % all.size()];
      CHECK(g.reflection_length(w) == dist[w]);
    }
    CHECK(g.reflection_length(g.coxeter_element()) == g.rank());
  }
}

TEST_CASE("A3: l_T((1,2)(3,4)) = 2") {
  CoxeterGroup g(GroupSpec::parse("A3:1,2,3"));
  ElemId w = g.mul(g.reflection_element(reflection_by_name(g, "(1,2)")),
                   g.reflection_element(reflection_by_name(g, "(3,4)")));
  CHECK(g.reflection_length(w) == 2);
}

TEST_CASE("rank-2 parabolic indexing") {
  CoxeterGroup a3(GroupSpec::parse("A3:1,2,3"));
  // commuting reflections: m = 2
  auto comm = a3.rank2_order(reflection_by_name(a3, "(1,2)"),
                             reflection_by_name(a3, "(3,4)"));
  CHECK(comm.size() == 2);
  // (1,2),(2,3): the A2 parabolic {(1,2),(2,3),(1,3)}
  auto triple = a3.rank2_order(reflection_by_name(a3, "(1,2)"),
                               reflection_by_name(a3, "(2,3)"));
  CHECK(triple.size() == 3);
  std::set<ReflId> got(triple.begin(), triple.end());
  CHECK(got == std::set<ReflId>{reflection_by_name(a3, "(1,2)"),
                                reflection_by_name(a3, "(2,3)"),
                                reflection_by_name(a3, "(1,3)")});

  CoxeterGroup b3(GroupSpec::parse("B3:1,2,3"));
  auto quad = b3.rank2_order(reflection_by_name(b3, "((1,2))"),
                             reflection_by_name(b3, "[1]"));
  CHECK(quad.size() == 4);

  // the defining relations u_{i+1} u_i = u_i u_{i-1} mod m, in both groups
  for (const CoxeterGroup* g : {&a3, &b3})
    for (int t = 0; t < g->num_reflections(); ++t)
      for (int u = t + 1; u < g->num_reflections(); ++u) {
        auto ord = g->rank2_order(t, u);
        int m = static_cast<int>(ord.size());
        for (int i = 0; i < m; ++i) {
          ElemId lhs = g->mul(g->reflection_element(ord[(i + 1) % m]),
                              g->reflection_element(ord[i % m]));
          ElemId rhs = g->mul(g->reflection_element(ord[i % m]),
                              g->reflection_element(ord[(i + m - 1) % m]));
          CHECK(lhs == rhs);
        }
      }
  CHECK_THROWS_AS(a3.rank2_order(0, 0), std::invalid_argument);
}

TEST_CASE("parabolic closure") {
  CoxeterGroup g(GroupSpec::parse("A3:1,2,3"));
  ParabolicData triv = g.parabolic_closure(g.identity());
  CHECK(triv.reflections.empty());
  CHECK(triv.simples.empty());

  ParabolicData full = g.parabolic_closure(g.coxeter_element());
  CHECK(static_cast<int>(full.reflections.size()) == g.num_reflections());
  CHECK(full.simples.size() == 3);

  // w = (1,2,3): reflections {(1,2),(2,3),(1,3)}, which equals {t : t <= w}
  ElemId w = g.mul(g.reflection_element(reflection_by_name(g, "(1,2)")),
                   g.reflection_element(reflection_by_name(g, "(2,3)")));
  CHECK(element_name(g, w) == "(1,2,3)");
  ParabolicData p = g.parabolic_closure(w);
  std::set<ReflId> expect{reflection_by_name(g, "(1,2)"),
                          reflection_by_name(g, "(2,3)"),
                          reflection_by_name(g, "(1,3)")};
  CHECK(std::set<ReflId>(p.reflections.begin(), p.reflections.end()) == expect);
  std::set<ReflId> below;
  for (int t = 0; t < g.num_reflections(); ++t)
    if (g.leq_T(g.reflection_element(t), w)) below.insert(t);
  CHECK(below == expect);
  // every reflection of the closure fixes Fix(w) pointwise
  for (ReflId t : p.reflections)
    for (const auto& v : p.fixed_space)
      CHECK(g.act(g.reflection_element(t), v) == v);
}

TEST_CASE("solve_in_cone") {
  CoxeterGroup g(GroupSpec::parse("A2:1,2"));
  auto r12 = g.root_q(reflection_by_name(g, "(1,2)"));
  auto r23 = g.root_q(reflection_by_name(g, "(2,3)"));
  auto r13 = g.root_q(reflection_by_name(g, "(1,3)"));
  auto x = solve_in_cone({r12, r23}, r12);
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<Rat>{1, 0});
  auto y = solve_in_cone({r12, r23}, r13);
  REQUIRE(y.has_value());
  CHECK(*y == std::vector<Rat>{1, 1});  // alpha_12 + alpha_23 = alpha_13
  // outside the span
  CoxeterGroup a3(GroupSpec::parse("A3:1,2,3"));
  auto z = solve_in_cone({a3.root_q(reflection_by_name(a3, "(1,2)"))},
                         a3.root_q(reflection_by_name(a3, "(3,4)")));
  CHECK(!z.has_value());
  CHECK_THROWS_AS(solve_in_cone({r12, r12}, r13), std::invalid_argument);
}

TEST_CASE("every element preserves the bilinear form") {
  for (const char* name : {"A3:1,2,3", "B3:1,2,3", "G2:1,2"}) {
    CoxeterGroup g(GroupSpec::parse(name));
    std::mt19937_64 rng(3);
    ElemId w = g.identity();
    for (int k = 0; k < 40; ++k) {
      w = g.mul(w, g.reflection_element(static_cast<ReflId>(
                       rng() % g.num_reflections())));
      CHECK(g.preserves_form(w));
    }
  }
}

TEST_CASE("signed permutation naming round trip in B3") {
  CoxeterGroup g(GroupSpec::parse("B3:1,2,3"));
  std::set<std::string> names;
  for (int t = 0; t < g.num_reflections(); ++t) {
    std::string nm = reflection_name(g, t);
    names.insert(nm);
    CHECK(reflection_by_name(g, nm) == t);
  }
  CHECK(names.count("((1,2))") == 1);
  CHECK(names.count("((1,-3))") == 1);
  CHECK(names.count("[2]") == 1);
  CHECK(element_name(g, g.coxeter_element()) == "[[1,2,3]]");
  CoxeterGroup g2(GroupSpec::parse("B3:1,3,2"));
  CHECK(element_name(g2, g2.coxeter_element()) == "[[1,2,-3]]");
}
