#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dualbraid/garside.hpp"

using namespace dualbraid;

namespace {

struct Fixture {
  CoxeterGroup g;
  NCLattice L;
  DualMonoid M;
  explicit Fixture(const std::string& spec)
      : g(GroupSpec::parse(spec)), L(g), M(L) {}
  ReflId r(const std::string& nm) const { return reflection_by_name(g, nm); }
};

}  // namespace

TEST_CASE("simple_mult") {
  Fixture f("A3:1,2,3");
  int e = f.L.bottom();
  int t12 = f.L.atom_index(f.r("(1,2)"));
  int t23 = f.L.atom_index(f.r("(2,3)"));
  CHECK(f.M.simple_mult(t12, e) == t12);
  auto prod = f.M.simple_mult(t12, t23);
  REQUIRE(prod.has_value());
  CHECK(element_name(f.g, f.L.element(*prod)) == "(1,2,3)");
  CHECK(!f.M.simple_mult(t12, t12).has_value());
}

TEST_CASE("normal forms distinguish and identify words") {
  Fixture f("A3:1,2,3");
  CHECK(f.M.normal_form({}) == MonoidElt{});
  MonoidElt a = f.M.normal_form({f.r("(1,2)"), f.r("(2,3)")});
  CHECK(a.degree == 2);
  CHECK(a.nf.size() == 1);
  CHECK(element_name(f.g, f.L.element(a.nf[0])) == "(1,2,3)");
  MonoidElt b = f.M.normal_form({f.r("(2,3)"), f.r("(1,2)")});
  CHECK(b.degree == 2);
  CHECK(b.nf.size() == 2);
  CHECK(!(a == b));
}

TEST_CASE("degree-2 normal forms match the congruence-closure oracle") {
  // close each 2-letter word under (t,u) -> (u, t^u) when tu is in NC, and
  // compare the partition with normal-form equality
  Fixture f("A3:1,2,3");
  const int T = f.g.num_reflections();
  auto closure = [&](std::pair<int, int> w) {
    std::set<std::pair<int, int>> cls{w};
    std::vector<std::pair<int, int>> queue{w};
    while (!queue.empty()) {
      auto [t, u] = queue.back();
      queue.pop_back();
      ElemId tu = f.g.mul(f.g.reflection_element(t), f.g.reflection_element(u));
      auto idx = f.L.index_of(tu);
      if (idx && f.L.rank_of(*idx) == 2) {
        std::pair<int, int> nxt{u, f.g.conjugate(t, f.g.reflection_element(u))};
        if (cls.insert(nxt).second) queue.push_back(nxt);
        // and the inverse move
        std::pair<int, int> prv{f.g.conj_by(u, f.g.reflection_element(t)), t};
        if (cls.insert(prv).second) queue.push_back(prv);
      }
    }
    return cls;
  };
  for (int t1 = 0; t1 < T; ++t1)
    for (int u1 = 0; u1 < T; ++u1) {
      auto cls = closure({t1, u1});
      for (int t2 = 0; t2 < T; ++t2)
        for (int u2 = 0; u2 < T; ++u2) {
          bool same_nf = f.M.normal_form({t1, u1}) == f.M.normal_form({t2, u2});
          CHECK(same_nf == (cls.count({t2, u2}) > 0));
        }
    }
}

TEST_CASE("multiplication identities from the Birman-Ko-Lee relations") {
  Fixture f("A3:1,2,3");
  auto atom = [&](const std::string& nm) { return f.M.atom(f.r(nm)); };
  MonoidElt x = f.M.multiply(atom("(1,2)"), atom("(2,3)"));
  CHECK(x == f.M.multiply(atom("(2,3)"), atom("(1,3)")));
  CHECK(x == f.M.multiply(atom("(1,3)"), atom("(1,2)")));
  CHECK(f.M.multiply(atom("(1,2)"), atom("(3,4)")) ==
        f.M.multiply(atom("(3,4)"), atom("(1,2)")));
  CHECK(f.M.multiply(x, f.M.identity_elt()) == x);
}

TEST_CASE("growth series") {
  Fixture a3("A3:1,2,3");
  auto g3 = a3.M.growth_series(3);
  CHECK(g3 == std::vector<Int>{1, 6, 26, 101});
  CHECK(g3[1] == a3.g.num_reflections());

  Fixture a2("A2:1,2");
  CHECK(a2.M.growth_series(3) == std::vector<Int>{1, 3, 7, 15});
  CHECK(a2.L.moebius_polynomial() == std::vector<long>{1, -3, 2});

  for (const char* name : {"A3:1,2,3", "B3:1,2,3", "D4:1,2,3,4"}) {
    Fixture f(name);
    CHECK(f.M.growth_series(6) ==
          series_inverse(f.L.moebius_polynomial(), 6));
  }
}

TEST_CASE("growth series counts the materialized normal forms") {
  Fixture f("A3:1,2,3");
  auto growth = f.M.growth_series(4);
  for (int d = 0; d <= 4; ++d) {
    auto elems = f.M.elements_of_degree(d);
    CHECK(Int(static_cast<long>(elems.size())) == growth[d]);
    std::set<std::vector<int>> distinct;
    for (const auto& m : elems) {
      distinct.insert(m.nf);
      for (std::size_t i = 0; i + 1 < m.nf.size(); ++i)
        CHECK(f.M.left_weighted(m.nf[i], m.nf[i + 1]));
    }
    CHECK(distinct.size() == elems.size());
  }
}

TEST_CASE("fixed growth cross-checks the fixed subposet") {
  for (const char* name : {"A3:1,2,3", "B3:1,2,3"}) {
    Fixture f(name);
    for (int i = 0; i <= f.g.coxeter_order(); ++i) {
      SubPoset fix = f.L.fixed_subposet(i);
      auto poly = f.L.subposet_moebius_polynomial(fix);
      CHECK(f.M.fixed_growth(i, 5) == series_inverse(poly, 5));
    }
    CHECK(f.M.fixed_growth(0, 4) == f.M.growth_series(4));
  }
}

TEST_CASE("normal-form confluence under randomized sliding") {
  Fixture f("A3:1,2,3");
  std::mt19937_64 rng(0xC0FFEE);
  const int T = f.g.num_reflections();
  std::vector<ReflId> word;
  auto rec = [&](auto&& self) -> void {
    if (!word.empty()) {
      MonoidElt nf = f.M.normal_form(word);
      for (int k = 0; k < 50; ++k)
        CHECK(f.M.normal_form_randomized(word, rng) == nf);
    }
    if (word.size() == 4) return;
    for (int t = 0; t < T; ++t) {
      word.push_back(t);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

TEST_CASE("associativity on random triples") {
  for (const char* name : {"A3:1,2,3", "B3:1,2,3"}) {
    Fixture f(name);
    std::mt19937_64 rng(0xA550C);
    const int T = f.g.num_reflections();
    auto random_elt = [&]() {
      std::vector<ReflId> w;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i) w.push_back(static_cast<ReflId>(rng() % T));
      return f.M.normal_form(w);
    };
    for (int k = 0; k < 500; ++k) {
      MonoidElt x = random_elt(), y = random_elt(), z = random_elt();
      CHECK(f.M.multiply(f.M.multiply(x, y), z) ==
            f.M.multiply(x, f.M.multiply(y, z)));
    }
  }
}

TEST_CASE("cancellativity at desk scale (A3, degrees <= 3)") {
  Fixture f("A3:1,2,3");
  std::vector<MonoidElt> elems{f.M.identity_elt()};
  for (int d = 1; d <= 3; ++d)
    for (auto& m : f.M.elements_of_degree(d)) elems.push_back(m);
  for (const MonoidElt& x : elems) {
    std::set<std::vector<int>> left, right;
    for (const MonoidElt& y : elems) {
      left.insert(f.M.multiply(x, y).nf);
      right.insert(f.M.multiply(y, x).nf);
    }
    CHECK(left.size() == elems.size());
    CHECK(right.size() == elems.size());
  }
}

TEST_CASE("divisors of the Garside element are the simples") {
  Fixture f("A3:1,2,3");
  MonoidElt c = f.M.garside_element();
  std::vector<MonoidElt> elems{f.M.identity_elt()};
  for (int d = 1; d <= 3; ++d)
    for (auto& m : f.M.elements_of_degree(d)) elems.push_back(m);
  std::set<std::vector<int>> left_div, right_div, simples;
  for (int s = 0; s < f.L.size(); ++s) simples.insert(f.M.simple_elt(s).nf);
  for (const MonoidElt& a : elems)
    for (const MonoidElt& b : elems) {
      if (f.M.multiply(a, b) == c) {
        left_div.insert(a.nf);
        right_div.insert(b.nf);
      }
    }
  CHECK(left_div == simples);
  CHECK(right_div == simples);
  // divisibility order on the simples is the NC order
  for (int u = 0; u < f.L.size(); ++u)
    for (int v = 0; v < f.L.size(); ++v) {
      bool divides = false;
      for (const MonoidElt& z : elems)
        if (f.M.multiply(f.M.simple_elt(u), z) == f.M.simple_elt(v))
          divides = true;
      CHECK(divides == f.L.leq(u, v));
    }
}

TEST_CASE("conjugation by c preserves left-weighted pairs") {
  for (const char* name : {"A3:1,2,3", "B3:1,2,3"}) {
    Fixture f(name);
    for (int u = 0; u < f.L.size(); ++u)
      for (int v = 0; v < f.L.size(); ++v) {
        if (u == f.L.bottom() || v == f.L.bottom()) continue;
        CHECK(f.M.left_weighted(u, v) ==
              f.M.left_weighted(f.M.conj_simple(u, 1), f.M.conj_simple(v, 1)));
      }
  }
}

TEST_CASE("right divisor search") {
  Fixture f("A3:1,2,3");
  int t12 = f.L.atom_index(f.r("(1,2)"));
  MonoidElt b = f.M.multiply(f.M.simple_elt(t12), f.M.simple_elt(t12));
  CHECK(b.nf.size() == 2);
  CHECK(f.M.right_gcd_with_c(b) == t12);
  CHECK(f.M.right_gcd_with_c(f.M.garside_element()) == f.L.top());
  CHECK(f.M.right_divides(t12, b));
  CHECK(!f.M.right_divides(f.L.atom_index(f.r("(3,4)")), b));
}

TEST_CASE("series inversion oracle") {
  CHECK(series_inverse({1, -1}, 4) == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(series_inverse({1, -6, 10, -5}, 3) == std::vector<Int>{1, 6, 26, 101});
  CHECK_THROWS_AS(series_inverse({2, 1}, 2), std::invalid_argument);
}
