#include "dualbraid/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace dualbraid {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
void parallel_for(int n, int threads, F f) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(threads, n);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

// context cache, shared across criteria
std::map<std::string, std::shared_ptr<GroupContext>>& context_cache() {
  static std::map<std::string, std::shared_ptr<GroupContext>> cache;
  return cache;
}

std::shared_ptr<GroupContext> ctx(const std::string& spec_str) {
  auto& cache = context_cache();
  auto it = cache.find(spec_str);
  if (it != cache.end()) return it->second;
  auto c = std::make_shared<GroupContext>(GroupSpec::parse(spec_str));
  cache.emplace(spec_str, c);
  return c;
}

const std::vector<std::string> kSeriesGroups = {"A2", "A3", "A4", "B2",
                                                "B3", "D4", "G2"};

std::string show(const std::vector<long>& v) { return poly_to_string(v); }

struct Failures {
  std::stringstream ss;
  int count = 0;
  void add(const std::string& msg) {
    if (count < 8) ss << (count ? "; " : "") << msg;
    ++count;
  }
  bool ok() const { return count == 0; }
  std::string str(const std::string& ok_msg) const {
    if (ok()) return ok_msg;
    return ss.str() + (count > 8 ? " (+" + std::to_string(count - 8) + " more)" : "");
  }
};

// ---- criterion 1: Hilbert/growth round trip ----

CheckResult criterion1(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  std::stringstream detail;
  for (const auto& name : kSeriesGroups) {
    auto g0 = Clock::now();
    auto c = ctx(name);
    std::vector<long> mu = c->L->moebius_polynomial();
    std::vector<Int> growth = c->M->growth_series(opts.series_degree);
    std::vector<Int> inv = series_inverse(mu, opts.series_degree);
    if (growth != inv)
      f.add(name + ": growth != inverse Mobius series");
    std::vector<long> hilb = c->P->hilbert();
    // Hilb(A,-q) * Hilb(P,q) = 1 through the series degree
    for (int d = 0; d <= opts.series_degree; ++d) {
      Int s = 0;
      for (int i = 0; i <= d; ++i) {
        int j = d - i;
        if (j >= static_cast<int>(hilb.size())) continue;
        Int a = growth[i] * hilb[j];
        s += (i % 2 == 0) ? a : -a;
      }
      if (s != (d == 0 ? 1 : 0)) {
        f.add(name + ": Hilb(A,-q)Hilb(P,q) != 1 at degree " + std::to_string(d));
        break;
      }
    }
    double gsec = elapsed(g0);
    if (opts.enforce_time_limits && gsec > 10.0)
      f.add(name + ": exceeded the 10s budget");
    if (name == "A3") {
      if (mu != std::vector<long>{1, -6, 10, -5})
        f.add("A3 Mobius polynomial != 1-6q+10q^2-5q^3");
      if (hilb != std::vector<long>{1, 6, 10, 5})
        f.add("A3 Hilb(P) != 1+6q+10q^2+5q^3");
      detail << "A3 growth=" << poly_to_string(growth) << " ";
    }
  }
  return {"criterion-1 growth/Hilbert round trip (Eq. 1/3/4)", f.ok(),
          f.str(detail.str() + "all groups round-trip through degree " +
                std::to_string(opts.series_degree)),
          elapsed(t0)};
}

// ---- criterion 2: facet fixtures ----

// Noncrossing alternating trees on {1..4}: an independent combinatorial
// oracle for the positive clusters of A3 with the long-cycle Coxeter element.
std::vector<std::vector<std::pair<int, int>>> noncrossing_alternating_trees() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) edges.emplace_back(i, j);
  std::vector<std::vector<std::pair<int, int>>> trees;
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      for (std::size_t c = b + 1; c < edges.size(); ++c) {
        std::vector<std::pair<int, int>> tr = {edges[a], edges[b], edges[c]};
        // spanning tree: 3 edges on 4 vertices, connected
        std::vector<int> comp = {0, 1, 2, 3};
        auto find = [&](int x) {
          while (comp[x] != x) x = comp[x] = comp[comp[x]];
          return x;
        };
        bool acyclic = true;
        for (auto [i, j] : tr) {
          int ri = find(i - 1), rj = find(j - 1);
          if (ri == rj) acyclic = false;
          comp[ri] = rj;
        }
        if (!acyclic) continue;
        // noncrossing: no pair a<c<b<d
        bool crossing = false;
        for (auto [i, j] : tr)
          for (auto [k, l] : tr)
            if (i < k && k < j && j < l) crossing = true;
        if (crossing) continue;
        // alternating: at each vertex, neighbours all bigger or all smaller
        bool alternating = true;
        for (int v = 1; v <= 4; ++v) {
          bool smaller = false, bigger = false;
          for (auto [i, j] : tr) {
            if (i == v) bigger = true;
            if (j == v) smaller = true;
          }
          if (smaller && bigger) alternating = false;
        }
        if (alternating) trees.push_back(tr);
      }
  return trees;
}

CheckResult criterion2(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  auto c = ctx("A3:1,2,3");
  const CoxeterGroup& g = *c->g;

  // facets from the tree oracle
  std::set<std::vector<ReflId>> from_trees;
  for (const auto& tr : noncrossing_alternating_trees()) {
    std::vector<ReflId> verts;
    for (auto [i, j] : tr)
      verts.push_back(reflection_by_name(g, "(" + std::to_string(i) + "," +
                                                std::to_string(j) + ")"));
    std::sort(verts.begin(), verts.end(), [&](ReflId x, ReflId y) {
      return c->order.less(y, x);  // descending
    });
    from_trees.insert(verts);
  }
  std::set<std::vector<ReflId>> produced;
  for (int fid : c->C->facet_ids()) produced.insert(c->C->face(fid).verts);
  if (produced != from_trees)
    f.add("A3 facets differ from the noncrossing alternating trees");
  if (produced.size() != 5) f.add("A3 does not have exactly 5 facets");

  // frozen fixture: the five clusters as descending transposition triples
  const std::vector<std::vector<std::string>> frozen = {
      {"(1,4)", "(1,3)", "(1,2)"}, {"(2,3)", "(1,4)", "(1,3)"},
      {"(2,4)", "(2,3)", "(1,4)"}, {"(3,4)", "(1,4)", "(1,2)"},
      {"(3,4)", "(2,4)", "(1,4)"}};
  std::set<std::vector<ReflId>> fixture;
  for (const auto& names : frozen) {
    std::vector<ReflId> verts;
    for (const auto& nm : names) verts.push_back(reflection_by_name(g, nm));
    fixture.insert(verts);
  }
  if (produced != fixture) f.add("A3 facets differ from the frozen fixture");

  // both B3 caption orders are c-compatible reflection orderings
  struct Caption {
    std::string spec;
    std::vector<std::string> names;
  };
  const std::vector<Caption> captions = {
      {"B3:1,2,3",
       {"((1,2))", "((1,3))", "[1]", "((2,3))", "((1,-2))", "[2]", "((1,-3))",
        "((2,-3))", "[3]"}},
      {"B3:1,3,2",
       {"((1,2))", "[3]", "((1,-3))", "((2,-3))", "[1]", "((1,-2))", "((1,3))",
        "[2]", "((2,3))"}}};
  for (const auto& cap : captions) {
    auto bc = ctx(cap.spec);
    ReflOrdering o;
    o.pos.assign(bc->g->num_reflections(), -1);
    for (const auto& nm : cap.names) {
      ReflId t = reflection_by_name(*bc->g, nm);
      o.pos[t] = static_cast<int>(o.by_pos.size());
      o.by_pos.push_back(t);
    }
    if (static_cast<int>(o.by_pos.size()) != bc->g->num_reflections()) {
      f.add(cap.spec + ": caption order does not list every reflection");
      continue;
    }
    if (!verify_reflection_ordering(*bc->g, o).ok)
      f.add(cap.spec + ": caption order is not a reflection ordering");
    if (!verify_c_compatible(*bc->g, *bc->L, o).ok)
      f.add(cap.spec + ": caption order is not c-compatible");
    if (o.by_pos != bc->order.by_pos)
      f.add(cap.spec + ": c-sorting order differs from the caption order");
  }
  double sec = elapsed(t0);
  if (opts.enforce_time_limits && sec > 1.0) f.add("exceeded the 1s budget");
  return {"criterion-2 facet fixtures and B3 caption orders", f.ok(),
          f.str("5 A3 clusters match the tree oracle; B3 captions compatible"),
          sec};
}

// ---- criterion 3: homology vanishing ----

CheckResult criterion3(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  for (const std::string& name : {"A3", "A4", "B3", "D4"}) {
    auto c = ctx(name);
    const NCLattice& L = *c->L;
    std::vector<std::string> bad(L.size());
    parallel_for(L.size(), opts.threads, [&](int w) {
      if (w == L.bottom()) return;
      auto faces = c->C->subcomplex_faces(w);
      auto chain = c->C->chain_complex(faces);
      for (int b : reduced_betti(chain))
        if (b != 0) bad[w] = name + ": nonzero Betti at nc index " + std::to_string(w);
    });
    for (const auto& msg : bad)
      if (!msg.empty()) f.add(msg);
  }
  double sec = elapsed(t0);
  if (opts.enforce_time_limits && sec > 120.0) f.add("exceeded the 2min budget");
  return {"criterion-3 homology of Delta+(w) vanishes", f.ok(),
          f.str("all reduced Betti numbers vanish for A3, A4, B3, D4"), sec};
}

// ---- criterion 4: resolution exactness ----

CheckResult criterion4(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  std::stringstream detail;
  for (const std::string& name : {"A3", "B3"}) {
    auto c = ctx(name);
    Resolution res(*c->M, *c->C);
    ExactnessReport rep = res.graded_exactness(opts.resolution_degree);
    if (!rep.pass) f.add(name + ": graded exactness failed " + rep.details);
    if (!rep.minimal) f.add(name + ": boundary not homogeneous of degree 1");
    if (!rep.d_squared_zero) f.add(name + ": d^2 != 0");
    if (!rep.theta_split) f.add(name + ": Theta blocks not preserved");
    // slice dimensions at the augmentation position tie out with the growth
    std::vector<Int> growth = c->M->growth_series(opts.resolution_degree);
    for (const auto& p : rep.positions)
      if (p.position == -1 && growth[p.degree] != p.dim)
        f.add(name + ": slice dimension differs from the growth series");
    detail << name << " exact through degree " << opts.resolution_degree << "; ";
  }
  double sec = elapsed(t0);
  if (opts.enforce_time_limits && sec > 300.0) f.add("exceeded the 5min budget");
  return {"criterion-4 minimal free resolution is exact", f.ok(),
          f.str(detail.str()), sec};
}

// ---- criterion 5: product-rule oracle equivalence ----

CheckResult criterion5(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  long pairs = 0;
  for (const std::string& name :
       {"A3:1,2,3", "A3:2,1,3", "B3:1,2,3", "B3:1,3,2"}) {
    auto c = ctx(name);
    const PositiveComplex& C = *c->C;
    for (int f1 = 0; f1 < C.num_faces(); ++f1)
      for (int f2 = 0; f2 < C.num_faces(); ++f2) {
        std::vector<ReflId> word = C.face(f1).verts;
        const auto& w2 = C.face(f2).verts;
        word.insert(word.end(), w2.begin(), w2.end());
        DualElement a = c->P->rewrite(word);
        DualElement b = c->P->multiply_geometric(word);
        ++pairs;
        if (a != b) {
          f.add(name + ": rewrite and geometric rule differ on a pair");
          break;
        }
        for (const auto& [fid, coef] : a)
          if (coef != 1 && coef != -1) {
            f.add(name + ": structure constant outside {-1,0,1}");
            break;
          }
      }
  }
  double sec = elapsed(t0);
  if (opts.enforce_time_limits && sec > 120.0) f.add("exceeded the 2min budget");
  return {"criterion-5 geometric product rule == rewriting", f.ok(),
          f.str(std::to_string(pairs) + " basis pairs agree, constants in {-1,0,1}"),
          sec};
}

// ---- criterion 6: basis dimensions ----

CheckResult criterion6(const VerifyOptions&) {
  auto t0 = Clock::now();
  Failures f;
  for (const auto& name : kSeriesGroups) {
    auto c = ctx(name);
    const NCLattice& L = *c->L;
    for (int w = 0; w < L.size(); ++w)
      if (static_cast<long>(c->C->faces_with_nc(w).size()) !=
          std::labs(L.moebius(w)))
        f.add(name + ": #faces with nc=w != |mu(w)| at index " + std::to_string(w));
  }
  return {"criterion-6 dim P_w = |mu_NC(w)|", f.ok(),
          f.str("face counts match Mobius values in all groups"), elapsed(t0)};
}

// ---- criterion 7: Nichols isomorphism ----

CheckResult criterion7(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  for (const std::string& name : {"A3", "B3"}) {
    auto c = ctx(name);
    PsiReport rep = c->N->psi_check(*c->C);
    if (!rep.pass) f.add(name + ": psi check failed: " + rep.details);
    int top = c->N->component_dim(c->g->coxeter_element(), c->g->rank());
    long expect = c->P->hilbert().back();
    if (top != expect) f.add(name + ": dim N_(c,n) != top Hilbert coefficient");
    if (name == "A3" && top != 5) f.add("A3: dim N_(c,3) != 5");
  }
  double sec = elapsed(t0);
  if (opts.enforce_time_limits && sec > 60.0) f.add("exceeded the 1min budget");
  return {"criterion-7 Nichols quotient isomorphism", f.ok(),
          f.str("psi unitriangular, relations vanish, dimensions match"), sec};
}

// ---- criterion 8: cyclic characters ----

CheckResult criterion8(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  struct Cfg {
    std::string name;
    int powers;
  };
  for (const auto& [name, powers] : std::vector<Cfg>{{"A3", 4}, {"B3", 6}}) {
    auto c = ctx(name);
    for (int i = 0; i < powers; ++i) {
      SubPoset fix = c->L->fixed_subposet(i);
      std::vector<long> fixpoly = c->L->subposet_moebius_polynomial(fix);
      std::vector<Int> traces = c->P->cyclic_character(i);
      for (int k = 0; k <= c->g->rank(); ++k) {
        Int rhs = Int(fixpoly[k]) * ((k % 2 == 0) ? 1 : -1);
        if (traces[k] != rhs) {
          f.add(name + " i=" + std::to_string(i) +
                ": trace != fixed-subposet Mobius at degree " + std::to_string(k));
          break;
        }
      }
      std::vector<Int> growth = c->M->fixed_growth(i, 5);
      if (growth != series_inverse(fixpoly, 5))
        f.add(name + " i=" + std::to_string(i) +
              ": fixed growth != inverse fixed Mobius series");
    }
  }
  return {"criterion-8 cyclic characters and fixed growth", f.ok(),
          f.str("traces and fixed growth match the fixed subposets"),
          elapsed(t0)};
}

// ---- criterion 9: top homology of NC ----

CheckResult criterion9(const VerifyOptions&) {
  auto t0 = Clock::now();
  Failures f;
  struct Cfg {
    std::string name;
    long expect;  // -1: use |mu(c)| computed from the lattice
  };
  for (const auto& [name, expect] : std::vector<Cfg>{{"A2", 2}, {"A3", 5}, {"B3", -1}}) {
    auto c = ctx(name);
    TopHomologyReport rep = c->N->nc_top_homology(*c->L);
    if (!rep.pass) f.add(name + ": top homology check failed: " + rep.details);
    long want = expect >= 0 ? expect : rep.mu_invariant;
    if (rep.dim_component != want)
      f.add(name + ": dim N_(c,n) = " + std::to_string(rep.dim_component) +
            " != " + std::to_string(want));
    if (!rep.xi_injective) f.add(name + ": xi not injective");
    if (!rep.lands_in_kernel) f.add(name + ": xi image not in ker Delta");
  }
  return {"criterion-9 xi realizes the top homology of NC", f.ok(),
          f.str("xi injective into ker Delta, dims equal |mu(c)|"), elapsed(t0)};
}

// ---- criterion 10: Orlik-Solomon parallel ----

CheckResult criterion10(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;
  for (const auto& name : kSeriesGroups) {
    auto c = ctx(name);
    OrlikSolomonAlgebra os(*c->g);
    std::mt19937_64 rng(opts.seed ^ std::hash<std::string>{}(name));
    const int T = c->g->num_reflections();
    for (int k = 0; k < 1000; ++k) {
      auto rand_word = [&]() {
        Word w;
        int len = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i)
          w.push_back(c->g->reflection_element(static_cast<ReflId>(rng() % T)));
        return w;
      };
      TensorElement u = {{rand_word(), Rat(1)}};
      TensorElement v = {{rand_word(), Rat(1)}};
      if (os.lambda(os.nichols().shuffle(u, v)) !=
          os.lambda(os.nichols().twisted_shuffle(u, v))) {
        f.add(name + ": lambda(u sh v) != lambda(u tsh v)");
        break;
      }
    }
    if (name == "A3") {
      OsReport rep = os.os_dims();
      if (rep.dim_by_codim != std::vector<long>{1, 6, 11, 6})
        f.add("A3 OS dimensions != (1,6,11,6)");
      if (!rep.matches_moebius) f.add("A3 OS dims != |mu_L| somewhere");
      auto whitney = os.intersection_lattice().whitney();
      if (whitney != std::vector<long>{1, 6, 11, 6})
        f.add("A3 Whitney numbers != (1,6,11,6)");
      if (os.intersection_lattice().size() != 15)
        f.add("A3 intersection lattice size != 15");
    }
  }
  return {"criterion-10 lambda identity and OS dimensions", f.ok(),
          f.str("lambda ignores the twist on 1000 random pairs per group; "
                "A3 OS dims (1,6,11,6)"),
          elapsed(t0)};
}

// ---- criterion 11: property suites ----

CheckResult criterion11(const VerifyOptions& opts) {
  auto t0 = Clock::now();
  Failures f;

  // Hurwitz transitivity, exhaustive on A3 and B3
  for (const std::string& name : {"A3", "B3"}) {
    auto c = ctx(name);
    const NCLattice& L = *c->L;
    for (int w = 0; w < L.size(); ++w) {
      if (w == L.bottom()) continue;
      auto all = L.all_reduced_factorizations(L.element(w));
      auto orbit = L.hurwitz_orbit(all.front());
      std::set<std::vector<ReflId>> sa(all.begin(), all.end());
      std::set<std::vector<ReflId>> so(orbit.begin(), orbit.end());
      if (sa != so) {
        f.add(name + ": Hurwitz orbit misses factorizations at nc " +
              std::to_string(w));
        break;
      }
    }
  }

  // Carter independence on every face of every series group
  for (const auto& name : kSeriesGroups) {
    auto c = ctx(name);
    const CoxeterGroup& g = *c->g;
    for (int fid = 0; fid < c->C->num_faces(); ++fid) {
      const auto& verts = c->C->face(fid).verts;
      if (verts.empty()) continue;
      QMatrix m(g.rank(), static_cast<int>(verts.size()));
      for (std::size_t j = 0; j < verts.size(); ++j)
        for (int i = 0; i < g.rank(); ++i)
          m.at(i, static_cast<int>(j)) = g.root(verts[j])[i];
      if (m.rank() != static_cast<int>(verts.size())) {
        f.add(name + ": dependent face roots");
        break;
      }
    }
  }

  // normal-form confluence, randomized sliding orders, seed-pinned
  for (const std::string& name : {"A3", "B3"}) {
    auto c = ctx(name);
    const int T = c->g->num_reflections();
    std::vector<std::vector<ReflId>> words;
    std::vector<ReflId> cur;
    auto gen = [&](auto&& self) -> void {
      if (!cur.empty()) words.push_back(cur);
      if (cur.size() == 5) return;
      for (int t = 0; t < T; ++t) {
        cur.push_back(t);
        self(self);
        cur.pop_back();
      }
    };
    gen(gen);
    std::atomic<long> bad{0};
    parallel_for(static_cast<int>(words.size()), opts.threads, [&](int i) {
      MonoidElt nf = c->M->normal_form(words[i]);
      std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
      for (int k = 0; k < 1000; ++k)
        if (!(c->M->normal_form_randomized(words[i], rng) == nf)) {
          ++bad;
          return;
        }
    });
    if (bad != 0)
      f.add(name + ": " + std::to_string(bad.load()) + " non-confluent words");
  }

  // Yang-Baxter for the braiding, exhaustive
  for (const std::string& name : {"A2", "A3", "B3"}) {
    auto c = ctx(name);
    if (!c->N->yang_baxter_exhaustive()) f.add(name + ": Yang-Baxter fails");
  }

  return {"criterion-11 property suites", f.ok(),
          f.str("Hurwitz transitivity, Carter independence, confluence, "
                "Yang-Baxter"),
          elapsed(t0)};
}

}  // namespace

GroupContext::GroupContext(const GroupSpec& s) : spec(s) {
  g = std::make_unique<CoxeterGroup>(spec);
  L = std::make_unique<NCLattice>(*g);
  order = sorting_order(*g, *L);
  C = std::make_unique<PositiveComplex>(*L, order);
  M = std::make_unique<DualMonoid>(*L);
  P = std::make_unique<DualAlgebra>(*C);
  N = std::make_unique<NicholsAlgebra>(*g);
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(criterion1(opts));
  out.push_back(criterion2(opts));
  out.push_back(criterion3(opts));
  out.push_back(criterion4(opts));
  out.push_back(criterion5(opts));
  out.push_back(criterion6(opts));
  out.push_back(criterion7(opts));
  out.push_back(criterion8(opts));
  out.push_back(criterion9(opts));
  out.push_back(criterion10(opts));
  out.push_back(criterion11(opts));
  return out;
}

std::vector<CheckResult> run_group_suite(const GroupSpec& spec,
                                         const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  auto c = ctx(spec.str());
  auto timeit = [&](const std::string& name, auto fn) {
    auto t0 = Clock::now();
    Failures f;
    fn(f);
    out.push_back({name, f.ok(), f.str("ok"), elapsed(t0)});
  };

  timeit("growth/Hilbert round trip", [&](Failures& f) {
    auto mu = c->L->moebius_polynomial();
    if (c->M->growth_series(opts.series_degree) !=
        series_inverse(mu, opts.series_degree))
      f.add("growth != inverse Mobius series");
    auto hilb = c->P->hilbert();
    std::vector<long> abs_mu(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) abs_mu[i] = std::labs(mu[i]);
    if (hilb != abs_mu) f.add("Hilb(P) != |mu| by rank");
  });
  timeit("basis dimensions match Mobius", [&](Failures& f) {
    for (int w = 0; w < c->L->size(); ++w)
      if (static_cast<long>(c->C->faces_with_nc(w).size()) !=
          std::labs(c->L->moebius(w)))
        f.add("mismatch at nc index " + std::to_string(w));
  });
  timeit("homology of Delta+(w) vanishes", [&](Failures& f) {
    std::vector<std::string> bad(c->L->size());
    parallel_for(c->L->size(), opts.threads, [&](int w) {
      if (w == c->L->bottom()) return;
      for (int b : reduced_betti(c->C->chain_complex(c->C->subcomplex_faces(w))))
        if (b != 0) bad[w] = "nonzero Betti at nc " + std::to_string(w);
    });
    for (auto& m : bad)
      if (!m.empty()) f.add(m);
  });
  timeit("subcomplexes equal parabolic complexes", [&](Failures& f) {
    for (int w = 0; w < c->L->size(); ++w) {
      if (w == c->L->bottom()) continue;
      if (c->C->subcomplex_faces(w) != c->C->parabolic_complex_faces(w))
        f.add("mismatch at nc " + std::to_string(w));
    }
  });
  timeit("product rule agrees with rewriting", [&](Failures& f) {
    for (int f1 = 0; f1 < c->C->num_faces(); ++f1)
      for (int f2 = 0; f2 < c->C->num_faces(); ++f2) {
        std::vector<ReflId> word = c->C->face(f1).verts;
        const auto& w2 = c->C->face(f2).verts;
        word.insert(word.end(), w2.begin(), w2.end());
        if (c->P->rewrite(word) != c->P->multiply_geometric(word)) {
          f.add("pair mismatch");
          return;
        }
      }
  });
  timeit("resolution exactness", [&](Failures& f) {
    Resolution res(*c->M, *c->C);
    int deg = std::min(opts.resolution_degree, 3);
    ExactnessReport rep = res.graded_exactness(deg);
    if (!rep.pass) f.add("graded exactness failed");
  });
  timeit("psi check", [&](Failures& f) {
    PsiReport rep = c->N->psi_check(*c->C);
    if (!rep.pass) f.add(rep.details);
  });
  timeit("cyclic characters", [&](Failures& f) {
    for (int i = 0; i < c->g->coxeter_order(); ++i) {
      SubPoset fix = c->L->fixed_subposet(i);
      auto fixpoly = c->L->subposet_moebius_polynomial(fix);
      auto traces = c->P->cyclic_character(i);
      for (int k = 0; k <= c->g->rank(); ++k)
        if (traces[k] != Int(fixpoly[k]) * ((k % 2 == 0) ? 1 : -1))
          f.add("trace mismatch at i=" + std::to_string(i));
      if (c->M->fixed_growth(i, 5) != series_inverse(fixpoly, 5))
        f.add("fixed growth mismatch at i=" + std::to_string(i));
      if (!c->L->subposet_closed_under_meet_join(fix))
        f.add("fixed subposet not closed under meet/join");
    }
  });
  timeit("top homology of NC", [&](Failures& f) {
    TopHomologyReport rep = c->N->nc_top_homology(*c->L);
    if (!rep.pass) f.add(rep.details.empty() ? "failed" : rep.details);
  });
  timeit("Orlik-Solomon dimensions", [&](Failures& f) {
    OrlikSolomonAlgebra os(*c->g);
    OsReport rep = os.os_dims();
    if (!rep.pass) f.add(rep.details);
  });
  return out;
}

int thread_count_from_env() {
  const char* env = std::getenv("DUALBRAID_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n > 0 ? n : 1;
}

}  // namespace dualbraid
