#include "dualbraid/garside.hpp"

#include <algorithm>

namespace dualbraid {

DualMonoid::DualMonoid(const NCLattice& L) : L_(&L) {
  const CoxeterGroup& g = L.group();
  const int N = L.size();
  const int T = g.num_reflections();
  // u * t as a simple (length-additive inside NC), else -1
  mult_atom_.assign(N, std::vector<int>(T, -1));
  for (int u = 0; u < N; ++u)
    for (int t = 0; t < T; ++t) {
      ElemId p = g.mul(L.element(u), g.reflection_element(t));
      auto idx = L.index_of(p);
      if (idx && L.rank_of(*idx) == L.rank_of(u) + 1) mult_atom_[u][t] = *idx;
    }
  // t * v for an atom t of v: the complement, one rank down
  drop_atom_.assign(N, std::vector<int>(T, -1));
  for (int v = 0; v < N; ++v)
    L.atoms_below(v).for_each([&](int t) {
      ElemId p = g.mul(g.reflection_element(t), L.element(v));
      auto idx = L.index_of(p);
      verify_or_abort(idx.has_value() && L.rank_of(*idx) == L.rank_of(v) - 1,
                      "atom complement stays in NC one rank down");
      drop_atom_[v][t] = *idx;
    });
  lw_.assign(N, std::vector<char>(N, 0));
  for (int u = 0; u < N; ++u) {
    if (u == L.bottom()) continue;
    for (int v = 0; v < N; ++v) {
      if (v == L.bottom()) continue;
      bool blocked = true;
      L.atoms_below(v).for_each([&](int t) {
        if (blocked && mult_atom_[u][t] >= 0) blocked = false;
      });
      lw_[u][v] = blocked ? 1 : 0;
    }
  }
}

std::optional<int> DualMonoid::simple_mult(int u, int v) const {
  const CoxeterGroup& g = group();
  ElemId p = g.mul(L_->element(u), L_->element(v));
  auto idx = L_->index_of(p);
  if (!idx) return std::nullopt;
  if (L_->rank_of(*idx) != L_->rank_of(u) + L_->rank_of(v)) return std::nullopt;
  return idx;
}

bool DualMonoid::left_weighted(int u, int v) const { return lw_[u][v] != 0; }

MonoidElt DualMonoid::atom(ReflId t) const { return simple_elt(L_->atom_index(t)); }

MonoidElt DualMonoid::simple_elt(int nc_index) const {
  if (nc_index == L_->bottom()) return MonoidElt{};
  return MonoidElt{{nc_index}, L_->rank_of(nc_index)};
}

std::vector<int> DualMonoid::slide_candidates(const std::vector<int>& nf,
                                              std::size_t i) const {
  std::vector<int> ts;
  L_->atoms_below(nf[i + 1]).for_each([&](int t) {
    if (mult_atom_[nf[i]][t] >= 0) ts.push_back(t);
  });
  return ts;
}

void DualMonoid::slide_once(std::vector<int>& nf, std::size_t i, int atom) const {
  // move atom t off the front of nf[i+1] onto the back of nf[i]
  int ut = mult_atom_[nf[i]][atom];
  int rest = drop_atom_[nf[i + 1]][atom];
  nf[i] = ut;
  if (rest == L_->bottom())
    nf.erase(nf.begin() + i + 1);
  else
    nf[i + 1] = rest;
}

MonoidElt DualMonoid::canonicalize(std::vector<int> simples) const {
  std::erase(simples, L_->bottom());
  std::size_t i = 0;
  while (i + 1 < simples.size()) {
    if (lw_[simples[i]][simples[i + 1]]) {
      ++i;
      continue;
    }
    auto ts = slide_candidates(simples, i);
    slide_once(simples, i, ts.front());
    if (i > 0) --i;
  }
  int deg = 0;
  for (int s : simples) deg += L_->rank_of(s);
  return MonoidElt{std::move(simples), deg};
}

MonoidElt DualMonoid::normal_form(const std::vector<ReflId>& word) const {
  std::vector<int> simples;
  simples.reserve(word.size());
  for (ReflId t : word) simples.push_back(L_->atom_index(t));
  return canonicalize(std::move(simples));
}

MonoidElt DualMonoid::normal_form_randomized(const std::vector<ReflId>& word,
                                             std::mt19937_64& rng) const {
  std::vector<int> simples;
  for (ReflId t : word) simples.push_back(L_->atom_index(t));
  std::erase(simples, L_->bottom());
  while (true) {
    std::vector<std::pair<std::size_t, int>> moves;
    for (std::size_t i = 0; i + 1 < simples.size(); ++i) {
      if (lw_[simples[i]][simples[i + 1]]) continue;
      for (int t : slide_candidates(simples, i)) moves.emplace_back(i, t);
    }
    if (moves.empty()) break;
    auto [i, t] = moves[rng() % moves.size()];
    slide_once(simples, i, t);
  }
  int deg = 0;
  for (int s : simples) deg += L_->rank_of(s);
  return MonoidElt{std::move(simples), deg};
}

MonoidElt DualMonoid::from_simples(const std::vector<int>& simples) const {
  return canonicalize(simples);
}

MonoidElt DualMonoid::multiply(const MonoidElt& a, const MonoidElt& b) const {
  std::vector<int> s = a.nf;
  s.insert(s.end(), b.nf.begin(), b.nf.end());
  return canonicalize(std::move(s));
}

std::vector<Int> DualMonoid::growth_series(int max_deg) const {
  require(max_deg >= 0, "growth_series needs a nonnegative degree");
  const int N = L_->size();
  std::vector<Int> out(max_deg + 1, 0);
  out[0] = 1;
  // dp[d][v]: normal forms of degree d that end with simple v
  std::vector<std::vector<Int>> dp(max_deg + 1, std::vector<Int>(N, 0));
  for (int v = 0; v < N; ++v) {
    if (v == L_->bottom()) continue;
    int lv = L_->rank_of(v);
    if (lv <= max_deg) dp[lv][v] += 1;
  }
  for (int d = 1; d <= max_deg; ++d)
    for (int v = 0; v < N; ++v) {
      if (v == L_->bottom()) continue;
      int lv = L_->rank_of(v);
      if (lv > d) continue;
      for (int u = 0; u < N; ++u) {
        if (u == L_->bottom() || !lw_[u][v]) continue;
        if (dp[d - lv][u] != 0) dp[d][v] += dp[d - lv][u];
      }
    }
  for (int d = 1; d <= max_deg; ++d)
    for (int v = 0; v < N; ++v) out[d] += dp[d][v];
  return out;
}

std::vector<Int> DualMonoid::fixed_growth(int power, int max_deg) const {
  const int N = L_->size();
  std::vector<char> fixed(N, 0);
  for (int v = 0; v < N; ++v)
    fixed[v] = (L_->conj_by_c_power(v, power) == v) ? 1 : 0;
  std::vector<Int> out(max_deg + 1, 0);
  out[0] = 1;
  std::vector<std::vector<Int>> dp(max_deg + 1, std::vector<Int>(N, 0));
  for (int v = 0; v < N; ++v) {
    if (v == L_->bottom() || !fixed[v]) continue;
    int lv = L_->rank_of(v);
    if (lv <= max_deg) dp[lv][v] += 1;
  }
  for (int d = 1; d <= max_deg; ++d)
    for (int v = 0; v < N; ++v) {
      if (v == L_->bottom() || !fixed[v]) continue;
      int lv = L_->rank_of(v);
      if (lv > d) continue;
      for (int u = 0; u < N; ++u) {
        if (u == L_->bottom() || !fixed[u] || !lw_[u][v]) continue;
        if (dp[d - lv][u] != 0) dp[d][v] += dp[d - lv][u];
      }
    }
  for (int d = 1; d <= max_deg; ++d)
    for (int v = 0; v < N; ++v) out[d] += dp[d][v];
  return out;
}

std::vector<MonoidElt> DualMonoid::elements_of_degree(int d, int cap_degree) const {
  require(d >= 0 && d <= cap_degree,
          "degree exceeds the materialization cap; raise it explicitly");
  std::vector<MonoidElt> out;
  std::vector<int> nf;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      int deg = 0;
      for (int s : nf) deg += L_->rank_of(s);
      out.push_back(MonoidElt{nf, deg});
      return;
    }
    for (int v = 0; v < L_->size(); ++v) {
      if (v == L_->bottom() || L_->rank_of(v) > remaining) continue;
      if (!nf.empty() && !lw_[nf.back()][v]) continue;
      nf.push_back(v);
      self(self, remaining - L_->rank_of(v));
      nf.pop_back();
    }
  };
  rec(rec, d);
  return out;
}

int DualMonoid::conj_simple(int nc_index, int power) const {
  return L_->conj_by_c_power(nc_index, power);
}

MonoidElt DualMonoid::conj_elt(const MonoidElt& m, int power) const {
  std::vector<int> s;
  s.reserve(m.nf.size());
  for (int v : m.nf) s.push_back(conj_simple(v, power));
  return canonicalize(std::move(s));
}

bool DualMonoid::right_divides(int nc_index, const MonoidElt& b,
                               int cap_degree) const {
  int lw = L_->rank_of(nc_index);
  if (lw > b.degree) return false;
  if (nc_index == L_->bottom()) return true;
  MonoidElt w = simple_elt(nc_index);
  for (const MonoidElt& a : elements_of_degree(b.degree - lw, cap_degree))
    if (multiply(a, w) == b) return true;
  return false;
}

int DualMonoid::right_gcd_with_c(const MonoidElt& b, int cap_degree) const {
  std::vector<int> divisors;
  for (int w = 0; w < L_->size(); ++w)
    if (right_divides(w, b, cap_degree)) divisors.push_back(w);
  int best = L_->bottom();
  for (int w : divisors)
    if (L_->rank_of(w) > L_->rank_of(best)) best = w;
  for (int w : divisors)
    verify_or_abort(L_->leq(w, best),
                    "simple right divisors have a greatest element");
  return best;
}

std::vector<Int> series_inverse(const std::vector<long>& p, int max_deg) {
  require(!p.empty() && p[0] == 1, "series inversion needs constant term 1");
  std::vector<Int> inv(max_deg + 1, 0);
  inv[0] = 1;
  for (int d = 1; d <= max_deg; ++d) {
    Int s = 0;
    for (int k = 1; k <= d && k < static_cast<int>(p.size()); ++k)
      s += Int(p[k]) * inv[d - k];
    inv[d] = -s;
  }
  return inv;
}

}  // namespace dualbraid
