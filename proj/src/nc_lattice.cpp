#include "dualbraid/nc_lattice.hpp"

#include <algorithm>
#include <set>

namespace dualbraid {

NCLattice::NCLattice(const CoxeterGroup& g) : g_(&g) {
  const int n = g.rank();
  const ElemId c = g.coxeter_element();
  // Interval [e,c]: breadth-first up the ranks. w t stays in the interval iff
  // lengths add both below and above.
  std::vector<std::set<ElemId>> levels(n + 1);
  levels[0].insert(g.identity());
  for (int k = 0; k < n; ++k) {
    for (ElemId w : levels[k]) {
      for (int t = 0; t < g.num_reflections(); ++t) {
        ElemId wt = g.mul(w, g.reflection_element(t));
        if (g.reflection_length(wt) != k + 1) continue;
        if (g.reflection_length(g.mul(g.inverse(wt), c)) != n - k - 1) continue;
        levels[k + 1].insert(wt);
      }
    }
  }
  verify_or_abort(levels[n].size() == 1 && *levels[n].begin() == c,
                  "interval [e,c] has a unique top");
  by_rank_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::pair<std::vector<long>, ElemId>> keyed;
    for (ElemId w : levels[k]) {
      QMatrix m = g.matrix_of(w);
      std::vector<long> key;
      key.reserve(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          key.push_back(static_cast<long>(m.at(i, j).get_num().get_si()));
      keyed.emplace_back(std::move(key), w);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [key, w] : keyed) {
      int idx = static_cast<int>(elements_.size());
      elements_.push_back(w);
      index_[w] = idx;
      rank_.push_back(k);
      by_rank_[k].push_back(idx);
    }
  }
  top_ = index_[c];

  const int N = size();
  lower_.assign(N, BitRow(N));
  upper_.assign(N, BitRow(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (rank_[i] <= rank_[j] && g.leq_T(elements_[i], elements_[j])) {
        lower_[j].set(i);
        upper_[i].set(j);
      }

  // self-duality w -> w^{-1} c reverses rank; sanity on rank sizes
  for (int k = 0; k <= n; ++k)
    verify_or_abort(by_rank_[k].size() == by_rank_[n - k].size(),
                    "NC rank sizes are symmetric");

  moebius_.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    long m = (i == bottom()) ? 1 : 0;
    if (i != bottom()) {
      long s = 0;
      lower_[i].for_each([&](int j) {
        if (j != i) s += moebius_[j];
      });
      m = -s;
    }
    moebius_[i] = m;  // elements_ is rank-sorted, so all j < i are done
  }

  meet_.assign(static_cast<std::size_t>(N) * N, -1);
  join_.assign(static_cast<std::size_t>(N) * N, -1);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      BitRow common = lower_[i] & lower_[j];
      int best = -1;
      common.for_each([&](int k) {
        if (best < 0 || rank_[k] > rank_[best]) best = k;
      });
      verify_or_abort(best >= 0 && common.subset_of(lower_[best]),
                      "meet is not unique: lattice property fails");
      meet_[static_cast<std::size_t>(i) * N + j] = best;
      meet_[static_cast<std::size_t>(j) * N + i] = best;

      BitRow up = upper_[i] & upper_[j];
      best = -1;
      up.for_each([&](int k) {
        if (best < 0 || rank_[k] < rank_[best]) best = k;
      });
      bool unique = best >= 0;
      if (unique) {
        // every common upper bound must lie above `best`
        BitRow rest = up;
        rest &= upper_[best];
        unique = (rest.count() == up.count());
      }
      verify_or_abort(unique, "join is not unique: lattice property fails");
      join_[static_cast<std::size_t>(i) * N + j] = best;
      join_[static_cast<std::size_t>(j) * N + i] = best;
    }

  atoms_.assign(N, BitRow(g.num_reflections()));
  atom_index_.assign(g.num_reflections(), -1);
  for (int t = 0; t < g.num_reflections(); ++t) {
    auto it = index_.find(g.reflection_element(t));
    verify_or_abort(it != index_.end(), "every reflection divides c");
    atom_index_[t] = it->second;
  }
  for (int i = 0; i < N; ++i)
    for (int t = 0; t < g.num_reflections(); ++t)
      if (leq(atom_index_[t], i)) atoms_[i].set(t);
}

std::optional<int> NCLattice::index_of(ElemId w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<long> NCLattice::moebius_polynomial() const {
  std::vector<long> p(top_rank() + 1, 0);
  for (int i = 0; i < size(); ++i) p[rank_[i]] += moebius_[i];
  return p;
}

int NCLattice::conj_by_c_power(int i_nc, int power) const {
  const CoxeterGroup& g = *g_;
  ElemId cp = g.identity();
  int ord = g.coxeter_order();
  int p = ((power % ord) + ord) % ord;
  for (int k = 0; k < p; ++k) cp = g.mul(cp, g.coxeter_element());
  ElemId w = g.mul(g.mul(cp, elements_[i_nc]), g.inverse(cp));
  auto idx = index_of(w);
  verify_or_abort(idx.has_value(), "conjugation by c preserves NC");
  return *idx;
}

std::vector<std::vector<ReflId>> NCLattice::hurwitz_orbit(
    const std::vector<ReflId>& f) const {
  const CoxeterGroup& g = *g_;
  ElemId w = g.product_of_reflections(f);
  require(g.reflection_length(w) == static_cast<int>(f.size()),
          "hurwitz_orbit requires a reduced factorization");
  std::set<std::vector<ReflId>> orbit{f};
  std::vector<std::vector<ReflId>> queue{f};
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      ReflId t1 = cur[i], t2 = cur[i + 1];
      // (t1, t2) -> (t2^{t1}, t1) and (t2, t1^{t2})
      auto left = cur;
      left[i] = g.conjugate(t2, g.reflection_element(t1));
      left[i + 1] = t1;
      auto right = cur;
      right[i] = t2;
      right[i + 1] = g.conjugate(t1, g.reflection_element(t2));
      for (auto& nxt : {left, right})
        if (orbit.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<std::vector<ReflId>> NCLattice::all_reduced_factorizations(
    ElemId w) const {
  const CoxeterGroup& g = *g_;
  std::vector<std::vector<ReflId>> out;
  std::vector<ReflId> word;
  int len = g.reflection_length(w);
  auto rec = [&](auto&& self, ElemId rest, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(word);
      return;
    }
    for (int t = 0; t < g.num_reflections(); ++t) {
      ElemId nxt = g.mul(g.reflection_element(t), rest);
      if (g.reflection_length(nxt) != remaining - 1) continue;
      word.push_back(t);
      self(self, nxt, remaining - 1);
      word.pop_back();
    }
  };
  rec(rec, w, len);
  return out;
}

SubPoset NCLattice::fixed_subposet(int power) const {
  SubPoset p;
  for (int i = 0; i < size(); ++i)
    if (conj_by_c_power(i, power) == i) p.members.push_back(i);
  p.moebius.assign(p.members.size(), 0);
  for (std::size_t a = 0; a < p.members.size(); ++a) {
    if (p.members[a] == bottom()) {
      p.moebius[a] = 1;
      continue;
    }
    long s = 0;
    for (std::size_t b = 0; b < a; ++b)
      if (leq(p.members[b], p.members[a])) s += p.moebius[b];
    p.moebius[a] = -s;
  }
  return p;
}

std::vector<long> NCLattice::subposet_moebius_polynomial(const SubPoset& p) const {
  std::vector<long> poly(top_rank() + 1, 0);
  for (std::size_t a = 0; a < p.members.size(); ++a)
    poly[rank_[p.members[a]]] += p.moebius[a];
  return poly;
}

bool NCLattice::subposet_closed_under_meet_join(const SubPoset& p) const {
  std::set<int> mem(p.members.begin(), p.members.end());
  for (int a : p.members)
    for (int b : p.members) {
      if (!mem.count(meet(a, b))) return false;
      if (!mem.count(join(a, b))) return false;
    }
  return true;
}

}  // namespace dualbraid
