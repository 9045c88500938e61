#include "dualbraid/dual_algebra.hpp"

#include <algorithm>

namespace dualbraid {

DualAlgebra::DualAlgebra(const PositiveComplex& C) : C_(&C) {}

RelationSet DualAlgebra::relations() const {
  const CoxeterGroup& g = C_->group();
  const NCLattice& L = C_->lattice();
  RelationSet r;
  for (int t = 0; t < g.num_reflections(); ++t) r.squares.push_back(t);
  for (int t = 0; t < g.num_reflections(); ++t)
    for (int u = 0; u < g.num_reflections(); ++u) {
      if (t == u) continue;
      ElemId p = g.mul(g.reflection_element(t), g.reflection_element(u));
      auto idx = L.index_of(p);
      if (!idx || L.rank_of(*idx) != 2) r.vanishing.emplace_back(t, u);
    }
  for (int w : L.by_rank(2)) {
    std::vector<ReflId> u;
    L.atoms_below(w).for_each([&](int t) { u.push_back(t); });
    std::sort(u.begin(), u.end(), [&](ReflId a, ReflId b) {
      return C_->order().less(a, b);
    });
    r.cyclic.emplace_back(w, std::move(u));
  }
  return r;
}

const DualElement& DualAlgebra::rewrite_reduced(const std::vector<ReflId>& word) const {
  auto it = cache_.find(word);
  if (it != cache_.end()) return it->second;
  const auto& ord = C_->order();
  int asc = -1;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (ord.less(word[i], word[i + 1])) {
      asc = static_cast<int>(i);
      break;
    }
  DualElement out;
  if (asc < 0) {
    int fid = C_->face_id(word);
    verify_or_abort(fid >= 0,
                    "descending reduced NC word is a face of the complex");
    out[fid] = 1;
  } else {
    const CoxeterGroup& g = C_->group();
    const NCLattice& L = C_->lattice();
    ElemId w2 = g.mul(g.reflection_element(word[asc]),
                      g.reflection_element(word[asc + 1]));
    auto idx = L.index_of(w2);
    verify_or_abort(idx.has_value() && L.rank_of(*idx) == 2,
                    "adjacent pair of a reduced NC word lies in NC_2");
    std::vector<ReflId> u;
    L.atoms_below(*idx).for_each([&](int t) { u.push_back(t); });
    std::sort(u.begin(), u.end(),
              [&](ReflId a, ReflId b) { return ord.less(a, b); });
    const int m = static_cast<int>(u.size());
    verify_or_abort(word[asc] == u.front() && word[asc + 1] == u.back(),
                    "ascending pair is the unique increasing factorization");
    // u_1 u_m = -(u_m u_{m-1} + ... + u_2 u_1)
    for (int j = m - 1; j >= 1; --j) {
      std::vector<ReflId> next = word;
      next[asc] = u[j];
      next[asc + 1] = u[j - 1];
      for (const auto& [fid, coef] : rewrite_reduced(next)) {
        out[fid] -= coef;
        if (out[fid] == 0) out.erase(fid);
      }
    }
  }
  return cache_.emplace(word, std::move(out)).first->second;
}

DualElement DualAlgebra::rewrite(const std::vector<ReflId>& word) const {
  const CoxeterGroup& g = C_->group();
  const NCLattice& L = C_->lattice();
  ElemId prod = g.product_of_reflections(word);
  auto idx = L.index_of(prod);
  if (!idx || L.rank_of(*idx) != static_cast<int>(word.size())) return {};
  return rewrite_reduced(word);
}

DualElement DualAlgebra::multiply(const DualElement& x, const DualElement& y) const {
  DualElement out;
  for (const auto& [fx, cx] : x)
    for (const auto& [fy, cy] : y) {
      std::vector<ReflId> word = C_->face(fx).verts;
      const auto& w2 = C_->face(fy).verts;
      word.insert(word.end(), w2.begin(), w2.end());
      for (const auto& [fid, coef] : rewrite(word)) {
        out[fid] += cx * cy * coef;
        if (out[fid] == 0) out.erase(fid);
      }
    }
  return out;
}

DualElement DualAlgebra::multiply_geometric(const std::vector<ReflId>& word) const {
  const CoxeterGroup& g = C_->group();
  const NCLattice& L = C_->lattice();
  ElemId prod = g.product_of_reflections(word);
  auto idx = L.index_of(prod);
  if (!idx || L.rank_of(*idx) != static_cast<int>(word.size())) return {};
  DualElement out;
  for (int fid : C_->faces_with_nc(*idx)) {
    ConeData cd = cone_data(g, word, C_->face(fid).verts);
    if (!cd.contained) continue;
    verify_or_abort(cd.omega.has_value(), "tiling faces are full-dimensional");
    out[fid] = *cd.omega;
  }
  return out;
}

int DualAlgebra::degree_of(const DualElement& x) const {
  int deg = -1;
  for (const auto& [fid, c] : x) {
    int d = static_cast<int>(C_->face(fid).verts.size());
    verify_or_abort(deg < 0 || deg == d, "mixed-degree dual element");
    deg = d;
  }
  return deg;
}

DualElement DualAlgebra::conj_face(int face_id, int power) const {
  const CoxeterGroup& g = C_->group();
  ElemId cp = g.identity();
  int ord = g.coxeter_order();
  int p = ((power % ord) + ord) % ord;
  for (int k = 0; k < p; ++k) cp = g.mul(cp, g.coxeter_element());
  std::vector<ReflId> word;
  for (ReflId t : C_->face(face_id).verts) word.push_back(g.conj_by(t, cp));
  return rewrite(word);
}

std::vector<Int> DualAlgebra::cyclic_character(int power) const {
  const int n = C_->group().rank();
  std::vector<Int> traces(n + 1, 0);
  for (int d = -1; d < n; ++d) {
    Rat tr = 0;
    for (int fid : C_->faces_of_dim(d)) {
      DualElement img = conj_face(fid, power);
      auto it = img.find(fid);
      if (it != img.end()) tr += it->second;
    }
    verify_or_abort(tr.get_den() == 1, "character traces are integers");
    traces[d + 1] = tr.get_num();
  }
  return traces;
}

}  // namespace dualbraid
