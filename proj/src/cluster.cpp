#include "dualbraid/cluster.hpp"

#include <algorithm>
#include <set>

namespace dualbraid {

std::vector<int> c_sorting_word(const CoxeterGroup& g) {
  const int n = g.rank();
  // longest element by greedy ascent in weak order
  ElemId w0 = g.identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      ElemId cand = g.mul(w0, g.reflection_element(g.simple_reflection(i)));
      if (g.coxeter_length(cand) > g.coxeter_length(w0)) {
        w0 = cand;
        moved = true;
        break;
      }
    }
  }
  verify_or_abort(g.coxeter_length(w0) == g.num_reflections(),
                  "longest element inverts every positive root");
  // lexicographically minimal reduced subword of (s_1...s_n)^k for w0:
  // scan the periodic word and greedily keep every letter that shortens the
  // remaining quotient on the left.
  std::vector<int> word;
  ElemId rest = w0;  // rest = prefix^{-1} w0
  long guard = static_cast<long>(n) * g.coxeter_order() * 4 + 16;
  while (rest != g.identity()) {
    for (int k : g.spec().coxeter_word) {
      int i = k - 1;
      if (rest == g.identity()) break;
      ElemId s = g.reflection_element(g.simple_reflection(i));
      ElemId shorter = g.mul(s, rest);
      if (g.coxeter_length(shorter) < g.coxeter_length(rest)) {
        word.push_back(i);
        rest = shorter;
      }
    }
    verify_or_abort(--guard > 0, "c-sorting word extraction terminates");
  }
  verify_or_abort(static_cast<int>(word.size()) == g.num_reflections(),
                  "c-sorting word is reduced of length |T|");
  return word;
}

ReflOrdering sorting_order(const CoxeterGroup& g, const NCLattice& L) {
  std::vector<int> word = c_sorting_word(g);
  ReflOrdering o;
  o.pos.assign(g.num_reflections(), -1);
  ElemId prefix = g.identity();
  for (std::size_t j = 0; j < word.size(); ++j) {
    ReflId s = g.simple_reflection(word[j]);
    ReflId r = g.conj_by(s, prefix);
    verify_or_abort(o.pos[r] == -1, "each reflection appears once in the order");
    o.pos[r] = static_cast<int>(j);
    o.by_pos.push_back(r);
    prefix = g.mul(prefix, g.reflection_element(s));
  }
  OrderCert dyer = verify_reflection_ordering(g, o);
  verify_or_abort(dyer.ok, "c-sorting order is a reflection ordering: " + dyer.message);
  OrderCert compat = verify_c_compatible(g, L, o);
  verify_or_abort(compat.ok, "c-sorting order is c-compatible: " + compat.message);
  return o;
}

OrderCert verify_reflection_ordering(const CoxeterGroup& g, const ReflOrdering& o) {
  std::set<std::vector<ReflId>> seen;
  for (int t = 0; t < g.num_reflections(); ++t)
    for (int u = t + 1; u < g.num_reflections(); ++u) {
      std::vector<ReflId> members = g.rank2_order(t, u);
      std::vector<ReflId> key = members;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      std::vector<ReflId> sorted = members;
      std::sort(sorted.begin(), sorted.end(),
                [&](ReflId a, ReflId b) { return o.less(a, b); });
      std::vector<ReflId> rev(members.rbegin(), members.rend());
      if (sorted != members && sorted != rev) {
        OrderCert c;
        c.ok = false;
        c.message = "rank-2 parabolic not monotone in the order";
        c.witness = g.mul(g.reflection_element(t), g.reflection_element(u));
        return c;
      }
    }
  return {};
}

OrderCert verify_c_compatible(const CoxeterGroup& g, const NCLattice& L,
                              const ReflOrdering& o) {
  for (int w : L.by_rank(2)) {
    std::vector<ReflId> u;
    L.atoms_below(w).for_each([&](int t) { u.push_back(t); });
    std::sort(u.begin(), u.end(),
              [&](ReflId a, ReflId b) { return o.less(a, b); });
    const int m = static_cast<int>(u.size());
    ElemId we = L.element(w);
    for (int i = 0; i < m; ++i) {
      ReflId hi = u[i];
      ReflId lo = u[(i + m - 1) % m];  // u_0 = u_m
      if (g.mul(g.reflection_element(hi), g.reflection_element(lo)) != we) {
        OrderCert c;
        c.ok = false;
        c.message = "w != u_i u_{i-1} at i=" + std::to_string(i + 1);
        c.witness = we;
        return c;
      }
    }
  }
  return {};
}

ConeData cone_data(const CoxeterGroup& g, const std::vector<ReflId>& big,
                   const std::vector<ReflId>& face_desc) {
  std::vector<std::vector<Rat>> gens;
  gens.reserve(big.size());
  for (ReflId t : big) gens.push_back(g.root_q(t));
  ConeData out;
  std::vector<std::vector<Rat>> coords;
  for (ReflId u : face_desc) {
    auto x = solve_in_cone(gens, g.root_q(u));
    if (!x) return out;  // outside the linear span
    for (const Rat& c : *x)
      if (c < 0) return out;
    coords.push_back(std::move(*x));
  }
  out.contained = true;
  if (face_desc.size() == big.size()) {
    const int j = static_cast<int>(big.size());
    QMatrix m(j, j);
    for (int r = 0; r < j; ++r)
      for (int c = 0; c < j; ++c) m.at(r, c) = coords[r][c];
    Rat d = m.det();
    verify_or_abort(d != 0, "face roots give a basis of the moved space");
    out.omega = (d > 0) ? 1 : -1;
  }
  return out;
}

PositiveComplex::PositiveComplex(const NCLattice& L, ReflOrdering order)
    : L_(&L), order_(std::move(order)) {
  const CoxeterGroup& g = L.group();
  const int n = g.rank();
  by_dim_.assign(n + 1, {});
  by_nc_.assign(L.size(), {});
  add_face({});  // the empty face

  // facets: strictly <-decreasing reflection tuples with product c
  std::vector<std::vector<ReflId>> facets;
  std::vector<ReflId> word;
  auto rec = [&](auto&& self, ElemId prefix, int k) -> void {
    if (k == n) {
      if (prefix == g.coxeter_element()) facets.push_back(word);
      return;
    }
    int start = word.empty() ? static_cast<int>(order_.by_pos.size()) : order_.pos[word.back()];
    for (int p = start - 1; p >= n - k - 1; --p) {
      ReflId t = order_.by_pos[p];
      ElemId nxt = g.mul(prefix, g.reflection_element(t));
      if (g.reflection_length(nxt) != k + 1) continue;
      if (!g.leq_T(nxt, g.coxeter_element())) continue;
      word.push_back(t);
      self(self, nxt, k + 1);
      word.pop_back();
    }
  };
  rec(rec, g.identity(), 0);

  // inner-product form of the definition, cross-checked on every facet
  for (const auto& f : facets)
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b)
        verify_or_abort(g.root_inner(f[a], f[b]) >= 0,
                        "facet roots have pairwise nonnegative inner products");

  // all faces: subsets of facets, deduplicated
  std::set<std::vector<ReflId>> subsets;
  for (const auto& f : facets) {
    const int sz = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << sz); ++mask) {
      std::vector<ReflId> sub;
      for (int i = 0; i < sz; ++i)
        if (mask & (1 << i)) sub.push_back(f[i]);  // keeps descending order
      subsets.insert(sub);
    }
  }
  std::vector<std::vector<ReflId>> ordered(subsets.begin(), subsets.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& s : ordered) add_face(s);
}

void PositiveComplex::add_face(const std::vector<ReflId>& verts_desc) {
  const CoxeterGroup& g = L_->group();
  Face f;
  f.verts = verts_desc;
  for (std::size_t i = 0; i + 1 < f.verts.size(); ++i)
    verify_or_abort(order_.less(f.verts[i + 1], f.verts[i]),
                    "face vertices are strictly decreasing");
  ElemId prod = g.product_of_reflections(f.verts);
  auto idx = L_->index_of(prod);
  verify_or_abort(idx.has_value() &&
                      L_->rank_of(*idx) == static_cast<int>(f.verts.size()),
                  "descending product of a face is in NC of full length");
  f.nc = *idx;
  if (!f.verts.empty()) {
    // Carter: roots of a reduced factorization are linearly independent
    QMatrix m(g.rank(), static_cast<int>(f.verts.size()));
    for (std::size_t j = 0; j < f.verts.size(); ++j) {
      const auto& r = g.root(f.verts[j]);
      for (int i = 0; i < g.rank(); ++i) m.at(i, static_cast<int>(j)) = r[i];
    }
    verify_or_abort(m.rank() == static_cast<int>(f.verts.size()),
                    "face roots are linearly independent");
  }
  int id = static_cast<int>(faces_.size());
  faces_.push_back(f);
  face_index_[f.verts] = id;
  by_dim_[f.verts.size()].push_back(id);
  by_nc_[f.nc].push_back(id);
}

int PositiveComplex::face_id(const std::vector<ReflId>& verts_desc) const {
  auto it = face_index_.find(verts_desc);
  return it == face_index_.end() ? -1 : it->second;
}

const std::vector<int>& PositiveComplex::faces_with_nc(int nc_index) const {
  return by_nc_[nc_index];
}

std::vector<long> PositiveComplex::f_polynomial() const {
  std::vector<long> f(by_dim_.size(), 0);
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    f[d] = static_cast<long>(by_dim_[d].size());
  return f;
}

std::vector<int> PositiveComplex::subcomplex_faces(int nc_index) const {
  require(nc_index != L_->bottom(),
          "the positive complex of w cannot be extended to w = e");
  std::vector<int> out;
  const BitRow& atoms = L_->atoms_below(nc_index);
  for (int id = 0; id < num_faces(); ++id) {
    bool inside = true;
    for (ReflId t : faces_[id].verts)
      if (!atoms.get(t)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(id);
  }
  return out;
}

std::vector<int> PositiveComplex::parabolic_complex_faces(int nc_index) const {
  require(nc_index != L_->bottom(),
          "the positive complex of w cannot be extended to w = e");
  const CoxeterGroup& g = L_->group();
  std::vector<ReflId> members;
  L_->atoms_below(nc_index).for_each([&](int t) { members.push_back(t); });
  std::sort(members.begin(), members.end(),
            [&](ReflId a, ReflId b) { return order_.less(a, b); });
  const int k = L_->rank_of(nc_index);
  std::vector<std::vector<ReflId>> facets;
  std::vector<ReflId> word;
  auto rec = [&](auto&& self, ElemId prefix, int depth, int below) -> void {
    if (depth == k) {
      if (prefix == L_->element(nc_index)) facets.push_back(word);
      return;
    }
    for (int p = below - 1; p >= 0; --p) {
      ReflId t = members[p];
      ElemId nxt = g.mul(prefix, g.reflection_element(t));
      if (g.reflection_length(nxt) != depth + 1) continue;
      if (!g.leq_T(nxt, L_->element(nc_index))) continue;
      word.push_back(t);
      self(self, nxt, depth + 1, p);
      word.pop_back();
    }
  };
  rec(rec, g.identity(), 0, static_cast<int>(members.size()));
  std::set<int> ids;
  ids.insert(0);  // empty face
  for (const auto& f : facets) {
    const int sz = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << sz); ++mask) {
      std::vector<ReflId> sub;
      for (int i = 0; i < sz; ++i)
        if (mask & (1 << i)) sub.push_back(f[i]);
      int id = face_id(sub);
      verify_or_abort(id >= 0, "parabolic complex faces are faces of Delta+");
      ids.insert(id);
    }
  }
  return {ids.begin(), ids.end()};
}

ChainComplexQ PositiveComplex::chain_complex(const std::vector<int>& face_ids) const {
  int top = -1;
  for (int id : face_ids) top = std::max(top, dim_of(id));
  std::vector<std::vector<int>> by_dim(top + 2);
  std::vector<int> local(num_faces(), -1);
  for (int id : face_ids) by_dim[dim_of(id) + 1].push_back(id);
  for (auto& v : by_dim)
    for (std::size_t i = 0; i < v.size(); ++i) local[v[i]] = static_cast<int>(i);
  ChainComplexQ c;
  c.dims.resize(top + 2);
  for (int d = -1; d <= top; ++d) c.dims[d + 1] = static_cast<int>(by_dim[d + 1].size());
  for (int d = 0; d <= top; ++d) {
    QMatrix beta(c.dims[d], c.dims[d + 1]);
    for (std::size_t col = 0; col < by_dim[d + 1].size(); ++col) {
      const Face& f = faces_[by_dim[d + 1][col]];
      for (std::size_t l = 0; l < f.verts.size(); ++l) {
        std::vector<ReflId> sub = f.verts;
        sub.erase(sub.begin() + l);
        int sid = face_id(sub);
        verify_or_abort(sid >= 0 && local[sid] >= 0,
                        "chain complex face set is closed under subsets");
        beta.at(local[sid], static_cast<int>(col)) += (l % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary.push_back(std::move(beta));
  }
  return c;
}

std::vector<int> reduced_betti(const ChainComplexQ& c) {
  const int top = static_cast<int>(c.dims.size()) - 2;
  std::vector<int> rank(top + 2, 0);
  for (int d = 0; d <= top; ++d) rank[d] = c.boundary[d].rank();
  for (int d = 0; d + 1 <= top; ++d) {
    QMatrix comp = c.boundary[d] * c.boundary[d + 1];
    for (int i = 0; i < comp.rows(); ++i)
      for (int j = 0; j < comp.cols(); ++j)
        verify_or_abort(comp.at(i, j) == 0, "boundary composition vanishes");
  }
  std::vector<int> betti(top + 2, 0);
  for (int d = -1; d <= top; ++d) {
    int dim = c.dims[d + 1];
    int r_out = (d >= 0) ? rank[d] : 0;            // beta_d out of dimension d
    int r_in = (d + 1 <= top) ? rank[d + 1] : 0;   // beta_{d+1} into dimension d
    int kernel = dim - r_out;
    if (d == -1) kernel = dim;  // nothing below the empty face
    betti[d + 1] = kernel - r_in;
    if (d == -1) betti[0] = dim - r_in;  // reduced: empty-face class must die
  }
  return betti;
}

int PositiveComplex::omega(const std::vector<ReflId>& big, int fid) const {
  ConeData cd = cone_data(L_->group(), big, faces_[fid].verts);
  verify_or_abort(cd.omega.has_value(), "omega needs a full-dimensional face");
  return *cd.omega;
}

}  // namespace dualbraid
