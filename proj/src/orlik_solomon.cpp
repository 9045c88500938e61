#include "dualbraid/orlik_solomon.hpp"

#include <algorithm>

namespace dualbraid {

namespace {

// Normal covector of a hyperplane: row rho(t)^T B.
std::vector<Rat> normal_row(const CoxeterGroup& g, ReflId t) {
  const int n = g.rank();
  std::vector<Rat> row(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      row[j] += Rat(g.root(t)[i]) * g.bilinear_form().at(i, j);
  return row;
}

std::vector<std::string> serialize(const QMatrix& m) {
  std::vector<std::string> s;
  for (int i = 0; i < m.rows(); ++i) {
    std::string row;
    for (int j = 0; j < m.cols(); ++j) row += rat_to_string(m.at(i, j)) + ",";
    s.push_back(row);
  }
  return s;
}

QMatrix nonzero_rref(const QMatrix& m) {
  int rank = 0;
  QMatrix r = m.rref(&rank);
  QMatrix out(rank, m.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

}  // namespace

IntersectionLattice::IntersectionLattice(const CoxeterGroup& g) : g_(&g) {
  const int n = g.rank();
  intern(QMatrix(0, n));  // ambient space: empty normal set
  hyperplane_.resize(g.num_reflections());
  for (int t = 0; t < g.num_reflections(); ++t) {
    QMatrix m(1, n);
    auto row = normal_row(g, t);
    for (int j = 0; j < n; ++j) m.at(0, j) = row[j];
    hyperplane_[t] = intern(nonzero_rref(m));
  }
  // close under intersections with hyperplanes
  std::vector<int> queue;
  for (int x = 0; x < size(); ++x) queue.push_back(x);
  meet_cache_.resize(size(), std::vector<int>(g.num_reflections(), -1));
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int t = 0; t < g.num_reflections(); ++t) {
      QMatrix stacked(flats_[x].rows() + 1, n);
      for (int i = 0; i < flats_[x].rows(); ++i)
        for (int j = 0; j < n; ++j) stacked.at(i, j) = flats_[x].at(i, j);
      auto row = normal_row(g, t);
      for (int j = 0; j < n; ++j) stacked.at(flats_[x].rows(), j) = row[j];
      int before = size();
      int y = intern(nonzero_rref(stacked));
      if (y >= before) {
        queue.push_back(y);
        meet_cache_.resize(size(), std::vector<int>(g.num_reflections(), -1));
      }
      meet_cache_[x][t] = y;
    }
  }
  // Mobius from the ambient space down the codimension levels
  std::vector<int> order(size());
  for (int i = 0; i < size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return codim(a) < codim(b); });
  moebius_.assign(size(), 0);
  for (int x : order) {
    if (x == ambient()) {
      moebius_[x] = 1;
      continue;
    }
    long s = 0;
    for (int y = 0; y < size(); ++y)
      if (y != x && leq(y, x)) s += moebius_[y];
    moebius_[x] = -s;
  }
}

int IntersectionLattice::intern(const QMatrix& rref_normals) {
  auto key = serialize(rref_normals);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int id = size();
  flats_.push_back(rref_normals);
  index_.emplace(std::move(key), id);
  return id;
}

bool IntersectionLattice::leq(int y, int x) const {
  // y <= x iff x's subspace is contained in y's, iff the normals of y lie in
  // the row span of the normals of x
  if (codim(y) > codim(x)) return false;
  const QMatrix& nx = flats_[x];
  const QMatrix& ny = flats_[y];
  QMatrix stacked(nx.rows() + ny.rows(), nx.cols());
  for (int i = 0; i < nx.rows(); ++i)
    for (int j = 0; j < nx.cols(); ++j) stacked.at(i, j) = nx.at(i, j);
  for (int i = 0; i < ny.rows(); ++i)
    for (int j = 0; j < nx.cols(); ++j) stacked.at(nx.rows() + i, j) = ny.at(i, j);
  return stacked.rank() == nx.rows();
}

int IntersectionLattice::meet_hyperplane(int x, ReflId t) const {
  int y = meet_cache_[x][t];
  verify_or_abort(y >= 0, "intersection lattice is closed under meets");
  return y;
}

int IntersectionLattice::flat_of(const std::vector<ReflId>& ts) const {
  int x = ambient();
  for (ReflId t : ts) x = meet_hyperplane(x, t);
  return x;
}

std::vector<long> IntersectionLattice::whitney() const {
  std::vector<long> w(g_->rank() + 1, 0);
  for (int x = 0; x < size(); ++x) w[codim(x)] += std::abs(moebius_[x]);
  return w;
}

FlagElement OrlikSolomonAlgebra::lambda(const TensorElement& x) const {
  FlagElement out;
  for (const auto& [w, c] : x) {
    FlagWord flag;
    int flat = L_.ambient();
    for (ElemId a : w) {
      auto t = g_->reflection_of(a);
      require(t.has_value(), "lambda is defined on words over reflections");
      flat = L_.meet_hyperplane(flat, *t);
      flag.push_back(flat);
    }
    out[flag] += c;
    if (out[flag] == 0) out.erase(flag);
  }
  return out;
}

TensorElement OrlikSolomonAlgebra::wedge(const std::vector<ReflId>& ts) const {
  TensorElement acc = N_.unit();
  for (ReflId t : ts)
    acc = N_.shuffle(acc, N_.singleton(Word{g_->reflection_element(t)}));
  return acc;
}

OsReport OrlikSolomonAlgebra::os_dims() const {
  OsReport rep;
  const int n = g_->rank();
  const int T = g_->num_reflections();
  // independent reflection subsets, |S| <= n; dependent wedges vanish under
  // lambda (checked separately as a property)
  std::map<int, SparseRank> span;
  std::map<int, std::map<FlagWord, long>> cols;
  std::vector<ReflId> subset;
  auto emit = [&](int flat) {
    FlagElement v = lambda(wedge(subset));
    if (v.empty()) return;
    auto& col = cols[flat];
    std::vector<std::pair<long, Rat>> row;
    for (const auto& [w, c] : v) {
      auto it = col.find(w);
      long id = (it != col.end()) ? it->second
                                  : col.emplace(w, static_cast<long>(col.size()))
                                        .first->second;
      row.emplace_back(id, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    span[flat].add_row(std::move(row));
  };
  auto rec = [&](auto&& self, int from, int flat) -> void {
    // supersets of a dependent set stay dependent, so prune them wholesale
    if (L_.codim(flat) < static_cast<int>(subset.size())) return;
    emit(flat);
    if (static_cast<int>(subset.size()) == n) return;
    for (int t = from; t < T; ++t) {
      subset.push_back(t);
      self(self, t + 1, L_.meet_hyperplane(flat, t));
      subset.pop_back();
    }
  };
  rec(rec, 0, L_.ambient());

  rep.dim_by_codim.assign(n + 1, 0);
  rep.dim_by_codim[0] = 1;  // the empty wedge spans OS at the ambient flat
  rep.dim_by_flat[L_.ambient()] = 1;
  for (int x = 1; x < L_.size(); ++x) {
    long d = span.count(x) ? span.at(x).rank() : 0;
    rep.dim_by_flat[x] = d;
    rep.dim_by_codim[L_.codim(x)] += d;
    if (d != std::abs(L_.moebius(x))) {
      rep.matches_moebius = false;
      rep.details = "dim OS_x != |mu_L(x)| at some flat";
    }
  }
  rep.pass = rep.matches_moebius;
  return rep;
}

}  // namespace dualbraid
