#include "dualbraid/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dualbraid {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& s) {
  GroupSpec spec;
  std::size_t i = 0;
  require(!s.empty(), "empty group spec");
  char fam = s[0];
  switch (fam) {
    case 'A': spec.family = Family::A; break;
    case 'B': spec.family = Family::B; break;
    case 'D': spec.family = Family::D; break;
    case 'G': spec.family = Family::G2; break;
    case 'F': spec.family = Family::F4; break;
    case 'E': spec.family = Family::E6; break;
    default: throw std::invalid_argument("unknown family letter in group spec: " + s);
  }
  ++i;
  std::size_t j = i;
  while (j < s.size() && isdigit(s[j])) ++j;
  require(j > i, "missing rank in group spec: " + s);
  spec.rank = std::stoi(s.substr(i, j - i));
  i = j;
  if (i < s.size()) {
    require(s[i] == ':', "expected ':' in group spec: " + s);
    ++i;
    std::stringstream ss(s.substr(i));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
              "bad coxeter word entry in group spec: " + s);
      spec.coxeter_word.push_back(std::stoi(tok));
    }
  }
  if (spec.coxeter_word.empty())
    for (int k = 1; k <= spec.rank; ++k) spec.coxeter_word.push_back(k);
  spec.validate();
  return spec;
}

void GroupSpec::validate() const {
  switch (family) {
    case Family::A: require(rank >= 1 && rank <= 7, "family A supports rank 1..7"); break;
    case Family::B: require(rank >= 2 && rank <= 6, "family B supports rank 2..6"); break;
    case Family::D: require(rank >= 4 && rank <= 6, "family D supports rank 4..6"); break;
    case Family::G2: require(rank == 2, "G2 has rank 2"); break;
    case Family::F4: require(rank == 4, "F4 has rank 4"); break;
    case Family::E6: require(rank == 6, "E6 has rank 6"); break;
  }
  require(static_cast<int>(coxeter_word.size()) == rank,
          "coxeter word must have length = rank");
  std::vector<bool> seen(rank + 1, false);
  for (int x : coxeter_word) {
    require(x >= 1 && x <= rank, "coxeter word entries must lie in 1..rank");
    require(!seen[x], "coxeter word must be a permutation of 1..rank");
    seen[x] = true;
  }
}

std::string GroupSpec::str() const {
  std::string s = family_name(family);
  if (family == Family::A || family == Family::B || family == Family::D)
    s += std::to_string(rank);
  s += ":";
  for (std::size_t i = 0; i < coxeter_word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coxeter_word[i]);
  }
  return s;
}

namespace {

long expected_reflection_count(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<long>(n) * (n + 1) / 2;
    case Family::B: return static_cast<long>(n) * n;
    case Family::D: return static_cast<long>(n) * (n - 1);
    case Family::G2: return 6;
    case Family::F4: return 24;
    case Family::E6: return 36;
  }
  return -1;
}

}  // namespace

void CoxeterGroup::build_catalog() {
  n_ = spec_.rank;
  form_ = QMatrix(n_, n_);
  auto bond = [&](int i, int j) {  // 0-based, simply-laced bond
    form_.at(i, j) = -1;
    form_.at(j, i) = -1;
  };
  switch (spec_.family) {
    case Family::A:
      for (int i = 0; i < n_; ++i) form_.at(i, i) = 2;
      for (int i = 0; i + 1 < n_; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_i = e_i - e_{i+1} (long), alpha_n = e_n (short)
      for (int i = 0; i < n_ - 1; ++i) form_.at(i, i) = 2;
      form_.at(n_ - 1, n_ - 1) = 1;
      for (int i = 0; i + 1 < n_; ++i) bond(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i < n_; ++i) form_.at(i, i) = 2;
      for (int i = 0; i + 2 < n_; ++i) bond(i, i + 1);
      bond(n_ - 3, n_ - 1);  // alpha_n = e_{n-1} + e_n hangs off node n-2
      break;
    case Family::G2:
      form_.at(0, 0) = 6;
      form_.at(1, 1) = 2;
      form_.at(0, 1) = form_.at(1, 0) = -3;
      break;
    case Family::F4:
      form_.at(0, 0) = form_.at(1, 1) = 2;
      form_.at(2, 2) = form_.at(3, 3) = 1;
      form_.at(0, 1) = form_.at(1, 0) = -1;
      form_.at(1, 2) = form_.at(2, 1) = -1;
      form_.at(2, 3) = form_.at(3, 2) = Rat(-1, 2);
      break;
    case Family::E6:
      for (int i = 0; i < 6; ++i) form_.at(i, i) = 2;
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      bond(1, 3);
      break;
  }
}

std::vector<long> CoxeterGroup::reflection_matrix(const std::vector<long>& beta) const {
  // s_beta(alpha_j) = alpha_j - (2 <alpha_j, beta> / <beta, beta>) beta
  Rat norm = 0;
  std::vector<Rat> b_beta(n_, 0);  // B * beta
  for (int i = 0; i < n_; ++i) {
    Rat s = 0;
    for (int j = 0; j < n_; ++j) s += form_.at(i, j) * Rat(beta[j]);
    b_beta[i] = s;
    norm += Rat(beta[i]) * s;
  }
  std::vector<long> m(n_ * n_, 0);
  for (int j = 0; j < n_; ++j) {
    Rat cj = 2 * b_beta[j] / norm;
    for (int i = 0; i < n_; ++i) {
      Rat entry = (i == j ? 1 : 0) - cj * Rat(beta[i]);
      verify_or_abort(entry.get_den() == 1, "non-integral reflection matrix");
      m[i * n_ + j] = static_cast<long>(entry.get_num().get_si());
    }
  }
  return m;
}

void CoxeterGroup::build_roots() {
  std::set<std::vector<long>> all;
  std::vector<std::vector<long>> queue;
  std::vector<std::vector<long>> simple_mats;
  for (int i = 0; i < n_; ++i) {
    std::vector<long> a(n_, 0);
    a[i] = 1;
    all.insert(a);
    queue.push_back(a);
  }
  for (int i = 0; i < n_; ++i) {
    std::vector<long> a(n_, 0);
    a[i] = 1;
    simple_mats.push_back(reflection_matrix(a));
  }
  auto apply = [&](const std::vector<long>& m, const std::vector<long>& v) {
    std::vector<long> r(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] += m[i * n_ + j] * v[j];
    return r;
  };
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (int i = 0; i < n_; ++i) {
      auto w = apply(simple_mats[i], v);
      if (all.insert(w).second) queue.push_back(w);
    }
  }
  auto positive = [](const std::vector<long>& v) {
    for (long x : v) {
      if (x > 0) return true;
      if (x < 0) return false;
    }
    return false;
  };
  for (const auto& r : all)
    if (positive(r)) roots_.push_back(r);
  std::sort(roots_.begin(), roots_.end());
  verify_or_abort(static_cast<long>(roots_.size()) ==
                      expected_reflection_count(spec_.family, n_),
                  "reflection count does not match the family closed form");
}

CoxeterGroup::CoxeterGroup(const GroupSpec& spec) : spec_(spec) {
  spec_.validate();
  build_catalog();
  build_roots();
  std::vector<long> id(n_ * n_, 0);
  for (int i = 0; i < n_; ++i) id[i * n_ + i] = 1;
  intern(id);
  ell_t_[0] = 0;
  ell_s_[0] = 0;
  inv_[0] = 0;
  refl_elem_.resize(roots_.size());
  for (std::size_t t = 0; t < roots_.size(); ++t) {
    ElemId e = intern(reflection_matrix(roots_[t]));
    refl_elem_[t] = e;
    elem_to_refl_[e] = static_cast<ReflId>(t);
  }
  simple_refl_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    std::vector<long> a(n_, 0);
    a[i] = 1;
    auto it = std::lower_bound(roots_.begin(), roots_.end(), a);
    simple_refl_[i] = static_cast<ReflId>(it - roots_.begin());
  }
  coxeter_elem_ = identity();
  for (int k : spec_.coxeter_word)
    coxeter_elem_ = mul(coxeter_elem_, refl_elem_[simple_refl_[k - 1]]);
  ElemId p = coxeter_elem_;
  coxeter_order_ = 1;
  while (p != identity()) {
    p = mul(p, coxeter_elem_);
    ++coxeter_order_;
  }
}

ElemId CoxeterGroup::intern(const std::vector<long>& mat) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(mat);
  if (it != index_.end()) return it->second;
  ElemId id = static_cast<ElemId>(elems_.size());
  elems_.push_back(mat);
  index_.emplace(mat, id);
  ell_t_.push_back(-1);
  ell_s_.push_back(-1);
  inv_.push_back(-1);
  return id;
}

std::size_t CoxeterGroup::num_interned() const {
  std::lock_guard<std::mutex> lock(mu_);
  return elems_.size();
}

ElemId CoxeterGroup::mul(ElemId a, ElemId b) const {
  std::vector<long> ma, mb;
  {
    std::lock_guard<std::mutex> lock(mu_);
    ma = elems_[a];
    mb = elems_[b];
  }
  std::vector<long> r(n_ * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      long x = ma[i * n_ + k];
      if (!x) continue;
      for (int j = 0; j < n_; ++j) r[i * n_ + j] += x * mb[k * n_ + j];
    }
  return intern(r);
}

ElemId CoxeterGroup::mul(std::initializer_list<ElemId> xs) const {
  ElemId r = identity();
  for (ElemId x : xs) r = mul(r, x);
  return r;
}

ElemId CoxeterGroup::product_of_reflections(const std::vector<ReflId>& word) const {
  ElemId r = identity();
  for (ReflId t : word) r = mul(r, refl_elem_[t]);
  return r;
}

ElemId CoxeterGroup::inverse(ElemId a) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (inv_[a] >= 0) return inv_[a];
  }
  QMatrix inv = matrix_of(a).inverse();
  std::vector<long> m(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      verify_or_abort(inv.at(i, j).get_den() == 1, "non-integral inverse");
      m[i * n_ + j] = static_cast<long>(inv.at(i, j).get_num().get_si());
    }
  ElemId b = intern(m);
  std::lock_guard<std::mutex> lock(mu_);
  inv_[a] = b;
  inv_[b] = a;
  return b;
}

QMatrix CoxeterGroup::matrix_of(ElemId w) const {
  std::vector<long> m;
  {
    std::lock_guard<std::mutex> lock(mu_);
    m = elems_[w];
  }
  QMatrix q(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) q.at(i, j) = m[i * n_ + j];
  return q;
}

std::vector<Rat> CoxeterGroup::act(ElemId w, const std::vector<Rat>& v) const {
  std::vector<long> m;
  {
    std::lock_guard<std::mutex> lock(mu_);
    m = elems_[w];
  }
  std::vector<Rat> r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (m[i * n_ + j] != 0)
        r[i] += Rat(m[i * n_ + j]) * v[j];
  return r;
}

std::vector<long> CoxeterGroup::act(ElemId w, const std::vector<long>& v) const {
  std::vector<long> m;
  {
    std::lock_guard<std::mutex> lock(mu_);
    m = elems_[w];
  }
  std::vector<long> r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += m[i * n_ + j] * v[j];
  return r;
}

bool CoxeterGroup::preserves_form(ElemId w) const {
  QMatrix m = matrix_of(w);
  return m.transpose() * form_ * m == form_;
}

int CoxeterGroup::reflection_length(ElemId w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (ell_t_[w] >= 0) return ell_t_[w];
  }
  QMatrix m = matrix_of(w);
  for (int i = 0; i < n_; ++i) m.at(i, i) -= 1;
  int l = m.rank();
  std::lock_guard<std::mutex> lock(mu_);
  ell_t_[w] = l;
  return l;
}

int CoxeterGroup::coxeter_length(ElemId w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (ell_s_[w] >= 0) return ell_s_[w];
  }
  int count = 0;
  for (std::size_t t = 0; t < roots_.size(); ++t) {
    auto img = act(w, roots_[t]);
    bool neg = false;
    for (long x : img) {
      if (x < 0) neg = true;
      if (x != 0) break;
    }
    if (neg) ++count;
  }
  std::lock_guard<std::mutex> lock(mu_);
  ell_s_[w] = count;
  return count;
}

bool CoxeterGroup::leq_T(ElemId w, ElemId z) const {
  return reflection_length(w) + reflection_length(mul(inverse(w), z)) ==
         reflection_length(z);
}

std::optional<ReflId> CoxeterGroup::reflection_of(ElemId w) const {
  auto it = elem_to_refl_.find(w);
  if (it == elem_to_refl_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rat> CoxeterGroup::root_q(ReflId t) const {
  std::vector<Rat> r(n_);
  for (int i = 0; i < n_; ++i) r[i] = roots_[t][i];
  return r;
}

ReflId CoxeterGroup::conjugate(ReflId t, ElemId w) const {
  ElemId e = mul(mul(inverse(w), refl_elem_[t]), w);
  auto r = reflection_of(e);
  verify_or_abort(r.has_value(), "conjugate of a reflection is a reflection");
  return *r;
}

ReflId CoxeterGroup::conj_by(ReflId t, ElemId w) const {
  ElemId e = mul(mul(w, refl_elem_[t]), inverse(w));
  auto r = reflection_of(e);
  verify_or_abort(r.has_value(), "conjugate of a reflection is a reflection");
  return *r;
}

Rat CoxeterGroup::root_inner(ReflId t, ReflId u) const {
  Rat s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      s += Rat(roots_[t][i]) * form_.at(i, j) * Rat(roots_[u][j]);
  return s;
}

std::vector<ReflId> CoxeterGroup::rank2_order(ReflId t, ReflId u) const {
  require(t != u, "rank2_order requires two distinct reflections");
  // members: reflections whose root lies in span(rho(t), rho(u))
  QMatrix span(n_, 2);
  for (int i = 0; i < n_; ++i) {
    span.at(i, 0) = roots_[t][i];
    span.at(i, 1) = roots_[u][i];
  }
  std::vector<ReflId> members;
  for (int v = 0; v < num_reflections(); ++v)
    if (span.solve(root_q(v)).has_value()) members.push_back(v);
  // the two simples: indecomposable positive roots of the subsystem
  std::vector<ReflId> simples;
  for (ReflId a : members) {
    bool decomposable = false;
    for (ReflId b : members)
      for (ReflId c : members) {
        if (decomposable) break;
        bool sum = true;
        for (int i = 0; i < n_; ++i)
          if (roots_[b][i] + roots_[c][i] != roots_[a][i]) {
            sum = false;
            break;
          }
        if (sum) decomposable = true;
      }
    if (!decomposable) simples.push_back(a);
  }
  verify_or_abort(simples.size() == 2, "rank-2 parabolic has two simples");
  ReflId u1 = std::min(simples[0], simples[1]);
  ReflId um = std::max(simples[0], simples[1]);
  // u_{i+1} = r u_i with the rotation r = u_1 u_m, so that u_{i+1} u_i = r
  // for all i (indices mod m) and the endpoints are the simples.
  ElemId r = mul(refl_elem_[u1], refl_elem_[um]);
  std::vector<ReflId> order{u1};
  ElemId cur = refl_elem_[u1];
  while (true) {
    cur = mul(r, cur);
    auto refl = reflection_of(cur);
    verify_or_abort(refl.has_value(), "rank-2 orbit stays inside reflections");
    if (*refl == u1) break;
    order.push_back(*refl);
  }
  verify_or_abort(order.size() == members.size() && order.back() == um,
                  "rank-2 indexing closes up at the other simple");
  return order;
}

ParabolicData CoxeterGroup::parabolic_closure(ElemId w) const {
  ParabolicData p;
  p.generator = w;
  QMatrix m = matrix_of(w);
  for (int i = 0; i < n_; ++i) m.at(i, i) -= 1;
  p.fixed_space = m.kernel_basis();
  // t fixes Fix(w) pointwise iff rho(t) is B-orthogonal to Fix(w)
  for (int t = 0; t < num_reflections(); ++t) {
    bool ortho = true;
    for (const auto& v : p.fixed_space) {
      Rat s = 0;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          s += Rat(roots_[t][i]) * form_.at(i, j) * v[j];
      if (s != 0) {
        ortho = false;
        break;
      }
    }
    if (ortho) p.reflections.push_back(t);
  }
  // natural simple system: indecomposables of the induced positive system
  for (ReflId a : p.reflections) {
    bool decomposable = false;
    for (ReflId b : p.reflections) {
      for (ReflId c : p.reflections) {
        bool sum = true;
        for (int i = 0; i < n_; ++i)
          if (roots_[b][i] + roots_[c][i] != roots_[a][i]) {
            sum = false;
            break;
          }
        if (sum) {
          decomposable = true;
          break;
        }
      }
      if (decomposable) break;
    }
    if (!decomposable) p.simples.push_back(a);
  }
  verify_or_abort(static_cast<int>(p.simples.size()) == reflection_length(w),
                  "parabolic rank equals reflection length");
  return p;
}

std::optional<std::vector<Rat>> solve_in_cone(
    const std::vector<std::vector<Rat>>& generators,
    const std::vector<Rat>& target) {
  require(!generators.empty(), "solve_in_cone: no generators");
  int n = static_cast<int>(generators[0].size());
  QMatrix m(n, static_cast<int>(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    require(static_cast<int>(generators[j].size()) == n,
            "solve_in_cone: ragged generators");
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = generators[j][i];
  }
  require(m.rank() == static_cast<int>(generators.size()),
          "solve_in_cone: dependent generators");
  return m.solve(target);
}

}  // namespace dualbraid
