#include <algorithm>
#include <sstream>

#include "dualbraid/coxeter.hpp"

namespace dualbraid {

namespace {

// Columns: the standard-basis vectors e_i of the ambient Euclidean model,
// written in simple-root coordinates. Lets us read group elements off as
// (signed) permutations for the classical families.
QMatrix euclidean_basis(const CoxeterGroup& g) {
  int n = g.rank();
  QMatrix e(n, n);
  switch (g.spec().family) {
    case Family::B:
      // alpha_i = e_i - e_{i+1}, alpha_n = e_n  =>  e_i = alpha_i + ... + alpha_n
      for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) e.at(k, i) = 1;
      break;
    case Family::D:
      // alpha_i = e_i - e_{i+1} (i < n), alpha_n = e_{n-1} + e_n
      for (int i = 0; i < n - 1; ++i) {
        for (int k = i; k < n - 2; ++k) e.at(k, i) = 1;
        e.at(n - 2, i) = Rat(1, 2);
        e.at(n - 1, i) = Rat(1, 2);
      }
      e.at(n - 2, n - 1) = Rat(-1, 2);
      e.at(n - 1, n - 1) = Rat(1, 2);
      break;
    default:
      throw std::invalid_argument("euclidean basis only for B/D families");
  }
  return e;
}

}  // namespace

std::vector<int> a_family_permutation(const CoxeterGroup& g, ElemId w) {
  require(g.spec().family == Family::A, "permutation form needs family A");
  int n = g.rank();
  // x_i = e_i - e_{n+1} = alpha_i + ... + alpha_n; x_{n+1} = 0.
  // w(x_i) = x_{sigma(i)} - x_{sigma(n+1)}.
  std::vector<std::vector<Rat>> x(n + 1, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) x[i][k] = 1;
  std::vector<std::vector<Rat>> y(n + 1);
  for (int i = 0; i <= n; ++i) y[i] = g.act(w, x[i]);
  for (int k = 0; k <= n; ++k) {  // candidate sigma(n+1) = k+1
    std::vector<int> sigma(n + 1, 0);
    bool ok = true;
    std::vector<bool> used(n + 1, false);
    for (int i = 0; i <= n && ok; ++i) {
      std::vector<Rat> v(n);
      for (int j = 0; j < n; ++j) v[j] = y[i][j] + x[k][j];
      int match = -1;
      for (int j = 0; j <= n; ++j)
        if (v == x[j]) {
          match = j;
          break;
        }
      if (match < 0 || used[match]) {
        ok = false;
      } else {
        used[match] = true;
        sigma[i] = match + 1;
      }
    }
    if (ok && sigma[n] == k + 1) return sigma;  // images of 1..n+1
  }
  throw std::runtime_error("element is not a permutation matrix in disguise");
}

std::vector<int> signed_permutation(const CoxeterGroup& g, ElemId w) {
  Family f = g.spec().family;
  require(f == Family::B || f == Family::D, "signed permutation needs family B/D");
  int n = g.rank();
  QMatrix e = euclidean_basis(g);
  QMatrix einv = e.inverse();
  std::vector<int> img(n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> col(n);
    for (int k = 0; k < n; ++k) col[k] = e.at(k, i);
    std::vector<Rat> y = g.act(w, col);
    // back to e-coordinates
    std::vector<Rat> z(n, 0);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) z[r] += einv.at(r, k) * y[k];
    int hit = 0;
    for (int r = 0; r < n; ++r) {
      if (z[r] == 0) continue;
      verify_or_abort(z[r] == 1 || z[r] == -1, "non-signed-permutation image");
      verify_or_abort(hit == 0, "non-signed-permutation image");
      img[i] = (z[r] == 1 ? r + 1 : -(r + 1));
      hit = 1;
    }
    verify_or_abort(hit == 1, "zero image in signed permutation");
  }
  return img;
}

namespace {

std::string signed_cycles(const std::vector<int>& img) {
  int n = static_cast<int>(img.size());
  std::vector<bool> seen(n + 1, false);
  std::string out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int cur = start, sign = 1;
    while (true) {
      seen[cur] = true;
      cyc.push_back(sign * cur);
      int nxt = img[cur - 1] * sign;
      if (std::abs(nxt) == start) {
        sign = (nxt > 0 ? 1 : -1);
        break;
      }
      sign = (nxt > 0 ? 1 : -1);
      cur = std::abs(nxt);
    }
    bool negative_cycle = (sign < 0);
    if (cyc.size() == 1 && !negative_cycle) continue;  // fixed point
    std::stringstream ss;
    if (cyc.size() == 1) {
      ss << "[" << cyc[0] << "]";
    } else {
      ss << (negative_cycle ? "[[" : "((");
      for (std::size_t i = 0; i < cyc.size(); ++i) ss << (i ? "," : "") << cyc[i];
      ss << (negative_cycle ? "]]" : "))");
    }
    out += ss.str();
  }
  return out.empty() ? "e" : out;
}

std::string perm_cycles(const std::vector<int>& img) {
  int n = static_cast<int>(img.size());
  std::vector<bool> seen(n + 1, false);
  std::string out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = img[cur - 1];
    }
    if (cyc.size() <= 1) continue;
    std::stringstream ss;
    ss << "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) ss << (i ? "," : "") << cyc[i];
    ss << ")";
    out += ss.str();
  }
  return out.empty() ? "e" : out;
}

}  // namespace

std::string element_name(const CoxeterGroup& g, ElemId w) {
  switch (g.spec().family) {
    case Family::A: return perm_cycles(a_family_permutation(g, w));
    case Family::B:
    case Family::D: return signed_cycles(signed_permutation(g, w));
    default: break;
  }
  return "";
}

std::string reflection_name(const CoxeterGroup& g, ReflId t) {
  Family f = g.spec().family;
  if (f == Family::A || f == Family::B || f == Family::D) {
    std::string s = element_name(g, g.reflection_element(t));
    if (!s.empty()) return s;
  }
  std::stringstream ss;
  ss << "t[";
  const auto& r = g.root(t);
  for (std::size_t i = 0; i < r.size(); ++i) ss << (i ? "," : "") << r[i];
  ss << "]";
  return ss.str();
}

ReflId reflection_by_name(const CoxeterGroup& g, const std::string& name) {
  std::string want = name;
  want.erase(std::remove(want.begin(), want.end(), ' '), want.end());
  for (int t = 0; t < g.num_reflections(); ++t)
    if (reflection_name(g, t) == want) return t;
  throw std::invalid_argument("no reflection named " + name);
}

}  // namespace dualbraid
