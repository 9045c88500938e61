#pragma once

#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dualbraid/matrix.hpp"
#include "dualbraid/util.hpp"

namespace dualbraid {

enum class Family { A, B, D, G2, F4, E6 };

std::string family_name(Family f);

/// Group + Coxeter element selection, e.g. "B3:1,3,2". The word is a
/// permutation of 1..n and fixes c = s_{w1} ... s_{wn}.
struct GroupSpec {
  Family family = Family::A;
  int rank = 1;
  std::vector<int> coxeter_word;  // 1-based simple indices

  static GroupSpec parse(const std::string& s);
  std::string str() const;
  void validate() const;
};

using ElemId = int;  // index into the group's element registry; 0 = identity
using ReflId = int;  // index into the reflection table

struct ParabolicData {
  ElemId generator = 0;
  std::vector<ReflId> reflections;            // T(w), ascending id
  std::vector<ReflId> simples;                // natural simple system of Gamma(w)
  std::vector<std::vector<Rat>> fixed_space;  // basis of Fix(w), root coords
};

/// Finite crystallographic Coxeter group in its geometric representation over
/// the simple-root basis. All element matrices have integer entries; every
/// derived quantity is exact.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  int rank() const { return n_; }
  const QMatrix& bilinear_form() const { return form_; }

  // --- reflection table ---
  int num_reflections() const { return static_cast<int>(refl_elem_.size()); }
  /// Positive root of t, coordinates over the simple roots (integers).
  const std::vector<long>& root(ReflId t) const { return roots_[t]; }
  std::vector<Rat> root_q(ReflId t) const;
  ElemId reflection_element(ReflId t) const { return refl_elem_[t]; }
  std::optional<ReflId> reflection_of(ElemId w) const;
  ReflId simple_reflection(int i) const { return simple_refl_[i]; }  // 0-based
  /// t^w = w^{-1} t w
  ReflId conjugate(ReflId t, ElemId w) const;
  /// w t w^{-1}
  ReflId conj_by(ReflId t, ElemId w) const;
  Rat root_inner(ReflId t, ReflId u) const;  // <rho(t), rho(u)>

  // --- element registry ---
  ElemId identity() const { return 0; }
  ElemId coxeter_element() const { return coxeter_elem_; }
  int coxeter_order() const { return coxeter_order_; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId mul(std::initializer_list<ElemId> xs) const;
  ElemId inverse(ElemId a) const;
  ElemId product_of_reflections(const std::vector<ReflId>& word) const;
  /// Absolute length n - dim Fix(w) (Carter's identity).
  int reflection_length(ElemId w) const;
  /// Coxeter length: number of positive roots sent negative.
  int coxeter_length(ElemId w) const;
  QMatrix matrix_of(ElemId w) const;
  std::vector<Rat> act(ElemId w, const std::vector<Rat>& v) const;
  std::vector<long> act(ElemId w, const std::vector<long>& v) const;
  bool preserves_form(ElemId w) const;  // M^t B M == B
  std::size_t num_interned() const;

  /// Absolute order: w <=_T z iff lengths add along w^{-1}z.
  bool leq_T(ElemId w, ElemId z) const;

  /// Reflections of the rank-2 parabolic containing t and u, indexed so that
  /// u_{i+1} u_i = u_i u_{i-1} (mod m) and u_1, u_m are the parabolic's
  /// simples; of the two valid indexings, u_1 is the smaller reflection id.
  std::vector<ReflId> rank2_order(ReflId t, ReflId u) const;

  ParabolicData parabolic_closure(ElemId w) const;

 private:
  void build_catalog();
  void build_roots();
  ElemId intern(const std::vector<long>& mat) const;
  std::vector<long> reflection_matrix(const std::vector<long>& beta) const;

  GroupSpec spec_;
  int n_ = 0;
  QMatrix form_;                          // symmetrized Cartan matrix
  std::vector<std::vector<long>> roots_;  // positive roots, lex-sorted
  std::vector<ElemId> refl_elem_;
  std::vector<ReflId> simple_refl_;
  ElemId coxeter_elem_ = 0;
  int coxeter_order_ = 1;

  mutable std::mutex mu_;
  mutable std::deque<std::vector<long>> elems_;
  mutable std::unordered_map<std::vector<long>, ElemId, VecHash> index_;
  mutable std::deque<int> ell_t_;   // -1 = unknown
  mutable std::deque<int> ell_s_;   // -1 = unknown
  mutable std::deque<ElemId> inv_;  // -1 = unknown
  mutable std::unordered_map<ElemId, ReflId> elem_to_refl_;
};

/// Coordinates of `target` in the basis `generators` (columns); absent when
/// target is outside the span. Throws when the generators are dependent.
/// Cone membership is "all coordinates >= 0" on the result.
std::optional<std::vector<Rat>> solve_in_cone(
    const std::vector<std::vector<Rat>>& generators,
    const std::vector<Rat>& target);

// --- naming (coxeter_names.cpp) ---

/// One-based permutation of 1..n+1 realized by an A-family element.
std::vector<int> a_family_permutation(const CoxeterGroup& g, ElemId w);
/// Signed permutation images of e_1..e_n for B/D families; entry +-j.
std::vector<int> signed_permutation(const CoxeterGroup& g, ElemId w);
/// Human name of a reflection: "(1,2)" (A), "((1,2))" / "((1,-2))" / "[1]"
/// (B/D), "t[coords]" otherwise.
std::string reflection_name(const CoxeterGroup& g, ReflId t);
/// Cycle/window notation for a general element where the family admits it.
std::string element_name(const CoxeterGroup& g, ElemId w);
/// Inverse of reflection_name; throws if no reflection carries that name.
ReflId reflection_by_name(const CoxeterGroup& g, const std::string& name);

}  // namespace dualbraid
