#pragma once

#include <optional>
#include <vector>

#include "dualbraid/coxeter.hpp"

namespace dualbraid {

/// A subposet of NC closed under the ambient order, with its own Mobius
/// function computed from the induced order (not the restriction of the
/// ambient one).
struct SubPoset {
  std::vector<int> members;    // nc indices, ascending
  std::vector<long> moebius;   // per member, from the bottom of the subposet
};

/// The noncrossing partition lattice NC(W,c) = [e,c] in absolute order,
/// with rank, order, Mobius, meet and join tables. Construction verifies
/// the lattice property and aborts on any violation.
class NCLattice {
 public:
  explicit NCLattice(const CoxeterGroup& g);

  const CoxeterGroup& group() const { return *g_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int top_rank() const { return g_->rank(); }
  ElemId element(int i) const { return elements_[i]; }
  std::optional<int> index_of(ElemId w) const;
  int rank_of(int i) const { return rank_[i]; }
  int bottom() const { return 0; }
  int top() const { return top_; }
  const std::vector<int>& by_rank(int k) const {
    static const std::vector<int> empty;
    return (k >= 0 && k < static_cast<int>(by_rank_.size())) ? by_rank_[k] : empty;
  }

  bool leq(int i, int j) const { return lower_[j].get(i); }
  const BitRow& lower(int i) const { return lower_[i]; }  // {j : j <= i}
  const BitRow& upper(int i) const { return upper_[i]; }
  long moebius(int i) const { return moebius_[i]; }
  int meet(int i, int j) const { return meet_[i * size() + j]; }
  int join(int i, int j) const { return join_[i * size() + j]; }
  /// Sum over NC of mu(w) q^{l_T(w)}; coefficient k of the returned vector
  /// is the total Mobius mass at rank k.
  std::vector<long> moebius_polynomial() const;

  /// Reflections t <= w, as bits over ReflId.
  const BitRow& atoms_below(int i) const { return atoms_[i]; }
  int atom_index(ReflId t) const { return atom_index_[t]; }

  /// Index of c^i w c^{-i}.
  int conj_by_c_power(int i_nc, int power) const;

  /// Orbit of a reduced factorization under Hurwitz moves at every position.
  std::vector<std::vector<ReflId>> hurwitz_orbit(const std::vector<ReflId>& f) const;
  /// Independent oracle: all reduced reflection words of w by descent search.
  std::vector<std::vector<ReflId>> all_reduced_factorizations(ElemId w) const;

  /// Elements fixed by conjugation by c^i, with the induced order.
  SubPoset fixed_subposet(int power) const;
  std::vector<long> subposet_moebius_polynomial(const SubPoset& p) const;
  bool subposet_closed_under_meet_join(const SubPoset& p) const;

 private:
  const CoxeterGroup* g_;
  std::vector<ElemId> elements_;
  std::unordered_map<ElemId, int> index_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> by_rank_;
  int top_ = -1;
  std::vector<BitRow> lower_, upper_;
  std::vector<long> moebius_;
  std::vector<int> meet_, join_;
  std::vector<BitRow> atoms_;
  std::vector<int> atom_index_;
};

}  // namespace dualbraid
