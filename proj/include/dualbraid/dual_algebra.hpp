#pragma once

#include <map>

#include "dualbraid/cluster.hpp"

namespace dualbraid {

/// Element of the dual algebra in the face basis: face id -> coefficient.
using DualElement = std::map<int, Rat>;

struct RelationSet {
  std::vector<ReflId> squares;                           // t (x) t
  std::vector<std::pair<ReflId, ReflId>> vanishing;      // t (x) u, tu not in NC_2
  std::vector<std::pair<int, std::vector<ReflId>>> cyclic;  // (nc2 index, u_1 < ... < u_m)
};

/// The quadratic dual of the monoid algebra, computed through the PBW face
/// basis. `rewrite` is the reference decision procedure; the geometric
/// product rule is an independent route kept for cross-checking and as an
/// optional fast path.
class DualAlgebra {
 public:
  explicit DualAlgebra(const PositiveComplex& C);

  const PositiveComplex& complex() const { return *C_; }

  RelationSet relations() const;

  /// Expand a word of generators in the face basis (0 when the product is
  /// not a reduced NC factorization).
  DualElement rewrite(const std::vector<ReflId>& word) const;
  DualElement multiply(const DualElement& x, const DualElement& y) const;
  /// Product rule via the cluster fan: sum of omega(f) f over faces whose
  /// cones tile the cone of the word.
  DualElement multiply_geometric(const std::vector<ReflId>& word) const;

  DualElement unit() const { return {{0, Rat(1)}}; }
  /// Homogeneous degree; -1 for the zero element, throws when mixed.
  int degree_of(const DualElement& x) const;

  std::vector<long> hilbert() const { return C_->f_polynomial(); }

  /// Trace of the conjugation automorphism by c^power on each graded piece.
  std::vector<Int> cyclic_character(int power) const;
  /// Image of a basis face under the conjugation automorphism by c^power.
  DualElement conj_face(int face_id, int power) const;

 private:
  const DualElement& rewrite_reduced(const std::vector<ReflId>& word) const;

  const PositiveComplex* C_;
  mutable std::map<std::vector<ReflId>, DualElement> cache_;
};

}  // namespace dualbraid
