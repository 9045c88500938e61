#pragma once

#include <map>

#include "dualbraid/nichols.hpp"

namespace dualbraid {

/// Intersection lattice of the reflection arrangement: flats are subspaces
/// stored by the reduced row-echelon basis of their normal space, ordered by
/// reverse inclusion.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(const CoxeterGroup& g);

  const CoxeterGroup& group() const { return *g_; }
  int size() const { return static_cast<int>(flats_.size()); }
  int ambient() const { return 0; }
  int codim(int x) const { return flats_[x].rows(); }
  long moebius(int x) const { return moebius_[x]; }
  /// y <= x in the lattice order (x is contained in y as a subspace).
  bool leq(int y, int x) const;
  int hyperplane(ReflId t) const { return hyperplane_[t]; }
  /// Flat of x intersected with H_t.
  int meet_hyperplane(int x, ReflId t) const;
  int flat_of(const std::vector<ReflId>& ts) const;
  /// Whitney numbers: sum of |mu| over flats of each codimension.
  std::vector<long> whitney() const;
  const QMatrix& normal_basis(int x) const { return flats_[x]; }

 private:
  int intern(const QMatrix& rref_normals);

  const CoxeterGroup* g_;
  std::vector<QMatrix> flats_;  // RREF bases of normal spaces
  std::map<std::vector<std::string>, int> index_;
  std::vector<long> moebius_;
  std::vector<int> hyperplane_;
  std::vector<std::vector<int>> meet_cache_;  // flat x refl -> flat
};

/// Flag word: the sequence of partial-intersection flats of a tensor word.
using FlagWord = std::vector<int>;
using FlagElement = std::map<FlagWord, Rat>;

struct OsReport {
  bool pass = false;
  std::map<int, long> dim_by_flat;   // flat -> dim OS_x
  std::vector<long> dim_by_codim;    // Poincare-polynomial coefficients
  bool matches_moebius = true;       // dim OS_x == |mu_L(x)| for every flat
  std::string details;
};

/// The Orlik-Solomon algebra realized through lambda-images of wedge words.
class OrlikSolomonAlgebra {
 public:
  explicit OrlikSolomonAlgebra(const CoxeterGroup& g)
      : g_(&g), N_(g), L_(g) {}

  const IntersectionLattice& intersection_lattice() const { return L_; }

  /// lambda(t_1 (x) ... (x) t_j) = H_{t_1} (x) (H_{t_1} cap H_{t_2}) (x) ...
  /// Linear extension to tensor elements whose letters are reflections.
  /// (The arrangement is central, so the affine empty-intersection clause of
  /// the definition never triggers.)
  FlagElement lambda(const TensorElement& x) const;

  /// Wedge word of a reflection subset via the signed shuffle.
  TensorElement wedge(const std::vector<ReflId>& ts) const;

  OsReport os_dims() const;

  const NicholsAlgebra& nichols() const { return N_; }

 private:
  const CoxeterGroup* g_;
  NicholsAlgebra N_;
  IntersectionLattice L_;
};

}  // namespace dualbraid
