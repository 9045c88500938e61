#pragma once

#include <map>

#include "dualbraid/cluster.hpp"
#include "dualbraid/garside.hpp"

namespace dualbraid {

/// Element of the free module A (x) k^{faces of dim j}: (normal form, face
/// id) -> coefficient.
using FreeModElement = std::map<std::pair<std::vector<int>, int>, Rat>;

struct ThetaReport {
  bool pass = false;
  int gcd_nc = -1;           // nc index of the greatest simple right divisor
  std::vector<int> dims;     // Theta_j(b) dimensions, j = -1..n-1
  std::string details;
};

struct ExactnessPosition {
  int degree = 0;
  int position = 0;  // homological index i, -1..n-1
  int dim = 0;
  int rank_out = 0;  // rank of the boundary leaving this position
  int rank_in = 0;   // rank of the boundary entering this position
  bool exact = false;
};

struct ExactnessReport {
  bool pass = false;
  bool minimal = true;         // every boundary entry is a degree-1 generator
  bool theta_split = true;     // boundary preserves each Theta block
  bool euler_ok = true;        // alternating slice dimensions sum to zero
  bool d_squared_zero = true;
  std::vector<ExactnessPosition> positions;
  std::string details;
};

/// The resolution of the ground field by free modules over the monoid
/// algebra, with basis indexed by positive faces.
class Resolution {
 public:
  Resolution(const DualMonoid& M, const PositiveComplex& C);

  const DualMonoid& monoid() const { return *M_; }
  const PositiveComplex& complex() const { return *C_; }

  /// d_j(b (x) f) with dim f = j: alternating sum over vertex deletions,
  /// multiplying b on the right by the prefix-conjugated generator.
  FreeModElement boundary_basis(const MonoidElt& b, int face_id) const;
  FreeModElement boundary(int j, const FreeModElement& x) const;

  /// Conjugated generator for vertex position i of a face: the reflection
  /// t_0 ... t_{i-1} t_i t_{i-1} ... t_0.
  ReflId twisted_generator(int face_id, int i) const;

  ThetaReport theta_check(const MonoidElt& b) const;
  ExactnessReport graded_exactness(int max_deg) const;

 private:
  const DualMonoid* M_;
  const PositiveComplex* C_;
};

}  // namespace dualbraid
