#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualbraid/nc_lattice.hpp"

namespace dualbraid {

/// Total order on reflections; position 0 is the smallest.
struct ReflOrdering {
  std::vector<int> pos;        // ReflId -> position
  std::vector<ReflId> by_pos;  // position -> ReflId
  bool less(ReflId a, ReflId b) const { return pos[a] < pos[b]; }
};

struct OrderCert {
  bool ok = true;
  std::string message;
  ElemId witness = -1;  // violating NC_2 element, if any
};

/// The c-sorting word of the longest element, as 0-based simple indices.
std::vector<int> c_sorting_word(const CoxeterGroup& g);
/// Reflection ordering read off the c-sorting word via prefix conjugates.
/// Aborts if the result fails either verification below.
ReflOrdering sorting_order(const CoxeterGroup& g, const NCLattice& L);
/// Dyer condition: each rank-2 parabolic appears monotonically.
OrderCert verify_reflection_ordering(const CoxeterGroup& g, const ReflOrdering& o);
/// ABW compatibility: for each w in NC_2 with T(w) = {u_1 < ... < u_m},
/// w = u_i u_{i-1} for all i mod m.
OrderCert verify_c_compatible(const CoxeterGroup& g, const NCLattice& L,
                              const ReflOrdering& o);

/// A face of the positive cluster complex: vertices strictly decreasing in
/// the reflection ordering, together with its noncrossing label.
struct Face {
  std::vector<ReflId> verts;  // descending
  int nc = -1;                // NC index of the product in descending order
};

/// Augmented rational chain complex: boundary[i] maps dimension-i chains to
/// dimension-(i-1) chains, i = 0..top (dimension -1 is the empty face).
struct ChainComplexQ {
  std::vector<QMatrix> boundary;
  std::vector<int> dims;  // dims[i+1] = #faces of dimension i, dims[0] = 1
};

/// Reduced Betti numbers b_{-1}..b_top; composition beta beta = 0 is checked
/// and aborts on failure.
std::vector<int> reduced_betti(const ChainComplexQ& c);

struct ConeData {
  bool contained = false;
  std::optional<int> omega;  // orientation sign, only when |face| = |big|
};

/// Membership of the face's cone in the cone of `big`, plus the orientation
/// sign of the face's roots in the ordered basis `big`.
ConeData cone_data(const CoxeterGroup& g, const std::vector<ReflId>& big,
                   const std::vector<ReflId>& face_desc);

/// The positive cluster complex for (W, c) and a c-compatible ordering.
class PositiveComplex {
 public:
  PositiveComplex(const NCLattice& L, ReflOrdering order);

  const NCLattice& lattice() const { return *L_; }
  const CoxeterGroup& group() const { return L_->group(); }
  const ReflOrdering& order() const { return order_; }

  int num_faces() const { return static_cast<int>(faces_.size()); }
  const Face& face(int id) const { return faces_[id]; }
  int dim_of(int id) const { return static_cast<int>(faces_[id].verts.size()) - 1; }
  /// -1 when the vertex set is not a face. Input must be descending.
  int face_id(const std::vector<ReflId>& verts_desc) const;
  const std::vector<int>& faces_of_dim(int d) const { return by_dim_[d + 1]; }
  const std::vector<int>& facet_ids() const { return by_dim_.back(); }
  const std::vector<int>& faces_with_nc(int nc_index) const;
  /// Coefficient of q^k is the number of (k-1)-dimensional faces.
  std::vector<long> f_polynomial() const;

  /// Faces of the full subcomplex Delta^+(w); errors on w = e.
  std::vector<int> subcomplex_faces(int nc_index) const;
  /// Independent construction of Delta^+(w) as the positive complex of the
  /// parabolic (Gamma(w), w): descending words over T(w) with product w,
  /// closed under subsets.
  std::vector<int> parabolic_complex_faces(int nc_index) const;

  ChainComplexQ chain_complex(const std::vector<int>& face_ids) const;

  int omega(const std::vector<ReflId>& big, int face_id) const;

 private:
  void add_face(const std::vector<ReflId>& verts_desc);

  const NCLattice* L_;
  ReflOrdering order_;
  std::vector<Face> faces_;
  std::map<std::vector<ReflId>, int> face_index_;
  std::vector<std::vector<int>> by_dim_;     // [d+1] -> face ids
  std::vector<std::vector<int>> by_nc_;      // nc index -> face ids
};

}  // namespace dualbraid
