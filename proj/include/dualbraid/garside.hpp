#pragma once

#include <optional>
#include <random>
#include <vector>

#include "dualbraid/nc_lattice.hpp"

namespace dualbraid {

/// Element of the dual braid monoid in left-greedy normal form: a sequence of
/// nonidentity simples (stored as NC indices) whose adjacent pairs are all
/// left-weighted. Degree is the sum of the factors' absolute lengths.
struct MonoidElt {
  std::vector<int> nf;
  int degree = 0;
  bool operator==(const MonoidElt&) const = default;
  bool operator<(const MonoidElt& o) const { return nf < o.nf; }
};

struct MonoidEltHash {
  std::size_t operator()(const MonoidElt& m) const { return VecHash{}(m.nf); }
};

/// The dual braid monoid D(W) presented on the simples NC(W,c). Words over
/// atoms are canonicalized by local sliding; the greedy normal form is the
/// representation of every element.
class DualMonoid {
 public:
  explicit DualMonoid(const NCLattice& L);

  const NCLattice& lattice() const { return *L_; }
  const CoxeterGroup& group() const { return L_->group(); }

  /// uv as a simple when lengths add inside NC; absent otherwise.
  std::optional<int> simple_mult(int u, int v) const;
  /// No atom of v slides onto u additively.
  bool left_weighted(int u, int v) const;

  MonoidElt identity_elt() const { return MonoidElt{}; }
  MonoidElt atom(ReflId t) const;
  MonoidElt simple_elt(int nc_index) const;
  MonoidElt garside_element() const { return simple_elt(L_->top()); }

  MonoidElt normal_form(const std::vector<ReflId>& word) const;
  /// Same fixpoint reached with a randomized sliding order; used by the
  /// confluence property test.
  MonoidElt normal_form_randomized(const std::vector<ReflId>& word,
                                   std::mt19937_64& rng) const;
  MonoidElt from_simples(const std::vector<int>& simples) const;
  MonoidElt multiply(const MonoidElt& a, const MonoidElt& b) const;

  /// Number of elements per degree 0..max_deg, counted by transfer-graph
  /// paths weighted by absolute length.
  std::vector<Int> growth_series(int max_deg) const;
  /// Growth of the fixed submonoid under w -> c^i w c^-i.
  std::vector<Int> fixed_growth(int power, int max_deg) const;
  std::vector<long> moebius_polynomial() const { return L_->moebius_polynomial(); }

  /// All elements of the given degree (normal forms); enumeration refuses to
  /// run past the cap so a typo cannot try to materialize millions.
  std::vector<MonoidElt> elements_of_degree(int d, int cap_degree = 6) const;

  /// The automorphism induced by conjugation with c^power, on simples.
  int conj_simple(int nc_index, int power) const;
  MonoidElt conj_elt(const MonoidElt& m, int power) const;

  bool right_divides(int nc_index, const MonoidElt& b, int cap_degree = 6) const;
  /// Greatest simple right divisor shared with the Garside element; verified
  /// to dominate every simple right divisor of b.
  int right_gcd_with_c(const MonoidElt& b, int cap_degree = 6) const;

 private:
  void slide_once(std::vector<int>& nf, std::size_t i, int atom) const;
  std::vector<int> slide_candidates(const std::vector<int>& nf,
                                    std::size_t i) const;
  MonoidElt canonicalize(std::vector<int> simples) const;

  const NCLattice* L_;
  std::vector<std::vector<int>> mult_atom_;  // simple * atom, -1 if not simple
  std::vector<std::vector<int>> drop_atom_;  // atom * simple for atoms below it
  std::vector<std::vector<char>> lw_;        // left-weighted pairs
};

/// Coefficients of the formal power-series inverse of p through degree D
/// (requires p[0] = 1).
std::vector<Int> series_inverse(const std::vector<long>& p, int max_deg);

}  // namespace dualbraid
