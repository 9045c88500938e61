#pragma once

#include <map>

#include "dualbraid/cluster.hpp"

namespace dualbraid {

/// Word in the tensor algebra: letters are interned group elements. Words
/// over reflections and words over W (used by the contraction machinery)
/// share this representation.
using Word = std::vector<ElemId>;
/// Finite linear combination of words with exact rational coefficients.
using TensorElement = std::map<Word, Rat>;

struct PsiReport {
  bool pass = false;
  bool unitriangular = true;  // f_sh - f_ox supported on lex-smaller faces
  bool relations_vanish = true;
  bool dims_match = true;
  std::string details;
};

struct TopHomologyReport {
  bool pass = false;
  int dim_component = -1;   // dim N_(c,n)
  int dim_kernel = -1;      // dim ker Delta_{n-2}
  long mu_invariant = 0;    // |mu_NC(c)|
  bool xi_injective = false;
  bool lands_in_kernel = false;
  bool equivariant = false;
  std::string details;
};

struct SimpleSubalgebraReport {
  bool pass = false;
  bool sign_independent = true;  // x_w independent of the reduced word up to sign
  bool linearly_independent = true;
  bool product_rule = true;  // x_w x_w' = +-x_{ww'} under length additivity
  std::string details;
};

/// The twisted shuffle algebra generated by reflections inside the tensor
/// algebra, together with the contraction/deletion operators that tie its
/// top component to the homology of NC.
class NicholsAlgebra {
 public:
  explicit NicholsAlgebra(const CoxeterGroup& g) : g_(&g) {}

  const CoxeterGroup& group() const { return *g_; }

  TensorElement unit() const { return {{Word{}, Rat(1)}}; }
  Word word_of_reflections(const std::vector<ReflId>& ts) const;
  TensorElement singleton(const Word& w) const { return {{w, Rat(1)}}; }

  /// Signed shuffle (the wedge-product embedding).
  TensorElement shuffle(const TensorElement& x, const TensorElement& y) const;
  /// Twisted analog: the right-peeled letter conjugates the whole left word.
  TensorElement twisted_shuffle(const TensorElement& x, const TensorElement& y) const;
  /// t_1 sh t_2 sh ... sh t_j, left fold of twisted shuffles.
  TensorElement shuffle_word(const std::vector<ReflId>& ts) const;

  /// Braiding ς(t (x) u) = -u (x) t^u; Yang-Baxter checked on all basis
  /// triples.
  bool yang_baxter_exhaustive() const;

  /// (product, length) of a word.
  std::pair<ElemId, int> component_of(const Word& w) const;
  /// Quotient by J_c: drop components with product outside NC_length.
  TensorElement project_nc(const NCLattice& L, const TensorElement& x) const;

  /// Rank of the span of all j-letter twisted shuffle products with total
  /// product w. Enumeration halts at max_words (truncated flag reported via
  /// the optional out-parameter).
  int component_dim(ElemId w, int j, long max_words = 2000000,
                    bool* truncated = nullptr) const;

  /// Sum of signed adjacent contractions; zero on single letters.
  TensorElement nabla(const TensorElement& x) const;
  /// Signed deletions (1-indexed), matching the chain boundary of NC.
  TensorElement deletion(const TensorElement& x) const;
  /// w_1 (x) ... (x) w_k -> w_1 (x) w_1w_2 (x) ... (x) w_1...w_{k-1}.
  TensorElement xi(const TensorElement& x) const;

  PsiReport psi_check(const PositiveComplex& C) const;
  TopHomologyReport nc_top_homology(const NCLattice& L) const;
  SimpleSubalgebraReport simple_subalgebra_check() const;

 private:
  TensorElement twisted_shuffle_words(const Word& x, const Word& y) const;
  Word conj_word(const Word& w, ElemId u) const;  // every letter a -> u^{-1} a u

  const CoxeterGroup* g_;
};

void add_scaled(TensorElement& acc, const TensorElement& x, const Rat& c);

}  // namespace dualbraid
