#pragma once

#include <map>
#include <set>
#include <vector>

#include "skeinrep/precision.hpp"
#include "skeinrep/sixj.hpp"
#include "skeinrep/surface.hpp"

namespace skeinrep {

/// Finitely supported vector on colorings of one triangulation.  Entries are
/// never pruned except when a coefficient is exactly zero.
using SparseVec = std::map<Coloring, PrecComplex>;

SparseVec basis_vector(const Coloring& c, int digits = PrecComplex::kDefaultDigits);
/// max |v - w| over the union of supports
Real max_difference(const SparseVec& v, const SparseVec& w);
/// Coloring of the target of an isomorphism with edge map m.
Coloring relabel_coloring(const Coloring& c, const std::vector<int>& m);

/// Change of basis across one flip.  At a point with a level the sum runs over
/// r-admissible colorings only.
SparseVec flip_operator_apply(const SparseVec& v, const Triangulation& tri, int e, SixjEvaluator& ev);
/// Composition of flip operators along `flips`; the result lives on the end
/// triangulation of the path.
SparseVec cocycle_apply(const SparseVec& v, const Triangulation& tri, const std::vector<int>& flips,
                        SixjEvaluator& ev);
/// Cocycle along the path of g followed by its relabeling.
SparseVec rep_apply(const MappingClass& g, const SparseVec& v, SixjEvaluator& ev);

/// Largest face sum of any 6j-symbol met while expanding `start` along the
/// path without truncation.
int path_max_triple_sum(const Triangulation& tri, const std::vector<int>& flips, const Coloring& start);

struct Coefficient {
  PrecComplex value;
  std::set<int> bad_set;  ///< levels excluded for this coefficient
};

/// <rho_A(g) delta_gamma, delta_gamma'>; throws BadRootError when the level of
/// A lies in the excluded set.
Coefficient matrix_coefficient(const MappingClass& g, const Coloring& gamma, const Coloring& gamma_prime,
                               const QPoint& point);

struct RepMatrix {
  int r = 0;
  std::vector<Coloring> basis;
  std::vector<Coloring> row_basis;  ///< equals basis except for flip matrices
  std::vector<PrecComplex> data;    ///< row-major, basis.size()^2 entries

  size_t dim() const { return basis.size(); }
  const PrecComplex& at(size_t i, size_t j) const { return data[i * dim() + j]; }
};

/// Matrix of rho_A(g) on the lexicographic r-admissible basis; A must have
/// level r.  Columns are computed on `threads` workers (0 = hardware).
RepMatrix assemble_matrix(const MappingClass& g, int r, const QPoint& point, unsigned threads = 0);
/// Matrix of a single flip between the r-admissible bases of tri and flip(tri, e).
RepMatrix flip_matrix(const Triangulation& tri, int e, int r, const QPoint& point);
/// max |(M^* M - I)_{ij}|
Real unitarity_residual(const RepMatrix& m);
/// max |(M - I)_{ij}|
Real identity_distance(const RepMatrix& m);

struct BlockNorm {
  double norm2 = 0;
  double norm1 = 0;
  double norminf = 0;
  Real bound;
  size_t rows = 0, cols = 0;
};

/// Block M_{cf} of renormalized 6j-symbols for fixed outer colors a,b,d,e,
/// its operator norm and the bound 12 K(A) / (1 - |A|).
BlockNorm block_norm_check(int a, int b, int d, int e, const PrecComplex& A);
BlockNorm block_norm_check(int a, int b, int d, int e, SixjEvaluator& ev, const Real& K);

/// prod_e circle_e^{-1} prod_t theta_t over the dual spine.
PrecComplex ym_weight(const Triangulation& tri, const Coloring& c, SixjEvaluator& ev);

struct FaithfulnessWitness {
  Coloring gamma;
  Coloring image;
  int N = 0;   ///< largest triangle sum over gamma and its image
  int r0 = 0;  ///< first level at which both are r-admissible
};

FaithfulnessWitness faithfulness_probe(const MappingClass& g, int search_weight);

}  // namespace skeinrep
