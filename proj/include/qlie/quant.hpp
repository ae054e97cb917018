/*
  This is quant.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  Equivariant quantization of the flag-ordered nilradical inside U_q(n),
  quantum Schubert cells, coideal verification, and the tangent spaces
  of the associated covariant calculi.

  For an ordering i_1, ..., i_r of the simple roots, layer k carries the
  Levi subset S_k = {i_1, ..., i_{k-1}} and is graded by the coefficient
  of alpha_{i_k}.  The degree-one component is the adjoint closure of
  E_{i_k}.  The degree-two component is generated by the unique
  lowest-weight line sitting at the lowest classical root of the graded
  piece inside the square of the degree-one span.  The degree-three
  generator is the projectively unique combination of lowest-weight
  candidates whose coproduct keeps every right leg of grading degree
  at most two inside the lower components; the result is then checked
  to stay a coideal in full.  Degrees four and higher are refused.

  Normalization: a component generator is scaled so that the leading
  coefficient of its expansion along the adapted reduced word is 1
  ("canonical").  The "paper-g2" mode additionally applies the fixed
  reference scalings for G2 with order 2,1 used by the golden tables.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qlie/uq.hpp"

namespace qlie {

/* A finite-dimensional span inside U_q(n), stable under the adjoint
   action of the Levi generators for the subset `levi`. */
struct AdjointModule {
  std::vector<int> levi;  // ascending
  int node = -1;          // grading simple root, -1 when not applicable
  int degree = 0;         // grading degree, 0 when not applicable
  std::vector<UqElement> basis;  // discovery order, generators first
  std::vector<Root> weights;     // one per basis vector
  UqElement lowest;   // empty unless the lowest-weight space is a line
  UqElement highest;  // likewise for the highest-weight space
  QScalar norm_scalar = QScalar::one();  // factor applied to the generator
};

/* Minimal span containing the generators and stable under E_i|>, F_i|>
   for i in levi.  Faults when the dimension exceeds dim_bound. */
AdjointModule module_closure(const UqAlgebra& g, std::vector<int> levi,
                             const std::vector<UqElement>& generators,
                             std::size_t dim_bound);

/* Basis of {v in span(space) : F_i |> v = 0 for all i in levi},
   organized by ascending weight.  Space vectors must be weight
   vectors; dependent ones are tolerated. */
std::vector<UqElement> lowest_weight_vectors(
    const UqAlgebra& g, const std::vector<int>& levi,
    const std::vector<UqElement>& space);

/* Reduced word for the longest element assembled layer by layer along
   the order: the concatenation of the coset words of the nested
   parabolic factorizations.  The roots of layer k appear contiguously. */
Word flag_adapted_word(const RootSystem& rs, const Word& order);

struct Quantization {
  Word order;                // i_1 ... i_r, 0-based simple-root indices
  std::string normalization; // "canonical" or "paper-g2"
  Word adapted;              // flag_adapted_word(rs, order)
  std::vector<FlagLayer> layers;
  std::vector<std::vector<AdjointModule>> modules;  // [k][n-1]
  std::vector<std::string> certificate;  // uniqueness records, one per line
};

Quantization quantize(const UqAlgebra& g, const Word& order,
                      const std::string& normalization = "canonical");

/* Evidence that span(1, basis) is not a left coideal: a basis vector
   whose coproduct has a right component outside the span. */
struct CoidealWitness {
  UqElement vec;
  Mono left;
  UqElement right;
};

/* Checks Delta(v) in U_q(b) (x) span(1, basis) for every v in basis by
   grouping the coproduct over its left normal-form monomials. */
std::optional<CoidealWitness> coideal_check(const UqAlgebra& g,
                                            const std::vector<UqElement>& basis);

/* Quantum Schubert cell for the factorization w_{0,A} = w_{0,S} w_S
   inside the parabolic subdiagram on `ambient`: the subalgebra of
   U_q(n) generated by the quantum root vectors along a reduced word of
   w_S, twisted by T_{w_{0,S}} on request.  Height-graded bases are
   produced up to the cutoff. */
struct SchubertCell {
  std::vector<int> levi;     // S, ascending
  std::vector<int> ambient;  // A, ascending
  bool twisted = false;
  int cutoff = 0;
  Word word;                       // reduced word of the coset factor w_S
  std::vector<Root> roots;         // cell roots, enumeration order
  std::vector<UqElement> vectors;  // quantum root vectors, one per root
  std::vector<std::vector<UqElement>> bases;  // [d-1]: height-d basis
  std::vector<std::vector<Root>> contents;    // content per basis element
};

SchubertCell schubert_cell(const UqAlgebra& g, std::vector<int> levi,
                           std::vector<int> ambient, bool twisted, int cutoff);
/* Same with the full diagram as ambient. */
SchubertCell schubert_cell(const UqAlgebra& g, std::vector<int> levi,
                           bool twisted, int cutoff);

/* Tangent spaces of the covariant calculi attached to a quantization:
   T_- = span{1, omega(basis)} inside U_q(n_-) and T_+ its star image.
   Construction verifies that T_- is a right coideal by direct coproduct
   expansion.  fodc_dims[k] = 1 + sum of the dims of layers j >= k. */
struct TangentSpaces {
  std::vector<UqElement> t_minus;
  std::vector<UqElement> t_plus;
  std::vector<std::size_t> fodc_dims;
};

TangentSpaces tangent_spaces(const UqAlgebra& g, const Quantization& quant);

}  // namespace qlie
