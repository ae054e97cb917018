/*
  This is uq.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  The quantized enveloping algebra U_q(g) over the exact field Q(q).

  Every element is kept in triangular normal form: a sum of terms
  c * F[w] K[t] E[v], where w and v are words in simple-root letters
  reduced to a fixed basis of canonical words modulo the quantized Serre
  relations, and t is an integer exponent vector for the torus part.

  Conventions in force throughout:
    K_t E_j K_t^-1 = q^((mu_t, alpha_j)) E_j          mu_t = sum t_i alpha_i
    [E_i, F_j]     = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1),   q_i = q^{d_i}
    Delta(E_i) = E_i (x) 1 + K_i (x) E_i
    Delta(F_i) = F_i (x) K_i^-1 + 1 (x) F_i
    S(E_i) = -K_i^-1 E_i,   S(F_i) = -F_i K_i,   S(K_t) = K_{-t}
    x |> y = x_(1) y S(x_(2))                          (left adjoint action)
  The braid operators T_i act by T_i(E_i) = -F_i K_i, T_i(F_i) = -K_i^-1 E_i
  and on the remaining generators by the usual divided-power sums; root
  vectors along a reduced word are E_{b_k} = T_{i_1}...T_{i_{k-1}}(E_{i_k}).
*/

#pragma once

#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "qlie/lie.hpp"
#include "qlie/linalg.hpp"
#include "qlie/scalar.hpp"

namespace qlie {

/* A normal-form monomial F[f] K[k] E[e].  Letters are 0-based simple-root
   indices; k has one (possibly negative) exponent per simple root. */
struct Mono {
  Word f;
  std::vector<int> k;
  Word e;
  bool operator==(const Mono&) const = default;
};

/* Degree then lexicographic, shorter words first. */
bool deglex_less(const Word& x, const Word& y);

struct MonoCmp {
  bool operator()(const Mono& a, const Mono& b) const;
};

using UqElement = std::map<Mono, QScalar, MonoCmp>;

struct MonoPairCmp {
  bool operator()(const std::pair<Mono, Mono>& a,
                  const std::pair<Mono, Mono>& b) const;
};
struct MonoVecCmp {
  bool operator()(const std::vector<Mono>& a, const std::vector<Mono>& b) const;
};

using Tensor2 = std::map<std::pair<Mono, Mono>, QScalar, MonoPairCmp>;
using TensorN = std::map<std::vector<Mono>, QScalar, MonoVecCmp>;

/* Canonical-word table for one E-content: every word of that content is
   either a basis word or rewrites, in one step, to a combination of basis
   words modulo the quantized Serre relations. */
struct WordTable {
  std::vector<Word> words;  // all words of the content, lex ascending
  std::map<Word, int> index;
  std::vector<std::vector<std::pair<int, QScalar>>> rewrite;  // by word index
  std::vector<int> basis;  // indices of basis words, ascending
};

class UqAlgebra {
 public:
  explicit UqAlgebra(RootSystem rs) : rs_(std::move(rs)) {}
  UqAlgebra(const UqAlgebra&) = delete;
  UqAlgebra& operator=(const UqAlgebra&) = delete;

  const RootSystem& rs() const { return rs_; }

  /* Word table for the given letter content (an entry per simple root);
     built on first use, then shared. */
  std::shared_ptr<const WordTable> table(const Root& content) const;

  /* Root vectors E_{b_1..b_len}, F_{b_1..b_len} along a reduced word. */
  std::shared_ptr<const std::vector<UqElement>> root_vectors_e(
      const Word& reduced) const;
  std::shared_ptr<const std::vector<UqElement>> root_vectors_f(
      const Word& reduced) const;

 private:
  std::shared_ptr<const std::vector<UqElement>> root_vectors(
      const Word& reduced, bool use_f) const;

  RootSystem rs_;
  mutable std::shared_mutex table_mu_;
  mutable std::map<Root, std::shared_ptr<const WordTable>> tables_;
  mutable std::shared_mutex rv_mu_;
  mutable std::map<std::pair<Word, bool>,
                   std::shared_ptr<const std::vector<UqElement>>>
      rv_;
};

/* ---------- element construction and arithmetic ---------- */

UqElement uq_zero();
UqElement uq_one(const UqAlgebra& g);
UqElement gen_e(const UqAlgebra& g, int i);
UqElement gen_f(const UqAlgebra& g, int i);
UqElement gen_k(const UqAlgebra& g, const std::vector<int>& t);
UqElement gen_k_inv(const UqAlgebra& g, int i);  // K_i^-1

void add_term(UqElement& x, const Mono& m, const QScalar& c);
UqElement add(const UqElement& a, const UqElement& b);
UqElement sub(const UqElement& a, const UqElement& b);
UqElement scale(const QScalar& c, const UqElement& a);
UqElement mul(const UqAlgebra& g, const UqElement& a, const UqElement& b);
UqElement mul(const UqAlgebra& g, const UqElement& a, const UqElement& b,
              const UqElement& c);

/* x^n, and the divided power x^n / [n]_{q^d}! . */
UqElement uq_pow(const UqAlgebra& g, const UqElement& x, int n);
UqElement divided_power(const UqAlgebra& g, const UqElement& x, int n, long d);

/* Weight of a term: sum of E letters minus sum of F letters.  The
   element-level form requires all terms to agree. */
Root mono_weight(const UqAlgebra& g, const Mono& m);
std::optional<Root> weight(const UqAlgebra& g, const UqElement& x);

bool is_pure_e(const UqElement& x);  // no F letters, no K part

/* ---------- Hopf structure ---------- */

Tensor2 coproduct(const UqAlgebra& g, const UqElement& x);
TensorN coproduct_n(const UqAlgebra& g, const UqElement& x, int n);
UqElement antipode(const UqAlgebra& g, const UqElement& x);
QScalar counit(const UqAlgebra& g, const UqElement& x);

/* ---------- adjoint action ---------- */

UqElement ad_e(const UqAlgebra& g, int i, const UqElement& y);
UqElement ad_f(const UqAlgebra& g, int i, const UqElement& y);
UqElement ad_k(const UqAlgebra& g, const std::vector<int>& t,
               const UqElement& y);
/* E_v |> y, letters applied right to left. */
UqElement ad_word_e(const UqAlgebra& g, const Word& v, const UqElement& y);
UqElement ad_word_f(const UqAlgebra& g, const Word& w, const UqElement& y);
/* General x |> y via the coproduct. */
UqElement ad(const UqAlgebra& g, const UqElement& x, const UqElement& y);

/* ---------- braid operators and PBW bases ---------- */

UqElement lusztig_t(const UqAlgebra& g, int i, const UqElement& x);
UqElement lusztig_t_inv(const UqAlgebra& g, int i, const UqElement& x);

/* PBW data along a reduced word for some Weyl group element. */
struct PbwBasis {
  Word reduced;
  std::vector<Root> betas;
  std::vector<long> d_beta;  // (beta,beta)/2 per position
  std::shared_ptr<const std::vector<UqElement>> e_vectors;
  std::shared_ptr<const std::vector<UqElement>> f_vectors;
};
PbwBasis pbw_basis(const UqAlgebra& g, const Word& reduced);

/* Product of divided powers E_{b_1}^{(m_1)} ... E_{b_len}^{(m_len)}. */
UqElement pbw_monomial(const UqAlgebra& g, const PbwBasis& pb,
                       const std::vector<int>& m);

/* Expansion of a pure-E element in the PBW basis: exponent vectors with
   their coefficients, ordered lexicographically. */
std::vector<std::pair<std::vector<int>, QScalar>> pbw_expand(
    const UqAlgebra& g, const PbwBasis& pb, const UqElement& x);

/* All PBW exponent vectors of the given content, lexicographically. */
std::vector<std::vector<int>> pbw_exponents(const PbwBasis& pb,
                                            const Root& content);

/* [x, y]_q = x y - q^((wt x, wt y)) y x; both arguments must be
   weight-homogeneous. */
UqElement q_commutator(const UqAlgebra& g, const UqElement& x,
                       const UqElement& y);

/* ---------- involutions ---------- */

UqElement omega(const UqAlgebra& g, const UqElement& x);  // E<->F, K -> K^-1
UqElement star(const UqAlgebra& g, const UqElement& x);   // *-structure

/* ---------- tensor arithmetic ---------- */

Tensor2 t2_outer(const UqElement& a, const UqElement& b);
void t2_add_term(Tensor2& x, const Mono& a, const Mono& b, const QScalar& c);
Tensor2 t2_add(const Tensor2& a, const Tensor2& b);
Tensor2 t2_sub(const Tensor2& a, const Tensor2& b);
Tensor2 t2_scale(const QScalar& c, const Tensor2& a);
Tensor2 t2_mul(const UqAlgebra& g, const Tensor2& a, const Tensor2& b);
Tensor2 t2_flip(const Tensor2& a);

TensorN tn_from(const UqElement& x, int n);  // x (x) 1 (x) ... (x) 1 etc.
TensorN tn_outer(const std::vector<UqElement>& legs);
TensorN tn_add(const TensorN& a, const TensorN& b);
TensorN tn_scale(const QScalar& c, const TensorN& a);
TensorN tn_mul(const UqAlgebra& g, const TensorN& a, const TensorN& b);

/* ---------- text form ---------- */

/* "c * F[..] K[..] E[..]" terms joined with +/-; 1-based letters. */
std::string element_str(const UqAlgebra& g, const UqElement& x);
std::string tensor2_str(const UqAlgebra& g, const Tensor2& x);

/* Inverse of element_str.  When a PBW basis is supplied, root-vector
   factors E[b3], F[b3] and divided powers E[b3]^(2) are accepted too. */
UqElement element_parse(const UqAlgebra& g, const std::string& text,
                        const PbwBasis* pb = nullptr);

/* Coefficient display that recognizes q-integers: "[2]_q", "[3]_{q^2}",
   with sign, falling back to the canonical scalar form. */
std::string pretty_coeff(const QScalar& c);

/* PBW expansion as text: terms like "[2]_q * E[b4]" or "E[b2]^(3) E[b6]". */
std::string pbw_str(
    const UqAlgebra& g, const PbwBasis& pb,
    const std::vector<std::pair<std::vector<int>, QScalar>>& terms);

}  // namespace qlie
