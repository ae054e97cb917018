/*
  This is rmx.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  R-matrix layer for a quantized Levi factor U_q(l_S) inside U_q(g):
  the quasi R-matrix Q_S, the braiding sigma = flip of (kappa o Q_S),
  the actions |> (legwise coproduct action) and the combined action
  x |>> (y (x) z) = x_(1) y S(x_(3)) (x) x_(2) |> z, the transmutation
  map T_S, and the quantum shuffle products P^(n).

  Q_S = sum over Levi-positive gamma of Q_gamma with
  Q_gamma in U^-_{-gamma} (x) U^+_gamma and Q_0 = 1 (x) 1, determined by
    [Q_gamma, E_i (x) 1] = (K_i^-1 (x) E_i) Q_{gamma-a_i}
                           - Q_{gamma-a_i} (K_i (x) E_i)
  for i in S.  kappa scales a (mu, nu) bi-weight component by q^((mu,nu)),
  with the inner product of the full root system.

  All infinite sums are truncated adaptively: the letter actions E_w |>
  and F_w |> on a weight-homogeneous locally finite vector die out after
  finitely many levels, and a fully vanished level ends the sum.
*/

#pragma once

#include <shared_mutex>

#include "qlie/uq.hpp"

namespace qlie {

class QuasiR {
 public:
  /* Components up to the given total height are computed eagerly; higher
     ones on first use.  The algebra must outlive this object. */
  QuasiR(const UqAlgebra& g, std::vector<int> levi, int cutoff = 0);
  QuasiR(const QuasiR&) = delete;
  QuasiR& operator=(const QuasiR&) = delete;

  const UqAlgebra& algebra() const { return g_; }
  const std::vector<int>& levi() const { return levi_; }
  int cutoff() const { return cutoff_; }

  /* Q_gamma as a sum of F-word (x) E-word terms of bi-weight
     (-gamma, gamma); gamma must be supported on the Levi subset. */
  std::shared_ptr<const Tensor2> component(const Root& gamma) const;

 private:
  std::shared_ptr<const Tensor2> solve_component(const Root& gamma) const;

  const UqAlgebra& g_;
  std::vector<int> levi_;
  int cutoff_;
  mutable std::shared_mutex mu_;
  mutable std::map<Root, std::shared_ptr<const Tensor2>> comp_;
};

/* Independent check of the intertwining property on the F side,
     [Q_gamma, 1 (x) F_i] = (F_i (x) K_i) Q_{gamma-a_i}
                            - Q_{gamma-a_i} (F_i (x) K_i^-1),
   for every i in the Levi and every gamma up to the given height.  The
   construction solves only the E-side equations, so this is a second
   route through the defining property. */
bool quasi_r_check(const QuasiR& qr, int height);

/* Legwise left adjoint action x . (y (x) z) = x_(1)|>y (x) x_(2)|>z. */
Tensor2 tensor_ad(const UqAlgebra& g, const UqElement& x, const Tensor2& t);

/* The braiding sigma(x_mu (x) y_nu) = q^((mu,nu)) y (x) x + corrections
   from the positive levels of Q_S.  Right legs must generate finite
   modules under the Levi action. */
Tensor2 braiding(const QuasiR& qr, const Tensor2& t);

/* sigma applied to legs (k, k+1) of an n-fold tensor, 0-based k. */
TensorN braiding_at(const QuasiR& qr, const TensorN& t, int k);

/* sigma_s for s written as a product of adjacent transpositions
   s_{w_1} ... s_{w_m}: the rightmost letter acts first. */
TensorN sigma_word(const QuasiR& qr, const TensorN& t, const Word& w);

/* x |>> (y (x) z) = x_(1) y S(x_(3)) (x) x_(2) |> z. */
Tensor2 black_action(const UqAlgebra& g, const UqElement& x, const Tensor2& t);

/* T_S(x (x) y) = sum x b_i (x) a_i |> y over R_S = sum a_i (x) b_i, and
   its inverse using S(b_i) instead of b_i. */
Tensor2 transmutation(const QuasiR& qr, const Tensor2& t, bool inverse);

/* Product in the sigma-twisted tensor algebra:
   (a (x) b)(c (x) d) = sum a c' (x) b' d with sigma(b (x) c) = c' (x) b'. */
Tensor2 braided_mul(const QuasiR& qr, const Tensor2& a, const Tensor2& b);

/* (i,j)-shuffles: permutations of 0..i+j-1 increasing on the first i and
   the last j positions, as one-line arrays. */
std::vector<std::vector<int>> shuffles(int i, int j);

std::vector<int> permutation_inverse(const std::vector<int>& p);

/* A reduced word w with p = s_{w_1} o ... o s_{w_m} (adjacent
   transpositions, 0-based). */
Word permutation_reduced_word(std::vector<int> p);

/* P^(n)(x_1, ..., x_n): the product of the (x_k (x) 1 + 1 (x) x_k) in the
   braided tensor algebra, computed through the shuffle formula
   sum_{i+j=n} mu_{i,j} sum_{s^-1 in S_{i,j}} sigma_s. */
Tensor2 shuffle_product(const QuasiR& qr, const std::vector<UqElement>& xs);

}  // namespace qlie
