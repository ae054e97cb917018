/*
  This is lie.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  Root systems, Weyl-group words, parabolic factorizations, flag-ordered
  nilradical decompositions and the Kostant partition count.

  Conventions.  Roots are integer coordinate vectors over the simple roots
  (0-based indices internally; all printing is 1-based).  The Cartan matrix
  is stored as a[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i),
  so s_i(alpha_j) = alpha_j - a[i][j] alpha_i, and the symmetric form is
  (alpha_i, alpha_j) = d_i a[i][j] with short roots normalized to
  (alpha,alpha) = 2.  The exceptional numberings are documented in README.md.
*/

#ifndef QLIE_LIE_HPP
#define QLIE_LIE_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlie/common.hpp"

namespace qlie {

using Root = std::vector<int>;  // coordinates over simple roots
using Word = std::vector<int>;  // simple-reflection indices, 0-based

struct RootSystem {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> a;  // Cartan matrix, a[i][j] = <alpha_j, alpha_i^vee>
  std::vector<int> d;               // symmetrizers, (alpha_i,alpha_i) = 2 d_i
  std::vector<std::vector<int>> comp_nodes;  // nodes of each simple component
  std::vector<std::string> comp_types;
  std::vector<Root> pos_roots;  // height ascending, then coordinates lex-descending
  std::map<Root, int> pos_index;

  long bilin(const Root& x, const Root& y) const;
  mpq_class bilin(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) const;
  long pairing(const Root& mu, int i) const;  // <mu, alpha_i^vee>
  Root reflect(const Root& r, int i) const;
  bool is_positive_root(const Root& r) const { return pos_index.count(r) != 0; }
  int height(const Root& r) const;
  Root simple(int i) const;
  Root highest_root() const;             // requires a single simple component
  std::vector<mpq_class> rho() const;    // half-sum of positive roots
  mpq_class casimir_scalar(const Root& lambda) const;  // (lambda, lambda + 2 rho)
};

/* Type specs: "G2", "A3", "B2", "F4", "E8", or sums like "A1+A2". */
RootSystem build_root_system(const std::string& type_spec);
RootSystem build_from_cartan(std::vector<std::vector<int>> a, std::vector<int> d,
                             std::string label);

/* Weyl-group elements as integer matrices acting on root coordinates;
   column j holds the coordinates of the image of alpha_j. */
struct Weyl {
  std::vector<std::vector<int>> m;
  bool operator==(const Weyl&) const = default;
};

Weyl weyl_identity(const RootSystem& rs);
Weyl weyl_simple(const RootSystem& rs, int i);
Weyl weyl_mul(const Weyl& x, const Weyl& y);  // composition x after y
Root weyl_apply(const Weyl& w, const Root& r);
Weyl weyl_from_word(const RootSystem& rs, const Word& w);
Weyl weyl_inverse(const RootSystem& rs, const Weyl& w);
int weyl_length(const RootSystem& rs, const Weyl& w);
/* Canonical reduced word by repeated smallest-descent extraction. */
Word reduced_word(const RootSystem& rs, Weyl w);

/* Longest element of the parabolic W_S, as a canonical reduced word. */
Word longest_word(const RootSystem& rs, const std::vector<int>& S);

/* w0 = w_{0,S} * w^S with additive lengths; returns the two words. */
std::pair<Word, Word> parabolic_factorization(const RootSystem& rs,
                                              const std::vector<int>& S);

/* beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}); throws on non-reduced input. */
std::vector<Root> root_enumeration(const RootSystem& rs, const Word& word);

/* Convexity of an enumeration: whenever beta_i + beta_j (i < j) appears in
   the list at position k, then i < k < j. */
bool convexity_holds(const RootSystem& rs, const std::vector<Root>& betas);

/* Flag-ordered decomposition of the positive roots.  The order is a
   permutation i_1, ..., i_r of all simple roots; layer k consists of the
   positive roots supported on {i_1,...,i_k} that involve alpha_{i_k},
   graded by the coefficient of alpha_{i_k}. */
struct FlagLayer {
  int node = -1;                             // i_k
  std::vector<int> levi;                     // {i_1, ..., i_{k-1}}
  std::vector<std::vector<Root>> by_degree;  // [n-1] holds the degree-n roots
  std::vector<Root> all;
};
std::vector<FlagLayer> nilradical_decomposition(const RootSystem& rs,
                                                const Word& order);

/* Number of ways to write beta as an N-combination of positive roots. */
mpz_class kostant_partition(const RootSystem& rs, const Root& beta);
mpz_class kostant_partition(const std::vector<Root>& positive, const Root& beta);

/* Connected components of the subdiagram on S, classified by type, with a
   canonical node listing mapping standard positions to ambient nodes. */
struct Subdiagram {
  std::vector<int> nodes;
  std::string type;
};
std::vector<Subdiagram> classify_subdiagram(const RootSystem& rs,
                                            const std::vector<int>& S);

/* Extremal roots of a graded piece relative to the Levi on S: the unique
   gamma in the piece with gamma + alpha_j (resp. gamma - alpha_j) not a
   root for every j in S. */
std::optional<Root> piece_highest(const RootSystem& rs,
                                  const std::vector<Root>& piece,
                                  const std::vector<int>& S);
std::optional<Root> piece_lowest(const RootSystem& rs,
                                 const std::vector<Root>& piece,
                                 const std::vector<int>& S);

std::string root_str(const Root& r);  // e.g. "3a1+2a2"

}  // namespace qlie

#endif
