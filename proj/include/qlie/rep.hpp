/*
  This is rep.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  Classical highest-weight modules over a possibly composite root system.
  Weights are handled through their Dynkin labels <mu, alpha_i^vee>, one
  integer per node; composite systems need no special casing because
  dominance, reflections and the bilinear form act through the
  block-diagonal Cartan data.

  weight_multiplicities runs the Freudenthal recursion downward from the
  highest weight.  Tensor products use Klimyk's weight-shift formula over
  the weight table of the smaller factor, which works uniformly across
  types.  appendix_table reconstructs, for every exceptional node
  alpha_s with coefficient >= 3 in the highest root, the Levi subalgebra
  on Pi \ {alpha_s}, the degree-one and degree-three components of the
  induced grading, and the multiplicity of the latter in the cube of the
  former; embedded reference data per row is cross-checked against the
  recomputed values.
*/

#ifndef QLIE_REP_HPP
#define QLIE_REP_HPP

#include <map>
#include <string>
#include <vector>

#include "qlie/lie.hpp"

namespace qlie {

using Weight = std::vector<int>;  // Dynkin labels <mu, alpha_i^vee> per node

struct WeightModuleDescriptor {
  std::string label;
  Weight highest;
  std::map<Weight, mpz_class> mults;
  mpz_class dim = 0;
};

mpz_class weyl_dim(const RootSystem& rs, const Weight& lambda);

WeightModuleDescriptor weight_multiplicities(const RootSystem& rs,
                                             const Weight& lambda);

/* Simple components of V(a) (x) V(b) with multiplicities. */
std::map<Weight, mpz_class> tensor_decompose(const RootSystem& rs,
                                             const Weight& a, const Weight& b);

/* Multiplicity of V(l3) inside V(l1) (x) V(l1) (x) V(l1). */
mpz_class cube_multiplicity(const RootSystem& rs, const Weight& l1,
                            const Weight& l3);

struct TableComponent {
  std::string type;
  std::vector<int> nodes;   // ambient nodes, 0-based, standard-position order
  Weight lambda1, lambda3;  // labels in the component's own coordinates
  bool operator==(const TableComponent&) const = default;
};

struct TableRow {
  std::string ambient;
  int node = -1;  // removed node, 0-based
  bool printed = true;  // false when the row carries no reference data
  std::vector<TableComponent> components;
  Root lambda1_root, lambda3_root;  // ambient root coordinates
  mpz_class multiplicity = 0;
  std::string status;  // "ok", "not applicable", or mismatch notes
  bool operator==(const TableRow&) const = default;
};

/* All rows with highest-root coefficient >= 3, plus one cominuscule
   control row at the end; rows are independent and run on `jobs`
   threads. */
std::vector<TableRow> appendix_table(int jobs = 1);

}  // namespace qlie

#endif
