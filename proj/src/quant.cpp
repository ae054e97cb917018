/*
  This is quant.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  See quant.hpp for the construction outline.  All spans are kept as
  incremental echelon forms over normal-form monomials, so membership
  and kernel computations are exact over Q(q).
*/

#include "qlie/quant.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qlie/linalg.hpp"

namespace qlie {

namespace {

using Span = EchelonSpan<Mono, MonoCmp>;

std::vector<int> checked_subset(const RootSystem& rs, std::vector<int> s,
                                const std::string& what) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw DomainError(what + ": repeated node");
  for (int i : s)
    if (i < 0 || i >= rs.rank) throw DomainError(what + ": node out of range");
  return s;
}

/* Kernel of the stacked maps v -> E_i |> v (or F_i |> v), i in levi, in
   the coordinates of `vecs`; solutions have leading coefficient 1. */
std::vector<QVec> action_kernel(const UqAlgebra& g, const std::vector<int>& levi,
                                const std::vector<UqElement>& vecs, bool use_f) {
  std::size_t n = vecs.size();
  QMat m;
  for (int i : levi) {
    std::vector<UqElement> im(n);
    std::map<Mono, std::size_t, MonoCmp> coord;
    for (std::size_t j = 0; j < n; ++j) {
      im[j] = use_f ? ad_f(g, i, vecs[j]) : ad_e(g, i, vecs[j]);
      for (const auto& [mo, c] : im[j]) coord.emplace(mo, 0);
    }
    std::size_t row = m.size();
    m.resize(row + coord.size(), QVec(n, QScalar::zero()));
    for (auto& [mo, pos] : coord) pos = row++;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [mo, c] : im[j]) m[coord[mo]][j] = c;
  }
  std::vector<QVec> ns = nullspace(m, n);
  for (QVec& x : ns) {
    std::size_t lead = 0;
    while (x[lead].is_zero()) ++lead;
    QScalar inv = QScalar::one() / x[lead];
    for (QScalar& c : x) c *= inv;
  }
  return ns;
}

UqElement combine(const std::vector<UqElement>& vecs, const QVec& c) {
  UqElement out;
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    if (c[j].is_zero()) continue;
    for (const auto& [mo, x] : vecs[j]) add_term(out, mo, c[j] * x);
  }
  return out;
}

QScalar leading_pbw_coeff(const UqAlgebra& g, const PbwBasis& pb,
                          const UqElement& v) {
  auto terms = pbw_expand(g, pb, v);
  if (terms.empty()) throw MathFault("quantize: generator expands to zero");
  return terms.front().second;
}

void verify_component(const UqAlgebra& g, const AdjointModule& m,
                      const FlagLayer& layer, std::size_t n, std::size_t k) {
  const std::vector<Root>& piece = layer.by_degree[n - 1];
  if (m.basis.size() != piece.size()) {
    std::ostringstream msg;
    msg << "quantize: layer " << k + 1 << " degree " << n << " has dimension "
        << m.basis.size() << ", classical piece has " << piece.size();
    throw MathFault(msg.str());
  }
  std::vector<Root> a = m.weights;
  std::vector<Root> b = piece;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw MathFault("quantize: component weights do not match the classical piece");
  (void)g;
}

/* Right legs of the coproducts of the candidates, at grading degree at
   most two, reduced against the unit line and the lower components; the
   projectively unique candidate combination annihilating all of them. */
UqElement degree_three_generator(const UqAlgebra& g,
                                 const std::vector<AdjointModule>& comps,
                                 const std::vector<UqElement>& cands,
                                 const FlagLayer& layer, std::size_t k,
                                 std::ostream& cert) {
  std::vector<Span> allowed(3);
  allowed[0].insert(uq_one(g));
  for (int d = 1; d <= 2; ++d)
    for (const UqElement& v : comps[d - 1].basis) allowed[d].insert(v);
  std::map<std::pair<Mono, Mono>, QVec, MonoPairCmp> rows;
  std::size_t ncand = cands.size();
  for (std::size_t j = 0; j < ncand; ++j) {
    Tensor2 t = coproduct(g, cands[j]);
    std::map<Mono, UqElement, MonoCmp> by_left;
    for (const auto& [mo, c] : t) add_term(by_left[mo.first], mo.second, c);
    for (const auto& [l, right] : by_left) {
      int deg = 0;
      for (int letter : right.begin()->first.e)
        if (letter == layer.node) ++deg;
      if (deg > 2) continue;
      UqElement res = allowed[deg].reduce(right);
      for (const auto& [mo, c] : res) {
        QVec& row = rows[{l, mo}];
        if (row.empty()) row.assign(ncand, QScalar::zero());
        row[j] += c;
      }
    }
  }
  QMat m;
  m.reserve(rows.size());
  for (const auto& [key, row] : rows) m.push_back(row);
  std::vector<QVec> ns = nullspace(m, ncand);
  if (ns.size() != 1) {
    std::ostringstream msg;
    msg << "quantize: degree-3 coideal solution space at layer " << k + 1
        << " has dimension " << ns.size() << " over " << ncand
        << " candidates (" << m.size() << " constraint rows), expected 1";
    throw MathFault(msg.str());
  }
  cert << "layer " << k + 1 << " degree 3: " << ncand
       << " lowest-weight candidates, coideal solution space is one-dimensional";
  return combine(cands, ns[0]);
}

}  // namespace

AdjointModule module_closure(const UqAlgebra& g, std::vector<int> levi,
                             const std::vector<UqElement>& generators,
                             std::size_t dim_bound) {
  AdjointModule mod;
  mod.levi = checked_subset(g.rs(), std::move(levi), "module_closure");
  Span span;
  for (const UqElement& v : generators) {
    if (v.empty()) throw DomainError("module_closure: zero generator");
    if (!is_pure_e(v))
      throw DomainError("module_closure: generator outside U_q(n)");
    if (!weight(g, v))
      throw DomainError("module_closure: generator is not a weight vector");
    if (span.insert(v)) mod.basis.push_back(v);
  }
  if (mod.basis.empty()) throw DomainError("module_closure: no generators");
  if (mod.basis.size() > dim_bound)
    throw MathFault("module_closure: span exceeds the classical dimension bound");
  for (std::size_t idx = 0; idx < mod.basis.size(); ++idx) {
    UqElement v = mod.basis[idx];
    for (int i : mod.levi) {
      for (int pass = 0; pass < 2; ++pass) {
        UqElement u = pass == 0 ? ad_e(g, i, v) : ad_f(g, i, v);
        if (u.empty() || !span.insert(u)) continue;
        mod.basis.push_back(std::move(u));
        if (mod.basis.size() > dim_bound)
          throw MathFault(
              "module_closure: span exceeds the classical dimension bound");
      }
    }
  }
  for (const UqElement& v : mod.basis) {
    std::optional<Root> w = weight(g, v);
    if (!w) throw MathFault("module_closure: closure left the weight grading");
    mod.weights.push_back(*w);
  }
  std::vector<QVec> lo = action_kernel(g, mod.levi, mod.basis, true);
  if (lo.size() == 1) mod.lowest = combine(mod.basis, lo[0]);
  std::vector<QVec> hi = action_kernel(g, mod.levi, mod.basis, false);
  if (hi.size() == 1) mod.highest = combine(mod.basis, hi[0]);
  return mod;
}

std::vector<UqElement> lowest_weight_vectors(
    const UqAlgebra& g, const std::vector<int>& levi,
    const std::vector<UqElement>& space) {
  std::vector<int> s = checked_subset(g.rs(), levi, "lowest_weight_vectors");
  std::map<Root, std::vector<UqElement>> groups;
  std::map<Root, Span> spans;
  for (const UqElement& v : space) {
    if (v.empty()) continue;
    std::optional<Root> w = weight(g, v);
    if (!w)
      throw DomainError("lowest_weight_vectors: space contains a non-weight vector");
    if (spans[*w].insert(v)) groups[*w].push_back(v);
  }
  std::vector<UqElement> out;
  for (const auto& [w, vecs] : groups)
    for (const QVec& c : action_kernel(g, s, vecs, true))
      out.push_back(combine(vecs, c));
  return out;
}

Word flag_adapted_word(const RootSystem& rs, const Word& order) {
  if (order.size() != static_cast<std::size_t>(rs.rank))
    throw DomainError("flag_adapted_word: order must list every simple root");
  std::vector<bool> seen(rs.rank, false);
  for (int i : order) {
    if (i < 0 || i >= rs.rank || seen[i])
      throw DomainError("flag_adapted_word: order is not a permutation");
    seen[i] = true;
  }
  Word out;
  std::vector<int> s;
  Weyl prev = weyl_identity(rs);
  for (int node : order) {
    s.push_back(node);
    std::sort(s.begin(), s.end());
    Weyl next = weyl_from_word(rs, longest_word(rs, s));
    Word coset = reduced_word(rs, weyl_mul(weyl_inverse(rs, prev), next));
    out.insert(out.end(), coset.begin(), coset.end());
    prev = next;
  }
  if (out.size() != rs.pos_roots.size())
    throw MathFault("flag_adapted_word: coset words do not assemble to w0");
  root_enumeration(rs, out);  // throws unless the concatenation is reduced
  return out;
}

Quantization quantize(const UqAlgebra& g, const Word& order,
                      const std::string& normalization) {
  const RootSystem& rs = g.rs();
  if (normalization != "canonical" && normalization != "paper-g2")
    throw DomainError("quantize: unknown normalization mode \"" + normalization +
                      "\"");
  if (normalization == "paper-g2" && !(rs.label == "G2" && order == Word{1, 0}))
    throw DomainError(
        "quantize: paper-g2 normalization is only defined for G2 with order 2,1");
  Quantization out;
  out.order = order;
  out.normalization = normalization;
  out.adapted = flag_adapted_word(rs, order);
  out.layers = nilradical_decomposition(rs, order);
  for (const FlagLayer& layer : out.layers)
    if (layer.by_degree.size() > 3)
      throw DomainError("quantize: components of degree 4 or higher are unsupported");
  PbwBasis pb = pbw_basis(g, out.adapted);
  std::size_t total = 0;
  for (std::size_t k = 0; k < out.layers.size(); ++k) {
    const FlagLayer& layer = out.layers[k];
    std::vector<AdjointModule> comps;
    {
      AdjointModule m = module_closure(g, layer.levi, {gen_e(g, layer.node)},
                                       layer.by_degree[0].size());
      m.node = layer.node;
      m.degree = 1;
      verify_component(g, m, layer, 1, k);
      comps.push_back(std::move(m));
    }
    const std::vector<UqElement> b1 = comps[0].basis;
    std::vector<UqElement> prev = b1;
    for (std::size_t n = 2; n <= layer.by_degree.size(); ++n) {
      /* Independent spanning list for the n-fold product of the
         degree-one component. */
      std::vector<UqElement> cur;
      Span cur_span;
      for (const UqElement& a : prev)
        for (const UqElement& b : b1) {
          UqElement u = mul(g, a, b);
          if (!u.empty() && cur_span.insert(u)) cur.push_back(u);
        }
      std::optional<Root> low = piece_lowest(rs, layer.by_degree[n - 1], layer.levi);
      if (!low) throw MathFault("quantize: graded piece has no lowest root");
      std::vector<UqElement> at_low;
      for (const UqElement& v : cur)
        if (*weight(g, v) == *low) at_low.push_back(v);
      std::vector<UqElement> cands = lowest_weight_vectors(g, layer.levi, at_low);
      UqElement gen;
      std::ostringstream cert;
      if (n == 2) {
        if (cands.size() != 1) {
          std::ostringstream msg;
          msg << "quantize: degree-2 lowest-weight space at layer " << k + 1
              << " has dimension " << cands.size() << ", expected 1";
          throw MathFault(msg.str());
        }
        gen = cands[0];
        cert << "layer " << k + 1 << " degree 2: lowest-weight space at "
             << root_str(*low) << " is one-dimensional";
      } else {
        gen = degree_three_generator(g, comps, cands, layer, k, cert);
      }
      gen = scale(QScalar::one() / leading_pbw_coeff(g, pb, gen), gen);
      QScalar applied = QScalar::one();
      if (normalization == "paper-g2")
        applied = n == 2 ? QScalar::q_power(4) * QScalar::q_int(2)
                         : QScalar::q_power(4) * QScalar::q_factorial(3);
      if (!applied.is_one()) gen = scale(applied, gen);
      AdjointModule m =
          module_closure(g, layer.levi, {gen}, layer.by_degree[n - 1].size());
      m.node = layer.node;
      m.degree = static_cast<int>(n);
      m.norm_scalar = applied;
      verify_component(g, m, layer, n, k);
      for (const UqElement& v : m.basis)
        if (!cur_span.contains(v))
          throw MathFault("quantize: component escapes the product span");
      out.certificate.push_back(cert.str());
      comps.push_back(std::move(m));
      prev = std::move(cur);
    }
    if (layer.by_degree.size() >= 3) {
      std::vector<UqElement> all;
      for (const AdjointModule& m : comps)
        for (const UqElement& v : m.basis) all.push_back(v);
      if (coideal_check(g, all))
        throw MathFault("quantize: assembled component is not a left coideal");
      out.certificate.push_back("layer " + std::to_string(k + 1) +
                                ": assembled coideal check passed");
    }
    for (const AdjointModule& m : comps) total += m.basis.size();
    out.modules.push_back(std::move(comps));
  }
  if (total != rs.pos_roots.size())
    throw MathFault("quantize: component dimensions do not sum to the root count");
  return out;
}

std::optional<CoidealWitness> coideal_check(const UqAlgebra& g,
                                            const std::vector<UqElement>& basis) {
  Span span;
  span.insert(uq_one(g));
  for (const UqElement& v : basis) span.insert(v);
  for (const UqElement& v : basis) {
    Tensor2 c = coproduct(g, v);
    std::map<Mono, UqElement, MonoCmp> by_left;
    for (const auto& [mo, x] : c) add_term(by_left[mo.first], mo.second, x);
    for (const auto& [l, right] : by_left)
      if (!span.contains(right)) return CoidealWitness{v, l, right};
  }
  return std::nullopt;
}

SchubertCell schubert_cell(const UqAlgebra& g, std::vector<int> levi,
                           std::vector<int> ambient, bool twisted, int cutoff) {
  const RootSystem& rs = g.rs();
  SchubertCell cell;
  cell.levi = checked_subset(rs, std::move(levi), "schubert_cell");
  cell.ambient = checked_subset(rs, std::move(ambient), "schubert_cell");
  if (!std::includes(cell.ambient.begin(), cell.ambient.end(),
                     cell.levi.begin(), cell.levi.end()))
    throw DomainError("schubert_cell: levi must be contained in ambient");
  if (cutoff < 0) throw DomainError("schubert_cell: negative cutoff");
  cell.twisted = twisted;
  cell.cutoff = cutoff;
  Word w0s = longest_word(rs, cell.levi);
  Word w0a = longest_word(rs, cell.ambient);
  cell.word = reduced_word(
      rs, weyl_mul(weyl_inverse(rs, weyl_from_word(rs, w0s)),
                   weyl_from_word(rs, w0a)));
  if (cell.word.size() + w0s.size() != w0a.size())
    throw MathFault("schubert_cell: parabolic factorization is not additive");
  if (twisted) {
    Word full = w0s;
    full.insert(full.end(), cell.word.begin(), cell.word.end());
    PbwBasis pb = pbw_basis(g, full);
    for (std::size_t j = w0s.size(); j < full.size(); ++j) {
      cell.roots.push_back(pb.betas[j]);
      cell.vectors.push_back((*pb.e_vectors)[j]);
    }
  } else {
    PbwBasis pb = pbw_basis(g, cell.word);
    cell.roots = pb.betas;
    cell.vectors = *pb.e_vectors;
  }
  cell.bases.resize(cutoff);
  cell.contents.resize(cutoff);
  std::vector<int> heights;
  for (const Root& b : cell.roots) heights.push_back(rs.height(b));
  std::vector<Span> spans(cutoff);
  std::vector<int> expo(cell.roots.size(), 0);
  auto emit = [&](const std::vector<int>& a, int h) {
    UqElement u = uq_one(g);
    Root content(rs.rank, 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      u = mul(g, u, uq_pow(g, cell.vectors[j], a[j]));
      for (int t = 0; t < rs.rank; ++t) content[t] += a[j] * cell.roots[j][t];
    }
    if (!spans[h - 1].insert(u))
      throw MathFault("schubert_cell: monomials are not linearly independent");
    cell.bases[h - 1].push_back(std::move(u));
    cell.contents[h - 1].push_back(std::move(content));
  };
  auto rec = [&](auto&& self, std::size_t pos, int h) -> void {
    if (pos == cell.roots.size()) {
      if (h > 0) emit(expo, h);
      return;
    }
    for (int a = 0; h + a * heights[pos] <= cutoff; ++a) {
      expo[pos] = a;
      self(self, pos + 1, h + a * heights[pos]);
    }
    expo[pos] = 0;
  };
  rec(rec, 0, 0);
  return cell;
}

SchubertCell schubert_cell(const UqAlgebra& g, std::vector<int> levi,
                           bool twisted, int cutoff) {
  std::vector<int> ambient(g.rs().rank);
  for (int i = 0; i < g.rs().rank; ++i) ambient[i] = i;
  return schubert_cell(g, std::move(levi), std::move(ambient), twisted, cutoff);
}

TangentSpaces tangent_spaces(const UqAlgebra& g, const Quantization& quant) {
  TangentSpaces t;
  t.t_minus.push_back(uq_one(g));
  t.t_plus.push_back(uq_one(g));
  for (const auto& comps : quant.modules)
    for (const AdjointModule& m : comps)
      for (const UqElement& v : m.basis) {
        UqElement w = omega(g, v);
        t.t_plus.push_back(star(g, w));
        t.t_minus.push_back(std::move(w));
      }
  std::size_t r = quant.modules.size();
  std::vector<std::size_t> dims(r, 0);
  for (std::size_t k = 0; k < r; ++k)
    for (const AdjointModule& m : quant.modules[k]) dims[k] += m.basis.size();
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t d = 1;
    for (std::size_t j = k; j < r; ++j) d += dims[j];
    t.fodc_dims.push_back(d);
  }
  Span span;
  for (const UqElement& v : t.t_minus) span.insert(v);
  for (const UqElement& v : t.t_minus) {
    Tensor2 c = coproduct(g, v);
    std::map<Mono, UqElement, MonoCmp> by_right;
    for (const auto& [mo, x] : c) add_term(by_right[mo.second], mo.first, x);
    for (const auto& [rmono, left] : by_right)
      if (!span.contains(left))
        throw MathFault("tangent_spaces: T_- is not a right coideal");
  }
  return t;
}

}  // namespace qlie
