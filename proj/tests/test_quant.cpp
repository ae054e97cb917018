/*
  This is test_quant.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.
*/

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "qlie/quant.hpp"

using namespace qlie;

namespace {

QScalar Q(const std::string& s) { return QScalar::parse(s); }

using Span = EchelonSpan<Mono, MonoCmp>;

Span span_of(const std::vector<UqElement>& vecs) {
  Span s;
  for (const UqElement& v : vecs) s.insert(v);
  return s;
}

bool same_span(const std::vector<UqElement>& a, const std::vector<UqElement>& b) {
  Span sa = span_of(a);
  Span sb = span_of(b);
  if (sa.dim() != sb.dim()) return false;
  for (const UqElement& v : b)
    if (!sa.contains(v)) return false;
  return true;
}

bool proportional(const UqElement& x, const UqElement& y) {
  if (x.empty() || y.empty()) return false;
  if (x.begin()->first != y.begin()->first) return false;
  QScalar c = y.begin()->second / x.begin()->second;
  return scale(c, x) == y;
}

/* PBW coefficients specialized at q = 1, zeros dropped. */
std::map<std::vector<int>, mpq_class> pbw_at_one(const UqAlgebra& g,
                                                 const PbwBasis& pb,
                                                 const UqElement& x) {
  std::map<std::vector<int>, mpq_class> out;
  for (const auto& [e, c] : pbw_expand(g, pb, x)) {
    mpq_class v = c.eval(1);
    if (v != 0) out.emplace(e, v);
  }
  return out;
}

bool proportional_at_one(const std::map<std::vector<int>, mpq_class>& a,
                         const std::map<std::vector<int>, mpq_class>& b) {
  if (a.empty() || a.size() != b.size()) return false;
  mpq_class r = b.begin()->second / a.begin()->second;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second * r != ib->second) return false;
  }
  return true;
}

/* The five hand-built G2 elements, in the scaling of the fixed reference
   tables: eb2 = E2 E1 - q^-3 E1 E2 and the ladder above it. */
struct G2Elems {
  UqElement e1, e2, eb2, x4, x5, x3;
};

G2Elems g2_elems(const UqAlgebra& g) {
  G2Elems r;
  r.e1 = gen_e(g, 0);
  r.e2 = gen_e(g, 1);
  r.eb2 = ad_e(g, 1, r.e1);
  r.x4 = sub(mul(g, r.eb2, r.e1), scale(Q("q^3"), mul(g, r.e1, r.eb2)));
  r.x5 = sub(mul(g, r.x4, r.e1), scale(Q("q"), mul(g, r.e1, r.x4)));
  r.x3 = sub(mul(g, r.e2, r.x5), scale(Q("q^-3"), mul(g, r.x5, r.e2)));
  return r;
}

}  // namespace

TEST_CASE("flag-adapted reduced words") {
  RootSystem g2 = build_root_system("G2");
  REQUIRE(flag_adapted_word(g2, {1, 0}) == Word{1, 0, 1, 0, 1, 0});
  REQUIRE(flag_adapted_word(g2, {0, 1}) == Word{0, 1, 0, 1, 0, 1});

  /* Per-flag-step segments of the word sweep out exactly the layer roots. */
  struct Case {
    const char* label;
    Word order;
  };
  for (const Case& cs : {Case{"A3", {0, 1, 2}}, Case{"A3", {2, 0, 1}},
                         Case{"B2", {1, 0}}, Case{"G2", {1, 0}}}) {
    RootSystem rs = build_root_system(cs.label);
    Word w = flag_adapted_word(rs, cs.order);
    std::vector<Root> enumerated = root_enumeration(rs, w);
    std::vector<FlagLayer> layers = nilradical_decomposition(rs, cs.order);
    std::vector<int> s;
    std::size_t lo = 0;
    for (std::size_t k = 0; k < layers.size(); ++k) {
      s.push_back(cs.order[k]);
      std::size_t hi = longest_word(rs, s).size();
      std::vector<Root> seg(enumerated.begin() + lo, enumerated.begin() + hi);
      std::vector<Root> expect = layers[k].all;
      std::sort(seg.begin(), seg.end());
      std::sort(expect.begin(), expect.end());
      REQUIRE(seg == expect);
      lo = hi;
    }
    REQUIRE(lo == rs.pos_roots.size());
  }

  REQUIRE_THROWS_AS(flag_adapted_word(g2, {1}), DomainError);
  REQUIRE_THROWS_AS(flag_adapted_word(g2, {1, 1}), DomainError);
}

TEST_CASE("adjoint module closures") {
  SECTION("empty levi gives a line") {
    UqAlgebra g(build_root_system("A2"));
    AdjointModule m = module_closure(g, {}, {gen_e(g, 0)}, 1);
    REQUIRE(m.basis.size() == 1);
    REQUIRE(m.weights[0] == Root{1, 0});
    REQUIRE(m.lowest == gen_e(g, 0));
    REQUIRE(m.highest == gen_e(g, 0));
  }
  SECTION("two-dimensional closure in G2") {
    UqAlgebra g(build_root_system("G2"));
    AdjointModule m = module_closure(g, {1}, {gen_e(g, 0)}, 2);
    REQUIRE(m.basis.size() == 2);
    REQUIRE(m.basis[1] == ad_e(g, 1, gen_e(g, 0)));
    REQUIRE(m.weights == std::vector<Root>{Root{1, 0}, Root{1, 1}});
    REQUIRE(m.lowest == m.basis[0]);
    REQUIRE(m.highest == m.basis[1]);
    REQUIRE_THROWS_AS(module_closure(g, {1}, {gen_e(g, 0)}, 1), MathFault);
  }
  SECTION("input validation") {
    UqAlgebra g(build_root_system("A2"));
    REQUIRE_THROWS_AS(module_closure(g, {0}, {}, 4), DomainError);
    REQUIRE_THROWS_AS(module_closure(g, {0}, {uq_zero()}, 4), DomainError);
    REQUIRE_THROWS_AS(module_closure(g, {0}, {gen_f(g, 1)}, 4), DomainError);
    REQUIRE_THROWS_AS(
        module_closure(g, {0}, {add(gen_e(g, 0), mul(g, gen_e(g, 0), gen_e(g, 1)))}, 9),
        DomainError);
  }
}

TEST_CASE("lowest-weight vectors") {
  UqAlgebra g(build_root_system("G2"));
  G2Elems el = g2_elems(g);

  std::vector<UqElement> lw = lowest_weight_vectors(g, {1}, {el.e1, el.eb2});
  REQUIRE(lw.size() == 1);
  REQUIRE(lw[0] == el.e1);

  /* On the full product square the kernel also picks up E1^2, which sits
     at a weight the adjoint constituent never reaches. */
  std::vector<UqElement> sq;
  for (const UqElement& a : {el.e1, el.eb2})
    for (const UqElement& b : {el.e1, el.eb2}) sq.push_back(mul(g, a, b));
  std::vector<UqElement> lw2 = lowest_weight_vectors(g, {1}, sq);
  REQUIRE(lw2.size() == 2);
  REQUIRE(*weight(g, lw2[0]) == Root{2, 0});
  REQUIRE(*weight(g, lw2[1]) == Root{2, 1});
  REQUIRE(proportional(lw2[1], el.x4));
}

TEST_CASE("quantized nilradical for G2") {
  UqAlgebra g(build_root_system("G2"));
  G2Elems el = g2_elems(g);
  Quantization qz = quantize(g, {1, 0});

  REQUIRE(qz.adapted == Word{1, 0, 1, 0, 1, 0});
  REQUIRE(qz.layers.size() == 2);
  REQUIRE(qz.modules[0].size() == 1);
  REQUIRE(qz.modules[0][0].basis.size() == 1);
  REQUIRE(qz.modules[0][0].basis[0] == el.e2);
  REQUIRE(qz.modules[1].size() == 3);
  REQUIRE(qz.modules[1][0].basis.size() == 2);
  REQUIRE(qz.modules[1][1].basis.size() == 1);
  REQUIRE(qz.modules[1][2].basis.size() == 2);

  const AdjointModule& m1 = qz.modules[1][0];
  REQUIRE(m1.basis[0] == el.e1);
  REQUIRE(m1.basis[1] == el.eb2);
  REQUIRE(m1.degree == 1);
  REQUIRE(m1.node == 0);
  REQUIRE(m1.levi == std::vector<int>{1});

  /* Canonical scaling: leading PBW coefficient one; the reference scaling
     of the same generators differs by q^4[2] and q^4[3]!. */
  const AdjointModule& m2 = qz.modules[1][1];
  REQUIRE(m2.norm_scalar == QScalar::one());
  REQUIRE(scale(Q("q^4") * QScalar::q_int(2), m2.basis[0]) == el.x4);
  REQUIRE(m2.weights == std::vector<Root>{Root{2, 1}});
  REQUIRE(m2.lowest == m2.basis[0]);
  REQUIRE(m2.highest == m2.basis[0]);

  const AdjointModule& m3 = qz.modules[1][2];
  REQUIRE(scale(Q("q^4") * QScalar::q_factorial(3), m3.basis[0]) == el.x5);
  REQUIRE(m3.basis[1] == ad_e(g, 1, m3.basis[0]));
  REQUIRE(m3.lowest == m3.basis[0]);
  REQUIRE(m3.highest == m3.basis[1]);
  REQUIRE(m3.weights == std::vector<Root>{Root{3, 1}, Root{3, 2}});

  REQUIRE(qz.certificate.size() == 3);
  REQUIRE(qz.certificate[0].find("one-dimensional") != std::string::npos);
  REQUIRE(qz.certificate[1].find("degree 3") != std::string::npos);
  REQUIRE(qz.certificate[1].find("one-dimensional") != std::string::npos);

  std::vector<UqElement> all;
  for (const auto& comps : qz.modules)
    for (const AdjointModule& m : comps)
      for (const UqElement& v : m.basis) all.push_back(v);
  REQUIRE(all.size() == 6);
  REQUIRE(!coideal_check(g, all));
}

TEST_CASE("reference normalization for G2") {
  UqAlgebra g(build_root_system("G2"));
  G2Elems el = g2_elems(g);
  Quantization qz = quantize(g, {1, 0}, "paper-g2");

  REQUIRE(qz.modules[1][0].basis == std::vector<UqElement>{el.e1, el.eb2});
  REQUIRE(qz.modules[1][1].basis == std::vector<UqElement>{el.x4});
  REQUIRE(qz.modules[1][1].norm_scalar == Q("q^4") * QScalar::q_int(2));
  REQUIRE(qz.modules[1][2].basis == std::vector<UqElement>{el.x5, el.x3});
  REQUIRE(qz.modules[1][2].norm_scalar == Q("q^4") * QScalar::q_factorial(3));

  /* Frozen PBW expansions along the adapted word 212121. */
  PbwBasis pb = pbw_basis(g, qz.adapted);
  using Terms = std::vector<std::pair<std::vector<int>, QScalar>>;
  Terms x4t = {{{0, 0, 0, 1, 0, 0}, Q("q^4") * QScalar::q_int(2)},
               {{0, 1, 0, 0, 0, 1}, Q("-q^4+1")}};
  REQUIRE(pbw_expand(g, pb, el.x4) == x4t);
  Terms x5t = {{{0, 0, 0, 0, 1, 0}, Q("q^4") * QScalar::q_factorial(3)},
               {{0, 0, 0, 1, 0, 1},
                Q("-(q-q^-1)*q^4") * QScalar::q_int(2) * QScalar::q_int(2)},
               {{0, 1, 0, 0, 0, 2},
                Q("(q-q^-1)^2*q^3") * QScalar::q_int(2) * QScalar::q_int(2)}};
  REQUIRE(pbw_expand(g, pb, el.x5) == x5t);
  Terms x3t = {{{0, 0, 1, 0, 0, 0}, Q("-q^3") * QScalar::q_factorial(3)},
               {{0, 1, 0, 1, 0, 0}, Q("(q-q^-1)*q^2") * QScalar::q_int(2)}};
  REQUIRE(pbw_expand(g, pb, el.x3) == x3t);

  UqAlgebra a2(build_root_system("A2"));
  REQUIRE_THROWS_AS(quantize(a2, {0, 1}, "paper-g2"), DomainError);
  REQUIRE_THROWS_AS(quantize(g, {0, 1}, "paper-g2"), DomainError);
  REQUIRE_THROWS_AS(quantize(g, {1, 0}, "legendre"), DomainError);
}

TEST_CASE("quantized nilradicals across types") {
  SECTION("A1") {
    UqAlgebra g(build_root_system("A1"));
    Quantization qz = quantize(g, {0});
    REQUIRE(qz.modules.size() == 1);
    REQUIRE(qz.modules[0][0].basis == std::vector<UqElement>{gen_e(g, 0)});
    REQUIRE(qz.certificate.empty());
  }
  SECTION("A3 full flag") {
    UqAlgebra g(build_root_system("A3"));
    Quantization qz = quantize(g, {0, 1, 2});
    REQUIRE(qz.modules.size() == 3);
    std::vector<UqElement> all;
    for (std::size_t k = 0; k < 3; ++k) {
      REQUIRE(qz.modules[k].size() == 1);
      REQUIRE(qz.modules[k][0].basis.size() == k + 1);
      REQUIRE(qz.modules[k][0].lowest == gen_e(g, static_cast<int>(k)));
      REQUIRE(!qz.modules[k][0].highest.empty());
      for (const UqElement& v : qz.modules[k][0].basis) all.push_back(v);
      REQUIRE(!coideal_check(g, qz.modules[k][0].basis));
    }
    REQUIRE(all.size() == 6);
    REQUIRE(!coideal_check(g, all));
  }
  SECTION("B2 both orders") {
    UqAlgebra g(build_root_system("B2"));
    for (Word order : {Word{0, 1}, Word{1, 0}}) {
      Quantization qz = quantize(g, order);
      std::size_t total = 0;
      std::vector<UqElement> all;
      for (std::size_t k = 0; k < qz.modules.size(); ++k) {
        REQUIRE(qz.modules[k].size() == qz.layers[k].by_degree.size());
        for (const AdjointModule& m : qz.modules[k]) {
          total += m.basis.size();
          for (const UqElement& v : m.basis) all.push_back(v);
        }
      }
      REQUIRE(total == 4);
      REQUIRE(!coideal_check(g, all));
    }
  }
  SECTION("G2 opposite order") {
    UqAlgebra g(build_root_system("G2"));
    Quantization qz = quantize(g, {0, 1});
    REQUIRE(qz.modules[0][0].basis.size() == 1);
    REQUIRE(qz.modules[1].size() == 2);
    REQUIRE(qz.modules[1][0].basis.size() == 4);
    REQUIRE(qz.modules[1][1].basis.size() == 1);
    std::vector<UqElement> all;
    for (const auto& comps : qz.modules)
      for (const AdjointModule& m : comps)
        for (const UqElement& v : m.basis) all.push_back(v);
    REQUIRE(!coideal_check(g, all));
  }
  SECTION("degree four refused") {
    UqAlgebra g(build_root_system("F4"));
    REQUIRE_THROWS_AS(quantize(g, {0, 1, 3, 2}), DomainError);
  }
}

TEST_CASE("coideal membership certificates") {
  UqAlgebra g(build_root_system("G2"));
  G2Elems el = g2_elems(g);

  /* Dropping the -q E1 X4 tail of the degree-three generator breaks the
     coideal property; the checker names the offending vector. */
  UqElement l1 = mul(g, el.x4, el.e1);
  std::vector<UqElement> bad = {el.e2, el.e1, el.eb2, el.x4, l1, el.x3};
  std::optional<CoidealWitness> w = coideal_check(g, bad);
  REQUIRE(w.has_value());
  REQUIRE(!w->right.empty());
  Span sp = span_of(bad);
  sp.insert(uq_one(g));
  REQUIRE(!sp.contains(w->right));

  std::vector<UqElement> good = {el.e2, el.e1, el.eb2, el.x4,
                                 sub(l1, scale(Q("q"), mul(g, el.e1, el.x4))),
                                 el.x3};
  REQUIRE(!coideal_check(g, good));
}

TEST_CASE("schubert cell monomial bases") {
  SECTION("whole algebra matches the partition count") {
    for (const char* label : {"A2", "B2"}) {
      UqAlgebra g(build_root_system(label));
      const RootSystem& rs = g.rs();
      int cutoff = 4;
      SchubertCell cell = schubert_cell(g, {}, false, cutoff);
      REQUIRE(cell.word.size() == rs.pos_roots.size());
      REQUIRE(cell.roots.size() == rs.pos_roots.size());
      for (int d = 1; d <= cutoff; ++d) {
        std::map<Root, std::size_t> counts;
        for (const Root& c : cell.contents[d - 1]) ++counts[c];
        REQUIRE(!counts.empty());
        for (const auto& [c, n] : counts) {
          REQUIRE(rs.height(c) == d);
          REQUIRE(kostant_partition(rs, c) == n);
        }
      }
    }
  }
  SECTION("full levi leaves the trivial cell") {
    UqAlgebra g(build_root_system("B2"));
    SchubertCell cell = schubert_cell(g, {0, 1}, false, 3);
    REQUIRE(cell.word.empty());
    REQUIRE(cell.roots.empty());
    for (const auto& b : cell.bases) REQUIRE(b.empty());
  }
  SECTION("proper ambient subdiagram") {
    UqAlgebra g(build_root_system("A3"));
    SchubertCell cell = schubert_cell(g, {0}, {0, 1}, false, 2);
    std::vector<Root> roots = cell.roots;
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots == std::vector<Root>{Root{0, 1, 0}, Root{1, 1, 0}});
    REQUIRE_THROWS_AS(schubert_cell(g, {2}, {0, 1}, false, 2), DomainError);
  }
  SECTION("twisted and untwisted cells agree in size, not in span") {
    UqAlgebra g(build_root_system("G2"));
    SchubertCell tw = schubert_cell(g, {1}, true, 4);
    SchubertCell un = schubert_cell(g, {1}, false, 4);
    REQUIRE(tw.word == un.word);
    std::vector<Root> a = tw.roots, b = un.roots;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a == b);
    bool all_equal = true;
    for (std::size_t d = 0; d < 4; ++d) {
      REQUIRE(tw.bases[d].size() == un.bases[d].size());
      if (!same_span(tw.bases[d], un.bases[d])) all_equal = false;
    }
    REQUIRE(!all_equal);
  }
  SECTION("degree-one slice is the first quantized component") {
    UqAlgebra g2(build_root_system("G2"));
    Quantization qz2 = quantize(g2, {1, 0});
    SchubertCell tw2 = schubert_cell(g2, {1}, true, 1);
    std::vector<UqElement> slice2;
    for (std::size_t j = 0; j < tw2.roots.size(); ++j)
      if (tw2.roots[j][0] == 1) slice2.push_back(tw2.vectors[j]);
    REQUIRE(slice2.size() == 2);
    REQUIRE(same_span(slice2, qz2.modules[1][0].basis));

    UqAlgebra a3(build_root_system("A3"));
    Quantization qz3 = quantize(a3, {0, 1, 2});
    SchubertCell tw3 = schubert_cell(a3, {0, 1}, true, 1);
    std::vector<UqElement> slice3;
    for (std::size_t j = 0; j < tw3.roots.size(); ++j)
      if (tw3.roots[j][2] == 1) slice3.push_back(tw3.vectors[j]);
    REQUIRE(slice3.size() == 3);
    REQUIRE(same_span(slice3, qz3.modules[2][0].basis));
  }
  SECTION("q-commutators with levi generators stay inside") {
    UqAlgebra g(build_root_system("B2"));
    int cutoff = 4;
    SchubertCell un = schubert_cell(g, {0}, false, cutoff);
    SchubertCell tw = schubert_cell(g, {0}, true, cutoff);
    std::vector<Span> su, st;
    for (int d = 1; d <= cutoff; ++d) {
      su.push_back(span_of(un.bases[d - 1]));
      st.push_back(span_of(tw.bases[d - 1]));
    }
    UqElement e0 = gen_e(g, 0);
    for (int d = 1; d < cutoff; ++d) {
      for (const UqElement& x : un.bases[d - 1]) {
        UqElement y = q_commutator(g, x, e0);
        if (!y.empty()) REQUIRE(su[d].contains(y));
      }
      for (const UqElement& x : tw.bases[d - 1]) {
        UqElement y = q_commutator(g, e0, x);
        if (!y.empty()) REQUIRE(st[d].contains(y));
      }
    }
  }
  SECTION("adjoint stability of the twisted cell") {
    UqAlgebra g(build_root_system("G2"));
    int cutoff = 4;
    SchubertCell tw = schubert_cell(g, {1}, true, cutoff);
    std::vector<Span> sp;
    for (int d = 1; d <= cutoff; ++d) sp.push_back(span_of(tw.bases[d - 1]));
    for (int d = 1; d <= cutoff; ++d) {
      for (const UqElement& x : tw.bases[d - 1]) {
        UqElement up = ad_e(g, 1, x);
        if (d < cutoff && !up.empty()) REQUIRE(sp[d].contains(up));
        UqElement down = ad_f(g, 1, x);
        if (d == 1) {
          REQUIRE(down.empty());
        } else if (!down.empty()) {
          REQUIRE(sp[d - 2].contains(down));
        }
      }
    }
  }
}

TEST_CASE("tangent spaces") {
  SECTION("rank one") {
    UqAlgebra g(build_root_system("A1"));
    TangentSpaces t = tangent_spaces(g, quantize(g, {0}));
    REQUIRE(t.t_minus == std::vector<UqElement>{uq_one(g), gen_f(g, 0)});
    REQUIRE(t.fodc_dims == std::vector<std::size_t>{2});
  }
  SECTION("G2 flag") {
    UqAlgebra g(build_root_system("G2"));
    TangentSpaces t = tangent_spaces(g, quantize(g, {1, 0}));
    REQUIRE(t.fodc_dims == std::vector<std::size_t>{7, 6});
    REQUIRE(t.t_minus.size() == 7);
    REQUIRE(t.t_plus.size() == 7);
    for (std::size_t j = 1; j < t.t_minus.size(); ++j) {
      for (const auto& [m, c] : t.t_minus[j]) REQUIRE(m.e.empty());
      REQUIRE(!t.t_plus[j].empty());
    }
  }
  SECTION("cominuscule last step agrees with the lower-triangular part") {
    UqAlgebra a3(build_root_system("A3"));
    Quantization qz = quantize(a3, {1, 2, 0});
    TangentSpaces t = tangent_spaces(a3, qz);
    REQUIRE(t.fodc_dims[0] == 1 + a3.rs().pos_roots.size());
    PbwBasis pb = pbw_basis(a3, qz.adapted);
    std::vector<UqElement> tail(pb.f_vectors->end() - 3, pb.f_vectors->end());
    std::vector<UqElement> im;
    for (const UqElement& v : qz.modules[2][0].basis) im.push_back(omega(a3, v));
    REQUIRE(same_span(tail, im));
  }
}

TEST_CASE("classical limit at q = 1") {
  UqAlgebra g(build_root_system("G2"));
  G2Elems el = g2_elems(g);
  Quantization qz = quantize(g, {1, 0});
  PbwBasis pb = pbw_basis(g, qz.adapted);

  /* Specialized generators match plain commutators of the lower layers. */
  UqElement c2 = sub(mul(g, el.eb2, el.e1), mul(g, el.e1, el.eb2));
  REQUIRE(proportional_at_one(pbw_at_one(g, pb, qz.modules[1][1].basis[0]),
                              pbw_at_one(g, pb, c2)));
  UqElement c3 = sub(mul(g, c2, el.e1), mul(g, el.e1, c2));
  REQUIRE(proportional_at_one(pbw_at_one(g, pb, qz.modules[1][2].basis[0]),
                              pbw_at_one(g, pb, c3)));

  /* The non-primitive part of the coproduct vanishes at q = 1. */
  const UqElement& gen2 = qz.modules[1][1].basis[0];
  Tensor2 rest = coproduct(g, gen2);
  Mono unit = uq_one(g).begin()->first;
  Mono kmono = gen_k(g, {2, 1}).begin()->first;
  for (const auto& [m, c] : gen2) {
    t2_add_term(rest, m, unit, -c);
    t2_add_term(rest, kmono, m, -c);
  }
  for (const auto& [mm, c] : rest) REQUIRE(c.eval(1) == 0);

  /* Degree-one generators are primitive on the nose. */
  UqAlgebra a3(build_root_system("A3"));
  Quantization qa = quantize(a3, {1, 2, 0});
  const UqElement& e2 = qa.modules[1][0].basis[0];
  Tensor2 d2 = coproduct(a3, e2);
  Mono unit3 = uq_one(a3).begin()->first;
  Mono k3 = gen_k(a3, {0, 0, 1}).begin()->first;
  t2_add_term(d2, e2.begin()->first, unit3, -QScalar::one());
  t2_add_term(d2, k3, e2.begin()->first, -QScalar::one());
  REQUIRE(d2.empty());
}
