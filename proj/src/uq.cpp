/*
  This is uq.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.
*/

#include "qlie/uq.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

namespace qlie {

bool deglex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

bool MonoCmp::operator()(const Mono& a, const Mono& b) const {
  if (a.f != b.f) return deglex_less(a.f, b.f);
  if (a.k != b.k) return a.k < b.k;
  return deglex_less(a.e, b.e);
}

bool MonoPairCmp::operator()(const std::pair<Mono, Mono>& a,
                             const std::pair<Mono, Mono>& b) const {
  MonoCmp c;
  if (c(a.first, b.first)) return true;
  if (c(b.first, a.first)) return false;
  return c(a.second, b.second);
}

bool MonoVecCmp::operator()(const std::vector<Mono>& a,
                            const std::vector<Mono>& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  MonoCmp c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (c(a[i], b[i])) return true;
    if (c(b[i], a[i])) return false;
  }
  return false;
}

namespace {

Root word_content(int rank, const Word& w) {
  Root c(rank, 0);
  for (int i : w) ++c[i];
  return c;
}

Root word_weight(int rank, const Word& w) { return word_content(rank, w); }

void gen_words_rec(Root& rem, Word& cur, std::vector<Word>& out) {
  bool leaf = true;
  for (int i = 0; i < static_cast<int>(rem.size()); ++i) {
    if (rem[i] == 0) continue;
    leaf = false;
    --rem[i];
    cur.push_back(i);
    gen_words_rec(rem, cur, out);
    cur.pop_back();
    ++rem[i];
  }
  if (leaf) out.push_back(cur);
}

std::vector<Word> words_of_content(const Root& content) {
  Root rem = content;
  Word cur;
  std::vector<Word> out;
  gen_words_rec(rem, cur, out);
  return out;
}

}  // namespace

std::shared_ptr<const WordTable> UqAlgebra::table(const Root& content) const {
  {
    std::shared_lock lk(table_mu_);
    auto it = tables_.find(content);
    if (it != tables_.end()) return it->second;
  }
  const RootSystem& rs = rs_;
  for (int v : content)
    if (v < 0) throw MathFault("word table: negative content");

  auto t = std::make_shared<WordTable>();
  t->words = words_of_content(content);
  std::size_t n = t->words.size();
  for (std::size_t w = 0; w < n; ++w)
    t->index.emplace(t->words[w], static_cast<int>(w));

  /* Relation rows: every context embedding u S_ij v of a quantized Serre
     relation whose content fits.  Columns run over the words in
     lexicographically descending order, so row reduction pivots on the
     lexicographically greatest word of each relation. */
  auto col_of = [n](std::size_t widx) { return n - 1 - widx; };
  QMat rows;
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) {
      if (i == j) continue;
      long m = 1 - rs.a[i][j];
      Root residual = content;
      residual[i] -= static_cast<int>(m);
      residual[j] -= 1;
      if (std::any_of(residual.begin(), residual.end(),
                      [](int v) { return v < 0; }))
        continue;
      for (const Word& ctx : words_of_content(residual)) {
        for (std::size_t cut = 0; cut <= ctx.size(); ++cut) {
          QVec row(n, QScalar::zero());
          for (long s = 0; s <= m; ++s) {
            Word w(ctx.begin(), ctx.begin() + static_cast<long>(cut));
            w.insert(w.end(), static_cast<std::size_t>(m - s), i);
            w.push_back(j);
            w.insert(w.end(), static_cast<std::size_t>(s), i);
            w.insert(w.end(), ctx.begin() + static_cast<long>(cut), ctx.end());
            QScalar c = QScalar::q_binom(m, s, rs.d[i]);
            if (s % 2) c = -c;
            std::size_t col = col_of(
                static_cast<std::size_t>(t->index.at(w)));
            row[col] += c;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }

  std::vector<std::size_t> pivots = rref(rows);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  t->rewrite.assign(n, {});
  for (std::size_t w = 0; w < n; ++w) {
    if (!is_pivot[col_of(w)])
      t->rewrite[w] = {{static_cast<int>(w), QScalar::one()}};
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::size_t widx = n - 1 - pivots[r];
    std::vector<std::pair<int, QScalar>> combo;
    for (std::size_t w = 0; w < n; ++w) {
      std::size_t col = col_of(w);
      if (is_pivot[col]) continue;
      if (!rows[r][col].is_zero())
        combo.emplace_back(static_cast<int>(w), -rows[r][col]);
    }
    t->rewrite[widx] = std::move(combo);
  }
  for (std::size_t w = 0; w < n; ++w)
    if (!is_pivot[col_of(w)]) t->basis.push_back(static_cast<int>(w));

  mpz_class expect = kostant_partition(rs, content);
  if (mpz_class(static_cast<long>(t->basis.size())) != expect)
    throw MathFault("word table corank does not match the partition count");

  std::shared_ptr<const WordTable> out = t;
  std::unique_lock lk(table_mu_);
  return tables_.emplace(content, out).first->second;
}

/* ---------- construction ---------- */

UqElement uq_zero() { return {}; }

UqElement uq_one(const UqAlgebra& g) {
  UqElement x;
  x.emplace(Mono{{}, std::vector<int>(g.rs().rank, 0), {}}, QScalar::one());
  return x;
}

UqElement gen_e(const UqAlgebra& g, int i) {
  if (i < 0 || i >= g.rs().rank) throw DomainError("generator index out of range");
  UqElement x;
  x.emplace(Mono{{}, std::vector<int>(g.rs().rank, 0), {i}}, QScalar::one());
  return x;
}

UqElement gen_f(const UqAlgebra& g, int i) {
  if (i < 0 || i >= g.rs().rank) throw DomainError("generator index out of range");
  UqElement x;
  x.emplace(Mono{{i}, std::vector<int>(g.rs().rank, 0), {}}, QScalar::one());
  return x;
}

UqElement gen_k(const UqAlgebra& g, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != g.rs().rank)
    throw DomainError("K exponent vector has the wrong length");
  UqElement x;
  x.emplace(Mono{{}, t, {}}, QScalar::one());
  return x;
}

UqElement gen_k_inv(const UqAlgebra& g, int i) {
  std::vector<int> t(g.rs().rank, 0);
  t[i] = -1;
  return gen_k(g, t);
}

void add_term(UqElement& x, const Mono& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = x.find(m);
  if (it == x.end()) {
    x.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

UqElement add(const UqElement& a, const UqElement& b) {
  UqElement r = a;
  for (const auto& [m, c] : b) add_term(r, m, c);
  return r;
}

UqElement sub(const UqElement& a, const UqElement& b) {
  UqElement r = a;
  for (const auto& [m, c] : b) add_term(r, m, -c);
  return r;
}

UqElement scale(const QScalar& c, const UqElement& a) {
  if (c.is_zero()) return {};
  UqElement r;
  for (const auto& [m, x] : a) r.emplace(m, c * x);
  return r;
}

/* ---------- the multiplication engine ---------- */

namespace {

Root alpha(const RootSystem& rs, int i) {
  Root r(rs.rank, 0);
  r[i] = 1;
  return r;
}

/* Expand a (possibly non-canonical) word into basis words via the table,
   invoking fn(basis_word, coeff). */
template <class Fn>
void for_basis(const UqAlgebra& g, const Word& w, Fn&& fn) {
  auto t = g.table(word_content(g.rs().rank, w));
  std::size_t idx = static_cast<std::size_t>(t->index.at(w));
  for (const auto& [bidx, c] : t->rewrite[idx])
    fn(t->words[static_cast<std::size_t>(bidx)], c);
}

/* x * F_j */
UqElement mul_f_letter(const UqAlgebra& g, const UqElement& x, int j) {
  const RootSystem& rs = g.rs();
  Root aj = alpha(rs, j);
  QScalar denom = QScalar::q_power(rs.d[j]) - QScalar::q_power(-rs.d[j]);
  UqElement out;
  for (const auto& [m, c] : x) {
    // F_a K_t E_v F_j: the F letter passes E_v, creating one term per
    // occurrence of j in v, then passes K_t with a q-power.
    QScalar main = c * QScalar::q_power(-rs.bilin(m.k, aj));
    Word fw = m.f;
    fw.push_back(j);
    for_basis(g, fw, [&](const Word& bw, const QScalar& bc) {
      add_term(out, Mono{bw, m.k, m.e}, main * bc);
    });
    Root sigma(rs.rank, 0);
    for (std::size_t p = 0; p < m.e.size(); ++p) {
      if (m.e[p] == j) {
        long s = rs.bilin(aj, sigma);
        Word edel = m.e;
        edel.erase(edel.begin() + static_cast<long>(p));
        QScalar plus = c * QScalar::q_power(-s) / denom;
        QScalar minus = c * QScalar::q_power(s) / denom;
        std::vector<int> kp = m.k, km = m.k;
        ++kp[j];
        --km[j];
        for_basis(g, edel, [&](const Word& bw, const QScalar& bc) {
          add_term(out, Mono{m.f, kp, bw}, plus * bc);
          add_term(out, Mono{m.f, km, bw}, -(minus * bc));
        });
      }
      sigma[m.e[p]] += 1;
    }
  }
  return out;
}

/* x * K_t */
UqElement mul_k_vec(const UqAlgebra& g, const UqElement& x,
                    const std::vector<int>& t) {
  const RootSystem& rs = g.rs();
  UqElement out;
  for (const auto& [m, c] : x) {
    QScalar f = c * QScalar::q_power(-rs.bilin(t, word_weight(rs.rank, m.e)));
    std::vector<int> k = m.k;
    for (int i = 0; i < rs.rank; ++i) k[i] += t[i];
    add_term(out, Mono{m.f, k, m.e}, f);
  }
  return out;
}

/* x * E_j */
UqElement mul_e_letter(const UqAlgebra& g, const UqElement& x, int j) {
  UqElement out;
  for (const auto& [m, c] : x) {
    Word ew = m.e;
    ew.push_back(j);
    for_basis(g, ew, [&](const Word& bw, const QScalar& bc) {
      add_term(out, Mono{m.f, m.k, bw}, c * bc);
    });
  }
  return out;
}

bool k_is_zero(const std::vector<int>& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
}

}  // namespace

UqElement mul(const UqAlgebra& g, const UqElement& a, const UqElement& b) {
  UqElement out;
  for (const auto& [m2, c2] : b) {
    UqElement cur = scale(c2, a);
    for (int j : m2.f) cur = mul_f_letter(g, cur, j);
    if (!k_is_zero(m2.k)) cur = mul_k_vec(g, cur, m2.k);
    for (int j : m2.e) cur = mul_e_letter(g, cur, j);
    for (const auto& [m, c] : cur) add_term(out, m, c);
  }
  return out;
}

UqElement mul(const UqAlgebra& g, const UqElement& a, const UqElement& b,
              const UqElement& c) {
  return mul(g, mul(g, a, b), c);
}

UqElement uq_pow(const UqAlgebra& g, const UqElement& x, int n) {
  if (n < 0) throw DomainError("uq_pow: negative exponent");
  UqElement r = uq_one(g);
  for (int k = 0; k < n; ++k) r = mul(g, r, x);
  return r;
}

UqElement divided_power(const UqAlgebra& g, const UqElement& x, int n, long d) {
  return scale(QScalar::one() / QScalar::q_factorial(n, d), uq_pow(g, x, n));
}

/* ---------- weights ---------- */

Root mono_weight(const UqAlgebra& g, const Mono& m) {
  Root w(g.rs().rank, 0);
  for (int i : m.e) ++w[i];
  for (int i : m.f) --w[i];
  return w;
}

std::optional<Root> weight(const UqAlgebra& g, const UqElement& x) {
  if (x.empty()) return Root(g.rs().rank, 0);
  Root w = mono_weight(g, x.begin()->first);
  for (const auto& [m, c] : x)
    if (mono_weight(g, m) != w) return std::nullopt;
  return w;
}

bool is_pure_e(const UqElement& x) {
  for (const auto& [m, c] : x)
    if (!m.f.empty() || !k_is_zero(m.k)) return false;
  return true;
}

/* ---------- Hopf structure ---------- */

namespace {

Tensor2 t2_singleton(const UqAlgebra& g, const QScalar& c) {
  Mono one{{}, std::vector<int>(g.rs().rank, 0), {}};
  Tensor2 t;
  t.emplace(std::make_pair(one, one), c);
  return t;
}

UqElement single(const Mono& m) {
  UqElement x;
  x.emplace(m, QScalar::one());
  return x;
}

}  // namespace

void t2_add_term(Tensor2& x, const Mono& a, const Mono& b, const QScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = x.find(key);
  if (it == x.end()) {
    x.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

Tensor2 t2_outer(const UqElement& a, const UqElement& b) {
  Tensor2 t;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) t2_add_term(t, ma, mb, ca * cb);
  return t;
}

Tensor2 t2_add(const Tensor2& a, const Tensor2& b) {
  Tensor2 r = a;
  for (const auto& [k, c] : b) t2_add_term(r, k.first, k.second, c);
  return r;
}

Tensor2 t2_sub(const Tensor2& a, const Tensor2& b) {
  Tensor2 r = a;
  for (const auto& [k, c] : b) t2_add_term(r, k.first, k.second, -c);
  return r;
}

Tensor2 t2_scale(const QScalar& c, const Tensor2& a) {
  if (c.is_zero()) return {};
  Tensor2 r;
  for (const auto& [k, x] : a) r.emplace(k, c * x);
  return r;
}

Tensor2 t2_mul(const UqAlgebra& g, const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      UqElement l = mul(g, single(ka.first), single(kb.first));
      UqElement r = mul(g, single(ka.second), single(kb.second));
      QScalar f = ca * cb;
      for (const auto& [ml, cl] : l)
        for (const auto& [mr, cr] : r) t2_add_term(out, ml, mr, f * cl * cr);
    }
  return out;
}

Tensor2 t2_flip(const Tensor2& a) {
  Tensor2 r;
  for (const auto& [k, c] : a) t2_add_term(r, k.second, k.first, c);
  return r;
}

Tensor2 coproduct(const UqAlgebra& g, const UqElement& x) {
  const RootSystem& rs = g.rs();
  Tensor2 out;
  for (const auto& [m, c] : x) {
    Tensor2 acc = t2_singleton(g, c);
    for (int j : m.f) {
      // Delta(F_j) = F_j (x) K_j^-1 + 1 (x) F_j
      Tensor2 d = t2_outer(gen_f(g, j), gen_k_inv(g, j));
      d = t2_add(d, t2_outer(uq_one(g), gen_f(g, j)));
      acc = t2_mul(g, acc, d);
    }
    if (!k_is_zero(m.k))
      acc = t2_mul(g, acc, t2_outer(gen_k(g, m.k), gen_k(g, m.k)));
    for (int j : m.e) {
      // Delta(E_j) = E_j (x) 1 + K_j (x) E_j
      std::vector<int> kj(rs.rank, 0);
      kj[j] = 1;
      Tensor2 d = t2_outer(gen_e(g, j), uq_one(g));
      d = t2_add(d, t2_outer(gen_k(g, kj), gen_e(g, j)));
      acc = t2_mul(g, acc, d);
    }
    out = t2_add(out, acc);
  }
  return out;
}

TensorN tn_from(const UqElement& x, int n) {
  TensorN t;
  Mono one{{}, std::vector<int>(x.empty() ? 0 : x.begin()->first.k.size(), 0),
           {}};
  for (const auto& [m, c] : x) {
    std::vector<Mono> legs(static_cast<std::size_t>(n), one);
    legs[0] = m;
    t.emplace(std::move(legs), c);
  }
  return t;
}

TensorN tn_outer(const std::vector<UqElement>& legs) {
  TensorN t;
  std::vector<std::pair<std::vector<Mono>, QScalar>> acc = {
      {{}, QScalar::one()}};
  for (const UqElement& leg : legs) {
    std::vector<std::pair<std::vector<Mono>, QScalar>> next;
    for (const auto& [ms, c] : acc)
      for (const auto& [m, cm] : leg) {
        std::vector<Mono> e = ms;
        e.push_back(m);
        next.emplace_back(std::move(e), c * cm);
      }
    acc = std::move(next);
  }
  for (auto& [ms, c] : acc) {
    auto it = t.find(ms);
    if (it == t.end())
      t.emplace(std::move(ms), c);
    else
      it->second += c;
  }
  return t;
}

TensorN tn_add(const TensorN& a, const TensorN& b) {
  TensorN r = a;
  for (const auto& [k, c] : b) {
    auto it = r.find(k);
    if (it == r.end()) {
      r.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

TensorN tn_scale(const QScalar& c, const TensorN& a) {
  if (c.is_zero()) return {};
  TensorN r;
  for (const auto& [k, x] : a) r.emplace(k, c * x);
  return r;
}

TensorN tn_mul(const UqAlgebra& g, const TensorN& a, const TensorN& b) {
  TensorN out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (ka.size() != kb.size()) throw MathFault("tn_mul: leg count mismatch");
      std::vector<std::pair<std::vector<Mono>, QScalar>> acc = {{{}, ca * cb}};
      for (std::size_t leg = 0; leg < ka.size(); ++leg) {
        UqElement prod = mul(g, single(ka[leg]), single(kb[leg]));
        std::vector<std::pair<std::vector<Mono>, QScalar>> next;
        for (const auto& [ms, c] : acc)
          for (const auto& [m, cm] : prod) {
            std::vector<Mono> e = ms;
            e.push_back(m);
            next.emplace_back(std::move(e), c * cm);
          }
        acc = std::move(next);
      }
      for (auto& [ms, c] : acc) {
        if (c.is_zero()) continue;
        auto it = out.find(ms);
        if (it == out.end()) {
          out.emplace(std::move(ms), c);
        } else {
          it->second += c;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  return out;
}

TensorN coproduct_n(const UqAlgebra& g, const UqElement& x, int n) {
  if (n < 1) throw DomainError("coproduct_n: need at least one leg");
  const RootSystem& rs = g.rs();
  Mono onem{{}, std::vector<int>(rs.rank, 0), {}};
  auto leg_fill = [&](const UqElement& at, int pos, const UqElement& before,
                      const UqElement& after) {
    std::vector<UqElement> legs(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      if (p < pos)
        legs[static_cast<std::size_t>(p)] = before;
      else if (p == pos)
        legs[static_cast<std::size_t>(p)] = at;
      else
        legs[static_cast<std::size_t>(p)] = after;
    }
    return tn_outer(legs);
  };
  TensorN out;
  for (const auto& [m, c] : x) {
    std::vector<Mono> ones(static_cast<std::size_t>(n), onem);
    TensorN acc;
    acc.emplace(ones, c);
    for (int j : m.f) {
      TensorN d;
      for (int p = 0; p < n; ++p)
        d = tn_add(d, leg_fill(gen_f(g, j), p, uq_one(g), gen_k_inv(g, j)));
      acc = tn_mul(g, acc, d);
    }
    if (!k_is_zero(m.k)) {
      std::vector<UqElement> legs(static_cast<std::size_t>(n), gen_k(g, m.k));
      acc = tn_mul(g, acc, tn_outer(legs));
    }
    for (int j : m.e) {
      std::vector<int> kj(rs.rank, 0);
      kj[j] = 1;
      TensorN d;
      for (int p = 0; p < n; ++p)
        d = tn_add(d, leg_fill(gen_e(g, j), p, gen_k(g, kj), uq_one(g)));
      acc = tn_mul(g, acc, d);
    }
    out = tn_add(out, acc);
  }
  return out;
}

UqElement antipode(const UqAlgebra& g, const UqElement& x) {
  UqElement out;
  for (const auto& [m, c] : x) {
    UqElement acc;
    acc.emplace(Mono{{}, std::vector<int>(g.rs().rank, 0), {}}, c);
    for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) {
      // S(E_j) = -K_j^-1 E_j
      UqElement s = mul(g, gen_k_inv(g, *it), gen_e(g, *it));
      acc = mul(g, acc, scale(QScalar::integer(-1), s));
    }
    if (!k_is_zero(m.k)) {
      std::vector<int> t = m.k;
      for (auto& v : t) v = -v;
      acc = mul(g, acc, gen_k(g, t));
    }
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
      // S(F_j) = -F_j K_j
      std::vector<int> kj(g.rs().rank, 0);
      kj[*it] = 1;
      UqElement s = mul(g, gen_f(g, *it), gen_k(g, kj));
      acc = mul(g, acc, scale(QScalar::integer(-1), s));
    }
    for (const auto& [mm, cc] : acc) add_term(out, mm, cc);
  }
  return out;
}

QScalar counit(const UqAlgebra& g, const UqElement& x) {
  (void)g;
  QScalar r = QScalar::zero();
  for (const auto& [m, c] : x)
    if (m.f.empty() && m.e.empty()) r += c;
  return r;
}

/* ---------- adjoint action ---------- */

UqElement ad_e(const UqAlgebra& g, int i, const UqElement& y) {
  const RootSystem& rs = g.rs();
  Root ai = alpha(rs, i);
  UqElement left = mul(g, gen_e(g, i), y);
  UqElement right;
  for (const auto& [m, c] : y) {
    QScalar f = c * QScalar::q_power(rs.bilin(ai, mono_weight(g, m)));
    UqElement t = mul(g, single(m), gen_e(g, i));
    for (const auto& [mm, cc] : t) add_term(right, mm, f * cc);
  }
  return sub(left, right);
}

UqElement ad_f(const UqAlgebra& g, int i, const UqElement& y) {
  std::vector<int> ki(g.rs().rank, 0);
  ki[i] = 1;
  UqElement comm = sub(mul(g, gen_f(g, i), y), mul(g, y, gen_f(g, i)));
  return mul(g, comm, gen_k(g, ki));
}

UqElement ad_k(const UqAlgebra& g, const std::vector<int>& t,
               const UqElement& y) {
  const RootSystem& rs = g.rs();
  UqElement out;
  for (const auto& [m, c] : y)
    add_term(out, m, c * QScalar::q_power(rs.bilin(t, mono_weight(g, m))));
  return out;
}

UqElement ad_word_e(const UqAlgebra& g, const Word& v, const UqElement& y) {
  UqElement r = y;
  for (auto it = v.rbegin(); it != v.rend(); ++it) r = ad_e(g, *it, r);
  return r;
}

UqElement ad_word_f(const UqAlgebra& g, const Word& w, const UqElement& y) {
  UqElement r = y;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = ad_f(g, *it, r);
  return r;
}

UqElement ad(const UqAlgebra& g, const UqElement& x, const UqElement& y) {
  Tensor2 d = coproduct(g, x);
  UqElement out;
  for (const auto& [k, c] : d) {
    UqElement t = mul(g, single(k.first), y, antipode(g, single(k.second)));
    for (const auto& [m, cc] : t) add_term(out, m, c * cc);
  }
  return out;
}

/* ---------- braid operators ---------- */

namespace {

UqElement t_image_e(const UqAlgebra& g, int i, int j, bool inverse) {
  const RootSystem& rs = g.rs();
  if (i == j) {
    std::vector<int> ki(rs.rank, 0);
    if (!inverse) {
      // T_i(E_i) = -F_i K_i
      ki[i] = 1;
      return scale(QScalar::integer(-1), mul(g, gen_f(g, i), gen_k(g, ki)));
    }
    // T_i^-1(E_i) = -K_i^-1 F_i
    return scale(QScalar::integer(-1), mul(g, gen_k_inv(g, i), gen_f(g, i)));
  }
  long m = -rs.a[i][j];
  UqElement out;
  for (long r = 0; r <= m; ++r) {
    QScalar c = QScalar::q_power(-r * rs.d[i]);
    if (r % 2) c = -c;
    long left = inverse ? r : m - r;
    long right = inverse ? m - r : r;
    UqElement term =
        mul(g, divided_power(g, gen_e(g, i), static_cast<int>(left), rs.d[i]),
            gen_e(g, j),
            divided_power(g, gen_e(g, i), static_cast<int>(right), rs.d[i]));
    for (const auto& [mm, cc] : term) add_term(out, mm, c * cc);
  }
  return out;
}

UqElement t_image_f(const UqAlgebra& g, int i, int j, bool inverse) {
  const RootSystem& rs = g.rs();
  if (i == j) {
    std::vector<int> ki(rs.rank, 0);
    if (!inverse) {
      // T_i(F_i) = -K_i^-1 E_i
      return scale(QScalar::integer(-1), mul(g, gen_k_inv(g, i), gen_e(g, i)));
    }
    // T_i^-1(F_i) = -E_i K_i
    ki[i] = 1;
    return scale(QScalar::integer(-1), mul(g, gen_e(g, i), gen_k(g, ki)));
  }
  long m = -rs.a[i][j];
  UqElement out;
  for (long r = 0; r <= m; ++r) {
    QScalar c = QScalar::q_power(r * rs.d[i]);
    if (r % 2) c = -c;
    long left = inverse ? m - r : r;
    long right = inverse ? r : m - r;
    UqElement term =
        mul(g, divided_power(g, gen_f(g, i), static_cast<int>(left), rs.d[i]),
            gen_f(g, j),
            divided_power(g, gen_f(g, i), static_cast<int>(right), rs.d[i]));
    for (const auto& [mm, cc] : term) add_term(out, mm, c * cc);
  }
  return out;
}

UqElement lusztig_apply(const UqAlgebra& g, int i, const UqElement& x,
                        bool inverse) {
  const RootSystem& rs = g.rs();
  if (i < 0 || i >= rs.rank) throw DomainError("braid operator index out of range");
  UqElement out;
  for (const auto& [m, c] : x) {
    UqElement acc;
    acc.emplace(Mono{{}, std::vector<int>(rs.rank, 0), {}}, c);
    for (int j : m.f) acc = mul(g, acc, t_image_f(g, i, j, inverse));
    if (!k_is_zero(m.k)) acc = mul(g, acc, gen_k(g, rs.reflect(m.k, i)));
    for (int j : m.e) acc = mul(g, acc, t_image_e(g, i, j, inverse));
    for (const auto& [mm, cc] : acc) add_term(out, mm, cc);
  }
  return out;
}

}  // namespace

UqElement lusztig_t(const UqAlgebra& g, int i, const UqElement& x) {
  return lusztig_apply(g, i, x, false);
}

UqElement lusztig_t_inv(const UqAlgebra& g, int i, const UqElement& x) {
  return lusztig_apply(g, i, x, true);
}

std::shared_ptr<const std::vector<UqElement>> UqAlgebra::root_vectors(
    const Word& reduced, bool use_f) const {
  auto key = std::make_pair(reduced, use_f);
  {
    std::shared_lock lk(rv_mu_);
    auto it = rv_.find(key);
    if (it != rv_.end()) return it->second;
  }
  // Validates that the word is reduced as a side effect.
  std::vector<Root> betas = root_enumeration(rs_, reduced);
  auto out = std::make_shared<std::vector<UqElement>>();
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    UqElement x = use_f ? gen_f(*this, reduced[k]) : gen_e(*this, reduced[k]);
    for (std::size_t t = k; t-- > 0;) x = lusztig_t(*this, reduced[t], x);
    Root expect = betas[k];
    std::optional<Root> w = weight(*this, x);
    if (use_f)
      for (auto& v : expect) v = -v;
    if (!w || *w != expect)
      throw MathFault("root vector has the wrong weight");
    for (const auto& [m, c] : x)
      if ((use_f && (!m.e.empty() || !k_is_zero(m.k))) ||
          (!use_f && (!m.f.empty() || !k_is_zero(m.k))))
        throw MathFault("root vector is not triangular");
    out->push_back(std::move(x));
  }
  std::shared_ptr<const std::vector<UqElement>> res = out;
  std::unique_lock lk(rv_mu_);
  return rv_.emplace(std::move(key), res).first->second;
}

std::shared_ptr<const std::vector<UqElement>> UqAlgebra::root_vectors_e(
    const Word& reduced) const {
  return root_vectors(reduced, false);
}

std::shared_ptr<const std::vector<UqElement>> UqAlgebra::root_vectors_f(
    const Word& reduced) const {
  return root_vectors(reduced, true);
}

/* ---------- PBW bases ---------- */

PbwBasis pbw_basis(const UqAlgebra& g, const Word& reduced) {
  PbwBasis pb;
  pb.reduced = reduced;
  pb.betas = root_enumeration(g.rs(), reduced);
  for (const Root& b : pb.betas) pb.d_beta.push_back(g.rs().bilin(b, b) / 2);
  pb.e_vectors = g.root_vectors_e(reduced);
  pb.f_vectors = g.root_vectors_f(reduced);
  return pb;
}

UqElement pbw_monomial(const UqAlgebra& g, const PbwBasis& pb,
                       const std::vector<int>& m) {
  if (m.size() != pb.betas.size())
    throw DomainError("pbw_monomial: exponent vector has the wrong length");
  UqElement acc = uq_one(g);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (m[k] < 0) throw DomainError("pbw_monomial: negative exponent");
    acc = mul(g, acc,
              divided_power(g, (*pb.e_vectors)[k], m[k], pb.d_beta[k]));
  }
  return acc;
}

namespace {

void pbw_exp_rec(const PbwBasis& pb, std::size_t k, Root& rem,
                 std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == pb.betas.size()) {
    if (std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; }))
      out.push_back(cur);
    return;
  }
  const Root& b = pb.betas[k];
  int mmax = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0) mmax = std::min(mmax, rem[i] / b[i]);
  for (int m = 0; m <= mmax; ++m) {
    cur[k] = m;
    pbw_exp_rec(pb, k + 1, rem, cur, out);
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= b[i];
  }
  for (std::size_t i = 0; i < rem.size(); ++i)
    rem[i] += (mmax + 1) * b[i];
  cur[k] = 0;
}

}  // namespace

std::vector<std::vector<int>> pbw_exponents(const PbwBasis& pb,
                                            const Root& content) {
  Root rem = content;
  std::vector<int> cur(pb.betas.size(), 0);
  std::vector<std::vector<int>> out;
  pbw_exp_rec(pb, 0, rem, cur, out);
  return out;
}

std::vector<std::pair<std::vector<int>, QScalar>> pbw_expand(
    const UqAlgebra& g, const PbwBasis& pb, const UqElement& x) {
  if (!is_pure_e(x))
    throw DomainError("pbw_expand: element is not in the positive part");
  std::map<Root, UqElement> by_content;
  for (const auto& [m, c] : x)
    by_content[word_content(g.rs().rank, m.e)].emplace(m, c);

  std::vector<std::pair<std::vector<int>, QScalar>> out;
  for (const auto& [content, part] : by_content) {
    std::vector<std::vector<int>> exps = pbw_exponents(pb, content);
    auto t = g.table(content);
    std::size_t rows = t->basis.size();
    if (exps.empty())
      throw MathFault("pbw_expand: content outside the PBW cone");
    QMat a(rows, QVec(exps.size(), QScalar::zero()));
    std::map<Word, std::size_t> brow;
    for (std::size_t r = 0; r < rows; ++r)
      brow.emplace(t->words[static_cast<std::size_t>(t->basis[r])], r);
    for (std::size_t c = 0; c < exps.size(); ++c) {
      UqElement mono = pbw_monomial(g, pb, exps[c]);
      for (const auto& [m, coef] : mono) a[brow.at(m.e)][c] = coef;
    }
    QVec b(rows, QScalar::zero());
    for (const auto& [m, coef] : part) b[brow.at(m.e)] = coef;
    LinSolve sol = solve(std::move(a), b);
    if (!sol.consistent || !sol.unique)
      throw MathFault("pbw_expand: basis failed to resolve the element");
    for (std::size_t c = 0; c < exps.size(); ++c)
      if (!sol.x[c].is_zero()) out.emplace_back(exps[c], sol.x[c]);
  }
  return out;
}

UqElement q_commutator(const UqAlgebra& g, const UqElement& x,
                       const UqElement& y) {
  std::optional<Root> wx = weight(g, x), wy = weight(g, y);
  if (!wx || !wy)
    throw DomainError("q_commutator: arguments must be weight-homogeneous");
  QScalar c = QScalar::q_power(g.rs().bilin(*wx, *wy));
  return sub(mul(g, x, y), scale(c, mul(g, y, x)));
}

/* ---------- involutions ---------- */

UqElement omega(const UqAlgebra& g, const UqElement& x) {
  UqElement out;
  for (const auto& [m, c] : x) {
    UqElement acc;
    acc.emplace(Mono{{}, std::vector<int>(g.rs().rank, 0), {}}, c);
    for (int j : m.f) acc = mul(g, acc, gen_e(g, j));
    if (!k_is_zero(m.k)) {
      std::vector<int> t = m.k;
      for (auto& v : t) v = -v;
      acc = mul(g, acc, gen_k(g, t));
    }
    for (int j : m.e) acc = mul(g, acc, gen_f(g, j));
    for (const auto& [mm, cc] : acc) add_term(out, mm, cc);
  }
  return out;
}

UqElement star(const UqAlgebra& g, const UqElement& x) {
  const RootSystem& rs = g.rs();
  UqElement out;
  for (const auto& [m, c] : x) {
    UqElement acc;
    acc.emplace(Mono{{}, std::vector<int>(rs.rank, 0), {}}, c);
    for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) {
      // (E_j)* = F_j K_j
      std::vector<int> kj(rs.rank, 0);
      kj[*it] = 1;
      acc = mul(g, acc, mul(g, gen_f(g, *it), gen_k(g, kj)));
    }
    if (!k_is_zero(m.k)) acc = mul(g, acc, gen_k(g, m.k));
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
      // (F_j)* = K_j^-1 E_j
      acc = mul(g, acc, mul(g, gen_k_inv(g, *it), gen_e(g, *it)));
    }
    for (const auto& [mm, cc] : acc) add_term(out, mm, cc);
  }
  return out;
}

}  // namespace qlie
