/*
  This is rmx.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  Quasi R-matrix components, the Levi braiding, transmutation, and the
  quantum shuffle products.  See rmx.hpp for the conventions.
*/

#include "qlie/rmx.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <utility>

#include "qlie/linalg.hpp"

namespace qlie {

namespace {

/* Levels of the letter-action search; a weight-homogeneous vector of a
   finite module dies out long before this. */
constexpr int kActionCap = 48;

UqElement single(const Mono& m) {
  UqElement x;
  x.emplace(m, QScalar::one());
  return x;
}

Root root_sub(const Root& x, const Root& y) {
  Root r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Root root_add(const Root& x, const Root& y) {
  Root r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Root root_neg(const Root& x) {
  Root r = x;
  for (int& v : r) v = -v;
  return r;
}

bool root_nonneg(const Root& x) {
  for (int v : x)
    if (v < 0) return false;
  return true;
}

bool root_zero(const Root& x) {
  for (int v : x)
    if (v != 0) return false;
  return true;
}

Root word_content(int rank, const Word& w) {
  Root c(static_cast<std::size_t>(rank), 0);
  for (int i : w) ++c[static_cast<std::size_t>(i)];
  return c;
}

/* All contents of the given height supported on the subset. */
std::vector<Root> contents_at(int rank, const std::vector<int>& levi, int h) {
  std::vector<Root> out;
  Root cur(static_cast<std::size_t>(rank), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == levi.size()) {
      cur[static_cast<std::size_t>(levi[pos])] = left;
      out.push_back(cur);
      cur[static_cast<std::size_t>(levi[pos])] = 0;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(levi[pos])] = v;
      self(self, pos + 1, left - v);
    }
    cur[static_cast<std::size_t>(levi[pos])] = 0;
  };
  if (!levi.empty() && h > 0) rec(rec, 0, h);
  return out;
}

struct GroupCmp {
  bool operator()(const std::pair<Mono, Root>& a,
                  const std::pair<Mono, Root>& b) const {
    if (a.second != b.second) return a.second < b.second;
    return MonoCmp{}(a.first, b.first);
  }
};

/* Right legs merged into weight-homogeneous elements per left mono, so
   the adaptive level search sees whole module vectors and not their
   individual normal-form terms. */
std::map<std::pair<Mono, Root>, UqElement, GroupCmp> group_legs(
    const UqAlgebra& g, const Tensor2& t) {
  std::map<std::pair<Mono, Root>, UqElement, GroupCmp> out;
  for (const auto& [ab, c] : t)
    add_term(out[{ab.first, mono_weight(g, ab.second)}], ab.second, c);
  return out;
}

void acc_outer(Tensor2& out, const UqElement& a, const UqElement& b,
               const QScalar& c) {
  if (c.is_zero()) return;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) t2_add_term(out, ma, mb, c * ca * cb);
}

void tn_acc(TensorN& t, std::vector<Mono> key, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

/* One level of the letter-action search: children of every nonzero node,
   indexed by the extended word.  Nodes that act to zero are dropped. */
std::map<Word, UqElement> action_level(const UqAlgebra& g,
                                       const std::vector<int>& levi,
                                       const std::map<Word, UqElement>& cur,
                                       bool use_f) {
  std::map<Word, UqElement> next;
  for (const auto& [w, val] : cur)
    for (int i : levi) {
      UqElement nv = use_f ? ad_f(g, i, val) : ad_e(g, i, val);
      if (nv.empty()) continue;
      Word wi;
      wi.reserve(w.size() + 1);
      wi.push_back(i);
      wi.insert(wi.end(), w.begin(), w.end());
      next.emplace(std::move(wi), std::move(nv));
    }
  return next;
}

}  // namespace

QuasiR::QuasiR(const UqAlgebra& g, std::vector<int> levi, int cutoff)
    : g_(g), levi_(std::move(levi)), cutoff_(cutoff) {
  std::sort(levi_.begin(), levi_.end());
  for (std::size_t i = 0; i < levi_.size(); ++i) {
    if (levi_[i] < 0 || levi_[i] >= g_.rs().rank)
      throw DomainError("QuasiR: node index out of range");
    if (i > 0 && levi_[i] == levi_[i - 1])
      throw DomainError("QuasiR: repeated node in the Levi subset");
  }
  if (cutoff_ < 0) throw DomainError("QuasiR: negative cutoff");
  for (int h = 1; h <= cutoff_; ++h)
    for (const Root& gamma : contents_at(g_.rs().rank, levi_, h))
      component(gamma);
}

std::shared_ptr<const Tensor2> QuasiR::component(const Root& gamma) const {
  const RootSystem& rs = g_.rs();
  if (static_cast<int>(gamma.size()) != rs.rank)
    throw DomainError("QuasiR: weight has the wrong rank");
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] < 0)
      throw DomainError("QuasiR: weight outside the positive cone");
    if (gamma[i] > 0 &&
        !std::binary_search(levi_.begin(), levi_.end(), static_cast<int>(i)))
      throw DomainError("QuasiR: weight not supported on the Levi subset");
  }
  {
    std::shared_lock lock(mu_);
    auto it = comp_.find(gamma);
    if (it != comp_.end()) return it->second;
  }
  auto built = solve_component(gamma);
  std::unique_lock lock(mu_);
  auto [it, fresh] = comp_.emplace(gamma, std::move(built));
  (void)fresh;
  return it->second;
}

std::shared_ptr<const Tensor2> QuasiR::solve_component(
    const Root& gamma) const {
  const RootSystem& rs = g_.rs();
  std::vector<int> zero_k(static_cast<std::size_t>(rs.rank), 0);
  if (root_zero(gamma)) {
    Tensor2 q = t2_outer(uq_one(g_), uq_one(g_));
    return std::make_shared<const Tensor2>(std::move(q));
  }

  /* Prerequisite levels, fetched before any matrix work. */
  std::map<int, std::shared_ptr<const Tensor2>> prev;
  for (int i : levi_) {
    Root below = root_sub(gamma, rs.simple(i));
    if (root_nonneg(below)) prev[i] = component(below);
  }

  auto tbl = g_.table(gamma);
  std::vector<Word> basis;
  basis.reserve(tbl->basis.size());
  for (int idx : tbl->basis) basis.push_back(tbl->words[idx]);

  std::vector<std::pair<Word, Word>> unknowns;
  for (const Word& u : basis)
    for (const Word& v : basis) unknowns.emplace_back(u, v);

  QMat a;
  QVec b;
  for (int i : levi_) {
    UqElement ei = gen_e(g_, i);
    std::vector<int> tvec = zero_k;
    tvec[static_cast<std::size_t>(i)] = 1;
    UqElement ki = gen_k(g_, tvec);
    UqElement ki_inv = gen_k_inv(g_, i);

    std::vector<Tensor2> cols;
    cols.reserve(unknowns.size());
    for (const auto& [u, v] : unknowns) {
      UqElement fu = single(Mono{u, zero_k, {}});
      UqElement ev = single(Mono{{}, zero_k, v});
      cols.push_back(t2_outer(sub(mul(g_, fu, ei), mul(g_, ei, fu)), ev));
    }
    Tensor2 rhs;
    auto pit = prev.find(i);
    if (pit != prev.end())
      rhs = t2_sub(t2_mul(g_, t2_outer(ki_inv, ei), *pit->second),
                   t2_mul(g_, *pit->second, t2_outer(ki, ei)));

    std::set<std::pair<Mono, Mono>, MonoPairCmp> keys;
    for (const Tensor2& col : cols)
      for (const auto& [key, c] : col) keys.insert(key);
    for (const auto& [key, c] : rhs) keys.insert(key);

    for (const auto& key : keys) {
      QVec row(unknowns.size(), QScalar::zero());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        auto it = cols[c].find(key);
        if (it != cols[c].end()) row[c] = it->second;
      }
      a.push_back(std::move(row));
      auto it = rhs.find(key);
      b.push_back(it == rhs.end() ? QScalar::zero() : it->second);
    }
  }

  LinSolve ls = solve(std::move(a), b);
  if (!ls.consistent || !ls.unique)
    throw MathFault("quasi R-matrix component is not uniquely determined");

  Tensor2 q;
  for (std::size_t idx = 0; idx < unknowns.size(); ++idx) {
    if (ls.x[idx].is_zero()) continue;
    t2_add_term(q, Mono{unknowns[idx].first, zero_k, {}},
                Mono{{}, zero_k, unknowns[idx].second}, ls.x[idx]);
  }
  return std::make_shared<const Tensor2>(std::move(q));
}

bool quasi_r_check(const QuasiR& qr, int height) {
  const UqAlgebra& g = qr.algebra();
  const RootSystem& rs = g.rs();
  std::vector<int> zero_k(static_cast<std::size_t>(rs.rank), 0);
  for (int h = 1; h <= height; ++h)
    for (const Root& gamma : contents_at(rs.rank, qr.levi(), h)) {
      auto qg = qr.component(gamma);
      for (int i : qr.levi()) {
        UqElement fi = gen_f(g, i);
        std::vector<int> tvec = zero_k;
        tvec[static_cast<std::size_t>(i)] = 1;
        Tensor2 one_f = t2_outer(uq_one(g), fi);
        Tensor2 lhs =
            t2_sub(t2_mul(g, *qg, one_f), t2_mul(g, one_f, *qg));
        Tensor2 rhs;
        Root below = root_sub(gamma, rs.simple(i));
        if (root_nonneg(below)) {
          auto qp = qr.component(below);
          rhs = t2_sub(
              t2_mul(g, t2_outer(fi, gen_k(g, tvec)), *qp),
              t2_mul(g, *qp, t2_outer(fi, gen_k_inv(g, i))));
        }
        if (lhs != rhs) return false;
      }
    }
  return true;
}

Tensor2 tensor_ad(const UqAlgebra& g, const UqElement& x, const Tensor2& t) {
  Tensor2 out;
  Tensor2 cp = coproduct(g, x);
  for (const auto& [xs, cx] : cp)
    for (const auto& [ab, c] : t)
      acc_outer(out, ad(g, single(xs.first), single(ab.first)),
                ad(g, single(xs.second), single(ab.second)), cx * c);
  return out;
}

Tensor2 braiding(const QuasiR& qr, const Tensor2& t) {
  const UqAlgebra& g = qr.algebra();
  const RootSystem& rs = g.rs();
  Tensor2 out;
  for (const auto& [key, y] : group_legs(g, t)) {
    if (y.empty()) continue;
    const Mono& a = key.first;
    const Root& nu = key.second;
    Root mu = mono_weight(g, a);
    UqElement x = single(a);

    /* gamma = 0: the kappa flip. */
    QScalar flip = QScalar::q_power(rs.bilin(mu, nu));
    for (const auto& [ym, yc] : y) t2_add_term(out, ym, a, flip * yc);

    std::map<Word, UqElement> cur;
    cur.emplace(Word{}, y);
    std::map<Word, UqElement> fcache;
    for (int h = 1;; ++h) {
      cur = action_level(g, qr.levi(), cur, false);
      if (cur.empty()) break;
      if (h >= kActionCap)
        throw DomainError(
            "braiding: a right leg does not generate a finite module under "
            "the Levi action");
      std::set<Root> contents;
      for (const auto& [w, val] : cur)
        contents.insert(word_content(rs.rank, w));
      for (const Root& gamma : contents) {
        auto qg = qr.component(gamma);
        QScalar fac =
            QScalar::q_power(rs.bilin(root_sub(mu, gamma), root_add(nu, gamma)));
        for (const auto& [uv, cuv] : *qg) {
          auto yit = cur.find(uv.second.e);
          if (yit == cur.end()) continue;
          auto fit = fcache.find(uv.first.f);
          if (fit == fcache.end())
            fit = fcache.emplace(uv.first.f, ad_word_f(g, uv.first.f, x)).first;
          if (fit->second.empty()) continue;
          acc_outer(out, yit->second, fit->second, fac * cuv);
        }
      }
    }
  }
  return out;
}

TensorN braiding_at(const QuasiR& qr, const TensorN& t, int k) {
  if (t.empty()) return {};
  int n = static_cast<int>(t.begin()->first.size());
  if (k < 0 || k + 1 >= n) throw DomainError("braiding_at: leg out of range");
  std::map<std::vector<Mono>, Tensor2, MonoVecCmp> slices;
  for (const auto& [legs, c] : t) {
    if (static_cast<int>(legs.size()) != n)
      throw MathFault("braiding_at: ragged tensor");
    std::vector<Mono> others;
    others.reserve(legs.size() - 2);
    for (int p = 0; p < n; ++p)
      if (p != k && p != k + 1) others.push_back(legs[static_cast<std::size_t>(p)]);
    t2_add_term(slices[others], legs[static_cast<std::size_t>(k)],
                legs[static_cast<std::size_t>(k) + 1], c);
  }
  TensorN out;
  for (const auto& [others, sl] : slices) {
    Tensor2 r = braiding(qr, sl);
    for (const auto& [pq, c] : r) {
      std::vector<Mono> legs;
      legs.reserve(static_cast<std::size_t>(n));
      std::size_t o = 0;
      for (int p = 0; p < n; ++p) {
        if (p == k)
          legs.push_back(pq.first);
        else if (p == k + 1)
          legs.push_back(pq.second);
        else
          legs.push_back(others[o++]);
      }
      tn_acc(out, std::move(legs), c);
    }
  }
  return out;
}

TensorN sigma_word(const QuasiR& qr, const TensorN& t, const Word& w) {
  TensorN cur = t;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    cur = braiding_at(qr, cur, *it);
  return cur;
}

Tensor2 black_action(const UqAlgebra& g, const UqElement& x, const Tensor2& t) {
  Tensor2 out;
  TensorN d3 = coproduct_n(g, x, 3);
  for (const auto& [xs, cx] : d3) {
    UqElement x1 = single(xs[0]);
    UqElement sx3 = antipode(g, single(xs[2]));
    for (const auto& [yz, c] : t)
      acc_outer(out, mul(g, x1, single(yz.first), sx3),
                ad(g, single(xs[1]), single(yz.second)), cx * c);
  }
  return out;
}

Tensor2 transmutation(const QuasiR& qr, const Tensor2& t, bool inverse) {
  const UqAlgebra& g = qr.algebra();
  const RootSystem& rs = g.rs();
  std::vector<int> zero_k(static_cast<std::size_t>(rs.rank), 0);
  Tensor2 out;
  for (const auto& [key, y] : group_legs(g, t)) {
    if (y.empty()) continue;
    const Mono& a = key.first;
    const Root& nu = key.second;
    UqElement x = single(a);

    /* gamma = 0: the Cartan correction K_nu alone. */
    UqElement b0 = gen_k(g, inverse ? root_neg(nu) : nu);
    acc_outer(out, mul(g, x, b0), y, QScalar::one());

    std::map<Word, UqElement> cur;
    cur.emplace(Word{}, y);
    for (int h = 1;; ++h) {
      cur = action_level(g, qr.levi(), cur, true);
      if (cur.empty()) break;
      if (h >= kActionCap)
        throw DomainError(
            "transmutation: a right leg does not generate a finite module "
            "under the Levi action");
      std::set<Root> contents;
      for (const auto& [w, val] : cur)
        contents.insert(word_content(rs.rank, w));
      for (const Root& gamma : contents) {
        auto qg = qr.component(gamma);
        for (const auto& [uv, cuv] : *qg) {
          auto yit = cur.find(uv.first.f);
          if (yit == cur.end()) continue;
          UqElement bleg;
          if (!inverse) {
            bleg = single(Mono{{}, root_sub(nu, gamma), uv.second.e});
          } else {
            bleg = mul(g, antipode(g, single(Mono{{}, zero_k, uv.second.e})),
                       gen_k(g, root_sub(gamma, nu)));
          }
          acc_outer(out, mul(g, x, bleg), yit->second, cuv);
        }
      }
    }
  }
  return out;
}

Tensor2 braided_mul(const QuasiR& qr, const Tensor2& a, const Tensor2& b) {
  const UqAlgebra& g = qr.algebra();
  /* Left legs of b merged per right mono, keeping module vectors whole. */
  std::map<Mono, UqElement, MonoCmp> bgrp;
  for (const auto& [cd, cb] : b) add_term(bgrp[cd.second], cd.first, cb);
  Tensor2 out;
  for (const auto& [a12, ca] : a) {
    UqElement a1 = single(a12.first);
    for (const auto& [b2, b1s] : bgrp) {
      if (b1s.empty()) continue;
      Tensor2 s = braiding(qr, t2_outer(single(a12.second), b1s));
      UqElement b2e = single(b2);
      for (const auto& [lr, cs] : s)
        acc_outer(out, mul(g, a1, single(lr.first)),
                  mul(g, single(lr.second), b2e), ca * cs);
    }
  }
  return out;
}

std::vector<std::vector<int>> shuffles(int i, int j) {
  if (i < 0 || j < 0) throw DomainError("shuffles: negative block size");
  int n = i + j;
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == i) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      for (int p = 0; p < i; ++p) {
        perm[static_cast<std::size_t>(p)] = pick[static_cast<std::size_t>(p)];
        used[static_cast<std::size_t>(pick[static_cast<std::size_t>(p)])] =
            true;
      }
      int at = i;
      for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)])
          perm[static_cast<std::size_t>(at++)] = v;
      out.push_back(std::move(perm));
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> permutation_inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size(), -1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    int v = p[k];
    if (v < 0 || v >= static_cast<int>(p.size()) ||
        inv[static_cast<std::size_t>(v)] != -1)
      throw DomainError("permutation_inverse: not a permutation");
    inv[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  return inv;
}

Word permutation_reduced_word(std::vector<int> p) {
  {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(p.size()) ||
          seen[static_cast<std::size_t>(v)])
        throw DomainError("permutation_reduced_word: not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  /* Bubble sort by adjacent descents; a swap at position k right-multiplies
     by s_k, so the reversed swap list is a reduced word for p. */
  Word swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (p[k] > p[k + 1]) {
        std::swap(p[k], p[k + 1]);
        swaps.push_back(static_cast<int>(k));
        changed = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Tensor2 shuffle_product(const QuasiR& qr, const std::vector<UqElement>& xs) {
  const UqAlgebra& g = qr.algebra();
  int n = static_cast<int>(xs.size());
  if (n == 0) return t2_outer(uq_one(g), uq_one(g));
  for (const UqElement& x : xs)
    if (x.empty() || !weight(g, x))
      throw DomainError("shuffle_product: factors must be nonzero and "
                        "weight-homogeneous");
  TensorN base = tn_outer(xs);
  Tensor2 out;
  for (int i = 0; i <= n; ++i) {
    for (const std::vector<int>& sh : shuffles(i, n - i)) {
      Word w = permutation_reduced_word(permutation_inverse(sh));
      TensorN ts = sigma_word(qr, base, w);
      for (const auto& [legs, c] : ts) {
        UqElement left = uq_one(g);
        UqElement right = uq_one(g);
        for (int p = 0; p < i; ++p)
          left = mul(g, left, single(legs[static_cast<std::size_t>(p)]));
        for (int p = i; p < n; ++p)
          right = mul(g, right, single(legs[static_cast<std::size_t>(p)]));
        acc_outer(out, left, right, c);
      }
    }
  }
  return out;
}

}  // namespace qlie
