/*
  This is lie.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.
*/

#include "qlie/lie.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

namespace qlie {

namespace {

/* Positive roots sorted by height, then by coordinates lexicographically
   descending, so that alpha_1 precedes alpha_2 at equal height. */
bool root_order(const Root& x, const Root& y) {
  int hx = 0, hy = 0;
  for (int v : x) hx += v;
  for (int v : y) hy += v;
  if (hx != hy) return hx < hy;
  return x > y;
}

struct ComponentData {
  std::string type;
  std::vector<std::vector<int>> a;
  std::vector<int> d;
};

ComponentData component_tables(char family, int n) {
  ComponentData c;
  c.type = std::string(1, family) + std::to_string(n);
  c.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c.a[i][i] = 2;
  c.d.assign(n, 1);
  auto edge = [&](int i, int j) { c.a[i][j] = c.a[j][i] = -1; };
  switch (family) {
    case 'A':
      if (n < 1) throw DomainError("type A rank must be >= 1");
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw DomainError("type B rank must be >= 2");
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      c.a[n - 2][n - 1] = -1;
      c.a[n - 1][n - 2] = -2;
      c.d.assign(n, 2);
      c.d[n - 1] = 1;
      break;
    case 'C':
      if (n < 2) throw DomainError("type C rank must be >= 2");
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      c.a[n - 2][n - 1] = -2;
      c.a[n - 1][n - 2] = -1;
      c.d.assign(n, 1);
      c.d[n - 1] = 2;
      break;
    case 'D':
      if (n < 4) throw DomainError("type D rank must be >= 4");
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw DomainError("type E rank must be 6, 7 or 8");
      // Chain 1-2-...-(n-1) with node n attached to node 3.
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(2, n - 1);
      break;
    case 'F':
      if (n != 4) throw DomainError("type F rank must be 4");
      edge(0, 1);
      edge(2, 3);
      c.a[1][2] = -1;
      c.a[2][1] = -2;
      c.d = {2, 2, 1, 1};
      break;
    case 'G':
      if (n != 2) throw DomainError("type G rank must be 2");
      c.a[0][1] = -3;
      c.a[1][0] = -1;
      c.d = {1, 3};
      break;
    default:
      throw DomainError(std::string("unknown type family '") + family + "'");
  }
  return c;
}

void close_positive_roots(RootSystem& rs) {
  std::set<Root> seen;
  std::queue<Root> todo;
  for (int i = 0; i < rs.rank; ++i) {
    Root s = rs.simple(i);
    seen.insert(s);
    todo.push(s);
  }
  while (!todo.empty()) {
    Root r = todo.front();
    todo.pop();
    for (int i = 0; i < rs.rank; ++i) {
      Root t = rs.reflect(r, i);
      if (seen.insert(t).second) todo.push(t);
    }
  }
  for (const Root& r : seen) {
    bool pos = false, neg = false;
    for (int v : r) {
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) throw MathFault("root closure produced a mixed-sign vector");
    if (pos) rs.pos_roots.push_back(r);
  }
  std::sort(rs.pos_roots.begin(), rs.pos_roots.end(), root_order);
  for (std::size_t k = 0; k < rs.pos_roots.size(); ++k)
    rs.pos_index[rs.pos_roots[k]] = static_cast<int>(k);
}

}  // namespace

long RootSystem::bilin(const Root& x, const Root& y) const {
  long acc = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      acc += static_cast<long>(x[i]) * y[j] * d[i] * a[i][j];
  }
  return acc;
}

mpq_class RootSystem::bilin(const std::vector<mpq_class>& x,
                            const std::vector<mpq_class>& y) const {
  mpq_class acc(0);
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      acc += x[i] * y[j] * mpq_class(d[i] * a[i][j]);
  }
  return acc;
}

long RootSystem::pairing(const Root& mu, int i) const {
  long acc = 0;
  for (int j = 0; j < rank; ++j) acc += static_cast<long>(a[i][j]) * mu[j];
  return acc;
}

Root RootSystem::reflect(const Root& r, int i) const {
  Root t = r;
  t[i] -= static_cast<int>(pairing(r, i));
  return t;
}

int RootSystem::height(const Root& r) const {
  int h = 0;
  for (int v : r) h += v;
  return h;
}

Root RootSystem::simple(int i) const {
  if (i < 0 || i >= rank) throw DomainError("simple root index out of range");
  Root r(rank, 0);
  r[i] = 1;
  return r;
}

Root RootSystem::highest_root() const {
  if (comp_nodes.size() != 1)
    throw DomainError("highest_root requires an irreducible system");
  return pos_roots.back();
}

std::vector<mpq_class> RootSystem::rho() const {
  std::vector<mpq_class> r(rank, mpq_class(0));
  for (const Root& p : pos_roots)
    for (int i = 0; i < rank; ++i) r[i] += p[i];
  for (auto& v : r) v /= 2;
  return r;
}

mpq_class RootSystem::casimir_scalar(const Root& lambda) const {
  std::vector<mpq_class> l(lambda.begin(), lambda.end());
  std::vector<mpq_class> shifted = rho();
  for (int i = 0; i < rank; ++i) shifted[i] = l[i] + 2 * shifted[i];
  return bilin(l, shifted);
}

RootSystem build_from_cartan(std::vector<std::vector<int>> a, std::vector<int> d,
                             std::string label) {
  RootSystem rs;
  rs.label = std::move(label);
  rs.rank = static_cast<int>(a.size());
  rs.a = std::move(a);
  rs.d = std::move(d);
  for (int i = 0; i < rs.rank; ++i) {
    if (rs.a[i][i] != 2) throw DomainError("Cartan diagonal must be 2");
    for (int j = 0; j < rs.rank; ++j)
      if (rs.d[i] * rs.a[i][j] != rs.d[j] * rs.a[j][i])
        throw DomainError("Cartan data is not symmetrizable");
  }
  // Connected components of the diagram, smallest node first.
  std::vector<int> comp(rs.rank, -1);
  int nc = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (comp[i] >= 0) continue;
    std::queue<int> bfs;
    bfs.push(i);
    comp[i] = nc;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v = 0; v < rs.rank; ++v)
        if (v != u && rs.a[u][v] != 0 && comp[v] < 0) {
          comp[v] = nc;
          bfs.push(v);
        }
    }
    ++nc;
  }
  rs.comp_nodes.assign(nc, {});
  for (int i = 0; i < rs.rank; ++i) rs.comp_nodes[comp[i]].push_back(i);
  rs.comp_types.assign(nc, "");
  close_positive_roots(rs);
  return rs;
}

RootSystem build_root_system(const std::string& type_spec) {
  std::vector<ComponentData> parts;
  std::size_t pos = 0;
  while (pos <= type_spec.size()) {
    std::size_t end = type_spec.find('+', pos);
    std::string tok = type_spec.substr(
        pos, end == std::string::npos ? std::string::npos : end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.pop_back();
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw DomainError("bad type spec '" + type_spec + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    for (std::size_t k = 1; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k])))
        throw DomainError("bad type spec '" + type_spec + "'");
    parts.push_back(component_tables(fam, std::stoi(tok.substr(1))));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  int rank = 0;
  for (const auto& p : parts) rank += static_cast<int>(p.a.size());
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  std::vector<int> d(rank, 1);
  int off = 0;
  for (const auto& p : parts) {
    int n = static_cast<int>(p.a.size());
    for (int i = 0; i < n; ++i) {
      d[off + i] = p.d[i];
      for (int j = 0; j < n; ++j) a[off + i][off + j] = p.a[i][j];
    }
    off += n;
  }
  RootSystem rs = build_from_cartan(std::move(a), std::move(d), type_spec);
  // Components of a well-formed spec are in node order already.
  for (std::size_t c = 0; c < parts.size() && c < rs.comp_types.size(); ++c)
    rs.comp_types[c] = parts[c].type;
  return rs;
}

/* ---------- Weyl elements ---------- */

Weyl weyl_identity(const RootSystem& rs) {
  Weyl w;
  w.m.assign(rs.rank, std::vector<int>(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i) w.m[i][i] = 1;
  return w;
}

Weyl weyl_simple(const RootSystem& rs, int i) {
  Weyl w = weyl_identity(rs);
  for (int j = 0; j < rs.rank; ++j) w.m[i][j] -= rs.a[i][j];
  return w;
}

Weyl weyl_mul(const Weyl& x, const Weyl& y) {
  int n = static_cast<int>(x.m.size());
  Weyl r;
  r.m.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x.m[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) r.m[i][j] += x.m[i][k] * y.m[k][j];
    }
  return r;
}

Root weyl_apply(const Weyl& w, const Root& r) {
  int n = static_cast<int>(w.m.size());
  Root out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (r[j] == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += w.m[i][j] * r[j];
  }
  return out;
}

Weyl weyl_from_word(const RootSystem& rs, const Word& w) {
  Weyl acc = weyl_identity(rs);
  for (int i : w) {
    if (i < 0 || i >= rs.rank) throw DomainError("word letter out of range");
    acc = weyl_mul(acc, weyl_simple(rs, i));
  }
  return acc;
}

namespace {

/* Sign of w(alpha_i): +1 if positive, -1 if negative. */
int column_sign(const Weyl& w, int i) {
  for (const auto& row : w.m)
    if (row[i] != 0) return row[i] > 0 ? 1 : -1;
  throw MathFault("Weyl matrix has a zero column");
}

}  // namespace

Word reduced_word(const RootSystem& rs, Weyl w) {
  Word out;
  const Weyl id = weyl_identity(rs);
  while (!(w == id)) {
    int found = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (column_sign(w, i) < 0) {
        found = i;
        break;
      }
    if (found < 0) throw MathFault("non-identity Weyl element without descent");
    w = weyl_mul(std::move(w), weyl_simple(rs, found));
    out.push_back(found);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int weyl_length(const RootSystem& rs, const Weyl& w) {
  int n = 0;
  for (const Root& r : rs.pos_roots) {
    Root img = weyl_apply(w, r);
    bool neg = false;
    for (int v : img)
      if (v < 0) neg = true;
    if (neg) ++n;
  }
  return n;
}

Weyl weyl_inverse(const RootSystem& rs, const Weyl& w) {
  Word rw = reduced_word(rs, w);
  std::reverse(rw.begin(), rw.end());
  return weyl_from_word(rs, rw);
}

Word longest_word(const RootSystem& rs, const std::vector<int>& S) {
  std::set<int> sset(S.begin(), S.end());
  if (sset.size() != S.size()) throw DomainError("subset has repeated entries");
  for (int i : S)
    if (i < 0 || i >= rs.rank) throw DomainError("subset index out of range");
  Weyl v = weyl_identity(rs);
  Word out;
  for (;;) {
    int pick = -1;
    for (int i : sset)
      if (column_sign(v, i) > 0) {
        pick = i;
        break;
      }
    if (pick < 0) return out;
    v = weyl_mul(std::move(v), weyl_simple(rs, pick));
    out.push_back(pick);
  }
}

std::pair<Word, Word> parabolic_factorization(const RootSystem& rs,
                                              const std::vector<int>& S) {
  Word u = longest_word(rs, S);
  std::vector<int> all(rs.rank);
  for (int i = 0; i < rs.rank; ++i) all[i] = i;
  Word w0 = longest_word(rs, all);
  // w^S = w_{0,S}^{-1} w_0; the longest parabolic element is an involution.
  Weyl ws = weyl_mul(weyl_from_word(rs, u), weyl_from_word(rs, w0));
  return {u, reduced_word(rs, ws)};
}

std::vector<Root> root_enumeration(const RootSystem& rs, const Word& word) {
  if (weyl_length(rs, weyl_from_word(rs, word)) !=
      static_cast<int>(word.size()))
    throw DomainError("root_enumeration: word is not reduced");
  std::vector<Root> betas;
  Weyl w = weyl_identity(rs);
  for (int i : word) {
    betas.push_back(weyl_apply(w, rs.simple(i)));
    w = weyl_mul(std::move(w), weyl_simple(rs, i));
  }
  return betas;
}

bool convexity_holds(const RootSystem& rs, const std::vector<Root>& betas) {
  std::map<Root, std::size_t> where;
  for (std::size_t k = 0; k < betas.size(); ++k) where[betas[k]] = k;
  for (std::size_t i = 0; i < betas.size(); ++i)
    for (std::size_t j = i + 1; j < betas.size(); ++j) {
      Root sum = betas[i];
      for (int t = 0; t < rs.rank; ++t) sum[t] += betas[j][t];
      auto it = where.find(sum);
      if (it != where.end() && !(i < it->second && it->second < j)) return false;
    }
  return true;
}

std::vector<FlagLayer> nilradical_decomposition(const RootSystem& rs,
                                                const Word& order) {
  std::vector<bool> seen(rs.rank, false);
  if (static_cast<int>(order.size()) != rs.rank)
    throw DomainError("decomposition order must list every simple root");
  for (int i : order) {
    if (i < 0 || i >= rs.rank || seen[i])
      throw DomainError("decomposition order must be a permutation");
    seen[i] = true;
  }
  std::vector<FlagLayer> layers;
  std::vector<bool> head(rs.rank, false);
  std::vector<int> levi;
  for (int k = 0; k < rs.rank; ++k) {
    int node = order[k];
    FlagLayer layer;
    layer.node = node;
    layer.levi = levi;
    head[node] = true;
    for (const Root& r : rs.pos_roots) {
      bool supported = true;
      for (int i = 0; i < rs.rank; ++i)
        if (r[i] != 0 && !head[i]) supported = false;
      if (!supported || r[node] == 0) continue;
      std::size_t deg = static_cast<std::size_t>(r[node]);
      if (layer.by_degree.size() < deg) layer.by_degree.resize(deg);
      layer.by_degree[deg - 1].push_back(r);
      layer.all.push_back(r);
    }
    for (const auto& piece : layer.by_degree)
      if (piece.empty())
        throw MathFault("flag decomposition produced an empty graded piece");
    layers.push_back(std::move(layer));
    levi.push_back(node);
  }
  return layers;
}

mpz_class kostant_partition(const std::vector<Root>& positive, const Root& beta) {
  for (int v : beta)
    if (v < 0) return 0;
  // Depth-first over root multiplicities, smallest index first.
  struct Rec {
    const std::vector<Root>& roots;
    std::map<std::pair<std::size_t, Root>, mpz_class> memo;
    mpz_class count(std::size_t idx, const Root& rem) {
      bool zero = true;
      for (int v : rem)
        if (v != 0) zero = false;
      if (zero) return 1;
      if (idx == roots.size()) return 0;
      auto key = std::make_pair(idx, rem);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      mpz_class total = count(idx + 1, rem);
      Root r = rem;
      for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < r.size(); ++i) {
          r[i] -= roots[idx][i];
          if (r[i] < 0) ok = false;
        }
        if (!ok) break;
        total += count(idx + 1, r);
      }
      memo.emplace(key, total);
      return total;
    }
  } rec{positive, {}};
  return rec.count(0, beta);
}

mpz_class kostant_partition(const RootSystem& rs, const Root& beta) {
  return kostant_partition(rs.pos_roots, beta);
}

/* ---------- subdiagram classification ---------- */

namespace {

struct Graph {
  std::vector<int> nodes;
  std::map<int, std::vector<int>> adj;  // within the component, sorted
};

std::vector<int> branch_from(const Graph& g, int start, int from) {
  /* Walk away from `from` starting at `start` until a leaf; the component
     is a tree, so the walk is unique once the previous node is excluded. */
  std::vector<int> out;
  int prev = from, cur = start;
  for (;;) {
    out.push_back(cur);
    int next = -1;
    for (int v : g.adj.at(cur))
      if (v != prev) next = v;
    if (next < 0) return out;
    prev = cur;
    cur = next;
  }
}

}  // namespace

std::vector<Subdiagram> classify_subdiagram(const RootSystem& rs,
                                            const std::vector<int>& S) {
  std::set<int> sset(S.begin(), S.end());
  std::vector<Subdiagram> out;
  std::set<int> done;
  for (int s0 : sset) {
    if (done.count(s0)) continue;
    Graph g;
    std::queue<int> bfs;
    bfs.push(s0);
    done.insert(s0);
    std::set<int> comp{s0};
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v : sset)
        if (v != u && rs.a[u][v] != 0 && !comp.count(v)) {
          comp.insert(v);
          done.insert(v);
          bfs.push(v);
        }
    }
    g.nodes.assign(comp.begin(), comp.end());
    for (int u : g.nodes)
      for (int v : g.nodes)
        if (u != v && rs.a[u][v] != 0) g.adj[u].push_back(v);
    int n = static_cast<int>(g.nodes.size());
    Subdiagram sd;
    if (n == 1) {
      sd.type = "A1";
      sd.nodes = g.nodes;
      out.push_back(std::move(sd));
      continue;
    }
    int max_bond = 0;
    for (int u : g.nodes)
      for (int v : g.adj[u])
        max_bond = std::max(max_bond, rs.a[u][v] * rs.a[v][u]);
    int max_deg = 0;
    for (int u : g.nodes)
      max_deg = std::max(max_deg, static_cast<int>(g.adj[u].size()));

    if (max_bond == 3) {
      if (n != 2) throw MathFault("G2-bond in a larger subdiagram");
      sd.type = "G2";
      // G2 numbering puts the short root first.
      int u = g.nodes[0], v = g.nodes[1];
      if (rs.d[u] > rs.d[v]) std::swap(u, v);
      sd.nodes = {u, v};
    } else if (max_bond == 2) {
      if (max_deg > 2) throw MathFault("unsupported branched non-simply-laced subdiagram");
      // A path: find its ends.
      std::vector<int> ends;
      for (int u : g.nodes)
        if (g.adj[u].size() == 1) ends.push_back(u);
      std::vector<int> path = branch_from(g, ends[0], -1);
      int dmin = rs.d[path[0]];
      for (int u : path) dmin = std::min(dmin, rs.d[u]);
      int shorts = 0;
      for (int u : path)
        if (rs.d[u] == dmin) ++shorts;
      if (n == 2) {
        sd.type = "B2";
        if (rs.d[path[0]] < rs.d[path[1]]) std::reverse(path.begin(), path.end());
      } else if (shorts == 2 && n == 4) {
        sd.type = "F4";
        if (rs.d[path[0]] == dmin) std::reverse(path.begin(), path.end());
      } else if (shorts == 1) {
        sd.type = "B" + std::to_string(n);
        if (rs.d[path[0]] == dmin) std::reverse(path.begin(), path.end());
      } else if (shorts == n - 1) {
        sd.type = "C" + std::to_string(n);
        if (rs.d[path[0]] != dmin) std::reverse(path.begin(), path.end());
      } else {
        throw MathFault("unsupported non-simply-laced subdiagram");
      }
      sd.nodes = path;
    } else if (max_deg <= 2) {
      sd.type = "A" + std::to_string(n);
      std::vector<int> ends;
      for (int u : g.nodes)
        if (g.adj[u].size() == 1) ends.push_back(u);
      int start = std::min(ends[0], ends[1]);
      sd.nodes = branch_from(g, start, -1);
    } else {
      // Simply laced with one branch node.
      int b = -1;
      for (int u : g.nodes)
        if (g.adj[u].size() == 3) {
          if (b >= 0) throw MathFault("subdiagram with two branch nodes");
          b = u;
        }
      std::vector<std::vector<int>> branches;
      for (int v : g.adj[b]) branches.push_back(branch_from(g, v, b));
      std::sort(branches.begin(), branches.end(),
                [](const std::vector<int>& x, const std::vector<int>& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x.front() < y.front();
                });
      std::size_t l1 = branches[0].size(), l2 = branches[1].size(),
                  l3 = branches[2].size();
      if (l1 == 1 && l2 == 1) {
        sd.type = "D" + std::to_string(n);
        // Long tail first (far end inward), then the branch node, then the
        // two leaves in ambient order.  For D4 the "tail" is the branch
        // whose leaf has the smallest ambient index.
        std::vector<int> tail = branches[2];
        std::vector<int> leaves = {branches[0][0], branches[1][0]};
        if (l3 == 1) {
          std::vector<int> all = {branches[0][0], branches[1][0], branches[2][0]};
          std::sort(all.begin(), all.end());
          tail = {all[0]};
          leaves = {all[1], all[2]};
        }
        std::reverse(tail.begin(), tail.end());
        sd.nodes = tail;
        sd.nodes.push_back(b);
        std::sort(leaves.begin(), leaves.end());
        sd.nodes.insert(sd.nodes.end(), leaves.begin(), leaves.end());
      } else if (l1 == 1 && l2 == 2 && l3 >= 2 && l3 <= 4) {
        sd.type = "E" + std::to_string(n);
        std::vector<int> two = branches[1], rest = branches[2];
        if (l3 == 2 && rest.back() < two.back()) std::swap(two, rest);
        // Positions: far end of `two` is node 1, branch node is 3, `rest`
        // runs 4..n-1 outward, the single leaf is node n.
        sd.nodes = {two[1], two[0], b};
        sd.nodes.insert(sd.nodes.end(), rest.begin(), rest.end());
        sd.nodes.push_back(branches[0][0]);
      } else {
        throw MathFault("unsupported simply-laced subdiagram shape");
      }
    }
    out.push_back(std::move(sd));
  }
  std::sort(out.begin(), out.end(), [](const Subdiagram& x, const Subdiagram& y) {
    return *std::min_element(x.nodes.begin(), x.nodes.end()) <
           *std::min_element(y.nodes.begin(), y.nodes.end());
  });
  return out;
}

namespace {

std::optional<Root> piece_extreme(const RootSystem& rs,
                                  const std::vector<Root>& piece,
                                  const std::vector<int>& S, int dir) {
  std::optional<Root> found;
  for (const Root& r : piece) {
    bool extreme = true;
    for (int j : S) {
      Root t = r;
      t[j] += dir;
      bool zero = true;
      for (int v : t)
        if (v != 0) zero = false;
      if (!zero && rs.pos_index.count(t)) {
        extreme = false;
        break;
      }
    }
    if (extreme) {
      if (found) return std::nullopt;  // not unique
      found = r;
    }
  }
  return found;
}

}  // namespace

std::optional<Root> piece_highest(const RootSystem& rs,
                                  const std::vector<Root>& piece,
                                  const std::vector<int>& S) {
  return piece_extreme(rs, piece, S, +1);
}

std::optional<Root> piece_lowest(const RootSystem& rs,
                                 const std::vector<Root>& piece,
                                 const std::vector<int>& S) {
  return piece_extreme(rs, piece, S, -1);
}

std::string root_str(const Root& r) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!first) os << (r[i] > 0 ? "+" : "");
    if (r[i] == -1)
      os << "-";
    else if (r[i] != 1)
      os << r[i];
    os << "a" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qlie
