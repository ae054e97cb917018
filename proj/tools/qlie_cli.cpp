/*
  This is qlie_cli.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.
*/

/*
  Command-line front end.  Every subcommand parses its flags into a
  RunConfig, checks that the config survives a serialization round trip,
  and delegates to the library.  Results go to stdout, diagnostics to
  stderr.  Exit codes: 0 success or pass, 1 check failure (the witness
  is printed), 2 usage error.
*/

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlie/quant.hpp"
#include "qlie/rep.hpp"
#include "qlie/rmx.hpp"
#include "qlie/selftest.hpp"

using json = nlohmann::json;
using namespace qlie;

namespace {

const char* kSchemaVersion = "1";

/* Everything a subcommand needs, in surface form: nodes and word letters
   are 1-based, weights are plain coordinate tuples. */
struct RunConfig {
  std::string command, type;
  std::vector<int> word, order, levi, ambient, content, l1, l3, wa, wb;
  bool twisted = false;
  int cutoff = 1, i = 0, j = 0, jobs = 1;
  std::string expr, elements, left, right, factors;
  std::string normalization = "canonical";
  std::string format = "text";
  bool operator==(const RunConfig&) const = default;
};

json cfg_to_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["type"] = c.type;
  j["word"] = c.word;
  j["order"] = c.order;
  j["levi"] = c.levi;
  j["ambient"] = c.ambient;
  j["content"] = c.content;
  j["l1"] = c.l1;
  j["l3"] = c.l3;
  j["a"] = c.wa;
  j["b"] = c.wb;
  j["twisted"] = c.twisted;
  j["cutoff"] = c.cutoff;
  j["i"] = c.i;
  j["j"] = c.j;
  j["jobs"] = c.jobs;
  j["expr"] = c.expr;
  j["elements"] = c.elements;
  j["left"] = c.left;
  j["right"] = c.right;
  j["factors"] = c.factors;
  j["normalization"] = c.normalization;
  j["format"] = c.format;
  return j;
}

RunConfig cfg_from_json(const json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.type = j.at("type").get<std::string>();
  c.word = j.at("word").get<std::vector<int>>();
  c.order = j.at("order").get<std::vector<int>>();
  c.levi = j.at("levi").get<std::vector<int>>();
  c.ambient = j.at("ambient").get<std::vector<int>>();
  c.content = j.at("content").get<std::vector<int>>();
  c.l1 = j.at("l1").get<std::vector<int>>();
  c.l3 = j.at("l3").get<std::vector<int>>();
  c.wa = j.at("a").get<std::vector<int>>();
  c.wb = j.at("b").get<std::vector<int>>();
  c.twisted = j.at("twisted").get<bool>();
  c.cutoff = j.at("cutoff").get<int>();
  c.i = j.at("i").get<int>();
  c.j = j.at("j").get<int>();
  c.jobs = j.at("jobs").get<int>();
  c.expr = j.at("expr").get<std::string>();
  c.elements = j.at("elements").get<std::string>();
  c.left = j.at("left").get<std::string>();
  c.right = j.at("right").get<std::string>();
  c.factors = j.at("factors").get<std::string>();
  c.normalization = j.at("normalization").get<std::string>();
  c.format = j.at("format").get<std::string>();
  return c;
}

void check_roundtrip(const RunConfig& c) {
  if (cfg_from_json(cfg_to_json(c)) != c)
    throw MathFault("run configuration does not survive serialization");
}

json base_json(const RunConfig& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = cfg_to_json(c);
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

/* 1-based surface letters to 0-based internal ones. */
Word to_word(const std::vector<int>& v, int rank, const char* what) {
  Word w;
  for (int x : v) {
    if (x < 1 || x > rank)
      throw DomainError(std::string(what) + ": node " + std::to_string(x) +
                        " out of range");
    w.push_back(x - 1);
  }
  return w;
}

std::vector<int> from_word(const Word& w) {
  std::vector<int> v;
  for (int x : w) v.push_back(x + 1);
  return v;
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k] + 1);
  }
  return s;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k]);
  }
  return s + ")";
}

json mpz_json(const mpz_class& n) {
  if (n.fits_slong_p()) return static_cast<long>(n.get_si());
  return n.get_str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw DomainError("empty entry in an element list");
    out.push_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ';')
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

UqElement mono_element(const Mono& m) {
  UqElement x;
  x.emplace(m, QScalar::one());
  return x;
}

/* ---------- subcommands ---------- */

int cmd_roots(const RunConfig& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  if (cfg.word.empty()) {
    if (cfg.format == "json") {
      json j = base_json(cfg);
      j["count"] = rs.pos_roots.size();
      j["roots"] = json::array();
      for (const Root& r : rs.pos_roots) j["roots"].push_back(root_str(r));
      emit(j);
    } else {
      std::cout << rs.pos_roots.size() << " positive roots\n";
      for (const Root& r : rs.pos_roots) std::cout << root_str(r) << "\n";
    }
    return 0;
  }
  std::vector<Root> betas =
      root_enumeration(rs, to_word(cfg.word, rs.rank, "--word"));
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["roots"] = json::array();
    for (const Root& r : betas) j["roots"].push_back(root_str(r));
    emit(j);
  } else {
    for (std::size_t k = 0; k < betas.size(); ++k)
      std::cout << "b" << k + 1 << ": " << root_str(betas[k]) << "\n";
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  std::vector<Root> betas =
      root_enumeration(rs, to_word(cfg.word, rs.rank, "--word"));
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["roots"] = json::array();
    for (const Root& r : betas) j["roots"].push_back(root_str(r));
    emit(j);
  } else {
    for (std::size_t k = 0; k < betas.size(); ++k)
      std::cout << "b" << k + 1 << ": " << root_str(betas[k]) << "\n";
  }
  return 0;
}

int cmd_factorize(const RunConfig& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  std::vector<int> S = to_word(cfg.levi, rs.rank, "--levi");
  auto [w0s, ws] = parabolic_factorization(rs, S);
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["w0S"] = from_word(w0s);
    j["wS"] = from_word(ws);
    emit(j);
  } else {
    std::cout << "w_0S: " << word_str(w0s) << "\n";
    std::cout << "w^S:  " << word_str(ws) << "\n";
  }
  return 0;
}

int cmd_qcomm(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  PbwBasis pb = pbw_basis(g, to_word(cfg.word, g.rs().rank, "--word"));
  int n = static_cast<int>(pb.betas.size());
  if (cfg.i < 1 || cfg.j <= cfg.i || cfg.j > n)
    throw DomainError("qcomm: need 1 <= i < j <= " + std::to_string(n));
  UqElement c = q_commutator(g, (*pb.e_vectors)[cfg.i - 1],
                             (*pb.e_vectors)[cfg.j - 1]);
  std::string s = pbw_str(g, pb, pbw_expand(g, pb, c));
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["lhs"] = {root_str(pb.betas[cfg.i - 1]), root_str(pb.betas[cfg.j - 1])};
    j["result"] = s;
    emit(j);
  } else {
    std::cout << s << "\n";
  }
  return 0;
}

int cmd_pbw(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  PbwBasis pb = pbw_basis(g, to_word(cfg.word, g.rs().rank, "--word"));
  if (cfg.expr.empty() == cfg.content.empty())
    throw DomainError("pbw: give exactly one of --expr and --content");
  if (!cfg.expr.empty()) {
    UqElement x = element_parse(g, cfg.expr, &pb);
    std::string s = pbw_str(g, pb, pbw_expand(g, pb, x));
    if (cfg.format == "json") {
      json j = base_json(cfg);
      j["result"] = s;
      emit(j);
    } else {
      std::cout << s << "\n";
    }
    return 0;
  }
  if (cfg.content.size() != static_cast<std::size_t>(g.rs().rank))
    throw DomainError("pbw: --content needs one coefficient per node");
  Root b(cfg.content.begin(), cfg.content.end());
  std::vector<std::vector<int>> exps = pbw_exponents(pb, b);
  std::vector<std::string> names;
  for (const std::vector<int>& m : exps)
    names.push_back(pbw_str(g, pb, {{m, QScalar::one()}}));
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["count"] = exps.size();
    j["monomials"] = names;
    emit(j);
  } else {
    std::cout << exps.size() << " monomials\n";
    for (const std::string& s : names) std::cout << s << "\n";
  }
  return 0;
}

int cmd_braiding(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  QuasiR qr(g, to_word(cfg.levi, g.rs().rank, "--levi"));
  PbwBasis pb;
  const PbwBasis* pbp = nullptr;
  if (!cfg.word.empty()) {
    pb = pbw_basis(g, to_word(cfg.word, g.rs().rank, "--word"));
    pbp = &pb;
  }
  UqElement l = element_parse(g, cfg.left, pbp);
  UqElement r = element_parse(g, cfg.right, pbp);
  std::string s = tensor2_str(g, braiding(qr, t2_outer(l, r)));
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["result"] = s;
    emit(j);
  } else {
    std::cout << s << "\n";
  }
  return 0;
}

int cmd_shuffle(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  QuasiR qr(g, to_word(cfg.levi, g.rs().rank, "--levi"));
  PbwBasis pb;
  const PbwBasis* pbp = nullptr;
  if (!cfg.word.empty()) {
    pb = pbw_basis(g, to_word(cfg.word, g.rs().rank, "--word"));
    pbp = &pb;
  }
  std::vector<UqElement> xs;
  for (const std::string& piece : split_list(cfg.factors))
    xs.push_back(element_parse(g, piece, pbp));
  std::string s = tensor2_str(g, shuffle_product(qr, xs));
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["result"] = s;
    emit(j);
  } else {
    std::cout << s << "\n";
  }
  return 0;
}

int cmd_quantize(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  Quantization qz =
      quantize(g, to_word(cfg.order, g.rs().rank, "--order"), cfg.normalization);
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["adapted"] = from_word(qz.adapted);
    j["layers"] = json::array();
    for (std::size_t k = 0; k < qz.modules.size(); ++k) {
      json layer;
      layer["node"] = qz.layers[k].node + 1;
      layer["components"] = json::array();
      for (const AdjointModule& m : qz.modules[k]) {
        json comp;
        comp["degree"] = m.degree;
        comp["dim"] = m.basis.size();
        comp["norm_scalar"] = m.norm_scalar.str();
        comp["basis"] = json::array();
        comp["weights"] = json::array();
        for (const UqElement& v : m.basis)
          comp["basis"].push_back(element_str(g, v));
        for (const Root& r : m.weights)
          comp["weights"].push_back(root_str(r));
        layer["components"].push_back(comp);
      }
      j["layers"].push_back(layer);
    }
    j["certificate"] = qz.certificate;
    emit(j);
  } else {
    std::cout << "adapted word: " << word_str(qz.adapted) << "\n";
    for (std::size_t k = 0; k < qz.modules.size(); ++k) {
      std::cout << "layer " << k + 1 << " (node " << qz.layers[k].node + 1
                << "):\n";
      for (const AdjointModule& m : qz.modules[k]) {
        std::cout << "  degree " << m.degree << ": dim " << m.basis.size()
                  << "\n";
        for (const UqElement& v : m.basis)
          std::cout << "    " << element_str(g, v) << "\n";
      }
    }
    for (const std::string& line : qz.certificate)
      std::cout << "certificate: " << line << "\n";
  }
  return 0;
}

void print_witness(const UqAlgebra& g, const CoidealWitness& w,
                   const std::string& where) {
  std::cout << "not a coideal (" << where << ")\n";
  std::cout << "  vector:     " << element_str(g, w.vec) << "\n";
  std::cout << "  right leg:  " << element_str(g, w.right) << " (left "
            << element_str(g, mono_element(w.left)) << ")\n";
}

json witness_json(const UqAlgebra& g, const CoidealWitness& w) {
  json j;
  j["vector"] = element_str(g, w.vec);
  j["left"] = element_str(g, mono_element(w.left));
  j["right"] = element_str(g, w.right);
  return j;
}

int cmd_coideal_check(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  if (cfg.order.empty() == cfg.elements.empty())
    throw DomainError("coideal-check: give exactly one of --order and --elements");

  if (!cfg.elements.empty()) {
    PbwBasis pb;
    const PbwBasis* pbp = nullptr;
    if (!cfg.word.empty()) {
      pb = pbw_basis(g, to_word(cfg.word, g.rs().rank, "--word"));
      pbp = &pb;
    }
    std::vector<UqElement> basis;
    for (const std::string& piece : split_list(cfg.elements))
      basis.push_back(element_parse(g, piece, pbp));
    std::optional<CoidealWitness> w = coideal_check(g, basis);
    if (cfg.format == "json") {
      json j = base_json(cfg);
      j["pass"] = !w.has_value();
      if (w) j["witness"] = witness_json(g, *w);
      emit(j);
    } else if (w) {
      print_witness(g, *w, "given elements");
    } else {
      std::cout << "coideal\n";
    }
    return w ? 1 : 0;
  }

  Quantization qz = quantize(g, to_word(cfg.order, g.rs().rank, "--order"));
  bool pass = true;
  json layers = json::array();
  std::vector<UqElement> all;
  for (std::size_t k = 0; k < qz.modules.size(); ++k) {
    std::vector<UqElement> layer;
    for (const AdjointModule& m : qz.modules[k])
      for (const UqElement& v : m.basis) layer.push_back(v);
    all.insert(all.end(), layer.begin(), layer.end());
    std::optional<CoidealWitness> w = coideal_check(g, layer);
    std::string where = "layer " + std::to_string(k + 1);
    if (cfg.format == "json") {
      json jl;
      jl["layer"] = k + 1;
      jl["pass"] = !w.has_value();
      if (w) jl["witness"] = witness_json(g, *w);
      layers.push_back(jl);
    } else if (w) {
      print_witness(g, *w, where);
    } else {
      std::cout << where << ": coideal\n";
    }
    if (w) pass = false;
  }
  std::optional<CoidealWitness> w = coideal_check(g, all);
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["layers"] = layers;
    j["union"] = json::object();
    j["union"]["pass"] = !w.has_value();
    if (w) j["union"]["witness"] = witness_json(g, *w);
    j["pass"] = pass && !w;
    emit(j);
  } else if (w) {
    print_witness(g, *w, "union");
  } else {
    std::cout << "union: coideal\n";
  }
  if (w) pass = false;
  return pass ? 0 : 1;
}

int cmd_schubert(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  std::vector<int> levi = to_word(cfg.levi, g.rs().rank, "--levi");
  SchubertCell cell =
      cfg.ambient.empty()
          ? schubert_cell(g, levi, cfg.twisted, cfg.cutoff)
          : schubert_cell(g, levi, to_word(cfg.ambient, g.rs().rank, "--ambient"),
                          cfg.twisted, cfg.cutoff);
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["word"] = from_word(cell.word);
    j["roots"] = json::array();
    for (const Root& r : cell.roots) j["roots"].push_back(root_str(r));
    j["heights"] = json::array();
    for (std::size_t d = 0; d < cell.bases.size(); ++d) {
      json h;
      h["height"] = d + 1;
      h["dim"] = cell.bases[d].size();
      h["basis"] = json::array();
      for (const UqElement& v : cell.bases[d])
        h["basis"].push_back(element_str(g, v));
      j["heights"].push_back(h);
    }
    emit(j);
  } else {
    std::cout << "word: " << word_str(cell.word) << "\n";
    std::cout << "roots:";
    for (const Root& r : cell.roots) std::cout << " " << root_str(r);
    std::cout << "\n";
    for (std::size_t d = 0; d < cell.bases.size(); ++d)
      std::cout << "height " << d + 1 << ": dim " << cell.bases[d].size()
                << "\n";
  }
  return 0;
}

int cmd_tangent(const RunConfig& cfg) {
  UqAlgebra g(build_root_system(cfg.type));
  Quantization qz = quantize(g, to_word(cfg.order, g.rs().rank, "--order"));
  TangentSpaces t = tangent_spaces(g, qz);
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["fodc_dims"] = t.fodc_dims;
    j["t_minus"] = json::array();
    j["t_plus"] = json::array();
    for (const UqElement& v : t.t_minus)
      j["t_minus"].push_back(element_str(g, v));
    for (const UqElement& v : t.t_plus)
      j["t_plus"].push_back(element_str(g, v));
    emit(j);
  } else {
    std::cout << "calculus dims:";
    for (std::size_t d : t.fodc_dims) std::cout << " " << d;
    std::cout << "\n";
    for (const UqElement& v : t.t_minus)
      std::cout << "T_-: " << element_str(g, v) << "\n";
  }
  return 0;
}

int cmd_tensor_mult(const RunConfig& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  bool pair_mode = !cfg.wa.empty() || !cfg.wb.empty();
  bool cube_mode = !cfg.l1.empty() || !cfg.l3.empty();
  if (pair_mode == cube_mode)
    throw DomainError("tensor-mult: give either --a and --b, or --l1 and --l3");
  if (pair_mode) {
    Weight a(cfg.wa.begin(), cfg.wa.end());
    Weight b(cfg.wb.begin(), cfg.wb.end());
    std::map<Weight, mpz_class> dec = tensor_decompose(rs, a, b);
    if (cfg.format == "json") {
      json j = base_json(cfg);
      j["decomposition"] = json::array();
      for (const auto& [w, m] : dec) {
        json e;
        e["weight"] = w;
        e["multiplicity"] = mpz_json(m);
        j["decomposition"].push_back(e);
      }
      emit(j);
    } else {
      for (const auto& [w, m] : dec)
        std::cout << weight_str(w) << ": " << m.get_str() << "\n";
    }
    return 0;
  }
  Weight l1(cfg.l1.begin(), cfg.l1.end());
  Weight l3(cfg.l3.begin(), cfg.l3.end());
  mpz_class m = cube_multiplicity(rs, l1, l3);
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["multiplicity"] = mpz_json(m);
    emit(j);
  } else {
    std::cout << m.get_str() << "\n";
  }
  return 0;
}

std::string comp_types(const TableRow& r) {
  std::string s;
  for (const TableComponent& c : r.components) {
    if (!s.empty()) s += '+';
    s += c.type;
  }
  return s.empty() ? "-" : s;
}

std::string comp_weights(const TableRow& r, bool first) {
  std::string s;
  for (const TableComponent& c : r.components) {
    if (!s.empty()) s += '+';
    s += weight_str(first ? c.lambda1 : c.lambda3);
  }
  return s.empty() ? "-" : s;
}

json row_json(const TableRow& r) {
  json j;
  j["ambient"] = r.ambient;
  j["node"] = r.node + 1;
  j["printed"] = r.printed;
  j["components"] = json::array();
  for (const TableComponent& c : r.components) {
    json cj;
    cj["type"] = c.type;
    cj["nodes"] = json::array();
    for (int n : c.nodes) cj["nodes"].push_back(n + 1);
    cj["lambda1"] = c.lambda1;
    cj["lambda3"] = c.lambda3;
    j["components"].push_back(cj);
  }
  j["lambda1_root"] = root_str(r.lambda1_root);
  j["lambda3_root"] = root_str(r.lambda3_root);
  j["multiplicity"] = mpz_json(r.multiplicity);
  j["status"] = r.status;
  return j;
}

int cmd_appendix(const RunConfig& cfg) {
  std::vector<TableRow> rows = appendix_table(cfg.jobs);
  const TableRow& control = rows.back();
  bool pass = control.status == "not applicable";
  for (std::size_t k = 0; k + 1 < rows.size(); ++k)
    if (rows[k].status != "ok" || rows[k].multiplicity != 2) pass = false;
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["rows"] = json::array();
    for (std::size_t k = 0; k + 1 < rows.size(); ++k)
      j["rows"].push_back(row_json(rows[k]));
    j["control"] = row_json(control);
    j["pass"] = pass;
    emit(j);
  } else {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"case", "g_S", "lambda1", "lambda3", "mult", "status"});
    for (const TableRow& r : rows) {
      std::string label = r.ambient + " a" + std::to_string(r.node + 1);
      if (!r.printed) label += " *";
      cells.push_back({label, comp_types(r), comp_weights(r, true),
                       comp_weights(r, false), r.multiplicity.get_str(),
                       r.status});
    }
    std::vector<std::size_t> width(6, 0);
    for (const auto& row : cells)
      for (std::size_t c = 0; c < 6; ++c)
        width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t c = 0; c < 6; ++c) {
        std::string cell = row[c];
        if (c + 1 < 6) cell.resize(width[c] + 2, ' ');
        line += cell;
      }
      std::cout << line << "\n";
    }
    std::cout << "(* recomputed only, no reference labels embedded)\n";
  }
  return pass ? 0 : 1;
}

int cmd_selftest(const RunConfig& cfg) {
  std::vector<CriterionResult> results = run_acceptance(cfg.jobs);
  bool pass = true;
  for (const CriterionResult& r : results) {
    if (!r.pass) pass = false;
    std::ostringstream os;
    os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " "
       << r.name;
    if (!r.detail.empty()) os << " -- " << r.detail;
    if (cfg.format != "json") std::cout << os.str() << "\n";
    std::cerr << "criterion " << r.id << ": " << r.seconds << " s\n";
  }
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["criteria"] = json::array();
    for (const CriterionResult& r : results) {
      json c;
      c["id"] = r.id;
      c["name"] = r.name;
      c["pass"] = r.pass;
      c["detail"] = r.detail;
      j["criteria"].push_back(c);
    }
    j["pass"] = pass;
    emit(j);
  } else if (pass) {
    std::cout << "all " << results.size() << " criteria passed\n";
  } else {
    std::cout << "FAIL\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantized flag variety toolkit: root enumerations, PBW bases, "
               "braidings, graded quantizations, and the multiplicity table"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_type = [&](CLI::App* s) {
    s->add_option("--type", cfg.type,
                  "root system label, e.g. G2, B2, A3, A1+A2")
        ->required();
  };
  auto add_word = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--word", cfg.word,
                            "reduced word, 1-based letters, comma-separated");
    o->delimiter(',');
    if (required) o->required();
  };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> dispatch;

  CLI::App* roots = app.add_subcommand("roots", "list the positive roots");
  add_type(roots);
  add_word(roots, false);
  add_format(roots);
  dispatch.push_back({roots, cmd_roots});

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "convex root order along a reduced word");
  add_type(enumerate);
  add_word(enumerate, true);
  add_format(enumerate);
  dispatch.push_back({enumerate, cmd_enumerate});

  CLI::App* factorize = app.add_subcommand(
      "factorize", "parabolic factorization w0 = w_0S * w^S");
  add_type(factorize);
  factorize->add_option("--levi", cfg.levi, "Levi nodes, 1-based")
      ->delimiter(',');
  add_format(factorize);
  dispatch.push_back({factorize, cmd_factorize});

  CLI::App* qcomm = app.add_subcommand(
      "qcomm", "q-commutator of two root vectors, straightened");
  add_type(qcomm);
  add_word(qcomm, true);
  qcomm->add_option("--i", cfg.i, "first position, 1-based")->required();
  qcomm->add_option("--j", cfg.j, "second position, 1-based")->required();
  add_format(qcomm);
  dispatch.push_back({qcomm, cmd_qcomm});

  CLI::App* pbw = app.add_subcommand(
      "pbw", "expand an element in the PBW basis, or list monomials of a "
             "content");
  add_type(pbw);
  add_word(pbw, true);
  pbw->add_option("--expr", cfg.expr, "element in the text grammar");
  pbw->add_option("--content", cfg.content,
                  "simple-root coefficients, comma-separated")
      ->delimiter(',');
  add_format(pbw);
  dispatch.push_back({pbw, cmd_pbw});

  CLI::App* braiding =
      app.add_subcommand("braiding", "apply the Levi braiding to a 2-tensor");
  add_type(braiding);
  braiding->add_option("--levi", cfg.levi, "Levi nodes, 1-based")
      ->delimiter(',')
      ->required();
  braiding->add_option("--left", cfg.left, "left leg")->required();
  braiding->add_option("--right", cfg.right, "right leg")->required();
  add_word(braiding, false);
  add_format(braiding);
  dispatch.push_back({braiding, cmd_braiding});

  CLI::App* shuffle = app.add_subcommand(
      "shuffle", "braided shuffle product of a list of factors");
  add_type(shuffle);
  shuffle->add_option("--levi", cfg.levi, "Levi nodes, 1-based")
      ->delimiter(',')
      ->required();
  shuffle->add_option("--factors", cfg.factors, "factors separated by ';'")
      ->required();
  add_word(shuffle, false);
  add_format(shuffle);
  dispatch.push_back({shuffle, cmd_shuffle});

  CLI::App* quantize = app.add_subcommand(
      "quantize", "graded quantization attached to a flag order");
  add_type(quantize);
  quantize->add_option("--order", cfg.order, "flag order of nodes, 1-based")
      ->delimiter(',')
      ->required();
  quantize
      ->add_option("--normalization", cfg.normalization,
                   "scaling of the component generators")
      ->check(CLI::IsMember({"canonical", "paper-g2"}));
  add_format(quantize);
  dispatch.push_back({quantize, cmd_quantize});

  CLI::App* coideal = app.add_subcommand(
      "coideal-check", "verify that span(1, elements) is a left coideal");
  add_type(coideal);
  coideal->add_option("--order", cfg.order, "flag order of nodes, 1-based")
      ->delimiter(',');
  coideal->add_option("--elements", cfg.elements,
                      "elements separated by ';'");
  add_word(coideal, false);
  add_format(coideal);
  dispatch.push_back({coideal, cmd_coideal_check});

  CLI::App* schubert =
      app.add_subcommand("schubert", "quantum Schubert cell of a Levi");
  add_type(schubert);
  schubert->add_option("--levi", cfg.levi, "Levi nodes, 1-based")
      ->delimiter(',');
  schubert->add_option("--ambient", cfg.ambient, "ambient nodes, 1-based")
      ->delimiter(',');
  schubert->add_flag("--twisted", cfg.twisted,
                     "conjugate the root vectors by the Levi longest element");
  schubert->add_option("--cutoff", cfg.cutoff, "largest graded height kept")
      ->required();
  add_format(schubert);
  dispatch.push_back({schubert, cmd_schubert});

  CLI::App* tangent = app.add_subcommand(
      "tangent", "tangent spaces and calculi dimensions of a quantization");
  add_type(tangent);
  tangent->add_option("--order", cfg.order, "flag order of nodes, 1-based")
      ->delimiter(',')
      ->required();
  add_format(tangent);
  dispatch.push_back({tangent, cmd_tangent});

  CLI::App* tensor = app.add_subcommand(
      "tensor-mult", "tensor product decomposition or cube multiplicity");
  add_type(tensor);
  tensor->add_option("--a", cfg.wa, "first highest weight")->delimiter(',');
  tensor->add_option("--b", cfg.wb, "second highest weight")->delimiter(',');
  tensor->add_option("--l1", cfg.l1, "cube factor weight")->delimiter(',');
  tensor->add_option("--l3", cfg.l3, "target weight")->delimiter(',');
  add_format(tensor);
  dispatch.push_back({tensor, cmd_tensor_mult});

  CLI::App* appendix = app.add_subcommand(
      "appendix", "recompute the graded multiplicity-two table");
  appendix->add_option("--jobs", cfg.jobs, "parallel row workers");
  add_format(appendix);
  dispatch.push_back({appendix, cmd_appendix});

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the twelve end-to-end checks");
  selftest->add_option("--jobs", cfg.jobs, "parallel criterion workers");
  add_format(selftest);
  dispatch.push_back({selftest, cmd_selftest});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const auto& [sub, fn] : dispatch) {
    if (!sub->parsed()) continue;
    cfg.command = sub->get_name();
    try {
      check_roundtrip(cfg);
      return fn(cfg);
    } catch (const DomainError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}
