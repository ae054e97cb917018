/*
  This is textio.cpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  Text form of algebra elements: printing in the normal form
  "c * F[..] K[..] E[..]" and the matching parser, plus the PBW display
  with root-vector factors E[b3] and divided powers E[b3]^(2).
*/

#include <sstream>

#include "qlie/uq.hpp"

namespace qlie {

namespace {

std::string word_brackets(char letter, const Word& w) {
  std::ostringstream os;
  os << letter << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i] + 1;
  }
  os << ']';
  return os.str();
}

std::string mono_str(const Mono& m) {
  std::vector<std::string> parts;
  if (!m.f.empty()) parts.push_back(word_brackets('F', m.f));
  bool kzero = true;
  for (int v : m.k)
    if (v != 0) kzero = false;
  if (!kzero) {
    std::ostringstream os;
    os << "K[";
    for (std::size_t i = 0; i < m.k.size(); ++i) {
      if (i) os << ',';
      os << m.k[i];
    }
    os << ']';
    parts.push_back(os.str());
  }
  if (!m.e.empty()) parts.push_back(word_brackets('E', m.e));
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ' ';
    s += parts[i];
  }
  return s;
}

std::string term_str(const QScalar& c, const std::string& mono) {
  if (mono.empty()) return c.str();
  if (c.is_one()) return mono;
  if (c == QScalar::integer(-1)) return "-" + mono;
  return c.str() + " * " + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-')
      s += " - " + terms[i].substr(1);
    else
      s += " + " + terms[i];
  }
  return s;
}

}  // namespace

std::string element_str(const UqAlgebra& g, const UqElement& x) {
  (void)g;
  std::vector<std::string> terms;
  for (const auto& [m, c] : x) terms.push_back(term_str(c, mono_str(m)));
  return join_terms(terms);
}

std::string tensor2_str(const UqAlgebra& g, const Tensor2& x) {
  (void)g;
  std::vector<std::string> terms;
  for (const auto& [k, c] : x) {
    std::string l = mono_str(k.first), r = mono_str(k.second);
    if (l.empty()) l = "1";
    if (r.empty()) r = "1";
    terms.push_back(term_str(c, l + " (x) " + r));
  }
  return join_terms(terms);
}

std::string pretty_coeff(const QScalar& c) {
  for (long d = 1; d <= 4; ++d)
    for (long n = 2; n <= 24; ++n) {
      QScalar qn = QScalar::q_int(n, d);
      std::string name = "[" + std::to_string(n) + "]_" +
                         (d == 1 ? "q" : "{q^" + std::to_string(d) + "}");
      if (c == qn) return name;
      if (c == -qn) return "-" + name;
    }
  return c.str();
}

std::string pbw_str(
    const UqAlgebra& g, const PbwBasis& pb,
    const std::vector<std::pair<std::vector<int>, QScalar>>& terms) {
  (void)g;
  std::vector<std::string> out;
  for (const auto& [m, c] : terms) {
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "E[b" + std::to_string(k + 1) + "]";
      if (m[k] > 1) mono += "^(" + std::to_string(m[k]) + ")";
    }
    if (mono.empty()) {
      out.push_back(pretty_coeff(c));
      continue;
    }
    std::string pc = pretty_coeff(c);
    if (pc == "1")
      out.push_back(mono);
    else if (pc == "-1")
      out.push_back("-" + mono);
    else
      out.push_back(pc + " * " + mono);
  }
  return join_terms(out);
}

/* ---------- parsing ---------- */

namespace {

struct ElementParser {
  const UqAlgebra& g;
  const PbwBasis* pb;
  const std::string& s;
  std::size_t i = 0;

  ElementParser(const UqAlgebra& ga, const PbwBasis* p, const std::string& text)
      : g(ga), pb(p), s(text) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("element parse error at position " + std::to_string(i) +
                      ": " + why);
  }

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool at_factor() {
    skip();
    return i + 1 < s.size() && (s[i] == 'E' || s[i] == 'F' || s[i] == 'K') &&
           s[i + 1] == '[';
  }

  long read_long() {
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    std::size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) fail("expected integer");
    long v = std::stol(s.substr(i, k - i));
    i = k;
    return v;
  }

  QScalar scalar_atom() {
    skip();
    if (i >= s.size()) fail("expected scalar");
    QScalar v;
    if (s[i] == '(') {
      std::size_t depth = 0, j = i;
      do {
        if (j >= s.size()) fail("unbalanced parentheses");
        if (s[j] == '(') ++depth;
        if (s[j] == ')') --depth;
        ++j;
      } while (depth > 0);
      v = QScalar::parse(s.substr(i, j - i));
      i = j;
    } else if (s[i] == '[') {
      ++i;
      long n = read_long();
      if (i + 1 >= s.size() || s[i] != ']' || s[i + 1] != '_')
        fail("malformed q-integer");
      i += 2;
      long d = 1;
      if (i < s.size() && s[i] == 'q') {
        ++i;
      } else if (i < s.size() && s[i] == '{') {
        ++i;
        if (i >= s.size() || s[i] != 'q') fail("malformed q-integer");
        ++i;
        if (i < s.size() && s[i] == '^') {
          ++i;
          d = read_long();
        }
        if (i >= s.size() || s[i] != '}') fail("malformed q-integer");
        ++i;
      } else {
        fail("malformed q-integer");
      }
      v = QScalar::q_int(n, d);
    } else {
      std::size_t j = i;
      while (j < s.size()) {
        char c = s[j];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == 'q' ||
            c == '^') {
          ++j;
        } else if ((c == '-' || c == '+') && j > i && s[j - 1] == '^') {
          ++j;
        } else {
          break;
        }
      }
      if (j == i) fail("expected scalar");
      v = QScalar::parse(s.substr(i, j - i));
      i = j;
    }
    if (i < s.size() && s[i] == '^') {
      ++i;
      long e = read_long();
      QScalar r = QScalar::one();
      QScalar b = e < 0 ? QScalar::one() / v : v;
      for (long k = 0; k < std::labs(e); ++k) r *= b;
      v = r;
    }
    if (i < s.size() && s[i] == '/') {
      ++i;
      v = v / scalar_atom();
    }
    return v;
  }

  QScalar scalar_chain() {
    QScalar v = scalar_atom();
    for (;;) {
      if (at_factor()) return v;
      skip();
      if (i >= s.size()) return v;
      char c = s[i];
      if (c == '*' && !at_factor_after_star()) {
        ++i;
        v *= scalar_atom();
      } else if (c == '(' || c == '[' || c == 'q' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        v *= scalar_atom();
      } else {
        return v;
      }
    }
  }

  /* True when the '*' at position i is the separator before the monomial. */
  bool at_factor_after_star() {
    std::size_t save = i;
    ++i;
    bool r = at_factor();
    i = save;
    return r;
  }

  UqElement factor() {
    skip();
    char letter = s[i];
    i += 2;  // letter and '['
    UqElement base;
    long dd = -1;  // symmetrization for divided powers, when defined
    if (letter == 'K') {
      std::vector<int> t;
      for (;;) {
        skip();
        t.push_back(static_cast<int>(read_long()));
        skip();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      if (i >= s.size() || s[i] != ']') fail("expected ']'");
      ++i;
      base = gen_k(g, t);
    } else {
      skip();
      if (i < s.size() && s[i] == 'b') {
        ++i;
        long idx = read_long();
        if (!pb) fail("root-vector reference without a PBW context");
        if (idx < 1 || idx > static_cast<long>(pb->betas.size()))
          fail("root-vector index out of range");
        base = letter == 'E' ? (*pb->e_vectors)[static_cast<std::size_t>(idx - 1)]
                             : (*pb->f_vectors)[static_cast<std::size_t>(idx - 1)];
        dd = pb->d_beta[static_cast<std::size_t>(idx - 1)];
      } else {
        Word w;
        for (;;) {
          skip();
          long v = read_long();
          if (v < 1 || v > g.rs().rank) fail("letter out of range");
          w.push_back(static_cast<int>(v - 1));
          skip();
          if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
          }
          break;
        }
        base = uq_one(g);
        for (int j : w)
          base = mul(g, base, letter == 'E' ? gen_e(g, j) : gen_f(g, j));
        if (w.size() == 1) dd = g.rs().d[w[0]];
      }
      if (i >= s.size() || s[i] != ']') fail("expected ']'");
      ++i;
    }
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool divided = i < s.size() && s[i] == '(';
      if (divided) ++i;
      long n = read_long();
      if (n < 0) fail("negative power");
      if (divided) {
        if (i >= s.size() || s[i] != ')') fail("expected ')'");
        ++i;
        if (dd < 0) fail("divided power needs a root vector or single letter");
        base = divided_power(g, base, static_cast<int>(n), dd);
      } else {
        base = uq_pow(g, base, static_cast<int>(n));
      }
    }
    return base;
  }

  UqElement term() {
    skip();
    QScalar coeff = QScalar::one();
    bool have_scalar = false;
    if (!at_factor()) {
      coeff = scalar_chain();
      have_scalar = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
      }
    }
    UqElement acc = scale(coeff, uq_one(g));
    bool any = false;
    while (at_factor()) {
      acc = mul(g, acc, factor());
      any = true;
    }
    if (!any && !have_scalar) fail("expected term");
    return acc;
  }

  UqElement parse() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    UqElement v = term();
    if (neg) v = scale(QScalar::integer(-1), v);
    for (;;) {
      skip();
      if (i < s.size() && s[i] == '+') {
        ++i;
        v = add(v, term());
      } else if (i < s.size() && s[i] == '-') {
        ++i;
        v = sub(v, term());
      } else {
        break;
      }
    }
    if (i != s.size()) fail("trailing input");
    return v;
  }
};

}  // namespace

UqElement element_parse(const UqAlgebra& g, const std::string& text,
                        const PbwBasis* pb) {
  ElementParser p(g, pb, text);
  return p.parse();
}

}  // namespace qlie
