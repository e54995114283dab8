#pragma once

/// Text, JSON and LaTeX forms of the library's values.
///
///   partition  "4,1,1"                   JSON [4,1,1]
///   tableau    "124/3/5" (spaces if n>9)  JSON [[1,2,4],[3],[5]]
///   label      "3,1,1^+"                 JSON {"partition":[3,1,1],"sign":"+"}
///   path       "2;2,1^+;3,1"             JSON [label, ...]
///   scalar     "1/2*sqrt(3)"             JSON [{"radicand":3,"re":"1/2","im":"0"}]

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alt_labels.hpp"
#include "geodesics.hpp"
#include "gt_basis.hpp"
#include "irrep_vector.hpp"
#include "matrix.hpp"
#include "scalar.hpp"
#include "tableau.hpp"

namespace altgt {

using json = nlohmann::json;

/// Malformed textual input; token() is the offending piece.
class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::string token)
      : std::invalid_argument(what + ": '" + token + "'"), token_(std::move(token)) {}
  [[nodiscard]] const std::string& token() const { return token_; }

 private:
  std::string token_;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline int parse_positive(const std::string& raw, const char* what) {
  const std::string tok = trim(raw);
  if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw parse_error(std::string("expected a positive integer in ") + what, raw);
  const int v = std::stoi(tok);
  if (v <= 0) throw parse_error(std::string("expected a positive integer in ") + what, raw);
  return v;
}

inline void reject_non_ascii(const std::string& s) {
  for (unsigned char c : s) {
    if (c >= 0x80) throw parse_error("non-ASCII character (use ^+ or ^-)", s);
  }
}

}  // namespace detail

// ---------------------------------------------------------------- scalars

namespace detail {

/// Sign and unsigned text of one coefficient, ready to be joined.
inline std::pair<bool, std::string> coeff_text(const gaussian_rational& c, std::uint64_t q, bool latex) {
  auto rat = [&](const rational& r) {
    if (!latex) return rational_to_string(r);
    const integer num = boost::multiprecision::numerator(r);
    const integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return "\\frac{" + num.str() + "}{" + den.str() + "}";
  };
  const std::string root = q == 1 ? "" : (latex ? "\\sqrt{" + std::to_string(q) + "}" : "sqrt(" + std::to_string(q) + ")");
  const std::string times = latex ? "" : "*";
  bool negative = false;
  std::string body;
  if (c.im == 0 || c.re == 0) {
    const bool imag = c.re == 0;
    rational mag = imag ? c.im : c.re;
    if (mag < 0) {
      negative = true;
      mag = -mag;
    }
    std::string unit = imag ? "i" : "";
    if (mag == 1) {
      body = unit;
    } else {
      body = rat(mag);
      if (!unit.empty()) body += times + unit;
    }
    if (!root.empty()) body = body.empty() ? root : body + times + root;
    if (body.empty()) body = "1";
  } else {
    std::string im = rat(c.im < 0 ? rational(-c.im) : c.im);
    body = "(" + rat(c.re) + (c.im < 0 ? "-" : "+") + (c.im == 1 || c.im == -1 ? "" : im + times) + "i)";
    if (!root.empty()) body += times + root;
  }
  return {negative, body};
}

inline std::string scalar_text(const scalar& x, bool latex) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [q, c] : x.terms()) {
    auto [neg, body] = coeff_text(c, q, latex);
    if (first) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const scalar& x) { return detail::scalar_text(x, false); }
inline std::string to_latex(const scalar& x) { return detail::scalar_text(x, true); }

inline json to_json(const scalar& x) {
  json arr = json::array();
  for (const auto& [q, c] : x.terms())
    arr.push_back({{"radicand", q}, {"re", rational_to_string(c.re)}, {"im", rational_to_string(c.im)}});
  return arr;
}

inline scalar scalar_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("scalar JSON must be an array");
  std::vector<scalar::term> terms;
  for (const auto& t : j) {
    terms.emplace_back(t.at("radicand").get<std::uint64_t>(),
                       gaussian_rational(rational_from_string(t.at("re").get<std::string>()),
                                         rational_from_string(t.at("im").get<std::string>())));
  }
  return scalar::from_terms(terms);
}

// ------------------------------------------------------------- partitions

inline partition parse_partition(const std::string& text) {
  detail::reject_non_ascii(text);
  if (detail::trim(text).empty()) throw parse_error("empty partition", text);
  std::vector<int> parts;
  for (const auto& tok : detail::split(text, ',')) parts.push_back(detail::parse_positive(tok, "partition"));
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k] > parts[k - 1]) throw parse_error("partition parts must be weakly decreasing", text);
  }
  return partition(std::move(parts));
}

inline json to_json(const partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

// --------------------------------------------------------------- tableaux

inline std::string to_string(const standard_tableau& t) {
  const bool spaced = t.size() > 9;
  std::string s;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) s += '/';
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (spaced && c > 0) s += ' ';
      s += std::to_string(t.rows()[r][c]);
    }
  }
  return s;
}

inline standard_tableau parse_tableau(const std::string& text) {
  detail::reject_non_ascii(text);
  std::vector<std::vector<int>> rows;
  for (const auto& raw : detail::split(text, '/')) {
    const std::string row = detail::trim(raw);
    if (row.empty()) throw parse_error("empty tableau row", raw);
    std::vector<int> entries;
    if (row.find(' ') != std::string::npos) {
      std::istringstream in(row);
      std::string tok;
      while (in >> tok) entries.push_back(detail::parse_positive(tok, "tableau"));
    } else {
      for (char ch : row) entries.push_back(detail::parse_positive(std::string(1, ch), "tableau"));
    }
    rows.push_back(std::move(entries));
  }
  try {
    return standard_tableau(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), text);
  }
}

inline json to_json(const standard_tableau& t) { return json(t.rows()); }

/// ytableau short form: rows separated by commas, entries braced when n > 9.
inline std::string to_latex(const standard_tableau& t) {
  std::string s = "\\ytableaushort{";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) s += ',';
    for (int v : t.rows()[r]) s += t.size() > 9 ? "{" + std::to_string(v) + "}" : std::to_string(v);
  }
  return s + "}";
}

// ----------------------------------------------------------------- labels

inline alt_label parse_label(const std::string& text) {
  detail::reject_non_ascii(text);
  std::string body = detail::trim(text);
  std::optional<sign> s;
  if (const auto caret = body.find('^'); caret != std::string::npos) {
    const std::string suffix = body.substr(caret);
    if (suffix == "^+") {
      s = sign::plus;
    } else if (suffix == "^-") {
      s = sign::minus;
    } else {
      throw parse_error("label sign must be ^+ or ^-", suffix);
    }
    body = body.substr(0, caret);
  }
  const partition p = parse_partition(body);
  if (is_self_conjugate(p) && !s) throw parse_error("self-conjugate partition needs a sign ^+ or ^-", text);
  if (!is_self_conjugate(p) && s) throw parse_error("only self-conjugate partitions take a sign", text);
  return alt_label(p, s);
}

inline json to_json(const alt_label& a) {
  json j{{"partition", to_json(a.shape())}};
  j["sign"] = a.sign() ? json(*a.sign() == sign::plus ? "+" : "-") : json(nullptr);
  return j;
}

inline std::string to_latex(const alt_label& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.shape().parts().size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(a.shape().parts()[k]);
  }
  s += ")";
  if (a.sign()) s += *a.sign() == sign::plus ? "^+" : "^-";
  return s;
}

// ------------------------------------------------------------------ paths

inline alt_path parse_path(const std::string& text) {
  std::vector<alt_label> labels;
  for (const auto& tok : detail::split(text, ';')) labels.push_back(parse_label(tok));
  try {
    return alt_path(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), text);
  }
}

inline json to_json(const alt_path& p) {
  json arr = json::array();
  for (const auto& a : p.labels()) arr.push_back(to_json(a));
  return arr;
}

// ---------------------------------------------------------------- vectors

inline json terms_json(const irrep_vector& v) {
  json arr = json::array();
  for (const auto& [t, c] : v.terms()) arr.push_back({{"tableau", to_json(t)}, {"coeff", to_json(c)}});
  return arr;
}

inline json to_json(const irrep_vector& v) { return {{"shape", to_json(v.shape())}, {"terms", terms_json(v)}}; }

inline json to_json(const gt_entry& e) { return {{"path", to_json(e.path)}, {"terms", terms_json(e.vector)}}; }

/// "c v_T + ..." with fourth-root coefficients printed as 1, -1, i, -i.
inline std::string to_string(const irrep_vector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [t, c] : v.terms()) {
    std::string coeff = to_string(c);
    const bool neg = !coeff.empty() && coeff[0] == '-' && c.terms().size() == 1;
    if (neg) coeff.erase(0, 1);
    if (c.terms().size() > 1) coeff = "(" + coeff + ")";
    const std::string term = (coeff == "1" ? "" : coeff + " ") + "v[" + to_string(t) + "]";
    if (s.empty()) {
      s = (neg ? "-" : "") + term;
    } else {
      s += (neg ? " - " : " + ") + term;
    }
  }
  return s;
}

inline std::string to_latex(const irrep_vector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [t, c] : v.terms()) {
    std::string coeff = to_latex(c);
    const bool neg = !coeff.empty() && coeff[0] == '-' && c.terms().size() == 1;
    if (neg) coeff.erase(0, 1);
    if (c.terms().size() > 1) coeff = "\\left(" + coeff + "\\right)";
    const std::string term = (coeff == "1" ? "" : coeff + " ") + "v_{" + to_latex(t) + "}";
    if (s.empty()) {
      s = (neg ? "-" : "") + term;
    } else {
      s += (neg ? " - " : " + ") + term;
    }
  }
  return s;
}

// --------------------------------------------------------------- matrices

inline json to_json(const scalar_matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string to_latex(const scalar_matrix& m) {
  std::string s = "\\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) s += " & ";
      s += to_latex(m(r, c));
    }
    s += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return s + "\\end{pmatrix}";
}

/// Right-aligned columns, one matrix row per line.
inline std::string to_string(const scalar_matrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(to_string(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& x = cells[r * m.cols() + c];
      s += (c > 0 ? "  " : "") + std::string(width - x.size(), ' ') + x;
    }
    s += '\n';
  }
  return s;
}

// --------------------------------------------------------------- bratteli

/// Undirected DOT graph; signed nodes are red (+) or green (-), and nodes
/// of one level share a rank.
inline void write_dot(std::ostream& out, const bratteli_diagram& g, const std::string& name) {
  out << "graph " << name << " {\n";
  int level = -1;
  for (const auto& node : g.nodes) {
    if (node.level != level) {
      if (level != -1) out << "  }\n";
      level = node.level;
      out << "  { rank=same;\n";
    }
    out << "    \"" << node.id << "\" [label=\"" << node.id << "\"";
    if (node.sign) out << ", color=" << (*node.sign == sign::plus ? "red" : "green") << ", fontcolor=" << (*node.sign == sign::plus ? "red" : "green");
    out << "];\n";
  }
  if (level != -1) out << "  }\n";
  for (const auto& [lo, hi] : g.edges) out << "  \"" << g.nodes[lo].id << "\" -- \"" << g.nodes[hi].id << "\";\n";
  out << "}\n";
}

/// Nodes with their lower neighbours.
inline json to_json(const bratteli_diagram& g) {
  std::vector<std::vector<std::string>> down(g.nodes.size());
  for (const auto& [lo, hi] : g.edges) down[hi].push_back(g.nodes[lo].id);
  json nodes = json::array();
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const auto& node = g.nodes[k];
    json j{{"id", node.id}, {"n", node.level}, {"partition", to_json(node.shape)}, {"down", down[k]}};
    j["sign"] = node.sign ? json(*node.sign == sign::plus ? "+" : "-") : json(nullptr);
    nodes.push_back(std::move(j));
  }
  return {{"nodes", nodes}, {"edge_count", g.edges.size()}};
}

}  // namespace altgt
