#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/cochain.hpp"

namespace homnambu {
namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool looks_rational(const std::string& tok) {
  std::size_t i = tok[0] == '-' ? 1 : 0;
  return i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]));
}

/// Parse "c1 lbl1 + c2 lbl2 - lbl3" or "0" into a coordinate vector.
inline Vec parse_combination(const std::string& text, const std::vector<std::string>& labels,
                             int line) {
  Vec out = zero_vec(labels.size());
  std::vector<std::string> toks = split_ws(text);
  if (toks.empty()) throw FormatError("empty linear combination", line);
  if (toks.size() == 1 && toks[0] == "0") return out;

  std::size_t pos = 0;
  bool first = true;
  while (pos < toks.size()) {
    Scalar sign(1);
    if (!first) {
      if (toks[pos] == "+")
        sign = 1;
      else if (toks[pos] == "-")
        sign = -1;
      else
        throw FormatError("expected '+' or '-' before term, got '" + toks[pos] + "'", line);
      if (++pos >= toks.size()) throw FormatError("dangling operator", line);
    } else if (toks[pos] == "-") {
      sign = -1;
      if (++pos >= toks.size()) throw FormatError("dangling operator", line);
    }
    first = false;

    Scalar coeff(1);
    if (looks_rational(toks[pos])) {
      coeff = parse_scalar(toks[pos]);
      if (++pos >= toks.size()) throw FormatError("coefficient without basis label", line);
    }
    const std::string& lbl = toks[pos];
    auto it = std::find(labels.begin(), labels.end(), lbl);
    if (it == labels.end()) throw FormatError("unknown basis label '" + lbl + "'", line);
    out[static_cast<std::size_t>(it - labels.begin())] += sign * coeff;
    ++pos;
  }
  return out;
}

/// Parse "lblA, lblB, ..." into basis indices.
inline std::vector<int> parse_label_tuple(const std::string& inner,
                                          const std::vector<std::string>& labels, int line) {
  std::vector<int> idx;
  std::string cur;
  std::istringstream is(inner);
  while (std::getline(is, cur, ',')) {
    std::string lbl = strip(cur);
    if (lbl.empty()) throw FormatError("empty label in tuple", line);
    auto it = std::find(labels.begin(), labels.end(), lbl);
    if (it == labels.end()) throw FormatError("unknown basis label '" + lbl + "'", line);
    idx.push_back(static_cast<int>(it - labels.begin()));
  }
  return idx;
}

}  // namespace detail

/// Parse the line-oriented algebra format ('#' starts a comment):
///   algebra NAME
///   arity N
///   dim D
///   basis lbl1 lbl2 ...            (optional; defaults to e1..eD)
///   flags skew multiplicative      (optional)
///   alpha LBL -> c1 lbl1 + ...     (all basis elements or none; none = identity)
///   bracket [lblA, lblB, ...] = c1 lbl1 + ...
/// With the skew flag, bracket tuples must be strictly increasing and the
/// table is extended by permutation sign; without it tuples are stored as
/// written.
inline HomAlgebra parse_algebra(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int line = 0;

  std::string name;
  int arity = -1, dim = -1;
  std::vector<std::string> labels;
  bool skew = false, multiplicative = false;
  bool header_done = false;
  std::map<std::string, std::pair<Vec, int>> alpha_rows;  // label -> (value, line)
  std::vector<std::pair<std::vector<int>, Vec>> brackets;
  std::map<std::vector<int>, int> bracket_seen;

  auto finalize_header = [&]() {
    if (header_done) return;
    if (name.empty()) throw FormatError("missing 'algebra NAME' header", line);
    if (arity < 0) throw FormatError("missing 'arity' line", line);
    if (dim < 0) throw FormatError("missing 'dim' line", line);
    if (labels.empty())
      for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
    header_done = true;
  };

  while (std::getline(is, raw)) {
    ++line;
    std::string s = raw;
    if (auto h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
    s = detail::strip(s);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;

    if (kw == "algebra") {
      if (!name.empty()) throw FormatError("duplicate 'algebra' line", line);
      ls >> name;
      if (name.empty()) throw FormatError("missing algebra name", line);
    } else if (kw == "arity" || kw == "dim") {
      int v;
      if (!(ls >> v) || v < (kw == "dim" ? 1 : 2))
        throw FormatError("invalid " + kw + " value", line);
      (kw == "arity" ? arity : dim) = v;
    } else if (kw == "basis") {
      std::string lbl;
      while (ls >> lbl) {
        if (detail::looks_rational(lbl) || lbl == "+" || lbl == "-")
          throw FormatError("basis label '" + lbl + "' would be ambiguous", line);
        if (std::find(labels.begin(), labels.end(), lbl) != labels.end())
          throw FormatError("duplicate basis label '" + lbl + "'", line);
        labels.push_back(lbl);
      }
      if (dim >= 0 && static_cast<int>(labels.size()) != dim)
        throw FormatError("basis label count does not match dim", line);
    } else if (kw == "flags") {
      std::string f;
      while (ls >> f) {
        if (f == "skew")
          skew = true;
        else if (f == "multiplicative")
          multiplicative = true;
        else
          throw FormatError("unknown flag '" + f + "'", line);
      }
    } else if (kw == "alpha") {
      finalize_header();
      std::string lbl, arrow;
      ls >> lbl >> arrow;
      if (arrow != "->") throw FormatError("expected 'alpha LBL -> ...'", line);
      if (std::find(labels.begin(), labels.end(), lbl) == labels.end())
        throw FormatError("unknown basis label '" + lbl + "'", line);
      if (alpha_rows.count(lbl)) throw FormatError("duplicate alpha line for '" + lbl + "'", line);
      std::string rest;
      std::getline(ls, rest);
      alpha_rows[lbl] = {detail::parse_combination(detail::strip(rest), labels, line), line};
    } else if (kw == "bracket") {
      finalize_header();
      auto lb = s.find('['), rb = s.find(']');
      auto eq = s.find('=', rb == std::string::npos ? 0 : rb);
      if (lb == std::string::npos || rb == std::string::npos || eq == std::string::npos || rb < lb)
        throw FormatError("expected 'bracket [A, B, ...] = ...'", line);
      std::vector<int> tuple = detail::parse_label_tuple(s.substr(lb + 1, rb - lb - 1), labels, line);
      if (static_cast<int>(tuple.size()) != arity)
        throw FormatError("bracket tuple has " + std::to_string(tuple.size()) +
                              " entries but arity is " + std::to_string(arity),
                          line);
      if (bracket_seen.count(tuple)) throw FormatError("duplicate bracket tuple", line);
      bracket_seen[tuple] = line;
      Vec value = detail::parse_combination(detail::strip(s.substr(eq + 1)), labels, line);
      if (skew)
        for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
          if (tuple[i] >= tuple[i + 1])
            throw FormatError("skew-flagged brackets must use strictly increasing tuples", line);
      brackets.emplace_back(std::move(tuple), std::move(value));
    } else {
      throw FormatError("unknown keyword '" + kw + "'", line);
    }
  }
  finalize_header();

  if (!alpha_rows.empty() && static_cast<int>(alpha_rows.size()) != dim) {
    for (const auto& lbl : labels)
      if (!alpha_rows.count(lbl))
        throw FormatError("alpha section incomplete: no line for '" + lbl + "'");
  }
  Matrix am = Matrix::identity(static_cast<std::size_t>(dim));
  if (!alpha_rows.empty()) {
    am = Matrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      const Vec& col = alpha_rows.at(labels[static_cast<std::size_t>(j)]).first;
      for (int i = 0; i < dim; ++i)
        am.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[static_cast<std::size_t>(i)];
    }
  }
  std::vector<EndoMap> twists(static_cast<std::size_t>(arity - 1), EndoMap(am));

  if (skew) {
    std::vector<BracketEntry> entries;
    for (auto& [t, v] : brackets) entries.push_back({t, v});
    return HomAlgebra::from_increasing_brackets(name, dim, arity, twists, entries, multiplicative,
                                                labels);
  }
  BracketTable table;
  for (auto& [t, v] : brackets) {
    for (int i : t)
      if (i < 0 || i >= dim) throw FormatError("bracket index out of range");
    table[t] = v;
  }
  return HomAlgebra(name, dim, arity, twists, table, skew, multiplicative, labels);
}

/// Canonical serialization: sorted tuples, reduced rationals, alpha rows
/// always present. parse(serialize(A)) == A on canonical algebras.
inline std::string serialize_algebra(const HomAlgebra& a) {
  std::ostringstream os;
  os << "algebra " << a.name() << "\n";
  os << "arity " << a.arity() << "\n";
  os << "dim " << a.dim() << "\n";
  os << "basis";
  for (const auto& l : a.labels()) os << " " << l;
  os << "\n";
  if (a.skew_flagged() || a.multiplicative_flagged()) {
    os << "flags";
    if (a.skew_flagged()) os << " skew";
    if (a.multiplicative_flagged()) os << " multiplicative";
    os << "\n";
  }
  for (int j = 0; j < a.dim(); ++j)
    os << "alpha " << a.labels()[static_cast<std::size_t>(j)] << " -> "
       << format_vector(a.twist(0).apply_basis(j), a.labels()) << "\n";
  for (const auto& [t, v] : a.table()) {
    if (a.skew_flagged()) {
      bool increasing = true;
      for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] >= t[i + 1]) increasing = false;
      if (!increasing) continue;
    }
    os << "bracket [";
    for (std::size_t i = 0; i < t.size(); ++i)
      os << (i ? ", " : "") << a.labels()[static_cast<std::size_t>(t[i])];
    os << "] = " << format_vector(v, a.labels()) << "\n";
  }
  return os.str();
}

struct NamedCochain {
  std::string name;
  Cochain cochain;
};

/// Cochain format:
///   cochain NAME
///   degree P
///   value (lblA, lblB, ...) = p/q     (strictly increasing tuples)
inline NamedCochain parse_cochain(const std::string& text, int ambient_dim,
                                  const std::vector<std::string>& labels) {
  std::istringstream is(text);
  std::string raw, name;
  int degree = -1, line = 0;
  std::vector<std::tuple<std::vector<int>, Scalar, int>> values;

  while (std::getline(is, raw)) {
    ++line;
    std::string s = raw;
    if (auto h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
    s = detail::strip(s);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    if (kw == "cochain") {
      ls >> name;
      if (name.empty()) throw FormatError("missing cochain name", line);
    } else if (kw == "degree") {
      if (!(ls >> degree) || degree < 0) throw FormatError("invalid degree", line);
    } else if (kw == "value") {
      if (degree < 0) throw FormatError("'degree' must come before 'value' lines", line);
      auto lp = s.find('('), rp = s.find(')');
      auto eq = s.find('=', rp == std::string::npos ? 0 : rp);
      if (lp == std::string::npos || rp == std::string::npos || eq == std::string::npos || rp < lp)
        throw FormatError("expected 'value (A, B, ...) = p/q'", line);
      std::string inner = detail::strip(s.substr(lp + 1, rp - lp - 1));
      std::vector<int> tuple =
          inner.empty() ? std::vector<int>{} : detail::parse_label_tuple(inner, labels, line);
      Scalar v = parse_scalar(detail::strip(s.substr(eq + 1)));
      values.emplace_back(std::move(tuple), std::move(v), line);
    } else {
      throw FormatError("unknown keyword '" + kw + "'", line);
    }
  }
  if (name.empty()) throw FormatError("missing 'cochain NAME' header");
  if (degree < 0) throw FormatError("missing 'degree' line");

  Cochain c(ambient_dim, degree);
  std::map<std::vector<int>, bool> seen;
  for (const auto& [t, v, ln] : values) {
    if (seen.count(t)) throw FormatError("duplicate value tuple", ln);
    seen[t] = true;
    try {
      c.set(t, v);
    } catch (const DimensionError& e) {
      throw FormatError(e.what(), ln);
    } catch (const FormatError& e) {
      throw FormatError(e.what(), ln);
    }
  }
  return NamedCochain{std::move(name), std::move(c)};
}

inline std::string serialize_cochain(const std::string& name, const Cochain& c,
                                     const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "cochain " << name << "\n";
  os << "degree " << c.degree() << "\n";
  for (const auto& [t, v] : c.coeffs()) {
    os << "value (";
    for (std::size_t i = 0; i < t.size(); ++i)
      os << (i ? ", " : "") << labels.at(static_cast<std::size_t>(t[i]));
    os << ") = " << scalar_to_string(v) << "\n";
  }
  return os.str();
}

}  // namespace homnambu
