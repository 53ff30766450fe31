#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/dersolve.hpp"

namespace homnambu {

/// Left-nested bracket with increasing twist powers on later arguments:
///   [x1..xn]_n = [[...[[x1,x2], a(x3)], a^2(x4)] ... ], a^{n-2}(xn)].
/// For n = 2 this is the plain binary bracket.
inline Vec iterated_bracket(const HomAlgebra& g, int n, const std::vector<Vec>& args) {
  if (g.arity() != 2) throw DimensionError("iterated_bracket requires a binary algebra");
  if (n < 2) throw DimensionError("iterated_bracket requires n >= 2");
  if (static_cast<int>(args.size()) != n) throw DimensionError("iterated_bracket: argument count != n");
  const EndoMap& al = g.alpha();
  Vec acc = eval_bracket(g, {args[0], args[1]});
  EndoMap apow = al;  // alpha^{i-2} applied to slot i (1-based)
  for (int i = 3; i <= n; ++i) {
    acc = eval_bracket(g, {acc, apow.apply(args[static_cast<std::size_t>(i - 1)])});
    if (i < n) apow = apow.compose(al);
  }
  return acc;
}

/// The naive recursion [[x1..x_{n-1}]_{n-1}, xn] with no twist on the last
/// slot; kept only as a diagnostic against the authoritative closed form.
inline Vec iterated_bracket_plain_recursion(const HomAlgebra& g, int n,
                                            const std::vector<Vec>& args) {
  if (g.arity() != 2) throw DimensionError("iterated_bracket requires a binary algebra");
  if (n < 2) throw DimensionError("iterated_bracket requires n >= 2");
  if (static_cast<int>(args.size()) != n) throw DimensionError("argument count != n");
  Vec acc = eval_bracket(g, {args[0], args[1]});
  for (int i = 3; i <= n; ++i)
    acc = eval_bracket(g, {acc, args[static_cast<std::size_t>(i - 1)]});
  return acc;
}

/// First basis tuple (lexicographically) where the two readings of the
/// recursion disagree, if any. They coincide exactly when alpha acts as the
/// identity on every later slot.
inline std::optional<std::vector<int>> recursion_reading_discrepancy(const HomAlgebra& g, int n) {
  const int d = g.dim();
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    std::vector<Vec> args;
    for (int i : t) args.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(i)));
    if (iterated_bracket(g, n, args) != iterated_bracket_plain_recursion(g, n, args)) return t;
  } while (next_tuple(t, d));
  return std::nullopt;
}

/// n-ary system produced from a binary algebra: the iterated bracket with
/// twist alpha^{n-1}, plus provenance.
struct NupletSystem {
  HomAlgebra algebra;
  HomAlgebra source;
  int n;
};

namespace detail {

/// Alternation in the first two slots, in both the diagonal form
/// [x,x,...] = 0 and the polarized form [x,y,...] = -[y,x,...]. The latter
/// is what alternation on sums of two basis vectors reduces to, and it
/// catches non-alternating bilinear parts. Returns the failure, if any, and
/// the number of instances checked.
inline std::optional<CheckReport> first_two_slot_alternation_gap(const HomAlgebra& a,
                                                                 const std::string& name,
                                                                 long& count) {
  const int n = a.arity();
  const int d = a.dim();
  count = 0;
  std::vector<int> rest(static_cast<std::size_t>(n - 2), 0);
  do {
    for (int x = 0; x < d; ++x)
      for (int y = x; y < d; ++y) {
        std::vector<int> txy = {x, y};
        txy.insert(txy.end(), rest.begin(), rest.end());
        ++count;
        if (x == y) {
          const Vec& v = a.bracket_on_basis(txy);
          if (!is_zero_vec(v)) {
            Counterexample ce;
            ce.tuples = {txy};
            ce.context = "equal first two slots must give zero";
            ce.lhs = format_vector(v, a.labels());
            ce.rhs = "0";
            CheckReport r = fail_report(name, std::move(ce));
            r.notes.push_back("axiom 1 violated");
            return r;
          }
        } else {
          std::vector<int> tyx = {y, x};
          tyx.insert(tyx.end(), rest.begin(), rest.end());
          Vec lhs = a.bracket_on_basis(txy);
          Vec rhs = vec_scale(Scalar(-1), a.bracket_on_basis(tyx));
          if (lhs != rhs) {
            Counterexample ce;
            ce.tuples = {txy, tyx};
            ce.context = "first two slots must be alternating";
            ce.lhs = format_vector(lhs, a.labels());
            ce.rhs = format_vector(rhs, a.labels());
            CheckReport r = fail_report(name, std::move(ce));
            r.notes.push_back("axiom 1 (polarized form) violated");
            return r;
          }
        }
      }
  } while (!rest.empty() && next_tuple(rest, d));
  return std::nullopt;
}

}  // namespace detail

/// First-two-slot alternation plus the fundamental identity, verified
/// exhaustively on basis tuples.
inline CheckReport check_nuplet_axioms(const HomAlgebra& a) {
  const int n = a.arity();
  const int d = a.dim();
  long axiom1_count = 0;
  if (auto bad = detail::first_two_slot_alternation_gap(a, "nuplet_axioms", axiom1_count))
    return *bad;

  CheckReport fi = check_hom_nambu(a);
  if (!fi.passed()) {
    fi.name = "nuplet_axioms";
    fi.notes.push_back("axiom 2 (fundamental identity) violated");
    return fi;
  }
  CheckReport r = pass_report("nuplet_axioms");
  r.notes.push_back("axiom 1 instances: " + std::to_string(axiom1_count));
  long fi_count = 1;
  for (int i = 0; i < 2 * n - 1; ++i) fi_count *= d;
  r.notes.push_back("axiom 2 instances: " + std::to_string(fi_count));
  return r;
}

inline CheckReport check_nuplet_axioms(const NupletSystem& s) {
  return check_nuplet_axioms(s.algebra);
}

/// Ternary-system axioms: first-two-slot alternation, vanishing cyclic sum,
/// and the twisted five-argument identity, verified exhaustively.
inline CheckReport check_lts_axioms(const HomAlgebra& a) {
  if (a.arity() != 3) throw DimensionError("check_lts_axioms requires arity 3");
  const int d = a.dim();

  long axiom1_count = 0;
  if (auto bad = detail::first_two_slot_alternation_gap(a, "lts_axioms", axiom1_count))
    return *bad;

  // axiom 2: cyclic sum over the three arguments vanishes
  std::vector<int> t(3, 0);
  do {
    Vec sum = a.bracket_on_basis({t[0], t[1], t[2]});
    add_scaled(sum, Scalar(1), a.bracket_on_basis({t[1], t[2], t[0]}));
    add_scaled(sum, Scalar(1), a.bracket_on_basis({t[2], t[0], t[1]}));
    if (!is_zero_vec(sum)) {
      Counterexample ce;
      ce.tuples = {t};
      ce.context = "cyclic sum over the three slots";
      ce.lhs = format_vector(sum, a.labels());
      ce.rhs = "0";
      CheckReport r = fail_report("lts_axioms", std::move(ce));
      r.notes.push_back("axiom 2 (cyclic sum) violated");
      return r;
    }
  } while (next_tuple(t, d));

  // axiom 3: the five-argument identity is the arity-3 fundamental identity
  CheckReport fi = check_hom_nambu(a);
  if (!fi.passed()) {
    fi.name = "lts_axioms";
    fi.notes.push_back("axiom 3 (five-argument identity) violated");
    return fi;
  }

  CheckReport r = pass_report("lts_axioms");
  r.notes.push_back("axiom 1 instances: " + std::to_string(axiom1_count));
  r.notes.push_back("axiom 2 instances: " + std::to_string(static_cast<long>(d) * d * d));
  r.notes.push_back("axiom 3 instances: " +
                    std::to_string(static_cast<long>(d) * d * d * d * d));
  return r;
}

inline CheckReport check_lts_axioms(const NupletSystem& s) { return check_lts_axioms(s.algebra); }

/// g_n: structure constants are the iterated bracket on basis tuples, the
/// twist is alpha^{n-1}. Requires the source to pass its skew, fundamental
/// and multiplicativity checks.
inline NupletSystem build_nuplet(const HomAlgebra& g, int n) {
  if (g.arity() != 2) throw DimensionError("build_nuplet requires a binary algebra");
  if (n < 2) throw DimensionError("build_nuplet requires n >= 2");
  for (const auto& rep : {check_skew(g), check_hom_nambu(g), check_multiplicative(g)})
    if (!rep.passed())
      throw PreconditionError("build_nuplet: source algebra fails check '" + rep.name + "'");

  const int d = g.dim();
  BracketTable table;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    std::vector<Vec> args;
    for (int i : t) args.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(i)));
    Vec v = iterated_bracket(g, n, args);
    if (!is_zero_vec(v)) table[t] = std::move(v);
  } while (next_tuple(t, d));

  EndoMap beta = g.alpha().power(n - 1);
  std::vector<EndoMap> twists(static_cast<std::size_t>(n - 1), beta);
  HomAlgebra out(g.name() + "_g" + std::to_string(n), d, n, std::move(twists), std::move(table),
                 /*skew=*/false, /*multiplicative=*/false, g.labels());
  const bool mult_ok = check_multiplicative(out).passed();
  HomAlgebra flagged(out.name(), d, n, out.twists(), out.table(), /*skew=*/false, mult_ok,
                     g.labels());
  return NupletSystem{std::move(flagged), g, n};
}

/// Composes the bracket with an endomorphism compatible with it:
/// [x1..xn]_a = [a(x1),...,a(xn)], new twist a. Starting from an untwisted
/// system this produces a twisted one.
inline HomAlgebra twist_by_endo(const HomAlgebra& a, const EndoMap& e) {
  if (static_cast<int>(e.dim()) != a.dim()) throw DimensionError("endomorphism size != algebra dim");
  const int d = a.dim();
  const int n = a.arity();
  std::vector<Vec> cols;
  for (int j = 0; j < d; ++j) cols.push_back(e.apply_basis(j));

  // compatibility: e(bracket) = bracket(e,...,e) on all basis tuples
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    std::vector<Vec> args;
    for (int i : t) args.push_back(cols[static_cast<std::size_t>(i)]);
    if (e.apply(a.bracket_on_basis(t)) != eval_bracket(a, args))
      throw PreconditionError("twist_by_endo: map is not compatible with the bracket");
  } while (next_tuple(t, d));

  BracketTable table;
  t.assign(static_cast<std::size_t>(n), 0);
  do {
    std::vector<Vec> args;
    for (int i : t) args.push_back(cols[static_cast<std::size_t>(i)]);
    Vec v = eval_bracket(a, args);
    if (!is_zero_vec(v)) table[t] = std::move(v);
  } while (next_tuple(t, d));

  std::vector<EndoMap> twists(static_cast<std::size_t>(n - 1), e);
  HomAlgebra out(a.name() + "_tw", d, n, std::move(twists), std::move(table),
                 a.skew_flagged(), /*multiplicative=*/false, a.labels());
  const bool mult_ok = check_multiplicative(out).passed();
  return HomAlgebra(out.name(), d, n, out.twists(), out.table(), a.skew_flagged(), mult_ok,
                    a.labels());
}

/// An alpha^k-derivation of the source is a derivation of g_n with the same
/// insertion map alpha^k (the power of the source twist, not of alpha^{n-1}).
inline CheckReport check_derivation_transfer_n(const HomAlgebra& g, int n, const EndoMap& dmap,
                                               int k) {
  CheckReport pre = check_derivation_membership(g, k, dmap);
  if (!pre.passed()) {
    CheckReport r{"derivation_transfer_n", CheckStatus::precondition_failed};
    r.counterexample = pre.counterexample;
    r.notes = pre.notes;
    r.notes.push_back("D is not an alpha^k-derivation of the source algebra");
    return r;
  }
  NupletSystem s = build_nuplet(g, n);
  CheckReport conc = check_leibniz_with_insertion(s.algebra, g.alpha_power(k), dmap,
                                                  "derivation_transfer_n");
  conc.notes.push_back("insertion map is alpha^k of the source algebra");
  return conc;
}

/// Chain transfer: if each consecutive pair (D^(i), D^(i+1)) is an
/// alpha^k-quasiderivation pair of the source, the (n+1)-tuple
/// (D, D, D', ..., D^(n-1)) satisfies the generalized identity on g_n.
inline CheckReport check_gder_chain(const HomAlgebra& g, int n, const std::vector<EndoMap>& ds,
                                    int k) {
  if (static_cast<int>(ds.size()) != n)
    throw DimensionError("check_gder_chain expects n maps (D, D', ..., D^(n-1))");
  const EndoMap ak = g.alpha_power(k);
  for (int i = 0; i + 1 < n; ++i) {
    CheckReport pre = check_quasider_with_insertion(g, ak, ds[static_cast<std::size_t>(i)],
                                                    ds[static_cast<std::size_t>(i + 1)]);
    if (!pre.passed()) {
      CheckReport r{"gder_chain", CheckStatus::precondition_failed};
      r.counterexample = pre.counterexample;
      r.notes.push_back("pair (D^(" + std::to_string(i) + "), D^(" + std::to_string(i + 1) +
                        ")) fails the quasiderivation identity on the source");
      return r;
    }
  }
  NupletSystem s = build_nuplet(g, n);
  std::vector<EndoMap> tuple;
  tuple.push_back(ds[0]);
  for (const auto& m : ds) tuple.push_back(m);
  CheckReport conc = check_gder_with_insertion(s.algebra, ak, tuple, "gder_chain");
  conc.notes.push_back("insertion map is alpha^k of the source algebra");
  return conc;
}

}  // namespace homnambu
