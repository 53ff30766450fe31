#pragma once

#include <string>
#include <vector>

#include "homnambu/cochain.hpp"
#include "homnambu/dersolve.hpp"

namespace homnambu {

/// [x1..xn]_phi = sum_{i<j} (-1)^{i+j+1} phi(x1 .. ^xi .. ^xj .. xn) [xi,xj],
/// with 1-based slot numbers in the sign and the complement tuple kept in its
/// original relative order.
inline Vec induced_bracket_value(const HomAlgebra& g, const Cochain& phi,
                                 const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  Vec out = zero_vec(static_cast<std::size_t>(g.dim()));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec& br = g.bracket_on_basis({t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]});
      if (is_zero_vec(br)) continue;
      std::vector<int> comp;
      for (int l = 0; l < n; ++l)
        if (l != i && l != j) comp.push_back(t[static_cast<std::size_t>(l)]);
      Scalar c = phi.on_basis(comp);
      if (c == 0) continue;
      if ((i + j) % 2 == 0) c = -c;  // (-1)^{(i+1)+(j+1)+1}
      add_scaled(out, c, br);
    }
  return out;
}

/// Theorem condition: phi ^ d(phi_X) = 0 for all basis choices of X and Y.
inline CheckReport check_wedge_condition(const HomAlgebra& g, const Cochain& phi) {
  const int n = phi.degree() + 2;
  const int d = g.dim();
  std::vector<int> xt(static_cast<std::size_t>(n - 3), 0);
  do {
    std::vector<Vec> x;
    for (int i : xt) x.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(i)));
    std::vector<int> yt(static_cast<std::size_t>(n), 0);
    do {
      std::vector<Vec> y;
      for (int i : yt) y.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(i)));
      Scalar v = wedge_phi_dphi(g, phi, x, y);
      if (v != 0) {
        Counterexample ce;
        ce.tuples = {xt, yt};
        ce.context = "wedge of phi with the coboundary of phi_X";
        ce.lhs = scalar_to_string(v);
        ce.rhs = "0";
        return fail_report("wedge_condition", std::move(ce));
      }
    } while (next_tuple(yt, d));
  } while (!xt.empty() && next_tuple(xt, d));
  return pass_report("wedge_condition");
}

/// Theorem condition: phi(alpha(x1), x2, ..., x_{n-2}) = phi(x1, ..., x_{n-2}).
inline CheckReport check_alpha_invariance(const HomAlgebra& g, const Cochain& phi) {
  const int d = g.dim();
  const int p = phi.degree();
  const EndoMap& al = g.twist(0);
  std::vector<int> t(static_cast<std::size_t>(p), 0);
  do {
    std::vector<Vec> args;
    args.push_back(al.apply_basis(t[0]));
    for (int i = 1; i < p; ++i)
      args.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(t[static_cast<std::size_t>(i)])));
    Scalar lhs = eval_cochain(phi, args);
    Scalar rhs = phi.on_basis(t);
    if (lhs != rhs) {
      Counterexample ce;
      ce.tuples = {t};
      ce.context = "alpha in the first slot of phi";
      ce.lhs = scalar_to_string(lhs);
      ce.rhs = scalar_to_string(rhs);
      return fail_report("alpha_invariance", std::move(ce));
    }
  } while (next_tuple(t, d));
  return pass_report("alpha_invariance");
}

struct InduceResult {
  HomAlgebra algebra;
  std::vector<CheckReport> theorem_checks;  // wedge condition + alpha invariance when requested
};

/// Builds the n-ary algebra induced by a degree-(n-2) cochain of a
/// multiplicative binary algebra, with twists (alpha, ..., alpha). The skew
/// and multiplicative flags of the result are set by actually running the
/// corresponding checks. With `verify_theorem`, the two sufficiency
/// conditions are evaluated and reported alongside.
inline InduceResult induce_nbracket(const HomAlgebra& g, const Cochain& phi,
                                    bool verify_theorem = false) {
  if (g.arity() != 2) throw DimensionError("induce_nbracket requires a binary algebra");
  if (phi.ambient_dim() != g.dim()) throw DimensionError("cochain/algebra dimension mismatch");
  const int n = phi.degree() + 2;
  if (n < 3) throw DimensionError("induced arity must be at least 3");
  {
    CheckReport mult = check_multiplicative(g);
    if (!mult.passed())
      throw PreconditionError("induce_nbracket requires a multiplicative algebra");
  }

  const int d = g.dim();
  BracketTable table;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    Vec v = induced_bracket_value(g, phi, t);
    if (!is_zero_vec(v)) table[t] = std::move(v);
  } while (next_tuple(t, d));

  std::vector<EndoMap> twists(static_cast<std::size_t>(n - 1), g.twist(0));
  HomAlgebra out(g.name() + "_ind" + std::to_string(n), d, n, std::move(twists),
                 std::move(table), /*skew=*/false, /*multiplicative=*/false, g.labels());
  const bool skew_ok = check_skew(out).passed();
  const bool mult_ok = check_multiplicative(out).passed();
  HomAlgebra flagged(out.name(), d, n, out.twists(), out.table(), skew_ok, mult_ok, g.labels());

  InduceResult res{std::move(flagged), {}};
  if (verify_theorem) {
    res.theorem_checks.push_back(check_wedge_condition(g, phi));
    res.theorem_checks.push_back(check_alpha_invariance(g, phi));
  }
  return res;
}

namespace detail {

/// Shared hypothesis of the derivation/quasiderivation transfer statements:
/// sum_i phi(x1, ..., D(x_i), ..., x_{n-2}) = 0 on all basis tuples.
inline std::optional<Counterexample> transfer_hypothesis_gap(const Cochain& phi,
                                                             const EndoMap& dmap) {
  const int d = phi.ambient_dim();
  const int p = phi.degree();
  std::vector<int> t(static_cast<std::size_t>(p), 0);
  do {
    Scalar sum(0);
    std::vector<Vec> args;
    for (int i : t) args.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(i)));
    for (int i = 0; i < p; ++i) {
      Vec saved = args[static_cast<std::size_t>(i)];
      args[static_cast<std::size_t>(i)] = dmap.apply_basis(t[static_cast<std::size_t>(i)]);
      sum += eval_cochain(phi, args);
      args[static_cast<std::size_t>(i)] = std::move(saved);
    }
    if (sum != 0) {
      Counterexample ce;
      ce.tuples = {t};
      ce.context = "sum of phi with D inserted in one slot";
      ce.lhs = scalar_to_string(sum);
      ce.rhs = "0";
      return ce;
    }
  } while (next_tuple(t, d));
  return std::nullopt;
}

}  // namespace detail

/// If D is an alpha^k-derivation of g and phi annihilates D slotwise, then D
/// is an alpha^k-derivation of the induced n-ary algebra. The report carries
/// the stage reached: precondition, hypothesis, then conclusion.
inline CheckReport check_transfer_derivation(const HomAlgebra& g, const Cochain& phi,
                                             const EndoMap& dmap, int k) {
  CheckReport pre = check_derivation_membership(g, k, dmap);
  if (!pre.passed()) {
    CheckReport r{"transfer_derivation", CheckStatus::precondition_failed};
    r.counterexample = pre.counterexample;
    r.notes = pre.notes;
    r.notes.push_back("D is not an alpha^k-derivation of the source algebra");
    return r;
  }
  if (auto gap = detail::transfer_hypothesis_gap(phi, dmap)) {
    CheckReport r{"transfer_derivation", CheckStatus::hypothesis_not_met};
    r.counterexample = std::move(gap);
    r.notes.push_back("slotwise phi-annihilation hypothesis fails; no claim made");
    return r;
  }
  HomAlgebra induced = induce_nbracket(g, phi).algebra;
  CheckReport conc = check_leibniz_with_insertion(induced, g.alpha_power(k), dmap,
                                                  "transfer_derivation");
  conc.notes.push_back("precondition and hypothesis verified on all basis tuples");
  return conc;
}

/// Same transfer for an alpha^k-quasiderivation pair (D, D'), keeping the
/// same associate endomorphism on the induced algebra.
inline CheckReport check_transfer_quasi(const HomAlgebra& g, const Cochain& phi,
                                        const EndoMap& dmap, const EndoMap& dprime, int k) {
  CheckReport pre = check_quasider_membership(g, k, dmap, dprime);
  if (!pre.passed()) {
    CheckReport r{"transfer_quasiderivation", CheckStatus::precondition_failed};
    r.counterexample = pre.counterexample;
    r.notes.push_back("(D, D') is not an alpha^k-quasiderivation pair of the source algebra");
    return r;
  }
  if (auto gap = detail::transfer_hypothesis_gap(phi, dmap)) {
    CheckReport r{"transfer_quasiderivation", CheckStatus::hypothesis_not_met};
    r.counterexample = std::move(gap);
    r.notes.push_back("slotwise phi-annihilation hypothesis fails; no claim made");
    return r;
  }
  HomAlgebra induced = induce_nbracket(g, phi).algebra;
  CheckReport conc = check_quasider_with_insertion(induced, g.alpha_power(k), dmap, dprime,
                                                   "transfer_quasiderivation");
  conc.notes.push_back("precondition and hypothesis verified on all basis tuples");
  return conc;
}

/// Centroid transfer. The hypothesis quantifiers are interpreted as ranging
/// over all basis tuples, with theta applied to the first cochain slot; the
/// report flags this interpretation.
inline CheckReport check_transfer_centroid(const HomAlgebra& g, const Cochain& phi,
                                           const EndoMap& theta, int k) {
  CheckReport pre = check_centroid_membership(g, k, theta);
  if (!pre.passed()) {
    CheckReport r{"transfer_centroid", CheckStatus::precondition_failed};
    r.counterexample = pre.counterexample;
    r.notes.push_back("theta is not an alpha^k-centroid element of the source algebra");
    return r;
  }
  const int d = g.dim();
  const int p = phi.degree();
  const EndoMap ak = g.alpha_power(k);

  // hypothesis: phi(theta(x1), x2..xp) [a^k(x), y] = phi(x1..xp) [theta(x), y]
  std::vector<int> t(static_cast<std::size_t>(p), 0);
  do {
    std::vector<Vec> args;
    args.push_back(theta.apply_basis(t[0]));
    for (int i = 1; i < p; ++i)
      args.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(t[static_cast<std::size_t>(i)])));
    Scalar left_c = eval_cochain(phi, args);
    Scalar right_c = phi.on_basis(t);
    if (left_c == 0 && right_c == 0) continue;
    std::vector<int> xy(2, 0);
    do {
      Vec lhs = vec_scale(left_c, eval_bracket(g, {ak.apply_basis(xy[0]), unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(xy[1]))}));
      Vec rhs = vec_scale(right_c, eval_bracket(g, {theta.apply_basis(xy[0]), unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(xy[1]))}));
      if (lhs != rhs) {
        CheckReport r{"transfer_centroid", CheckStatus::hypothesis_not_met};
        Counterexample ce;
        std::vector<int> all = t;
        all.insert(all.end(), xy.begin(), xy.end());
        ce.tuples = {all};
        ce.context = "phi-weighted bracket hypothesis";
        ce.lhs = format_vector(lhs, g.labels());
        ce.rhs = format_vector(rhs, g.labels());
        r.counterexample = std::move(ce);
        r.notes.push_back("hypothesis quantified over all basis tuples (interpretation)");
        return r;
      }
    } while (next_tuple(xy, d));
  } while (!t.empty() && next_tuple(t, d));

  HomAlgebra induced = induce_nbracket(g, phi).algebra;
  CheckReport conc = check_centroid_with_insertion(induced, ak, theta, "transfer_centroid");
  conc.notes.push_back("hypothesis quantified over all basis tuples (interpretation)");
  conc.notes.push_back("precondition and hypothesis verified on all basis tuples");
  return conc;
}

}  // namespace homnambu
