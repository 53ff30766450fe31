#pragma once

#include <string>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/matrix.hpp"

namespace homnambu {

enum class SolutionKind { derivation, quasiderivation, centroid, generalized, inner };

inline const char* kind_word(SolutionKind k) {
  switch (k) {
    case SolutionKind::derivation: return "derivation";
    case SolutionKind::quasiderivation: return "quasiderivation";
    case SolutionKind::centroid: return "centroid";
    case SolutionKind::generalized: return "generalized";
    case SolutionKind::inner: return "inner";
  }
  return "?";
}

/// Canonical basis of an exactly solved endomorphism constraint system.
/// Unknown ordering is row-major by endomorphism then matrix entry, so
/// solution bases are reproducible across runs.
struct SolutionSpace {
  SolutionKind kind;
  int k = 0;            // twist exponent (k >= -1; alpha^{-1} = 0, alpha^0 = id)
  int tuple_width = 1;  // number of unknown endomorphisms per solution
  int d = 0;
  Subspace space{0};

  std::size_t dim() const { return space.dim(); }

  std::vector<EndoMap> element(std::size_t idx) const {
    const Vec& v = space.basis().at(idx);
    std::vector<EndoMap> out;
    const std::size_t dd = static_cast<std::size_t>(d);
    for (int e = 0; e < tuple_width; ++e) {
      Matrix m(dd, dd);
      for (std::size_t r = 0; r < dd; ++r)
        for (std::size_t c = 0; c < dd; ++c)
          m.at(r, c) = v[static_cast<std::size_t>(e) * dd * dd + r * dd + c];
      out.emplace_back(std::move(m));
    }
    return out;
  }
};

inline Vec flatten_endos(const std::vector<EndoMap>& maps) {
  Vec v;
  for (const auto& e : maps)
    for (std::size_t r = 0; r < e.dim(); ++r)
      for (std::size_t c = 0; c < e.dim(); ++c) v.push_back(e.matrix().at(r, c));
  return v;
}

namespace detail {

inline std::vector<Vec> endo_columns(const EndoMap& e) {
  std::vector<Vec> cols;
  for (int j = 0; j < static_cast<int>(e.dim()); ++j) cols.push_back(e.apply_basis(j));
  return cols;
}

/// V[i][m] = bracket with e_m in slot i and ins-columns of the tuple elsewhere.
inline std::vector<std::vector<Vec>> slot_replacements(const HomAlgebra& a,
                                                       const std::vector<Vec>& ins_cols,
                                                       const std::vector<int>& t) {
  const int n = a.arity();
  const int d = a.dim();
  std::vector<std::vector<Vec>> v(static_cast<std::size_t>(n));
  std::vector<Vec> args;
  for (int i : t) args.push_back(ins_cols[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) {
    Vec saved = args[static_cast<std::size_t>(i)];
    for (int m = 0; m < d; ++m) {
      args[static_cast<std::size_t>(i)] = unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(m));
      v[static_cast<std::size_t>(i)].push_back(eval_bracket(a, args));
    }
    args[static_cast<std::size_t>(i)] = std::move(saved);
  }
  return v;
}

inline std::size_t uidx(int endo, int r, int c, int d) {
  return static_cast<std::size_t>(endo) * static_cast<std::size_t>(d) * static_cast<std::size_t>(d) +
         static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c);
}

}  // namespace detail

// ---- membership checks (defining identities evaluated on basis tuples) ----

/// D[x1..xn] = sum_i [ins(x1),...,D(x_i),...,ins(xn)] on all basis tuples.
inline CheckReport check_leibniz_with_insertion(const HomAlgebra& a, const EndoMap& ins,
                                                const EndoMap& dmap, std::string name) {
  const int n = a.arity();
  const int d = a.dim();
  std::vector<Vec> ins_cols = detail::endo_columns(ins);
  std::vector<Vec> d_cols = detail::endo_columns(dmap);

  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    Vec lhs = dmap.apply(a.bracket_on_basis(t));
    Vec rhs = zero_vec(static_cast<std::size_t>(d));
    std::vector<Vec> args;
    for (int i : t) args.push_back(ins_cols[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) {
      Vec saved = args[static_cast<std::size_t>(i)];
      args[static_cast<std::size_t>(i)] = d_cols[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      add_scaled(rhs, Scalar(1), eval_bracket(a, args));
      args[static_cast<std::size_t>(i)] = std::move(saved);
    }
    if (lhs != rhs) {
      Counterexample ce;
      ce.tuples = {t};
      ce.lhs = format_vector(lhs, a.labels());
      ce.rhs = format_vector(rhs, a.labels());
      return fail_report(std::move(name), std::move(ce));
    }
  } while (next_tuple(t, d));
  return pass_report(std::move(name));
}

inline CheckReport check_derivation_membership(const HomAlgebra& a, int k, const EndoMap& dmap) {
  const EndoMap& al = a.alpha();
  if (!(dmap.matrix() * al.matrix() == al.matrix() * dmap.matrix())) {
    CheckReport r{"derivation_membership", CheckStatus::fail};
    r.notes.push_back("does not commute with alpha");
    return r;
  }
  return check_leibniz_with_insertion(a, al.power(k), dmap, "derivation_membership");
}

/// sum_i [ins(x1),...,D(x_i),...,ins(xn)] = D'([x1..xn]) on all basis tuples.
inline CheckReport check_quasider_with_insertion(const HomAlgebra& a, const EndoMap& ins,
                                                 const EndoMap& dmap, const EndoMap& dprime,
                                                 std::string name = "quasiderivation_membership") {
  const int n = a.arity();
  const int d = a.dim();
  std::vector<Vec> ins_cols = detail::endo_columns(ins);
  std::vector<Vec> d_cols = detail::endo_columns(dmap);

  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    Vec lhs = zero_vec(static_cast<std::size_t>(d));
    std::vector<Vec> args;
    for (int i : t) args.push_back(ins_cols[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) {
      Vec saved = args[static_cast<std::size_t>(i)];
      args[static_cast<std::size_t>(i)] = d_cols[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      add_scaled(lhs, Scalar(1), eval_bracket(a, args));
      args[static_cast<std::size_t>(i)] = std::move(saved);
    }
    Vec rhs = dprime.apply(a.bracket_on_basis(t));
    if (lhs != rhs) {
      Counterexample ce;
      ce.tuples = {t};
      ce.lhs = format_vector(lhs, a.labels());
      ce.rhs = format_vector(rhs, a.labels());
      return fail_report(std::move(name), std::move(ce));
    }
  } while (next_tuple(t, d));
  return pass_report(std::move(name));
}

inline CheckReport check_quasider_membership(const HomAlgebra& a, int k, const EndoMap& dmap,
                                             const EndoMap& dprime) {
  return check_quasider_with_insertion(a, a.alpha_power(k), dmap, dprime);
}

/// theta([x1..xn]) = [theta(x1), ins(x2), ..., ins(xn)] on all basis tuples.
inline CheckReport check_centroid_with_insertion(const HomAlgebra& a, const EndoMap& ins,
                                                 const EndoMap& theta,
                                                 std::string name = "centroid_membership") {
  const int d = a.dim();
  std::vector<Vec> ins_cols = detail::endo_columns(ins);
  std::vector<Vec> th_cols = detail::endo_columns(theta);

  std::vector<int> t(static_cast<std::size_t>(a.arity()), 0);
  do {
    Vec lhs = theta.apply(a.bracket_on_basis(t));
    std::vector<Vec> args;
    args.push_back(th_cols[static_cast<std::size_t>(t[0])]);
    for (std::size_t i = 1; i < t.size(); ++i)
      args.push_back(ins_cols[static_cast<std::size_t>(t[i])]);
    Vec rhs = eval_bracket(a, args);
    if (lhs != rhs) {
      Counterexample ce;
      ce.tuples = {t};
      ce.lhs = format_vector(lhs, a.labels());
      ce.rhs = format_vector(rhs, a.labels());
      return fail_report(std::move(name), std::move(ce));
    }
  } while (next_tuple(t, d));
  return pass_report(std::move(name));
}

inline CheckReport check_centroid_membership(const HomAlgebra& a, int k, const EndoMap& theta) {
  return check_centroid_with_insertion(a, a.alpha_power(k), theta);
}

/// E^(n)([x1..xn]) = sum_i [ins(x1),...,E^(i-1)(x_i),...,ins(xn)] for an
/// (n+1)-tuple (E^(0),...,E^(n)) on all basis tuples.
inline CheckReport check_gder_with_insertion(const HomAlgebra& a, const EndoMap& ins,
                                             const std::vector<EndoMap>& tuple,
                                             std::string name = "gder_membership") {
  const int n = a.arity();
  const int d = a.dim();
  if (static_cast<int>(tuple.size()) != n + 1)
    throw DimensionError("generalized derivation tuple must have arity+1 entries");
  std::vector<Vec> ins_cols = detail::endo_columns(ins);

  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    Vec lhs = tuple.back().apply(a.bracket_on_basis(t));
    Vec rhs = zero_vec(static_cast<std::size_t>(d));
    std::vector<Vec> args;
    for (int i : t) args.push_back(ins_cols[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) {
      Vec saved = args[static_cast<std::size_t>(i)];
      args[static_cast<std::size_t>(i)] =
          tuple[static_cast<std::size_t>(i)].apply_basis(t[static_cast<std::size_t>(i)]);
      add_scaled(rhs, Scalar(1), eval_bracket(a, args));
      args[static_cast<std::size_t>(i)] = std::move(saved);
    }
    if (lhs != rhs) {
      Counterexample ce;
      ce.tuples = {t};
      ce.lhs = format_vector(lhs, a.labels());
      ce.rhs = format_vector(rhs, a.labels());
      return fail_report(std::move(name), std::move(ce));
    }
  } while (next_tuple(t, d));
  return pass_report(std::move(name));
}

inline CheckReport check_gder_membership(const HomAlgebra& a, int k,
                                         const std::vector<EndoMap>& tuple) {
  return check_gder_with_insertion(a, a.alpha_power(k), tuple);
}

// ---- solvers ---------------------------------------------------------------

/// All D with D.alpha = alpha.D and the twisted Leibniz rule. d^2 unknowns.
inline SolutionSpace solve_derivations(const HomAlgebra& a, int k) {
  const int n = a.arity();
  const int d = a.dim();
  const std::size_t unknowns = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  const EndoMap& al = a.alpha();
  std::vector<Vec> ins_cols = detail::endo_columns(al.power(k));

  std::vector<Vec> rows;
  // commutation block: (D alpha - alpha D)(i,j) = 0
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec row(unknowns, Scalar(0));
      for (int m = 0; m < d; ++m) {
        row[detail::uidx(0, i, m, d)] += al.matrix().at(static_cast<std::size_t>(m), static_cast<std::size_t>(j));
        row[detail::uidx(0, m, j, d)] -= al.matrix().at(static_cast<std::size_t>(i), static_cast<std::size_t>(m));
      }
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  // Leibniz block per basis tuple and output coordinate
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    const Vec& ct = a.bracket_on_basis(t);
    auto v = detail::slot_replacements(a, ins_cols, t);
    for (int r = 0; r < d; ++r) {
      Vec row(unknowns, Scalar(0));
      for (int m = 0; m < d; ++m) row[detail::uidx(0, r, m, d)] += ct[static_cast<std::size_t>(m)];
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < d; ++m)
          row[detail::uidx(0, m, t[static_cast<std::size_t>(i)], d)] -=
              v[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  } while (next_tuple(t, d));

  Matrix sys = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows);
  return SolutionSpace{SolutionKind::derivation, k, 1, d, kernel_basis(sys)};
}

/// All pairs (D, D') with sum_i [a^k(x1),...,D(x_i),...,a^k(xn)] = D'([x1..xn]).
/// No commutation with alpha is imposed on D.
inline SolutionSpace solve_quasiderivations(const HomAlgebra& a, int k) {
  const int n = a.arity();
  const int d = a.dim();
  const std::size_t unknowns = 2u * static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<Vec> ins_cols = detail::endo_columns(a.alpha_power(k));

  std::vector<Vec> rows;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    const Vec& ct = a.bracket_on_basis(t);
    auto v = detail::slot_replacements(a, ins_cols, t);
    for (int r = 0; r < d; ++r) {
      Vec row(unknowns, Scalar(0));
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < d; ++m)
          row[detail::uidx(0, m, t[static_cast<std::size_t>(i)], d)] +=
              v[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
      for (int m = 0; m < d; ++m) row[detail::uidx(1, r, m, d)] -= ct[static_cast<std::size_t>(m)];
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  } while (next_tuple(t, d));

  Matrix sys = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows);
  return SolutionSpace{SolutionKind::quasiderivation, k, 2, d, kernel_basis(sys)};
}

/// All theta with theta([x1..xn]) = [theta(x1), a^k(x2), ..., a^k(xn)].
inline SolutionSpace solve_centroid(const HomAlgebra& a, int k) {
  const int n = a.arity();
  const int d = a.dim();
  const std::size_t unknowns = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<Vec> ins_cols = detail::endo_columns(a.alpha_power(k));

  std::vector<Vec> rows;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    const Vec& ct = a.bracket_on_basis(t);
    // W[m] = [e_m, a^k(x2), ..., a^k(xn)]
    std::vector<Vec> args;
    args.emplace_back();
    for (std::size_t i = 1; i < t.size(); ++i)
      args.push_back(ins_cols[static_cast<std::size_t>(t[i])]);
    std::vector<Vec> w;
    for (int m = 0; m < d; ++m) {
      args[0] = unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(m));
      w.push_back(eval_bracket(a, args));
    }
    for (int r = 0; r < d; ++r) {
      Vec row(unknowns, Scalar(0));
      for (int m = 0; m < d; ++m) {
        row[detail::uidx(0, r, m, d)] += ct[static_cast<std::size_t>(m)];
        row[detail::uidx(0, m, t[0], d)] -= w[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
      }
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  } while (next_tuple(t, d));

  Matrix sys = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows);
  return SolutionSpace{SolutionKind::centroid, k, 1, d, kernel_basis(sys)};
}

/// All (n+1)-tuples (D^(0),...,D^(n)) satisfying the generalized identity.
inline SolutionSpace solve_generalized(const HomAlgebra& a, int k) {
  const int n = a.arity();
  const int d = a.dim();
  const std::size_t unknowns =
      static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<Vec> ins_cols = detail::endo_columns(a.alpha_power(k));

  std::vector<Vec> rows;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  do {
    const Vec& ct = a.bracket_on_basis(t);
    auto v = detail::slot_replacements(a, ins_cols, t);
    for (int r = 0; r < d; ++r) {
      Vec row(unknowns, Scalar(0));
      for (int m = 0; m < d; ++m) row[detail::uidx(n, r, m, d)] += ct[static_cast<std::size_t>(m)];
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < d; ++m)
          row[detail::uidx(i, m, t[static_cast<std::size_t>(i)], d)] -=
              v[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
      if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
  } while (next_tuple(t, d));

  Matrix sys = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows);
  return SolutionSpace{SolutionKind::generalized, k, n + 1, d, kernel_basis(sys)};
}

/// Span of ad_k over all (n-1)-tuples from a basis of the alpha-fixed
/// subspace Fix(alpha) = ker(alpha - id). Members are inner
/// alpha^{k+1}-derivations.
inline SolutionSpace inner_space(const HomAlgebra& a, int k) {
  const int n = a.arity();
  const int d = a.dim();
  const EndoMap& al = a.alpha();
  Subspace fix = kernel_basis(al.matrix() - Matrix::identity(static_cast<std::size_t>(d)));

  std::vector<Vec> flats;
  const std::size_t s = fix.dim();
  if (s > 0) {
    std::vector<int> pick(static_cast<std::size_t>(n - 1), 0);
    do {
      std::vector<Vec> x;
      for (int p : pick) x.push_back(fix.basis()[static_cast<std::size_t>(p)]);
      flats.push_back(flatten_endos({ad_k(a, x, k)}));
    } while (next_tuple(pick, static_cast<int>(s)));
  }
  return SolutionSpace{SolutionKind::inner, k, 1, d,
                       Subspace::from_spanning(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), flats)};
}

inline EndoMap commutator(const EndoMap& d1, const EndoMap& d2) {
  if (d1.dim() != d2.dim()) throw DimensionError("commutator of maps of different dimension");
  return EndoMap(d1.matrix() * d2.matrix() - d2.matrix() * d1.matrix());
}

}  // namespace homnambu
