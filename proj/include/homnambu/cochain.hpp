#pragma once

#include <map>
#include <string>
#include <vector>

#include "homnambu/algebra.hpp"

namespace homnambu {

/// Alternating p-linear scalar-valued form, stored sparsely on strictly
/// increasing basis tuples. Degree 0 is a single scalar (the empty tuple).
class Cochain {
public:
  Cochain(int ambient_dim, int degree) : ambient_(ambient_dim), degree_(degree) {
    if (ambient_ < 1) throw DimensionError("cochain ambient dimension must be positive");
    if (degree_ < 0) throw DimensionError("cochain degree must be nonnegative");
  }

  static Cochain dual_basis(int ambient_dim, int i) {
    Cochain c(ambient_dim, 1);
    c.set({i}, Scalar(1));
    return c;
  }

  /// e_{i1}* ^ ... ^ e_{ip}* for a strictly increasing index list.
  static Cochain dual_wedge(int ambient_dim, const std::vector<int>& idx) {
    Cochain c(ambient_dim, static_cast<int>(idx.size()));
    c.set(idx, Scalar(1));
    return c;
  }

  int ambient_dim() const { return ambient_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int>, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void set(const std::vector<int>& tuple, const Scalar& value) {
    if (static_cast<int>(tuple.size()) != degree_)
      throw DimensionError("cochain tuple length != degree");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] < 0 || tuple[i] >= ambient_) throw DimensionError("cochain index out of range");
      if (i + 1 < tuple.size() && tuple[i] >= tuple[i + 1])
        throw FormatError("cochain tuple must be strictly increasing");
    }
    if (value == 0)
      coeffs_.erase(tuple);
    else
      coeffs_[tuple] = value;
  }

  /// Value on an arbitrary basis tuple: zero on repeats, signed on reorderings.
  Scalar on_basis(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != degree_)
      throw DimensionError("cochain argument count != degree");
    std::vector<int> sorted = tuple;
    int sign = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i)  // insertion sort, counting swaps
      for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
        std::swap(sorted[j - 1], sorted[j]);
        sign = -sign;
      }
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1]) return Scalar(0);
    auto it = coeffs_.find(sorted);
    return it == coeffs_.end() ? Scalar(0) : Scalar(sign) * it->second;
  }

  bool operator==(const Cochain& o) const = default;

private:
  int ambient_, degree_;
  std::map<std::vector<int>, Scalar> coeffs_;
};

/// Alternating multilinear extension to arbitrary coordinate vectors:
/// sum over stored tuples t of c_t * det(args_s[t_r]).
inline Scalar eval_cochain(const Cochain& c, const std::vector<Vec>& args) {
  if (static_cast<int>(args.size()) != c.degree())
    throw DimensionError("eval_cochain: argument count != degree");
  for (const auto& v : args)
    if (static_cast<int>(v.size()) != c.ambient_dim())
      throw DimensionError("eval_cochain: argument of wrong length");
  if (c.degree() == 0) {
    auto it = c.coeffs().find({});
    return it == c.coeffs().end() ? Scalar(0) : it->second;
  }
  Scalar out(0);
  const std::size_t p = static_cast<std::size_t>(c.degree());
  for (const auto& [tuple, coeff] : c.coeffs()) {
    Matrix minor(p, p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t s = 0; s < p; ++s)
        minor.at(r, s) = args[s][static_cast<std::size_t>(tuple[r])];
    Scalar dv = det(minor);
    if (dv != 0) out += coeff * dv;
  }
  return out;
}

/// Step through strictly increasing k-tuples in [0,d); returns false after the last.
inline bool next_increasing(std::vector<int>& t, int d) {
  const int k = static_cast<int>(t.size());
  for (int i = k - 1; i >= 0; --i) {
    if (t[static_cast<std::size_t>(i)] < d - (k - i)) {
      ++t[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_increasing(int k) {
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] = i;
  return t;
}

/// Twisted coboundary of a degree-p cochain of a binary algebra:
///   (df)(u_1..u_{p+1}) = sum_{i<j} (-1)^{i+j+1}
///        f([u_i,u_j], alpha(u_1) ... ^u_i ... ^u_j ... alpha(u_{p+1})).
/// For p = 1 this reduces to df(x,y) = f([x,y]).
inline Cochain coboundary(const HomAlgebra& g, const Cochain& c) {
  if (g.arity() != 2) throw DimensionError("coboundary requires a binary algebra");
  if (c.ambient_dim() != g.dim()) throw DimensionError("cochain/algebra dimension mismatch");
  const int d = g.dim();
  const int p = c.degree();
  Cochain out(d, p + 1);
  if (p + 1 > d) return out;

  const EndoMap& al = g.twist(0);
  std::vector<Vec> al_cols;
  for (int j = 0; j < d; ++j) al_cols.push_back(al.apply_basis(j));

  std::vector<int> u = first_increasing(p + 1);
  do {
    Scalar val(0);
    for (int i = 0; i < p + 1; ++i)
      for (int j = i + 1; j < p + 1; ++j) {
        const Vec& br = g.bracket_on_basis({u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]});
        if (is_zero_vec(br)) continue;
        std::vector<Vec> args;
        args.push_back(br);
        for (int l = 0; l < p + 1; ++l)
          if (l != i && l != j) args.push_back(al_cols[static_cast<std::size_t>(u[static_cast<std::size_t>(l)])]);
        Scalar term = eval_cochain(c, args);
        // signs use 1-based slot numbers, matching the alternating-sum display
        if ((i + j) % 2 == 0) term = -term;  // (-1)^{(i+1)+(j+1)+1}
        val += term;
      }
    if (val != 0) out.set(u, val);
  } while (next_increasing(u, d));
  return out;
}

/// phi ^ d(phi_X) evaluated at Y = (y_1..y_n):
///   sum_{i<j} (-1)^{i+j} phi(y_1 .. ^y_i .. ^y_j .. y_n) * phi(X, [y_i,y_j]),
/// where X has n-3 entries (empty for n = 3, in which case phi_X = phi).
inline Scalar wedge_phi_dphi(const HomAlgebra& g, const Cochain& phi,
                             const std::vector<Vec>& x, const std::vector<Vec>& y) {
  if (g.arity() != 2) throw DimensionError("wedge_phi_dphi requires a binary algebra");
  const int n = phi.degree() + 2;
  if (static_cast<int>(x.size()) != n - 3) throw DimensionError("X must have n-3 entries");
  if (static_cast<int>(y.size()) != n) throw DimensionError("Y must have n entries");

  Scalar out(0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = eval_bracket(g, {y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]});
      if (is_zero_vec(br)) continue;
      std::vector<Vec> phix_args = x;
      phix_args.push_back(std::move(br));
      Scalar right = eval_cochain(phi, phix_args);
      if (right == 0) continue;
      std::vector<Vec> comp;
      for (int l = 0; l < n; ++l)
        if (l != i && l != j) comp.push_back(y[static_cast<std::size_t>(l)]);
      Scalar left = eval_cochain(phi, comp);
      if (left == 0) continue;
      Scalar term = left * right;
      if ((i + j) % 2 == 1) term = -term;  // (-1)^{(i+1)+(j+1)} with 1-based slots
      out += term;
    }
  return out;
}

/// Trace test: phi vanishes whenever its last slot holds a bracket value,
/// and is invariant under alpha in its first slot. Checked on basis tuples.
inline CheckReport check_trace(const HomAlgebra& g, const Cochain& phi) {
  if (g.arity() != 2) throw DimensionError("check_trace requires a binary algebra");
  if (phi.degree() < 1) throw DimensionError("check_trace requires degree >= 1");
  if (phi.ambient_dim() != g.dim()) throw DimensionError("cochain/algebra dimension mismatch");
  const int d = g.dim();
  const int p = phi.degree();

  // (a) phi(x_1 .. x_{p-1}, [y,z]) = 0
  std::vector<int> head(static_cast<std::size_t>(p - 1), 0);
  do {
    std::vector<int> yz(2, 0);
    do {
      const Vec& br = g.bracket_on_basis(yz);
      if (is_zero_vec(br)) continue;
      std::vector<Vec> args;
      for (int i : head) args.push_back(unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(i)));
      args.push_back(br);
      Scalar v = eval_cochain(phi, args);
      if (v != 0) {
        Counterexample ce;
        std::vector<int> t = head;
        t.insert(t.end(), yz.begin(), yz.end());
        ce.tuples = {t};
        ce.context = "phi with a bracket value in the last slot";
        ce.lhs = scalar_to_string(v);
        ce.rhs = "0";
        return fail_report("trace", std::move(ce));
      }
    } while (next_tuple(yz, d));
  } while (!head.empty() && next_tuple(head, d));

  // (b) phi(alpha(x_1), x_2..x_p) = phi(x_1..x_p)
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
      ce.context = "alpha-invariance in the first slot";
      ce.lhs = scalar_to_string(lhs);
      ce.rhs = scalar_to_string(rhs);
      return fail_report("trace", std::move(ce));
    }
  } while (next_tuple(t, d));

  return pass_report("trace");
}

}  // namespace homnambu
