#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "homnambu/matrix.hpp"
#include "homnambu/report.hpp"

namespace homnambu {

/// Linear self-map of the algebra carrier as an exact d x d matrix.
class EndoMap {
public:
  explicit EndoMap(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionError("endomorphism matrix must be square");
  }

  static EndoMap identity(std::size_t d) { return EndoMap(Matrix::identity(d)); }
  static EndoMap zero(std::size_t d) { return EndoMap(Matrix(d, d)); }
  static EndoMap diagonal(const Vec& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return EndoMap(std::move(m));
  }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  Vec apply(const Vec& v) const { return m_.apply(v); }
  Vec apply_basis(int j) const { return m_.col(static_cast<std::size_t>(j)); }

  EndoMap compose(const EndoMap& inner) const { return EndoMap(m_ * inner.m_); }

  /// k-fold composition; by convention power(0) = id and power(-1) = 0.
  EndoMap power(int k) const {
    if (k < -1) throw PreconditionError("twist exponent below -1");
    if (k == -1) return zero(dim());
    EndoMap acc = identity(dim());
    for (int i = 0; i < k; ++i) acc = acc.compose(*this);
    return acc;
  }

  EndoMap scaled(const Scalar& c) const { return EndoMap(m_.scaled(c)); }
  EndoMap plus(const EndoMap& o) const { return EndoMap(m_ + o.m_); }
  EndoMap minus(const EndoMap& o) const { return EndoMap(m_ - o.m_); }

  bool operator==(const EndoMap& o) const = default;

private:
  Matrix m_;
};

/// Raw bracket datum: the value of the bracket on one basis-index tuple.
struct BracketEntry {
  std::vector<int> indices;
  Vec value;
};

using BracketTable = std::map<std::vector<int>, Vec>;

/// Finite-dimensional n-ary algebra given by structure constants, with a
/// family of n-1 twisting maps. The table is keyed by full index tuples;
/// absent tuples mean zero. The skew / multiplicative flags are metadata set
/// by constructors and verified by check_skew / check_multiplicative, never
/// silently assumed by the checkers themselves.
class HomAlgebra {
public:
  HomAlgebra(std::string name, int dim, int arity, std::vector<EndoMap> twists,
             BracketTable table, bool skew_flag, bool multiplicative_flag,
             std::vector<std::string> labels = {})
      : name_(std::move(name)),
        dim_(dim),
        arity_(arity),
        twists_(std::move(twists)),
        table_(std::move(table)),
        skew_flag_(skew_flag),
        multiplicative_flag_(multiplicative_flag),
        labels_(std::move(labels)),
        zero_(zero_vec(static_cast<std::size_t>(dim))) {
    if (dim_ < 1) throw DimensionError("algebra dimension must be positive");
    if (arity_ < 2) throw DimensionError("bracket arity must be at least 2");
    if (static_cast<int>(twists_.size()) != arity_ - 1)
      throw DimensionError("expected arity-1 twisting maps");
    for (const auto& a : twists_)
      if (static_cast<int>(a.dim()) != dim_) throw DimensionError("twist size != algebra dim");
    if (labels_.empty())
      for (int i = 1; i <= dim_; ++i) labels_.push_back("e" + std::to_string(i));
    if (static_cast<int>(labels_.size()) != dim_)
      throw DimensionError("label count != algebra dim");
    for (auto it = table_.begin(); it != table_.end();) {
      validate_tuple(it->first);
      if (it->second.size() != static_cast<std::size_t>(dim_))
        throw DimensionError("structure-constant vector of wrong length");
      it = is_zero_vec(it->second) ? table_.erase(it) : std::next(it);
    }
  }

  /// Constructor enforcing the skew flag from values on strictly increasing
  /// tuples: the table is extended by permutation sign, tuples with a
  /// repeated index are zero, and duplicate specifications are rejected.
  static HomAlgebra from_increasing_brackets(std::string name, int dim, int arity,
                                             std::vector<EndoMap> twists,
                                             const std::vector<BracketEntry>& entries,
                                             bool multiplicative_flag,
                                             std::vector<std::string> labels = {}) {
    BracketTable table;
    std::map<std::vector<int>, bool> seen;
    for (const auto& e : entries) {
      if (static_cast<int>(e.indices.size()) != arity)
        throw FormatError("bracket tuple arity mismatch");
      for (std::size_t i = 0; i + 1 < e.indices.size(); ++i)
        if (e.indices[i] >= e.indices[i + 1])
          throw FormatError("bracket tuple must be strictly increasing");
      if (seen.count(e.indices)) throw FormatError("duplicate bracket tuple");
      seen[e.indices] = true;
      if (is_zero_vec(e.value)) continue;
      std::vector<int> perm = e.indices;
      std::sort(perm.begin(), perm.end());
      do {
        table[perm] = permutation_sign(e.indices, perm) > 0 ? e.value
                                                            : vec_scale(Scalar(-1), e.value);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return HomAlgebra(std::move(name), dim, arity, std::move(twists), std::move(table),
                      /*skew=*/true, multiplicative_flag, std::move(labels));
  }

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& table() const { return table_; }
  bool skew_flagged() const { return skew_flag_; }
  bool multiplicative_flagged() const { return multiplicative_flag_; }

  const EndoMap& twist(int i) const { return twists_.at(static_cast<std::size_t>(i)); }
  const std::vector<EndoMap>& twists() const { return twists_; }

  bool twists_all_equal() const {
    for (std::size_t i = 1; i < twists_.size(); ++i)
      if (!(twists_[i] == twists_[0])) return false;
    return true;
  }

  /// The single structure map of a multiplicative algebra.
  const EndoMap& alpha() const {
    if (!twists_all_equal())
      throw PreconditionError("algebra has distinct twisting maps; no single alpha");
    return twists_[0];
  }

  EndoMap alpha_power(int k) const { return alpha().power(k); }

  /// Structure-constant vector of a basis tuple (zero when absent).
  const Vec& bracket_on_basis(const std::vector<int>& t) const {
    auto it = table_.find(t);
    return it == table_.end() ? zero_ : it->second;
  }

  bool operator==(const HomAlgebra& o) const {
    return dim_ == o.dim_ && arity_ == o.arity_ && table_ == o.table_ &&
           twists_ == o.twists_ && skew_flag_ == o.skew_flag_ &&
           multiplicative_flag_ == o.multiplicative_flag_ && labels_ == o.labels_ &&
           name_ == o.name_;
  }

  static int permutation_sign(const std::vector<int>& from, const std::vector<int>& to) {
    // parity of the rearrangement taking `from` to `to` (distinct entries)
    std::vector<int> work = from;
    int sign = 1;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i] == to[i]) continue;
      const auto it = std::find(work.begin() + static_cast<long>(i) + 1, work.end(), to[i]);
      std::iter_swap(work.begin() + static_cast<long>(i), it);
      sign = -sign;
    }
    return sign;
  }

private:
  void validate_tuple(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != arity_) throw DimensionError("tuple arity mismatch");
    for (int i : t)
      if (i < 0 || i >= dim_) throw DimensionError("basis index out of range");
  }

  std::string name_;
  int dim_, arity_;
  std::vector<EndoMap> twists_;
  BracketTable table_;
  bool skew_flag_, multiplicative_flag_;
  std::vector<std::string> labels_;
  Vec zero_;
};

// ---- tuple enumeration --------------------------------------------------

/// Odometer step through [0,d)^len in lexicographic order (first slot most
/// significant). Returns false after the last tuple.
inline bool next_tuple(std::vector<int>& t, int d) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < d) return true;
    t[i] = 0;
  }
  return false;
}

// ---- operations ----------------------------------------------------------

/// Multilinear extension of the structure constants to arbitrary coordinate
/// vectors: linear in every slot.
inline Vec eval_bracket(const HomAlgebra& a, const std::vector<Vec>& args) {
  if (static_cast<int>(args.size()) != a.arity())
    throw DimensionError("eval_bracket: argument count != arity");
  for (const auto& v : args)
    if (static_cast<int>(v.size()) != a.dim())
      throw DimensionError("eval_bracket: argument of wrong length");
  Vec out = zero_vec(static_cast<std::size_t>(a.dim()));
  for (const auto& [tuple, value] : a.table()) {
    Scalar coeff(1);
    bool dead = false;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      const Scalar& f = args[k][static_cast<std::size_t>(tuple[k])];
      if (f == 0) {
        dead = true;
        break;
      }
      if (f != 1) coeff *= f;
    }
    if (!dead) add_scaled(out, coeff, value);
  }
  return out;
}

/// Skew-symmetry on all basis tuples and transpositions; sufficient for the
/// full sign law by multilinearity.
inline CheckReport check_skew(const HomAlgebra& a) {
  CheckReport rep = pass_report("skew");
  std::vector<int> t(static_cast<std::size_t>(a.arity()), 0);
  do {
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        std::vector<int> s = t;
        std::swap(s[i], s[j]);
        const Vec& lhs = a.bracket_on_basis(s);
        Vec rhs = vec_scale(Scalar(-1), a.bracket_on_basis(t));
        if (lhs != rhs) {
          Counterexample ce;
          ce.tuples = {t, s};
          ce.context = "swapping slots " + std::to_string(i + 1) + " and " +
                       std::to_string(j + 1) + " must negate the value";
          ce.lhs = format_vector(lhs, a.labels());
          ce.rhs = format_vector(rhs, a.labels());
          return fail_report("skew", std::move(ce));
        }
      }
  } while (next_tuple(t, a.dim()));
  return rep;
}

/// Twisted fundamental identity on all (2n-1)-tuples of basis vectors; for
/// n = 2 this is the Hom-Jacobi condition in adjoint form.
inline CheckReport check_hom_nambu(const HomAlgebra& a) {
  const int n = a.arity();
  const int d = a.dim();
  // columns of the twisting maps, indexed [slot][basis index]
  std::vector<std::vector<Vec>> tw(static_cast<std::size_t>(n - 1));
  for (int s = 0; s < n - 1; ++s)
    for (int j = 0; j < d; ++j) tw[static_cast<std::size_t>(s)].push_back(a.twist(s).apply_basis(j));

  std::vector<int> xs(static_cast<std::size_t>(n - 1), 0);
  std::vector<Vec> lhs_args(static_cast<std::size_t>(n));
  std::vector<Vec> term(static_cast<std::size_t>(n));
  do {
    for (int s = 0; s < n - 1; ++s)
      lhs_args[static_cast<std::size_t>(s)] =
          tw[static_cast<std::size_t>(s)][static_cast<std::size_t>(xs[static_cast<std::size_t>(s)])];

    std::vector<int> ys(static_cast<std::size_t>(n), 0);
    do {
      lhs_args.back() = a.bracket_on_basis(ys);
      Vec lhs = eval_bracket(a, lhs_args);

      Vec rhs = zero_vec(static_cast<std::size_t>(d));
      std::vector<int> inner = xs;
      inner.push_back(0);
      // twisted y-columns fill the buffer once; slot i is swapped in and out
      for (int s = 0; s < n - 1; ++s)
        term[static_cast<std::size_t>(s)] =
            tw[static_cast<std::size_t>(s)][static_cast<std::size_t>(ys[static_cast<std::size_t>(s)])];
      for (int i = n - 1; i >= 0; --i) {
        // entering slot i: slots > i must hold twist s-1 of y_s
        if (i < n - 1)
          term[static_cast<std::size_t>(i + 1)] =
              tw[static_cast<std::size_t>(i)][static_cast<std::size_t>(ys[static_cast<std::size_t>(i + 1)])];
        inner.back() = ys[static_cast<std::size_t>(i)];
        Vec saved = std::move(term[static_cast<std::size_t>(i)]);
        term[static_cast<std::size_t>(i)] = a.bracket_on_basis(inner);
        add_scaled(rhs, Scalar(1), eval_bracket(a, term));
        term[static_cast<std::size_t>(i)] = std::move(saved);
      }

      if (lhs != rhs) {
        Counterexample ce;
        ce.tuples = {xs, ys};
        ce.context = "fundamental identity with twisted x-tuple and y-tuple";
        ce.lhs = format_vector(lhs, a.labels());
        ce.rhs = format_vector(rhs, a.labels());
        return fail_report("hom_nambu", std::move(ce));
      }
    } while (next_tuple(ys, d));
  } while (next_tuple(xs, d));
  return pass_report("hom_nambu");
}

/// All twists equal and alpha([x1..xn]) = [alpha(x1)..alpha(xn)] on every
/// basis tuple.
inline CheckReport check_multiplicative(const HomAlgebra& a) {
  if (!a.twists_all_equal()) {
    CheckReport r{"multiplicative", CheckStatus::fail};
    r.notes.push_back("twisting maps are not all equal");
    return r;
  }
  const EndoMap& al = a.twist(0);
  const int d = a.dim();
  std::vector<Vec> cols;
  for (int j = 0; j < d; ++j) cols.push_back(al.apply_basis(j));

  std::vector<int> t(static_cast<std::size_t>(a.arity()), 0);
  do {
    Vec lhs = al.apply(a.bracket_on_basis(t));
    std::vector<Vec> args;
    for (int i : t) args.push_back(cols[static_cast<std::size_t>(i)]);
    Vec rhs = eval_bracket(a, args);
    if (lhs != rhs) {
      Counterexample ce;
      ce.tuples = {t};
      ce.context = "alpha(bracket) vs bracket(alpha,...,alpha)";
      ce.lhs = format_vector(lhs, a.labels());
      ce.rhs = format_vector(rhs, a.labels());
      return fail_report("multiplicative", std::move(ce));
    }
  } while (next_tuple(t, a.dim()));
  return pass_report("multiplicative");
}

/// Matrix of y -> [x1,...,x_{n-1}, y].
inline EndoMap ad(const HomAlgebra& a, const std::vector<Vec>& x) {
  if (static_cast<int>(x.size()) != a.arity() - 1)
    throw DimensionError("ad: expected arity-1 arguments");
  const int d = a.dim();
  Matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  std::vector<Vec> args = x;
  args.emplace_back();
  for (int j = 0; j < d; ++j) {
    args.back() = unit_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(j));
    Vec col = eval_bracket(a, args);
    for (int i = 0; i < d; ++i)
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[static_cast<std::size_t>(i)];
  }
  return EndoMap(std::move(m));
}

/// Matrix of y -> [x1,...,x_{n-1}, alpha^k(y)] for an alpha-fixed tuple X of
/// a multiplicative algebra. Members land in the alpha^{k+1}-derivations.
inline EndoMap ad_k(const HomAlgebra& a, const std::vector<Vec>& x, int k) {
  const EndoMap& al = a.alpha();
  for (const auto& v : x)
    if (al.apply(v) != v)
      throw PreconditionError("ad_k requires every entry of X to be fixed by alpha");
  return EndoMap(ad(a, x).matrix() * al.power(k).matrix());
}

}  // namespace homnambu
