#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "homnambu/scalar.hpp"

namespace homnambu {

enum class CheckStatus {
  pass,
  fail,
  precondition_failed,   // the input does not satisfy the check's hypothesis on itself
  hypothesis_not_met,    // a side condition fails, so no claim is made either way
};

inline const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::precondition_failed: return "precondition-failed";
    case CheckStatus::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "?";
}

/// First offending instance of a failed identity, in deterministic
/// (lexicographically first) order. lhs/rhs are preformatted by the check
/// that produced them, with the algebra's basis labels.
struct Counterexample {
  std::vector<std::vector<int>> tuples;
  std::string lhs;
  std::string rhs;
  std::string context;
};

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  CheckReport() = default;
  explicit CheckReport(std::string n, CheckStatus s = CheckStatus::pass)
      : name(std::move(n)), status(s) {}

  bool passed() const { return status == CheckStatus::pass; }
};

inline CheckReport pass_report(std::string name) { return CheckReport{std::move(name)}; }

inline CheckReport fail_report(std::string name, Counterexample ce) {
  CheckReport r{std::move(name), CheckStatus::fail};
  r.counterexample = std::move(ce);
  return r;
}

// ---- formatting --------------------------------------------------------

/// "2 H + -1/2 Y" style linear combination over the given labels; "0" if zero.
inline std::string format_vector(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::string term;
    if (v[i] == 1)
      term = labels[i];
    else if (v[i] == -1)
      term = "-" + labels[i];
    else
      term = scalar_to_string(v[i]) + " " + labels[i];
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

inline std::string format_tuple(const std::vector<int>& t,
                                const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += labels.at(static_cast<std::size_t>(t[i]));
  }
  return out + ")";
}

/// Human summary line followed by a machine-readable key:value block.
inline void print_report(std::ostream& os, const CheckReport& r,
                         const std::vector<std::string>& labels) {
  std::string word = status_word(r.status);
  for (auto& ch : word) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  os << r.name << ": " << word << "\n";
  os << "  check: " << r.name << "\n";
  os << "  result: " << status_word(r.status) << "\n";
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    if (!ce.tuples.empty()) {
      os << "  tuples:";
      for (const auto& t : ce.tuples) os << " " << format_tuple(t, labels);
      os << "\n";
    }
    if (!ce.context.empty()) os << "  where: " << ce.context << "\n";
    if (!ce.lhs.empty()) os << "  lhs: " << ce.lhs << "\n";
    if (!ce.rhs.empty()) os << "  rhs: " << ce.rhs << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

}  // namespace homnambu
