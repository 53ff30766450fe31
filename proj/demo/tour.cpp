// A short tour of the library: build a twisted algebra, verify its
// identities, produce the induced ternary system, and solve for its
// derivation space. Build target: homnambu_tour.

#include <iostream>

#include "homnambu/homnambu.hpp"

using namespace homnambu;

int main() {
  // the twisted dim-3 family at lambda = 2
  HomAlgebra g = build_sl2(parse_scalar("2"));
  std::cout << "== " << g.name() << " ==\n";
  for (const CheckReport& r : {check_skew(g), check_multiplicative(g), check_hom_nambu(g)})
    print_report(std::cout, r, g.labels());

  // the ternary system with twist alpha^2
  NupletSystem s = build_nuplet(g, 3);
  std::cout << "\n== " << s.algebra.name() << " ==\n";
  std::cout << "[H, X, Y] = "
            << format_vector(s.algebra.bracket_on_basis({0, 1, 2}), s.algebra.labels()) << "\n";
  print_report(std::cout, check_lts_axioms(s), s.algebra.labels());

  // a cochain-induced ternary bracket on a nilpotent fixture
  HomAlgebra h4 = build_heisenberg(4);
  Cochain phi = Cochain::dual_basis(4, 3);
  InduceResult ind = induce_nbracket(h4, phi, /*verify_theorem=*/true);
  std::cout << "\n== " << ind.algebra.name() << " ==\n";
  print_report(std::cout, check_trace(h4, phi), h4.labels());
  for (const auto& r : ind.theorem_checks) print_report(std::cout, r, h4.labels());

  // exact derivation space of the fixture
  SolutionSpace der = solve_derivations(h4, 0);
  std::cout << "\ndim Der = " << der.dim() << "\n";

  std::cout << "\nserialized form:\n" << serialize_algebra(ind.algebra);
  return 0;
}
