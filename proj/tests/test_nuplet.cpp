#include <catch2/catch_amalgamated.hpp>

#include "homnambu/nuplet.hpp"
#include "homnambu/catalog.hpp"
#include "test_support.hpp"

using namespace homnambu;
using testsupport::S;

namespace {

const Vec H = unit_vec(3, 0);
const Vec X = unit_vec(3, 1);
const Vec Y = unit_vec(3, 2);

Vec v3(const std::string& a, const std::string& b, const std::string& c) {
  return Vec{S(a), S(b), S(c)};
}

/// Independent ternary evaluation [[x,y], alpha(z)], written directly.
Vec direct_ternary(const HomAlgebra& g, const Vec& x, const Vec& y, const Vec& z) {
  return eval_bracket(g, {eval_bracket(g, {x, y}), g.alpha().apply(z)});
}

}  // namespace

TEST_CASE("iterated bracket at lambda = 2") {
  HomAlgebra g = build_sl2(S("2"));
  CHECK(iterated_bracket(g, 3, {H, X, Y}) == v3("2", "0", "0"));    // 2H
  CHECK(iterated_bracket(g, 3, {H, X, H}) == v3("0", "-64", "0"));  // -4 lambda^4 X
  CHECK(iterated_bracket(g, 2, {H, X}) == v3("0", "8", "0"));       // plain bracket
  CHECK_THROWS_AS(iterated_bracket(g, 1, {H}), DimensionError);
  CHECK_THROWS_AS(iterated_bracket(g, 3, {H, X}), DimensionError);
}

TEST_CASE("ternary table of the lambda family") {
  for (const Scalar& l : {S("1"), S("2"), S("3/5")}) {
    HomAlgebra g = build_sl2(l);
    const Scalar l4 = scalar_pow(l, 4);
    NupletSystem s = build_nuplet(g, 3);
    const HomAlgebra& a = s.algebra;
    CHECK(a.bracket_on_basis({0, 1, 2}) == v3("2", "0", "0"));
    CHECK(a.bracket_on_basis({0, 1, 0}) == Vec{S("0"), S("-4") * l4, S("0")});
    CHECK(a.bracket_on_basis({0, 2, 1}) == v3("2", "0", "0"));
    CHECK(a.bracket_on_basis({0, 2, 0}) == Vec{S("0"), S("0"), S("-4") / l4});
    CHECK(a.bracket_on_basis({1, 2, 2}) == Vec{S("0"), S("0"), S("-2") / l4});
    CHECK(a.bracket_on_basis({1, 2, 1}) == Vec{S("0"), S("2") * l4, S("0")});
    // twist of the produced system is alpha^2
    CHECK(a.twist(0) == g.alpha().power(2));
    CHECK(a.multiplicative_flagged());

    // first-two-slot alternation does not extend to full skew-symmetry:
    // [H,X,H] is nonzero, so check_skew must reject the ternary table
    CHECK_FALSE(check_skew(a).passed());

    // entry-by-entry agreement with the direct composition [[x,y], alpha(z)]
    std::vector<int> t(3, 0);
    do {
      CHECK(a.bracket_on_basis(t) ==
            direct_ternary(g, unit_vec(3, static_cast<std::size_t>(t[0])),
                 unit_vec(3, static_cast<std::size_t>(t[1])),
                 unit_vec(3, static_cast<std::size_t>(t[2]))));
    } while (next_tuple(t, 3));
  }
}

TEST_CASE("4-ary table of the lambda family") {
  for (const Scalar& l : {S("1"), S("2"), S("3/5")}) {
    HomAlgebra g = build_sl2(l);
    const Scalar l6 = scalar_pow(l, 6);
    NupletSystem s = build_nuplet(g, 4);
    const HomAlgebra& a = s.algebra;
    auto xv = [&](const Scalar& c) { return Vec{S("0"), c, S("0")}; };
    auto yv = [&](const Scalar& c) { return Vec{S("0"), S("0"), c}; };
    auto hv = [&](const Scalar& c) { return Vec{c, S("0"), S("0")}; };

    CHECK(a.bracket_on_basis({0, 1, 0, 0}) == xv(S("8") * l6));
    CHECK(a.bracket_on_basis({0, 1, 0, 2}) == hv(S("-4")));
    CHECK(a.bracket_on_basis({0, 2, 0, 0}) == yv(S("-8") / l6));
    CHECK(a.bracket_on_basis({0, 2, 0, 1}) == hv(S("4")));
    CHECK(a.bracket_on_basis({0, 1, 2, 1}) == xv(S("4") * l6));
    CHECK(a.bracket_on_basis({0, 1, 2, 2}) == yv(S("-4") / l6));
    CHECK(a.bracket_on_basis({0, 2, 1, 1}) == xv(S("4") * l6));
    CHECK(a.bracket_on_basis({0, 2, 1, 2}) == yv(S("-4") / l6));
    CHECK(a.bracket_on_basis({1, 2, 1, 2}) == hv(S("2")));
    CHECK(a.bracket_on_basis({1, 2, 1, 0}) == xv(S("-4") * l6));
    CHECK(a.bracket_on_basis({1, 2, 2, 1}) == hv(S("2")));
    CHECK(a.bracket_on_basis({1, 2, 2, 0}) == yv(S("-4") / l6));

    CHECK(a.twist(0) == g.alpha().power(3));

    // every entry equals the once-more-iterated ternary value
    NupletSystem s3 = build_nuplet(g, 3);
    EndoMap a2 = g.alpha().power(2);
    std::vector<int> t(4, 0);
    do {
      Vec inner = s3.algebra.bracket_on_basis({t[0], t[1], t[2]});
      Vec expect = eval_bracket(g, {inner, a2.apply_basis(t[3])});
      CHECK(a.bracket_on_basis(t) == expect);
    } while (next_tuple(t, 3));
  }
}

TEST_CASE("worked 4-ary instances at lambda = 2") {
  HomAlgebra g = build_sl2(S("2"));
  NupletSystem s = build_nuplet(g, 4);
  CHECK(s.algebra.bracket_on_basis({0, 1, 0, 0}) == v3("0", "512", "0"));  // 8 lambda^6 X
  CHECK(s.algebra.bracket_on_basis({1, 2, 1, 2}) == v3("2", "0", "0"));
}

TEST_CASE("zero algebra produces the zero system") {
  HomAlgebra z("z", 3, 2, {EndoMap::identity(3)}, {}, true, true);
  CHECK(build_nuplet(z, 4).algebra.table().empty());
}

TEST_CASE("axiom suites for the produced systems") {
  for (const Scalar& l : {S("1"), S("2"), S("3/5")}) {
    HomAlgebra g = build_sl2(l);
    CHECK(check_lts_axioms(build_nuplet(g, 3)).passed());
    CHECK(check_nuplet_axioms(build_nuplet(g, 3)).passed());
    CHECK(check_nuplet_axioms(build_nuplet(g, 4)).passed());
  }
  // spot value of the cyclic sum
  HomAlgebra g = build_sl2(S("2"));
  NupletSystem s = build_nuplet(g, 3);
  Vec sum = s.algebra.bracket_on_basis({0, 1, 2});           // 2H
  add_scaled(sum, S("1"), s.algebra.bracket_on_basis({1, 2, 0}));  // 0
  add_scaled(sum, S("1"), s.algebra.bracket_on_basis({2, 0, 1}));  // -2H
  CHECK(is_zero_vec(sum));

  // a zero ternary bracket passes everything
  HomAlgebra zt("zt", 3, 3, {EndoMap::identity(3), EndoMap::identity(3)}, {}, true, true);
  CHECK(check_lts_axioms(zt).passed());
  CHECK(check_nuplet_axioms(zt).passed());
}

TEST_CASE("perturbing the produced system breaks an axiom") {
  HomAlgebra g = build_sl2(S("2"));
  NupletSystem s = build_nuplet(g, 3);
  BracketTable table = s.algebra.table();
  table[{0, 1, 2}][0] += 1;  // 2H -> 3H
  HomAlgebra mutated("m", 3, 3, s.algebra.twists(), table, false, false);
  CheckReport lts = check_lts_axioms(mutated);
  CheckReport nup = check_nuplet_axioms(mutated);
  CHECK((!lts.passed() || !nup.passed()));
}

TEST_CASE("build_nuplet rejects sources failing their checks") {
  BracketTable t;
  t[{0, 1}] = v3("0", "0", "1");
  t[{1, 0}] = v3("0", "0", "1");  // symmetric, not skew
  HomAlgebra bad("bad", 3, 2, {EndoMap::identity(3)}, t, false, false);
  CHECK_THROWS_AS(build_nuplet(bad, 3), PreconditionError);
}

TEST_CASE("twisting a classical algebra by an automorphism") {
  HomAlgebra classical = build_sl2(S("1"));
  EndoMap al = EndoMap::diagonal({S("1"), S("4"), S("1/4")});  // alpha_lambda at lambda = 2
  HomAlgebra twisted = twist_by_endo(classical, al);
  HomAlgebra expect = build_sl2(S("2"));
  CHECK(twisted.table() == expect.table());
  CHECK(twisted.twist(0) == expect.twist(0));
  CHECK(twisted.multiplicative_flagged());

  // identity leaves everything in place
  HomAlgebra same = twist_by_endo(classical, EndoMap::identity(3));
  CHECK(same.table() == classical.table());
  CHECK(same.twist(0) == classical.twist(0));

  // dim-3 nilpotent example: e1 -> 2e1, e3 -> 2e3 scales the bracket
  HomAlgebra h3 = build_heisenberg(3);
  HomAlgebra h3t = twist_by_endo(h3, EndoMap::diagonal({S("2"), S("1"), S("2")}));
  CHECK(h3t.bracket_on_basis({0, 1}) == v3("0", "0", "2"));

  // incompatible maps are rejected: e3 -> 2e3 alone breaks compatibility
  CHECK_THROWS_AS(twist_by_endo(h3, EndoMap::diagonal({S("1"), S("1"), S("2")})),
                  PreconditionError);
}

TEST_CASE("twisting an untwisted produced system keeps the axioms") {
  HomAlgebra classical = build_sl2(S("1"));
  NupletSystem lts = build_nuplet(classical, 3);  // twist is the identity
  EndoMap al = EndoMap::diagonal({S("1"), S("4"), S("1/4")});
  HomAlgebra twisted = twist_by_endo(lts.algebra, al);
  CHECK(check_nuplet_axioms(twisted).passed());
}

TEST_CASE("binary adjoint acts as a derivation of the iterated bracket") {
  // ad twisted by alpha^{n-1} on the outside, alpha inserted slotwise inside
  HomAlgebra g = build_sl2(S("2"));
  for (int n : {3, 4}) {
    EndoMap an1 = g.alpha().power(n - 1);
    std::vector<int> yt(static_cast<std::size_t>(n), 0);
    do {
      for (int x = 0; x < 3; ++x) {
        std::vector<Vec> ys;
        for (int i : yt) ys.push_back(unit_vec(3, static_cast<std::size_t>(i)));
        Vec lhs = eval_bracket(g, {an1.apply_basis(x), iterated_bracket(g, n, ys)});
        Vec rhs = zero_vec(3);
        for (int kslot = 0; kslot < n; ++kslot) {
          std::vector<Vec> args;
          for (int i = 0; i < n; ++i) {
            if (i == kslot)
              args.push_back(eval_bracket(g, {unit_vec(3, static_cast<std::size_t>(x)),
                                              ys[static_cast<std::size_t>(i)]}));
            else
              args.push_back(g.alpha().apply(ys[static_cast<std::size_t>(i)]));
          }
          add_scaled(rhs, S("1"), iterated_bracket(g, n, args));
        }
        CHECK(lhs == rhs);
      }
    } while (next_tuple(yt, 3));
  }
}

TEST_CASE("derivation transfer to the produced system") {
  HomAlgebra classical = build_sl2(S("1"));
  EndoMap adH = ad(classical, {H});
  CHECK(check_derivation_transfer_n(classical, 3, adH, 0).passed());
  CHECK(check_derivation_transfer_n(classical, 3, EndoMap::zero(3), 0).passed());
  CHECK(check_derivation_transfer_n(classical, 4, adH, 0).passed());

  // twisted case: ad_H lies in the alpha^1-derivations of the lambda family
  HomAlgebra g = build_sl2(S("2"));
  EndoMap adH2 = ad(g, {H});
  REQUIRE(check_derivation_membership(g, 1, adH2).passed());
  CHECK(check_derivation_transfer_n(g, 3, adH2, 1).passed());
  CHECK(check_derivation_transfer_n(g, 4, adH2, 1).passed());

  // a non-derivation is reported at the precondition stage
  CheckReport rep = check_derivation_transfer_n(g, 3, EndoMap::diagonal({S("1"), S("0"), S("0")}), 0);
  CHECK(rep.status == CheckStatus::precondition_failed);
}

TEST_CASE("chain transfer to the produced system") {
  for (const HomAlgebra& g : {build_sl2(S("2")), build_heisenberg(3)}) {
    std::vector<EndoMap> chain = {EndoMap::identity(3), EndoMap::identity(3).scaled(S("2")),
                                  EndoMap::identity(3).scaled(S("4"))};
    CHECK(check_gder_chain(g, 3, chain, 0).passed());

    std::vector<EndoMap> zeros(3, EndoMap::zero(3));
    CHECK(check_gder_chain(g, 3, zeros, 0).passed());
  }

  HomAlgebra classical = build_sl2(S("1"));
  EndoMap adH = ad(classical, {H});
  std::vector<EndoMap> constant(3, adH);
  CHECK(check_gder_chain(classical, 3, constant, 0).passed());

  // a broken pair is reported with its position
  std::vector<EndoMap> broken = {EndoMap::identity(3), EndoMap::identity(3).scaled(S("3")),
                                 EndoMap::identity(3).scaled(S("4"))};
  CheckReport rep = check_gder_chain(classical, 3, broken, 0);
  CHECK(rep.status == CheckStatus::precondition_failed);
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes[0].find("D^(0)") != std::string::npos);

  CHECK_THROWS_AS(check_gder_chain(classical, 3, {adH}, 0), DimensionError);
}

TEST_CASE("the two recursion readings differ exactly when the twist bites") {
  HomAlgebra g = build_sl2(S("2"));
  auto t3 = recursion_reading_discrepancy(g, 3);
  REQUIRE(t3.has_value());
  CHECK(*t3 == std::vector<int>{0, 1, 2});  // [[H,X], Y] vs [[H,X], alpha(Y)]

  CHECK_FALSE(recursion_reading_discrepancy(build_sl2(S("1")), 3).has_value());
  CHECK_FALSE(recursion_reading_discrepancy(build_heisenberg(3), 4).has_value());
}
