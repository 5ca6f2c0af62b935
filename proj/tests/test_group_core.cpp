#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "pgi/pgi.hpp"

using namespace pgi;

namespace {

Group a4() {
  return group_from_permutations({Permutation::from_cycles(4, {{0, 1, 2}}),
                                  Permutation::from_cycles(4, {{1, 2, 3}})});
}

Group a5() {
  return group_from_permutations({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                  Permutation::from_cycles(5, {{0, 1, 2}})});
}

} // namespace

TEST_CASE("closure of a 3-cycle is cyclic of order 3") {
  Group g = group_from_permutations({Permutation::from_cycles(3, {{0, 1, 2}})});
  REQUIRE(g.order() == 3);
  REQUIRE(g.abelian());
  REQUIRE(verify_group_axioms(g));
}

TEST_CASE("standard generators close to A4 and A5") {
  REQUIRE(a4().order() == 12);
  REQUIRE(a5().order() == 60);
  REQUIRE(verify_group_axioms(a4()));
  REQUIRE(verify_group_axioms(a5()));
}

TEST_CASE("permutation input validation") {
  REQUIRE_THROWS_AS(Permutation({0, 0, 1}), SpecError);
  REQUIRE_THROWS_AS(group_from_permutations({Permutation::from_cycles(3, {{0, 1}}),
                                             Permutation::from_cycles(4, {{0, 1}})}),
                    SpecError);
  REQUIRE_THROWS_AS(group_from_permutations({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}, 4),
                    SizeLimitError);
}

TEST_CASE("abelian groups from presentations") {
  AbelianGroup c4 = abelian_group({4});
  REQUIRE(c4.group().order() == 4);
  std::multiset<int> orders;
  for (int x = 0; x < 4; ++x) orders.insert(c4.group().order_of(x));
  REQUIRE(orders == std::multiset<int>{1, 2, 4, 4});

  AbelianGroup g = abelian_group({8, 2});
  REQUIRE(g.group().order() == 16);
  REQUIRE(g.group().exponent() == 8);
  REQUIRE(abelian_invariants(whole_group(g.group())) == std::vector<long long>{8, 2});

  // Omega_1 of C9 x C3 has order 9: elements killed by 3
  AbelianGroup h = abelian_group({9, 3});
  int killed = 0;
  for (int x = 0; x < h.group().order(); ++x)
    if (h.group().pow(x, 3) == 0) ++killed;
  REQUIRE(killed == 9);
  REQUIRE(omega(whole_group(h.group()), 3, 1).order == 9);

  REQUIRE_THROWS_AS(abelian_group({1, 4}), SpecError);
  REQUIRE_THROWS_AS(abelian_group({4096}), SizeLimitError);
}

TEST_CASE("direct products") {
  Group klein = direct_product(abelian_group({2}).group(), abelian_group({2}).group());
  REQUIRE(klein.order() == 4);
  int invol = 0;
  for (int x = 1; x < 4; ++x)
    if (klein.order_of(x) == 2) ++invol;
  REQUIRE(invol == 3);

  Group q8 = construct(FamilySpec::make_f1(2, {}, SAction::neg_one, {1})).group;
  Group q8c4 = direct_product(q8, abelian_group({4}).group());
  REQUIRE(q8c4.order() == 32);
  Group q8q8 = direct_product(q8, q8);
  REQUIRE(q8q8.order() == 64);
  REQUIRE(verify_group_axioms(q8c4));
  REQUIRE(verify_group_axioms(q8q8));
}

TEST_CASE("cyclic extension produces Q8, D8, and rejects bad data") {
  AbelianGroup c4 = abelian_group({4});
  auto invert = AbelianAutomorphism::power_map(c4, -1);

  Group q8 = cyclic_extension(c4, invert, 2, c4.id_of_exps({2}));
  REQUIRE(q8.order() == 8);
  REQUIRE(verify_group_axioms(q8));
  int invol = 0;
  for (int x = 1; x < 8; ++x)
    if (q8.order_of(x) == 2) ++invol;
  REQUIRE(invol == 1); // Q8 fingerprint

  Group d8 = cyclic_extension(c4, invert, 2, 0);
  REQUIRE(d8.order() == 8);
  invol = 0;
  for (int x = 1; x < 8; ++x)
    if (d8.order_of(x) == 2) ++invol;
  REQUIRE(invol == 5);

  // alpha(a0) != a0: a -> a^3 does not fix a
  REQUIRE_THROWS_AS(cyclic_extension(c4, invert, 2, c4.id_of_exps({1})), ExtensionInvalidError);
  // alpha^m != id: a -> a^3 has order 2, not 3
  REQUIRE_THROWS_AS(cyclic_extension(c4, invert, 3, 0), ExtensionInvalidError);
}

TEST_CASE("automorphism validation") {
  AbelianGroup c4 = abelian_group({4});
  // a -> a^2 is an endomorphism but not a bijection
  REQUIRE_THROWS_AS(AbelianAutomorphism(c4, {{2}}), SpecError);
  AbelianGroup c42 = abelian_group({4, 2});
  // a2 -> a1 does not respect the factor orders
  REQUIRE_THROWS_AS(AbelianAutomorphism(c42, {{1, 0}, {1, 0}}), SpecError);
  REQUIRE(AbelianAutomorphism::power_map(c42, -1).power(2) ==
          AbelianAutomorphism::power_map(c42, 1).power(1));
}

TEST_CASE("conjugation in a cyclic extension realizes alpha") {
  AbelianGroup a = abelian_group({8, 2});
  auto alpha = AbelianAutomorphism::power_map(a, -1);
  auto ext = cyclic_extension_result(a, alpha, 2, 0);
  const Group& g = ext.group;
  int b = ext.id_of.at(static_cast<std::uint64_t>(a.group().order()));
  for (int x = 0; x < a.group().order(); ++x) {
    int gx = ext.id_of.at(static_cast<std::uint64_t>(x));
    int image = ext.id_of.at(static_cast<std::uint64_t>(alpha.apply(x)));
    REQUIRE(g.conj(gx, b) == image);
  }
}

TEST_CASE("F1 constructor") {
  // n=3, no extras, s=-1, b^2=1: D16
  Construction d16 = construct(FamilySpec::make_f1(3, {}, SAction::neg_one, {0}));
  REQUIRE(d16.group.order() == 16);
  int invol = 0;
  for (int x = 1; x < 16; ++x)
    if (d16.group.order_of(x) == 2) ++invol;
  REQUIRE(invol == 9); // dihedral of order 16

  // presentation <a,b | a^{2^{n-2}} = b^4 = 1, a^b = a^{-1}> via extras=[1], bsq on the extra
  Construction pres2 = construct(FamilySpec::make_f1(3, {1}, SAction::neg_one, {0, 1}));
  REQUIRE(pres2.group.order() == 32);
  const FamilyData& fd = *pres2.family;
  REQUIRE(pres2.group.order_of(fd.b) == 4);
  Subgroup a(pres2.group, fd.a_members);
  REQUIRE_FALSE(agemo(a, 2, 1).contains(fd.b_sq)); // b^2 outside A^2

  REQUIRE_THROWS_AS(construct(FamilySpec::make_f1(2, {}, SAction::neg_one_plus, {0})), SpecError);
  REQUIRE_THROWS_AS(construct(FamilySpec::make_f1(2, {3}, SAction::neg_one, {0, 0})), SpecError);
  REQUIRE_THROWS_AS(construct(FamilySpec::make_f1(3, {}, SAction::neg_one, {0, 1})), SpecError);
}

TEST_CASE("F1 members satisfy the defining action and center identity") {
  for (int n : {2, 3, 4})
    for (SAction s : {SAction::neg_one, SAction::neg_one_plus}) {
      if (s == SAction::neg_one_plus && n < 3) continue;
      Construction c = construct(FamilySpec::make_f1(n, {1}, s, {1, 0}));
      const Group& g = c.group;
      const FamilyData& fd = *c.family;
      Subgroup a(g, fd.a_members);
      bool action_ok = true;
      a.members.for_each([&](int x) {
        if (g.conj(x, fd.b) != g.pow(x, fd.s_int)) action_ok = false;
      });
      REQUIRE(action_ok);
      REQUIRE(center(g).members == omega(a, 2, 1).members);
    }
}

TEST_CASE("F2 constructor and the exceptional order-16 member") {
  Construction rem = construct(FamilySpec::make_f2(2, {1}, SAction::neg_one, {1}, {1, 0}));
  const Group& g = rem.group;
  REQUIRE(g.order() == 16);
  const FamilyData& fd = *rem.family;
  REQUIRE(g.mul(fd.b, fd.b) == g.pow(fd.a1, 2)); // b^2 = a1^2
  REQUIRE(g.conj(fd.a1, fd.b) == g.mul(g.inv(fd.a1), fd.z_elem));
  REQUIRE(g.conj(fd.z_elem, fd.b) == fd.z_elem);
  REQUIRE_FALSE(is_normal(cyclic_subgroup(g, fd.a1)));
  REQUIRE_FALSE(is_dedekind(g));
  REQUIRE(center(g).members == omega(Subgroup(g, fd.a_members), 2, 1).members);

  // z must be non-trivial, and the action must square to the identity
  REQUIRE_THROWS_AS(construct(FamilySpec::make_f2(2, {1}, SAction::neg_one, {0}, {0, 0})), SpecError);
  REQUIRE_THROWS_AS(construct(FamilySpec::make_f2(2, {1}, SAction::neg_one_plus, {1}, {0, 0})),
                    SpecError);
}

TEST_CASE("F2 admissibility is decided by the direct alpha^2 check") {
  // n=3, A* = C8 (exponent 3): s = -1+4 = 3 squares to 9 = 1 mod 8, accepted
  Construction ok = construct(FamilySpec::make_f2(3, {3}, SAction::neg_one_plus, {1}, {0, 0}));
  REQUIRE(ok.group.order() == 128);
  // n=3, A* = C16: 9 != 1 mod 16, rejected
  REQUIRE_THROWS_AS(construct(FamilySpec::make_f2(3, {4}, SAction::neg_one_plus, {1}, {0, 0})),
                    ExtensionInvalidError);
}

TEST_CASE("sharpness example groups") {
  Construction c16 = construct(FamilySpec::make_sharpness(2, 1));
  REQUIRE(c16.group.order() == 16);

  Construction c81 = construct(FamilySpec::make_sharpness(3, 1));
  const Group& g = c81.group;
  REQUIRE(g.order() == 81);
  Subgroup z = center(g);
  REQUIRE(z.order == 9);
  for (int x = 0; x < g.order(); ++x)
    if (!z.contains(x)) REQUIRE(g.order_of(x) == 9);

  REQUIRE_THROWS_AS(construct(FamilySpec::make_sharpness(5, 2)), SizeLimitError);
  REQUIRE_THROWS_AS(construct(FamilySpec::make_sharpness(4, 1)), SpecError);
}

TEST_CASE("identical specs produce identical tables") {
  FamilySpec spec = FamilySpec::make_f2(3, {1, 1}, SAction::neg_one, {1, 0}, {1, 0, 0});
  Construction a = construct(spec), b = construct(spec);
  REQUIRE(a.group.order() == b.group.order());
  for (int x = 0; x < a.group.order(); ++x)
    for (int y = 0; y < a.group.order(); ++y) REQUIRE(a.group.mul(x, y) == b.group.mul(x, y));
  REQUIRE(a.spec.id() == b.spec.id());
}

TEST_CASE("spec JSON round trip") {
  FamilySpec spec = FamilySpec::make_f1(4, {1}, SAction::neg_one, {1, 0});
  nlohmann::json j = spec.to_json();
  REQUIRE(j["v"] == 1);
  REQUIRE(j["kind"] == "f1");
  FamilySpec back = FamilySpec::from_json(j);
  REQUIRE(back.id() == spec.id());

  REQUIRE_THROWS_AS(FamilySpec::from_json(nlohmann::json{{"kind", "f1"}}), SpecError);
  REQUIRE_THROWS_AS(FamilySpec::from_json(nlohmann::json{{"v", 1}, {"kind", "nosuch"}}), SpecError);
}

TEST_CASE("group axioms hold exhaustively on constructed corpus members") {
  for (const FamilySpec& spec :
       {FamilySpec::make_f1(4, {1, 1}, SAction::neg_one_plus, {1, 0, 1}),
        FamilySpec::make_f2(3, {2}, SAction::neg_one, {1}, {0, 1}),
        FamilySpec::make_sharpness(3, 1)}) {
    Group g = construct(spec).group;
    REQUIRE(verify_group_axioms(g));
  }
}

TEST_CASE("collection identities hold on D8, abelian groups, and the order-81 example") {
  Group d8 = construct(FamilySpec::make_f1(2, {}, SAction::neg_one, {0})).group;
  REQUIRE(verify_collection_identities(d8).ok());
  REQUIRE(verify_collection_identities(abelian_group({12}).group()).ok());
  REQUIRE(verify_collection_identities(construct(FamilySpec::make_sharpness(3, 1)).group).ok());
}
