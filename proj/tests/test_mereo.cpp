#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cogran/mereo.hpp"
#include "doctest.h"

using namespace cogran;

namespace {

DiscreteSpace two_space() {
  return DiscreteSpace(Universe({"1", "2"}), 0b01);  // actual point: 1
}

DiscreteSpace three_space(Mask actual) { return DiscreteSpace(Universe({"1", "2", "3"}), actual); }

}  // namespace

TEST_CASE("discrete space invariants") {
  CHECK_THROWS_AS(DiscreteSpace(Universe({"1", "2"}), 0), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteSpace(Universe({"1", "2"}), 0b11), std::invalid_argument);
  CHECK_NOTHROW(two_space());
}

TEST_CASE("actual existence and contact on the two point model") {
  ContactStructure c = build_discrete_contact(two_space());
  CHECK(c.ae(0b11));
  CHECK(c.ae(0b01));
  CHECK(!c.ae(0b10));  // the merely-possible point does not actually exist
  CHECK(!c.ae(0));
  CHECK(c.contact(0b01, 0b11));
  CHECK(!c.contact(0b01, 0b10));
  CHECK(c.actual_contact(0b01, 0b11));
  CHECK(!c.actual_contact(0b10, 0b10));  // overlap outside the actual region
  CHECK(!c.actual_contact(0, 0));
}

TEST_CASE("axiom blocks pass on discrete models") {
  for (Mask actual = 1; actual < 0b111; ++actual) {
    ContactStructure c = build_discrete_contact(three_space(actual));
    CHECK(axioms_pass(check_axioms(c, AxiomBlock::Contact)));
    CHECK(axioms_pass(check_axioms(c, AxiomBlock::ActualContact)));
    CHECK(axioms_pass(check_axioms(c, AxiomBlock::ActualExistence)));
  }
}

TEST_CASE("literal first actual-contact axiom fails on discrete models") {
  ContactStructure c = build_discrete_contact(two_space(), true);
  std::vector<AxiomResult> res = check_axioms(c, AxiomBlock::ActualContact);
  bool ca1_failed = false;
  for (const AxiomResult& r : res)
    if (r.axiom == "Ca1" && !r.pass) ca1_failed = true;
  CHECK(ca1_failed);  // the bottom region can never be in actual contact
}

TEST_CASE("overlap compatibility is violated by a contact-free predicate") {
  // the clause "a and b overlap implies contact" fails as soon as any two
  // regions overlap, so a relation that never holds cannot satisfy it
  auto never = [](Mask, Mask) { return false; };
  bool violated = false;
  for (Mask a = 0; a <= full_mask(2); ++a)
    for (Mask b = 0; b <= full_mask(2); ++b)
      if ((a & b) != 0 && !never(a, b)) violated = true;
  CHECK(violated);
  // the discrete structure itself does satisfy the clause
  CHECK(axioms_pass(check_axioms(build_discrete_contact(two_space()), AxiomBlock::Contact)));
}

TEST_CASE("ultrafilters of a finite power set are principal") {
  ContactStructure c = build_discrete_contact(three_space(0b001));
  std::vector<Ultrafilter> ufs = ultrafilters(c);
  CHECK(ufs.size() == 3);
  for (const Ultrafilter& u : ufs) {
    CHECK(u.members.size() == 4);  // 2^(n-1) sets contain a fixed point
    CHECK(!u.members.contains(0));
    CHECK(is_ultrafilter(3, u.members));
  }
  // brute-force cross-check at n=2: the only ultrafilters are the two principal ones
  int count = 0;
  for (Mask pick = 0; pick < (1u << 4); ++pick) {
    std::vector<Mask> mem;
    for (int i = 0; i < 4; ++i)
      if (has_bit(pick, i)) mem.push_back(static_cast<Mask>(i));
    if (is_ultrafilter(2, SubsetFamily(2, mem))) ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("canonical relations and reflexive ultrafilters") {
  ContactStructure c = build_discrete_contact(two_space());
  std::vector<Ultrafilter> ufs = ultrafilters(c);
  CanonicalRelations cr = canonical_relations(c, ufs);
  CHECK(cr.reflexive_ultrafilter[0]);   // the actual point's ultrafilter
  CHECK(!cr.reflexive_ultrafilter[1]);  // the merely-possible point's one
  RelationProperties pr = relation_properties(cr.r);
  CHECK(pr.reflexive);
  CHECK(pr.symmetric);
  RelationProperties pa = relation_properties(cr.r_a);
  CHECK(pa.symmetric);
  CHECK(pa.quasi_reflexive);
}

TEST_CASE("grill recognition") {
  // sets containing a fixed point form a grill; so does their union with another
  std::vector<Mask> mem;
  for (Mask h = 0; h <= full_mask(2); ++h)
    if (has_bit(h, 0)) mem.push_back(h);
  CHECK(is_grill(2, SubsetFamily(2, mem)));
  CHECK(!is_grill(2, SubsetFamily(2, {0b11})));     // fails join primality on {1}|{2}
  CHECK(!is_grill(2, SubsetFamily(2, {0, 0b11})));  // contains bottom
  CHECK(!is_grill(2, SubsetFamily(2, {})));
}

TEST_CASE("clans and actual clans on discrete models") {
  for (Mask actual = 1; actual < 0b111; ++actual) {
    ContactStructure c = build_discrete_contact(three_space(actual));
    std::vector<Clan> cls = clans(c, ClanKind::Clan);
    std::vector<Clan> acls = clans(c, ClanKind::ActualClan);
    CHECK(cls.size() == 3);                                        // one per point
    CHECK(acls.size() == static_cast<std::size_t>(popcount(actual)));  // one per actual point
    for (const Clan& ac : acls) {
      bool found = false;
      for (const Clan& cl : cls)
        if (cl.members == ac.members) found = true;
      CHECK(found);  // actual clans are clans
      CHECK(is_grill(3, ac.members));
    }
    // actual contact holds exactly when an actual clan holds both regions
    for (Mask b = 0; b <= c.top(); ++b)
      for (Mask e = 0; e <= c.top(); ++e) {
        bool shared = false;
        for (const Clan& ac : acls)
          if (ac.members.contains(b) && ac.members.contains(e)) shared = true;
        CHECK(c.actual_contact(b, e) == shared);
      }
  }
}

TEST_CASE("contact scheme approximations on the two point model") {
  ContactStructure c = build_discrete_contact(two_space());
  std::vector<Clan> acls = clans(c, ClanKind::ActualClan);
  REQUIRE(acls.size() == 1);
  const Clan& k = acls.front();
  std::vector<Mask> gamma = resolve_gamma(c, GammaChoice::MinNeighborhood);
  for (MereoScheme sch : {MereoScheme::CG, MereoScheme::G, MereoScheme::Clan}) {
    ApproxResult bot = mereo_approx(c, gamma, k, 0, sch);
    CHECK(bot.lower == 0);
    CHECK(bot.upper == 0);
    ApproxResult top = mereo_approx(c, gamma, k, c.top(), sch);
    CHECK(top.upper == c.top());
    for (Mask a = 0; a <= c.top(); ++a) {
      ApproxResult r = mereo_approx(c, gamma, k, a, sch);
      CHECK(subset_of(r.lower, a));
      CHECK(subset_of(a, r.upper));
    }
  }
  // the point-level granulation only sees actual points
  for (Mask g : gamma) CHECK(subset_of(g, c.actual));
  // explicit maps must stay inside the actual points
  CHECK_THROWS_AS(resolve_gamma(c, GammaChoice::Explicit, {0b10, 0b01}),
                  std::invalid_argument);
  CHECK_THROWS_AS(resolve_gamma(c, GammaChoice::Explicit, {0b01}), std::invalid_argument);
  // only validated actual clans are accepted
  Clan plain = clans(c, ClanKind::Clan).back();
  if (plain.kind != ClanKind::ActualClan)
    CHECK_THROWS_AS(mereo_approx(c, gamma, plain, 0, MereoScheme::CG),
                    std::invalid_argument);
}

TEST_CASE("inverse problem law checker") {
  const std::size_t n = 2;
  std::vector<Mask> id(1u << n);
  for (Mask a = 0; a < (1u << n); ++a) id[a] = a;
  for (const LawCheck& lc : inverse_problem_laws(n, id, id)) CHECK(lc.pass);

  std::vector<Mask> const_top(1u << n, full_mask(n));
  std::vector<LawCheck> res = inverse_problem_laws(n, id, const_top);
  for (const LawCheck& lc : res) {
    if (lc.law == "boundary") {
      CHECK(!lc.pass);  // the bottom is not an upper fixpoint
    } else {
      CHECK(lc.pass);
    }
  }
  CHECK_THROWS_AS(inverse_problem_laws(n, id, std::vector<Mask>(1)), std::invalid_argument);
}

TEST_CASE("approximation maps from the schemes pass the inverse problem laws") {
  ContactStructure c = build_discrete_contact(three_space(0b011));
  std::vector<Clan> acls = clans(c, ClanKind::ActualClan);
  std::vector<Mask> gamma = resolve_gamma(c, GammaChoice::MinNeighborhood);
  for (const Clan& k : acls) {
    std::vector<Mask> lo(1u << 3), up(1u << 3);
    for (Mask a = 0; a <= c.top(); ++a) {
      ApproxResult r = mereo_approx(c, gamma, k, a, MereoScheme::CG);
      lo[a] = r.lower;
      up[a] = r.upper;
    }
    for (const LawCheck& lc : inverse_problem_laws(3, lo, up)) CHECK(lc.pass);
  }
}
