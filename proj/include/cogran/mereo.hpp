#pragma once

// Finite contact and precontact structures over discrete spaces with actual
// points: axiom checking, grills, ultrafilters, canonical relations, clans,
// and the contact-driven approximation schemes.

#include <functional>
#include <optional>
#include <string>

#include "cogran/approx.hpp"
#include "cogran/core.hpp"
#include "cogran/lattice.hpp"

namespace cogran {

struct DiscreteSpace {
  Universe universe;
  Mask actual;  // invariant: empty < actual < full

  DiscreteSpace(Universe u, Mask a) : universe(std::move(u)), actual(a) {
    if (actual == 0 || actual == universe.full() || !subset_of(actual, universe.full()))
      throw std::invalid_argument("actual points must be a nonempty proper subset");
  }
};

// Contact structure over the full power set of an n-element space. The
// relations are kept as predicates over masks; on discrete models contact is
// overlap and actual contact is overlap inside the actual points.
struct ContactStructure {
  std::size_t n = 0;
  Mask actual = 0;
  bool ca1_literal = false;  // audit flag: read Ca1 as written, without the negation

  bool ae(Mask h) const { return (h & actual) != 0; }
  bool contact(Mask h, Mask f) const { return (h & f) != 0; }
  bool actual_contact(Mask h, Mask f) const { return (h & f & actual) != 0; }
  Mask top() const { return full_mask(n); }
};

inline ContactStructure build_discrete_contact(const DiscreteSpace& space,
                                               bool ca1_literal = false) {
  ContactStructure c;
  c.n = space.universe.size();
  c.actual = space.actual;
  c.ca1_literal = ca1_literal;
  return c;
}

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  Mask a = 0, b = 0, e = 0;  // witness masks on failure
};

enum class AxiomBlock { Contact, ActualContact, ActualExistence };

// Every axiom instance checked over all member pairs/triples, plus the two
// derived contact facts (join split and monotone transfer).
inline std::vector<AxiomResult> check_axioms(const ContactStructure& c, AxiomBlock block) {
  const Mask top = c.top();
  std::vector<AxiomResult> out;
  auto fail = [&](std::vector<AxiomResult>& res, const std::string& id, Mask a, Mask b,
                  Mask e = 0) {
    for (auto& r : res)
      if (r.axiom == id && !r.pass) return;
    res.push_back({id, false, a, b, e});
  };
  auto mark_pass = [&](std::vector<AxiomResult>& res, const std::string& id) {
    for (auto& r : res)
      if (r.axiom == id) return;
    res.push_back({id, true, 0, 0, 0});
  };
  if (block == AxiomBlock::Contact) {
    for (Mask a = 0; a <= top; ++a)
      for (Mask b = 0; b <= top; ++b) {
        if (c.contact(a, b) && (a == 0 || b == 0)) fail(out, "C1", a, b);
        if (c.contact(a, b) != c.contact(b, a)) fail(out, "C2", a, b);
        if ((a & b) != 0 && !c.contact(a, b)) fail(out, "C5", a, b);
        for (Mask e = 0; e <= top; ++e) {
          if (c.contact(a, b) && subset_of(b, e) && !c.contact(a, e)) fail(out, "C3", a, b, e);
          if (c.contact(a, b | e) && !c.contact(a, b) && !c.contact(a, e))
            fail(out, "C4", a, b, e);
          if (c.contact(a | b, e) != (c.contact(a, e) || c.contact(b, e)))
            fail(out, "C-join", a, b, e);
        }
      }
    // monotone transfer: Cab and a<=u and b<=v imply Cuv
    for (Mask a = 0; a <= top; ++a)
      for (Mask b = 0; b <= top; ++b)
        if (c.contact(a, b))
          for (Mask u = 0; u <= top; ++u)
            for (Mask v = 0; v <= top; ++v)
              if (subset_of(a, u) && subset_of(b, v) && !c.contact(u, v))
                fail(out, "C-transfer", a, b, u);
    for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C-join", "C-transfer"})
      mark_pass(out, id);
  } else if (block == AxiomBlock::ActualContact) {
    bool ca1 = c.ca1_literal ? (c.actual_contact(top, top) && c.actual_contact(0, 0))
                             : (c.actual_contact(top, top) && !c.actual_contact(0, 0));
    if (!ca1) fail(out, "Ca1", top, 0);
    for (Mask a = 0; a <= top; ++a)
      for (Mask b = 0; b <= top; ++b) {
        if (c.actual_contact(a, b) != c.actual_contact(b, a)) fail(out, "Ca2", a, b);
        if (c.actual_contact(a, b) && !c.actual_contact(a, a)) fail(out, "Ca3", a, b);
        for (Mask e = 0; e <= top; ++e) {
          if (c.actual_contact(a, b) && subset_of(b, e) && !c.actual_contact(a, e))
            fail(out, "Ca4", a, b, e);
          if (c.actual_contact(a, b | e) && !c.actual_contact(a, b) && !c.actual_contact(a, e))
            fail(out, "Ca5", a, b, e);
        }
      }
    for (const char* id : {"Ca1", "Ca2", "Ca3", "Ca4", "Ca5"}) mark_pass(out, id);
  } else {
    if (!c.ae(top) || c.ae(0)) fail(out, "AE1", top, 0);
    for (Mask a = 0; a <= top; ++a)
      for (Mask b = 0; b <= top; ++b) {
        if (c.ae(a) && subset_of(a, b) && !c.ae(b)) fail(out, "AE2", a, b);
        if (c.ae(a | b) && !c.ae(a) && !c.ae(b)) fail(out, "AE3", a, b);
      }
    for (const char* id : {"AE1", "AE2", "AE3"}) mark_pass(out, id);
  }
  return out;
}

inline bool axioms_pass(const std::vector<AxiomResult>& res) {
  for (const auto& r : res)
    if (!r.pass) return false;
  return true;
}

struct Ultrafilter {
  int atom = -1;
  SubsetFamily members;  // all subsets containing the atom
};

inline std::vector<Ultrafilter> ultrafilters(const ContactStructure& c) {
  std::vector<Ultrafilter> out;
  for (int x = 0; x < static_cast<int>(c.n); ++x) {
    std::vector<Mask> mem;
    for (Mask h = 0; h <= c.top(); ++h)
      if (has_bit(h, x)) mem.push_back(h);
    out.push_back({x, SubsetFamily(c.n, std::move(mem))});
  }
  return out;
}

// The ultrafilter laws, checked extensionally.
inline bool is_ultrafilter(std::size_t n, const SubsetFamily& f) {
  const Mask top = full_mask(n);
  if (f.contains(0) || !f.contains(top)) return false;
  for (Mask a : f.members()) {
    for (Mask b : f.members())
      if (!f.contains(a & b)) return false;
    for (Mask b = 0; b <= top; ++b)
      if (subset_of(a, b) && !f.contains(b)) return false;
  }
  for (Mask a = 0; a <= top; ++a)
    if (!f.contains(a) && !f.contains(top & ~a)) return false;
  return true;
}

struct CanonicalRelations {
  BinaryRelation r;    // canonical relation for C
  BinaryRelation r_a;  // canonical relation for C^a
  std::vector<bool> reflexive_ultrafilter;
};

inline CanonicalRelations canonical_relations(const ContactStructure& c,
                                              const std::vector<Ultrafilter>& ufs) {
  const std::size_t m = ufs.size();
  CanonicalRelations cr{BinaryRelation(m), BinaryRelation(m),
                        std::vector<bool>(m, false)};
  auto universally = [&](const Ultrafilter& u, const Ultrafilter& v, auto pred) {
    for (Mask x : u.members.members())
      for (Mask b : v.members.members())
        if (!pred(x, b)) return false;
    return true;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (universally(ufs[i], ufs[j],
                      [&](Mask x, Mask b) { return c.contact(x, b); }))
        cr.r.add(static_cast<int>(i), static_cast<int>(j));
      if (universally(ufs[i], ufs[j],
                      [&](Mask x, Mask b) { return c.actual_contact(x, b); }))
        cr.r_a.add(static_cast<int>(i), static_cast<int>(j));
    }
  for (std::size_t i = 0; i < m; ++i) {
    cr.reflexive_ultrafilter[i] = cr.r_a.has(static_cast<int>(i), static_cast<int>(i));
    for (std::size_t j = 0; j < m; ++j) {
      bool rij = cr.r.has(static_cast<int>(i), static_cast<int>(j));
      bool expected = cr.r_a.has(static_cast<int>(i), static_cast<int>(j)) || i == j;
      if (rij != expected)
        throw std::logic_error("canonical relations violate R = R_a or identity");
    }
  }
  return cr;
}

inline bool is_grill(std::size_t n, const SubsetFamily& g) {
  const Mask top = full_mask(n);
  if (g.empty() || g.contains(0) || !g.contains(top)) return false;
  for (Mask a : g.members())
    for (Mask b = 0; b <= top; ++b)
      if (subset_of(a, b) && !g.contains(b)) return false;
  for (Mask a = 0; a <= top; ++a)
    for (Mask b = 0; b <= top; ++b)
      if (g.contains(a | b) && !g.contains(a) && !g.contains(b)) return false;
  return true;
}

enum class ClanKind { Clan, ActualClan };

struct Clan {
  ClanKind kind = ClanKind::Clan;
  Mask atoms = 0;  // ultrafilter atoms whose union forms the clan
  SubsetFamily members;
};

// Enumerates unions of nonempty sets of mutually related ultrafilters and
// validates the grill and pairwise-contact clauses directly.
inline std::vector<Clan> clans(const ContactStructure& c, ClanKind kind) {
  std::vector<Ultrafilter> ufs = ultrafilters(c);
  if (ufs.size() > 12) throw std::invalid_argument("clan enumeration capped at 12 ultrafilters");
  CanonicalRelations cr = canonical_relations(c, ufs);
  const BinaryRelation& rel = kind == ClanKind::Clan ? cr.r : cr.r_a;
  std::set<std::vector<Mask>> seen;
  std::vector<Clan> out;
  const Mask all = full_mask(ufs.size());
  for (Mask pick = 1; pick <= all; ++pick) {
    bool mutual = true;
    for_each_bit(pick, [&](int i) {
      for_each_bit(pick, [&](int j) {
        if (!rel.has(i, j)) mutual = false;
      });
    });
    if (!mutual) continue;
    std::set<Mask> mem;
    for_each_bit(pick, [&](int i) {
      for (Mask h : ufs[static_cast<std::size_t>(i)].members.members()) mem.insert(h);
    });
    SubsetFamily fam(c.n, std::vector<Mask>(mem.begin(), mem.end()));
    if (!is_grill(c.n, fam)) continue;
    bool pairwise = true;
    for (Mask a : fam.members())
      for (Mask b : fam.members()) {
        bool rel_ok = kind == ClanKind::Clan ? c.contact(a, b) : c.actual_contact(a, b);
        if (!rel_ok) pairwise = false;
      }
    if (!pairwise) continue;
    if (seen.insert(fam.members()).second) {
      Clan cl;
      cl.kind = kind;
      cl.atoms = pick;
      cl.members = std::move(fam);
      out.push_back(std::move(cl));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Clan& a, const Clan& b) { return a.members.members() < b.members.members(); });
  return out;
}

enum class MereoScheme { CG, G, Clan };
enum class GammaChoice { MinNeighborhood, CaNeighborhood, Explicit };

// Point-level relation induced by actual contact on singletons.
inline BinaryRelation point_actual_contact(const ContactStructure& c) {
  BinaryRelation r(c.n);
  for (int a = 0; a < static_cast<int>(c.n); ++a)
    for (int b = 0; b < static_cast<int>(c.n); ++b)
      if (c.actual_contact(bit(a), bit(b))) r.add(a, b);
  return r;
}

inline std::vector<Mask> resolve_gamma(const ContactStructure& c, GammaChoice choice,
                                       const std::vector<Mask>& explicit_map = {}) {
  std::vector<Mask> g(c.n, 0);
  if (choice == GammaChoice::Explicit) {
    if (explicit_map.size() != c.n) throw std::invalid_argument("explicit gamma must be total");
    for (Mask m : explicit_map)
      if (!subset_of(m, c.actual))
        throw std::invalid_argument("gamma must map into subsets of the actual points");
    return explicit_map;
  }
  BinaryRelation pa = point_actual_contact(c);
  for (int x = 0; x < static_cast<int>(c.n); ++x)
    g[static_cast<std::size_t>(x)] = choice == GammaChoice::MinNeighborhood
                                         ? min_neighborhood(pa, x)
                                         : successor_neighborhood(pa, x);
  return g;
}

inline ApproxResult mereo_approx(const ContactStructure& c, const std::vector<Mask>& gamma,
                                 const Clan& k, Mask a, MereoScheme scheme) {
  if (k.kind != ClanKind::ActualClan)
    throw std::invalid_argument("approximations require a validated actual clan");
  if (gamma.size() != c.n) throw std::invalid_argument("gamma must be total");
  const Mask full = full_mask(c.n);
  auto in_k = [&](Mask h) { return k.members.contains(h); };
  ApproxResult r;
  if (scheme == MereoScheme::CG) {
    r.tag = "mereo_cg";
    for (int x = 0; x < static_cast<int>(c.n); ++x) {
      Mask g = gamma[static_cast<std::size_t>(x)];
      if (has_bit(a, x)) {
        ProvenanceEntry e{x, true, g & ~a & full, in_k(g & ~a & full), ""};
        if (!e.verdict) r.lower |= bit(x);
        r.provenance.push_back(e);
      }
      ProvenanceEntry e{x, false, g & a, in_k(g & a), ""};
      if (e.verdict) r.upper |= bit(x);
      r.provenance.push_back(e);
    }
    r.upper |= a;
  } else if (scheme == MereoScheme::G) {
    r.tag = "mereo_g";
    Mask lo = 0, up = 0;
    for (int x = 0; x < static_cast<int>(c.n); ++x) {
      Mask g = gamma[static_cast<std::size_t>(x)];
      if (!in_k(g & ~a & full)) lo |= g;
      if (in_k(g & a)) up |= g;
    }
    r.lower = lo & a;
    r.upper = up | a;
  } else {
    r.tag = "mereo_clan";
    // H ranges over the clan regions of the structure (atom sets of clans).
    Mask lo = 0, up = 0;
    for (const Clan& cl : clans(c, ClanKind::Clan)) {
      Mask h = cl.atoms;  // atoms of a discrete model are its points
      if (!in_k(h & ~a & full)) lo |= h;
      if (in_k(h) && (h & a) != 0) up |= h;
    }
    r.lower = lo & a;
    r.upper = up | a;
  }
  detail::check_inclusion(r, a);
  return r;
}

struct LawCheck {
  std::string law;
  bool pass = true;
  Mask witness_a = 0, witness_b = 0;
};

// The five laws of the posed inverse problem, checked over extensional maps.
inline std::vector<LawCheck> inverse_problem_laws(std::size_t n,
                                                  const std::vector<Mask>& lower_map,
                                                  const std::vector<Mask>& upper_map) {
  const Mask top = full_mask(n);
  const std::size_t count = (std::size_t{1} << n);
  if (lower_map.size() != count || upper_map.size() != count)
    throw std::invalid_argument("maps must be total over the power set");
  std::vector<LawCheck> out;
  auto check = [&](const std::string& law, auto pred) {
    LawCheck lc;
    lc.law = law;
    for (Mask z = 0; z <= top && lc.pass; ++z)
      for (Mask v = 0; v <= top; ++v)
        if (!pred(z, v)) {
          lc.pass = false;
          lc.witness_a = z;
          lc.witness_b = v;
          break;
        }
    out.push_back(lc);
  };
  auto l = [&](Mask z) { return lower_map[static_cast<std::size_t>(z)]; };
  auto u = [&](Mask z) { return upper_map[static_cast<std::size_t>(z)]; };
  check("inclusion", [&](Mask z, Mask) { return subset_of(l(z), z) && subset_of(z, u(z)); });
  check("boundary", [&](Mask z, Mask) {
    if (z != 0) return true;
    return l(0) == 0 && u(0) == 0 && l(top) == top && u(top) == top;
  });
  check("monotonicity", [&](Mask z, Mask v) {
    if (!(subset_of(z, v) && z != v)) return true;
    return subset_of(l(z), l(v)) && subset_of(u(z), u(v));
  });
  check("l-idempotence", [&](Mask z, Mask) { return l(l(z)) == l(z); });
  check("u-expansion", [&](Mask z, Mask) { return subset_of(u(z), u(u(z))); });
  return out;
}

}  // namespace cogran
