#pragma once

// Point-wise and co-granular approximation operators: the ideal-based
// kappa/IAD/IASD family, GOSI/GOSIH, strong and antichain variants, rough
// inclusion/equality, and the definite-set topology sweep.

#include <string>

#include "cogran/core.hpp"
#include "cogran/lattice.hpp"
#include "cogran/sigma.hpp"

namespace cogran {

struct Granulation {
  std::vector<Mask> gamma;  // granule per element rank
  bool surjective = true;   // granule set taken as the image of gamma
  bool covers = false;
  bool reflexive_containment = false;

  Mask at(int x) const { return gamma.at(static_cast<std::size_t>(x)); }
  std::size_t size() const { return gamma.size(); }
};

inline Granulation make_granulation(std::vector<Mask> gamma, std::size_t n) {
  if (gamma.size() != n) throw std::invalid_argument("granulation must be total");
  Granulation g;
  g.gamma = std::move(gamma);
  Mask un = 0;
  g.reflexive_containment = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!subset_of(g.gamma[i], full_mask(n)))
      throw std::invalid_argument("granule outside the universe");
    un |= g.gamma[i];
    if (!has_bit(g.gamma[i], static_cast<int>(i))) g.reflexive_containment = false;
  }
  g.covers = un == full_mask(n);
  return g;
}

struct ProvenanceEntry {
  int element = -1;
  bool lower_side = true;
  Mask tested = 0;
  bool verdict = false;  // the ideal/family membership verdict for the tested set
  std::string note;
};

struct DeviationRecord {
  std::string op;
  std::string aspect;
  std::vector<std::string> computed;
  std::vector<std::string> published;
  std::string note;
};

struct ApproxResult {
  std::string tag;
  Mask lower = 0;
  Mask upper = 0;
  std::vector<ProvenanceEntry> provenance;
  std::vector<DeviationRecord> deviations;
};

namespace detail {

inline void check_inclusion(const ApproxResult& r, Mask a) {
  if (!subset_of(r.lower, a) || !subset_of(a, r.upper))
    throw std::logic_error("inclusion law violated by " + r.tag);
}

// Shared point-test shape: lower tests gamma(a) minus A against the ideal,
// upper tests gamma(a) meet A, then unions A back in.
template <typename MembershipTest, typename NbhdMap>
ApproxResult pointwise(const std::string& tag, std::size_t n, NbhdMap nbhd,
                       MembershipTest in_ideal, Mask a_set) {
  ApproxResult r;
  r.tag = tag;
  const Mask full = full_mask(n);
  for (int x = 0; x < static_cast<int>(n); ++x) {
    Mask g = nbhd(x);
    if (has_bit(a_set, x)) {
      ProvenanceEntry e;
      e.element = x;
      e.lower_side = true;
      e.tested = g & full & ~a_set;
      e.verdict = in_ideal(e.tested, e.note);
      if (e.verdict) r.lower |= bit(x);
      r.provenance.push_back(e);
    }
    ProvenanceEntry e;
    e.element = x;
    e.lower_side = false;
    e.tested = g & a_set;
    e.verdict = in_ideal(e.tested, e.note);
    if (!e.verdict) r.upper |= bit(x);
    r.provenance.push_back(e);
  }
  r.upper |= a_set;
  check_inclusion(r, a_set);
  return r;
}

}  // namespace detail

// l_kappa / u_kappa over the full Boolean power-set algebra.
inline ApproxResult approx_kappa(const BinaryRelation& r, const SubsetFamily& ideal, Mask a,
                                 EmptyMeet em = EmptyMeet::Empty) {
  if (!relation_properties(r).reflexive)
    throw std::invalid_argument("kappa approximations require a reflexive relation");
  if (!is_powerset_ideal(r.size(), ideal))
    throw std::invalid_argument("not an ideal of the power-set algebra");
  return detail::pointwise(
      "kappa", r.size(), [&](int x) { return min_neighborhood(r, x, em); },
      [&](Mask t, std::string&) { return ideal.contains(t); }, a);
}

// IAD approximations over a ring of subsets; a tested set outside the ring
// counts as outside the ideal and is flagged in provenance.
inline ApproxResult approx_iad(const BinaryRelation& r, const SubsetFamily& ring,
                               const SubsetFamily& ideal, Mask a, bool prime_variant = false,
                               EmptyMeet em = EmptyMeet::Empty) {
  if (!is_lattice_ideal(ring, ideal).ok)
    throw std::invalid_argument("not a lattice ideal of the given ring");
  if (prime_variant && !is_prime_lattice_ideal(ring, ideal).prime)
    throw std::invalid_argument("prime variant requires a prime ideal");
  return detail::pointwise(
      prime_variant ? "iad_prime" : "iad", r.size(),
      [&](int x) { return min_neighborhood(r, x, em); },
      [&](Mask t, std::string& note) {
        if (!ring.contains(t)) {
          note = "tested set outside the ambient ring";
          return false;
        }
        return ideal.contains(t);
      },
      a);
}

// IASD approximations: relative difference only, the target set must belong
// to an algebra closed under set difference.
inline ApproxResult approx_iasd(const BinaryRelation& r, const SubsetFamily& algebra,
                                const SubsetFamily& ideal, Mask a,
                                EmptyMeet em = EmptyMeet::Empty) {
  if (!algebra.contains(a)) throw std::invalid_argument("target set outside the algebra");
  if (!algebra.closed_under_difference())
    throw std::invalid_argument("algebra is not closed under set difference");
  if (!is_lattice_ideal(algebra, ideal).ok)
    throw std::invalid_argument("not a lattice ideal of the given algebra");
  ApproxResult res = detail::pointwise(
      "iasd", r.size(), [&](int x) { return min_neighborhood(r, x, em); },
      [&](Mask t, std::string& note) {
        if (!algebra.contains(t)) {
          note = "tested set outside the ambient algebra";
          return false;
        }
        return ideal.contains(t);
      },
      a);
  return res;
}

// GOSI: membership in the sigma-ideal collection decided by direct predicate.
inline ApproxResult approx_gosi(const SigmaStructure& st, const Granulation& gran, Mask a) {
  if (gran.size() != st.size()) throw std::invalid_argument("granulation universe mismatch");
  return detail::pointwise(
      "gosi", st.size(), [&](int x) { return gran.at(x); },
      [&](Mask t, std::string&) { return is_sigma_ideal(st, t).ok; }, a);
}

// GOSIH: sigma lives on the power set of S; the fixed ideal is a mask over
// the power-set carrier (bit m set when the subset with mask m is a member).
inline ApproxResult approx_gosih(const SigmaStructure& powerset_st, std::size_t s,
                                 const Granulation& gran, Mask fixed_ideal, Mask a) {
  if (s > 5) throw std::invalid_argument("GOSIH carrier capped at 5 base elements");
  if (powerset_st.size() != (std::size_t{1} << s))
    throw std::invalid_argument("structure carrier is not the power set of S");
  if (gran.size() != s) throw std::invalid_argument("granulation universe mismatch");
  if (!is_sigma_ideal(powerset_st, fixed_ideal).ok)
    throw std::invalid_argument("fixed ideal is not a sigma-ideal of the power-set structure");
  return detail::pointwise(
      "gosih", s, [&](int x) { return gran.at(x); },
      [&](Mask t, std::string&) { return has_bit(fixed_ideal, static_cast<int>(t)); }, a);
}

// Strong approximations via the parallel operators mu and upsilon. The point
// tests reduce to sigma-ideal facts, which keeps them total: a tested set
// with no least covering ideal cannot itself be an ideal.
inline ApproxResult approx_strong(const SigmaStructure& st, const Granulation& gran, Mask a) {
  if (gran.size() != st.size()) throw std::invalid_argument("granulation universe mismatch");
  std::vector<Mask> family = enumerate_sigma_ideals(st);
  auto has_nonempty_ideal_within = [&](Mask t) {
    for (Mask k : family)
      if (k != 0 && subset_of(k, t)) return true;
    return false;
  };
  auto is_ideal = [&](Mask t) {
    return std::find(family.begin(), family.end(), t) != family.end();
  };
  ApproxResult r;
  r.tag = "strong";
  const std::size_t n = st.size();
  for (int x = 0; x < static_cast<int>(n); ++x) {
    Mask g = gran.at(x);
    if (has_bit(a, x)) {
      ProvenanceEntry e;
      e.element = x;
      e.lower_side = true;
      e.tested = g & ~a & full_mask(n);
      e.verdict = has_nonempty_ideal_within(e.tested);
      e.note = "mu contains a nonempty ideal";
      if (e.verdict) r.lower |= bit(x);
      r.provenance.push_back(e);
    }
    ProvenanceEntry e;
    e.element = x;
    e.lower_side = false;
    e.tested = g & a;
    e.verdict = is_ideal(e.tested);  // tested == upsilon(tested) exactly then
    if (!e.verdict) r.upper |= bit(x);
    r.provenance.push_back(e);
  }
  r.upper |= a;
  detail::check_inclusion(r, a);
  return r;
}

// Antichain-induced approximations. The antichain must consist of pairwise
// incomparable members of the enumerated sigma-ideal family.
inline ApproxResult approx_antichain(const SigmaStructure& st, const Granulation& gran,
                                     const std::vector<Mask>& antichain, Mask a) {
  if (gran.size() != st.size()) throw std::invalid_argument("granulation universe mismatch");
  std::vector<Mask> family = enumerate_sigma_ideals(st);
  for (Mask c : antichain)
    if (std::find(family.begin(), family.end(), c) == family.end())
      throw std::invalid_argument("antichain member is not a sigma-ideal");
  for (Mask c : antichain)
    for (Mask d : antichain)
      if (c != d && subset_of(c, d))
        throw std::invalid_argument("antichain members must be pairwise incomparable");
  std::vector<Mask> minus;  // O^- = family members with no antichain member below
  for (Mask b : family) {
    bool above = false;
    for (Mask c : antichain)
      if (subset_of(c, b)) above = true;
    if (!above) minus.push_back(b);
  }
  ApproxResult r = detail::pointwise(
      "antichain", st.size(), [&](int x) { return gran.at(x); },
      [&](Mask t, std::string&) {
        return std::find(minus.begin(), minus.end(), t) != minus.end();
      },
      a);
  ApproxResult star = approx_gosi(st, gran, a);
  if (!subset_of(r.lower, star.lower) || !subset_of(star.upper, r.upper))
    throw std::logic_error("antichain approximation bounds violated");
  return r;
}

struct RoughOrder {
  std::string tag;
  std::vector<std::vector<bool>> leq;   // rough inclusion matrix
  std::vector<std::vector<int>> classes;  // equivalence classes of rough equality
};

inline RoughOrder rough_compare(const std::vector<ApproxResult>& results) {
  RoughOrder ro;
  if (results.empty()) return ro;
  ro.tag = results.front().tag;
  for (const auto& r : results)
    if (r.tag != ro.tag) throw std::invalid_argument("mixed operator tags in rough_compare");
  const std::size_t n = results.size();
  ro.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ro.leq[i][j] = subset_of(results[i].lower, results[j].lower) &&
                     subset_of(results[i].upper, results[j].upper);
  std::vector<int> cls(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != -1) continue;
    int id = static_cast<int>(ro.classes.size());
    cls[i] = id;
    ro.classes.push_back({static_cast<int>(i)});
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] == -1 && ro.leq[i][j] && ro.leq[j][i]) {
        cls[j] = id;
        ro.classes.back().push_back(static_cast<int>(j));
      }
  }
  return ro;
}

struct TopologyReport {
  std::vector<Mask> fixpoints;
  bool is_topology = false;
  std::string violation;
};

// Collects the fixpoints of l_kappa over the full power set and verifies
// the topology laws directly.
inline TopologyReport definite_sets_topology(const BinaryRelation& r,
                                             const SubsetFamily& ideal) {
  if (r.size() > 5) throw std::invalid_argument("topology sweep capped at 5 elements");
  TopologyReport rep;
  const Mask full = full_mask(r.size());
  std::set<Mask> fix;
  for (Mask a = 0; a <= full; ++a)
    if (approx_kappa(r, ideal, a).lower == a) fix.insert(a);
  rep.fixpoints.assign(fix.begin(), fix.end());
  if (!fix.count(0)) rep.violation = "missing empty set";
  else if (!fix.count(full)) rep.violation = "missing whole universe";
  else {
    for (Mask a : fix)
      for (Mask b : fix) {
        if (!fix.count(a | b)) rep.violation = "union escapes the family";
        if (!fix.count(a & b)) rep.violation = "intersection escapes the family";
      }
  }
  rep.is_topology = rep.violation.empty();
  return rep;
}

}  // namespace cogran
