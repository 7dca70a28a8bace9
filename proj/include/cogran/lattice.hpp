#pragma once

// Explicit families of subsets and lattice ideals over them.
// The ambient order is always set inclusion; joins and meets are the least
// upper / greatest lower bounds taken inside the ambient family.

#include <optional>
#include <set>
#include <tuple>

#include "cogran/core.hpp"

namespace cogran {

class SubsetFamily {
 public:
  SubsetFamily() : n_(0) {}

  SubsetFamily(std::size_t n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
    Mask fm = full_mask(n);
    for (Mask m : members_)
      if (!subset_of(m, fm)) throw std::invalid_argument("family member outside the universe");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::size_t universe_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Mask>& members() const { return members_; }
  Mask at(std::size_t i) const { return members_.at(i); }

  bool contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
  }

  bool includes(const SubsetFamily& other) const {
    for (Mask m : other.members_)
      if (!contains(m)) return false;
    return true;
  }

  bool closed_under_union() const { return closed([](Mask a, Mask b) { return a | b; }); }
  bool closed_under_intersection() const { return closed([](Mask a, Mask b) { return a & b; }); }
  bool closed_under_difference() const { return closed([](Mask a, Mask b) { return a & ~b; }); }
  bool closed_under_complement() const {
    for (Mask m : members_)
      if (!contains(full_mask(n_) & ~m)) return false;
    return true;
  }

  bool operator==(const SubsetFamily& o) const { return n_ == o.n_ && members_ == o.members_; }
  bool operator<(const SubsetFamily& o) const { return members_ < o.members_; }

 private:
  template <typename Op>
  bool closed(Op op) const {
    for (Mask a : members_)
      for (Mask b : members_)
        if (!contains(op(a, b))) return false;
    return true;
  }

  std::size_t n_;
  std::vector<Mask> members_;
};

inline SubsetFamily power_set(std::size_t n) {
  if (n > 20) throw std::invalid_argument("power set enumeration capped at 20 elements");
  std::vector<Mask> all;
  all.reserve(std::size_t{1} << n);
  for (Mask m = 0; m <= full_mask(n); ++m) all.push_back(m);
  return SubsetFamily(n, std::move(all));
}

// Least member of the ambient containing a|b, when unique.
inline std::optional<Mask> ambient_join(const SubsetFamily& ambient, Mask a, Mask b) {
  std::optional<Mask> best;
  for (Mask m : ambient.members()) {
    if (!subset_of(a | b, m)) continue;
    if (!best || subset_of(m, *best)) best = m;
  }
  if (best)
    for (Mask m : ambient.members())
      if (subset_of(a | b, m) && !subset_of(*best, m)) return std::nullopt;  // no least
  return best;
}

inline std::optional<Mask> ambient_meet(const SubsetFamily& ambient, Mask a, Mask b) {
  std::optional<Mask> best;
  for (Mask m : ambient.members()) {
    if (!subset_of(m, a & b)) continue;
    if (!best || subset_of(*best, m)) best = m;
  }
  if (best)
    for (Mask m : ambient.members())
      if (subset_of(m, a & b) && !subset_of(m, *best)) return std::nullopt;
  return best;
}

struct IdealCheck {
  bool ok = false;
  enum class Violation { None, Empty, DownClosure, JoinClosure, NoJoin } violation = Violation::None;
  Mask a = 0, b = 0;  // witness pair for the failing law
};

// Checks the o-Ideal and Join Closure laws of candidate within ambient.
inline IdealCheck is_lattice_ideal(const SubsetFamily& ambient, const SubsetFamily& candidate) {
  if (!ambient.includes(candidate))
    throw std::invalid_argument("candidate member outside the ambient family");
  IdealCheck c;
  if (candidate.empty()) {
    c.violation = IdealCheck::Violation::Empty;
    return c;
  }
  for (Mask b : candidate.members())
    for (Mask a : ambient.members())
      if (subset_of(a, b) && !candidate.contains(a)) {
        c.violation = IdealCheck::Violation::DownClosure;
        c.a = a;
        c.b = b;
        return c;
      }
  for (Mask a : candidate.members())
    for (Mask b : candidate.members()) {
      auto j = ambient_join(ambient, a, b);
      if (!j) {
        c.violation = IdealCheck::Violation::NoJoin;
        c.a = a;
        c.b = b;
        return c;
      }
      if (!candidate.contains(*j)) {
        c.violation = IdealCheck::Violation::JoinClosure;
        c.a = a;
        c.b = b;
        return c;
      }
    }
  c.ok = true;
  return c;
}

// The unique minimum member of the ambient, when it exists.
inline std::optional<Mask> ambient_bottom(const SubsetFamily& ambient) {
  std::optional<Mask> best;
  for (Mask m : ambient.members())
    if (!best || subset_of(m, *best)) best = m;
  if (best)
    for (Mask m : ambient.members())
      if (!subset_of(*best, m)) return std::nullopt;
  return best;
}

// Alternates down-closure and pairwise-join closure to a fixpoint.
inline SubsetFamily generated_lattice_ideal(const SubsetFamily& ambient,
                                            const SubsetFamily& seed) {
  if (!ambient.includes(seed)) throw std::invalid_argument("seed outside the ambient family");
  auto bottom = ambient_bottom(ambient);
  if (!bottom) throw std::invalid_argument("ambient family has no least member");
  std::set<Mask> cur(seed.members().begin(), seed.members().end());
  cur.insert(*bottom);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot(cur.begin(), cur.end());
    for (Mask b : snapshot)
      for (Mask a : ambient.members())
        if (subset_of(a, b) && cur.insert(a).second) grew = true;
    for (Mask a : snapshot)
      for (Mask b : snapshot) {
        auto j = ambient_join(ambient, a, b);
        if (!j) throw std::invalid_argument("ambient family is not a join semilattice");
        if (cur.insert(*j).second) grew = true;
      }
  }
  return SubsetFamily(ambient.universe_size(), std::vector<Mask>(cur.begin(), cur.end()));
}

struct PrimeCheck {
  bool prime = false;
  Mask a = 0, b = 0;  // witness: meet in ideal, neither factor in it
};

inline PrimeCheck is_prime_lattice_ideal(const SubsetFamily& ambient,
                                         const SubsetFamily& ideal) {
  IdealCheck base = is_lattice_ideal(ambient, ideal);
  if (!base.ok) throw std::invalid_argument("candidate is not a lattice ideal of the ambient");
  PrimeCheck p;
  for (Mask a : ambient.members())
    for (Mask b : ambient.members()) {
      auto m = ambient_meet(ambient, a, b);
      if (!m) throw std::invalid_argument("ambient family is not a meet semilattice");
      if (ideal.contains(*m) && !ideal.contains(a) && !ideal.contains(b)) {
        p.a = a;
        p.b = b;
        return p;
      }
    }
  p.prime = true;
  return p;
}

// All lattice ideals of the ambient, reached by closure-forced search:
// start from the least ideal and repeatedly adjoin one element and re-close.
inline std::vector<SubsetFamily> enumerate_lattice_ideals(const SubsetFamily& ambient) {
  if (ambient.size() > 24)
    throw std::invalid_argument("lattice ideal enumeration capped at 24 ambient members");
  std::set<std::vector<Mask>> seen;
  std::vector<SubsetFamily> out;
  std::vector<SubsetFamily> queue;
  SubsetFamily least = generated_lattice_ideal(
      ambient, SubsetFamily(ambient.universe_size(), {}));
  seen.insert(least.members());
  out.push_back(least);
  queue.push_back(least);
  while (!queue.empty()) {
    SubsetFamily k = queue.back();
    queue.pop_back();
    for (Mask m : ambient.members()) {
      if (k.contains(m)) continue;
      std::vector<Mask> ext = k.members();
      ext.push_back(m);
      SubsetFamily grown = generated_lattice_ideal(
          ambient, SubsetFamily(ambient.universe_size(), std::move(ext)));
      if (seen.insert(grown.members()).second) {
        out.push_back(grown);
        queue.push_back(grown);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Ideal of the full power-set algebra: nonempty, submask-closed, union-closed.
inline bool is_powerset_ideal(std::size_t n, const SubsetFamily& family) {
  if (family.empty() || family.universe_size() != n) return false;
  for (Mask m : family.members()) {
    bool ok = true;
    for_each_submask(m, [&](Mask s) {
      if (!family.contains(s)) ok = false;
    });
    if (!ok) return false;
  }
  for (Mask a : family.members())
    for (Mask b : family.members())
      if (!family.contains(a | b)) return false;
  return true;
}

}  // namespace cogran
