#pragma once

// Generalized ideals relative to an arbitrary binary relation sigma:
// bounds, directedness, sigma-ideals and filters, primality, convexity,
// supremal relations, generated and principal ideals, and the parallel
// approximations mu / upsilon.

#include <optional>
#include <set>

#include "cogran/core.hpp"

namespace cogran {

enum class DirectednessMode { Strict, Weak };

inline const char* mode_name(DirectednessMode m) {
  return m == DirectednessMode::Strict ? "strict" : "weak";
}

struct SigmaStructure {
  BinaryRelation sigma;
  DirectednessMode mode = DirectednessMode::Weak;
  bool allow_empty_ideal = true;

  explicit SigmaStructure(BinaryRelation s, DirectednessMode m = DirectednessMode::Weak,
                          bool allow_empty = true)
      : sigma(std::move(s)), mode(m), allow_empty_ideal(allow_empty) {}

  std::size_t size() const { return sigma.size(); }
  Mask carrier() const { return full_mask(sigma.size()); }
};

// U(a,b) = {x : sigma a x and sigma b x}
inline Mask upper_bounds(const BinaryRelation& sigma, int a, int b) {
  return sigma.targets(a) & sigma.targets(b);
}

// L(a,b) = {x : sigma x a and sigma x b}
inline Mask lower_bounds(const BinaryRelation& sigma, int a, int b) {
  return sigma.sources(a) & sigma.sources(b);
}

inline bool mode_directed_pair(const SigmaStructure& st, Mask b_set, int a, int b) {
  Mask u = upper_bounds(st.sigma, a, b);
  if (st.mode == DirectednessMode::Weak && u == 0) return true;
  return (u & b_set) != 0;
}

inline bool is_U_directed(const SigmaStructure& st, Mask b_set) {
  bool ok = true;
  for_each_bit(b_set, [&](int a) {
    for_each_bit(b_set, [&](int b) {
      if (!mode_directed_pair(st, b_set, a, b)) ok = false;
    });
  });
  return ok;
}

inline bool is_L_directed(const SigmaStructure& st, Mask b_set) {
  bool ok = true;
  for_each_bit(b_set, [&](int a) {
    for_each_bit(b_set, [&](int b) {
      Mask l = lower_bounds(st.sigma, a, b);
      if (st.mode == DirectednessMode::Weak && l == 0) return;
      if ((l & b_set) == 0) ok = false;
    });
  });
  return ok;
}

struct SigmaIdealCheck {
  bool ok = false;
  enum class Clause { None, Proper, EmptyExcluded, DownClosure, Directedness } clause =
      Clause::None;
  int a = -1, b = -1;  // witness pair / element
};

inline SigmaIdealCheck is_sigma_ideal(const SigmaStructure& st, Mask k) {
  SigmaIdealCheck c;
  if (k == st.carrier()) {
    c.clause = SigmaIdealCheck::Clause::Proper;
    return c;
  }
  if (k == 0) {
    if (st.allow_empty_ideal) {
      c.ok = true;
      return c;
    }
    c.clause = SigmaIdealCheck::Clause::EmptyExcluded;
    return c;
  }
  SigmaIdealCheck out;
  out.ok = true;
  for_each_bit(k, [&](int a) {
    if (!out.ok) return;
    Mask src = st.sigma.sources(a);
    if (!subset_of(src, k)) {
      out.ok = false;
      out.clause = SigmaIdealCheck::Clause::DownClosure;
      out.a = std::countr_zero(src & ~k);
      out.b = a;
    }
  });
  if (!out.ok) return out;
  for_each_bit(k, [&](int a) {
    if (!out.ok) return;
    for_each_bit(k, [&](int b) {
      if (!out.ok) return;
      if (!mode_directed_pair(st, k, a, b)) {
        out.ok = false;
        out.clause = SigmaIdealCheck::Clause::Directedness;
        out.a = a;
        out.b = b;
      }
    });
  });
  return out;
}

inline bool is_sigma_filter(const SigmaStructure& st, Mask f) {
  if (f == st.carrier()) return false;
  if (f == 0) return st.allow_empty_ideal;
  bool ok = true;
  for_each_bit(f, [&](int a) {
    if (!subset_of(st.sigma.targets(a), f)) ok = false;
  });
  if (!ok) return false;
  for_each_bit(f, [&](int a) {
    for_each_bit(f, [&](int b) {
      Mask l = lower_bounds(st.sigma, a, b);
      if (st.mode == DirectednessMode::Weak && l == 0) return;
      if ((l & f) == 0) ok = false;
    });
  });
  return ok;
}

inline Mask down_close(const BinaryRelation& sigma, Mask k) {
  bool grew = true;
  while (grew) {
    grew = false;
    Mask add = 0;
    for_each_bit(k, [&](int a) { add |= sigma.sources(a); });
    if (!subset_of(add, k)) {
      k |= add;
      grew = true;
    }
  }
  return k;
}

// All downward-sigma-closed subsets, found by closing seeds rather than a
// blind power-set scan. Includes the empty set and the full carrier.
inline std::vector<Mask> enumerate_downclosed(const BinaryRelation& sigma) {
  const std::size_t n = sigma.size();
  if (n > 20) throw std::invalid_argument("down-set enumeration capped at 20 elements");
  std::set<Mask> seen;
  std::vector<Mask> queue;
  seen.insert(0);
  queue.push_back(0);
  while (!queue.empty()) {
    Mask k = queue.back();
    queue.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (has_bit(k, static_cast<int>(x))) continue;
      Mask grown = down_close(sigma, k | bit(static_cast<int>(x)));
      if (seen.insert(grown).second) queue.push_back(grown);
    }
  }
  return std::vector<Mask>(seen.begin(), seen.end());
}

inline std::vector<Mask> enumerate_sigma_ideals(const SigmaStructure& st) {
  std::vector<Mask> out;
  for (Mask k : enumerate_downclosed(st.sigma))
    if (is_sigma_ideal(st, k).ok) out.push_back(k);
  return out;
}

struct PrimeSigmaCheck {
  bool prime = false;
  int a = -1, b = -1;
};

inline PrimeSigmaCheck is_prime_sigma_ideal(const SigmaStructure& st, Mask k) {
  const int n = static_cast<int>(st.size());
  PrimeSigmaCheck p;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((lower_bounds(st.sigma, a, b) & k) != 0 && !has_bit(k, a) && !has_bit(k, b)) {
        p.a = a;
        p.b = b;
        return p;
      }
  p.prime = true;
  return p;
}

inline bool is_sigma_convex(const SigmaStructure& st, Mask b_set) {
  bool ok = true;
  for_each_bit(b_set, [&](int a) {
    Mask mid = st.sigma.targets(a);
    for_each_bit(mid & ~b_set, [&](int x) {
      if ((st.sigma.targets(x) & b_set) != 0) ok = false;
    });
  });
  return ok;
}

struct SupremalResult {
  bool supremal = false;
  std::vector<std::vector<int>> s;  // s[a][b], valid when supremal
  int witness_a = -1, witness_b = -1;
};

// sigma is supremal when every pair has an element of U(a,b) below all others.
// Ties are broken by least element rank.
inline SupremalResult is_supremal(const BinaryRelation& sigma) {
  const int n = static_cast<int>(sigma.size());
  SupremalResult r;
  r.s.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask u = upper_bounds(sigma, a, b);
      int chosen = -1;
      for_each_bit(u, [&](int cand) {
        if (chosen != -1) return;
        bool dominates = true;
        for_each_bit(u, [&](int x) {
          if (x != cand && !sigma.has(cand, x)) dominates = false;
        });
        if (dominates) chosen = cand;
      });
      if (chosen == -1) {
        r.witness_a = a;
        r.witness_b = b;
        return r;
      }
      r.s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = chosen;
    }
  r.supremal = true;
  return r;
}

// <X> via iterating the closure maps Sigma(lambda(.)) to a fixpoint; when
// sigma is reflexive the pi(L(.)) iteration is computed too and must agree.
inline Mask sigma_generated_ideal(const SigmaStructure& st, Mask x) {
  if (x == 0) throw std::invalid_argument("generation requires a nonempty seed");
  SupremalResult sup = is_supremal(st.sigma);
  if (!sup.supremal) throw std::invalid_argument("sigma is not supremal");
  auto lower_aug = [&](Mask m) {
    Mask add = 0;
    for_each_bit(m, [&](int a) { add |= st.sigma.sources(a); });
    return m | add;
  };
  auto sup_aug = [&](Mask m) {
    Mask add = 0;
    for_each_bit(m, [&](int a) {
      for_each_bit(m, [&](int b) {
        add |= bit(sup.s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      });
    });
    return m | add;
  };
  Mask cur = x;
  for (std::size_t i = 0; i <= st.size(); ++i) {
    Mask next = sup_aug(lower_aug(cur));
    if (next == cur) break;
    cur = next;
  }
  if (cur == st.carrier())
    throw std::invalid_argument("generated set is the whole carrier (properness fails)");
  if (relation_properties(st.sigma).reflexive) {
    // The union of the pi(L(.)) orbit, without the explicit augmentations.
    auto lower_only = [&](Mask m) {
      Mask out = 0;
      for_each_bit(m, [&](int a) { out |= st.sigma.sources(a); });
      return out;
    };
    auto pi_only = [&](Mask m) {
      Mask out = 0;
      for_each_bit(m, [&](int a) {
        for_each_bit(m, [&](int b) {
          out |= bit(sup.s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        });
      });
      return out;
    };
    Mask alt = x, acc = 0;
    std::set<Mask> seen;
    while (true) {
      alt = pi_only(lower_only(alt));
      acc |= alt;
      if (!seen.insert(alt).second) break;  // orbit cycled, union complete
    }
    if (acc != cur) throw std::logic_error("generation iterations disagree");
  }
  return cur;
}

// Inclusion-maximal sigma-ideals contained in a.
inline std::vector<Mask> maximal_ideals_within(const SigmaStructure& st, Mask a) {
  std::vector<Mask> inside;
  for (Mask k : enumerate_sigma_ideals(st))
    if (subset_of(k, a)) inside.push_back(k);
  std::vector<Mask> out;
  for (Mask k : inside) {
    bool maximal = true;
    for (Mask j : inside)
      if (j != k && subset_of(k, j)) maximal = false;
    if (maximal) out.push_back(k);
  }
  return out;
}

struct LeastIdealResult {
  std::optional<Mask> least;
  std::vector<Mask> minimal_covers;  // antichain witness when no minimum exists
};

inline LeastIdealResult least_ideal_containing(const SigmaStructure& st, Mask a) {
  std::vector<Mask> covers;
  for (Mask k : enumerate_sigma_ideals(st))
    if (subset_of(a, k)) covers.push_back(k);
  LeastIdealResult r;
  for (Mask k : covers) {
    bool minimal = true;
    for (Mask j : covers)
      if (j != k && subset_of(j, k)) minimal = false;
    if (minimal) r.minimal_covers.push_back(k);
  }
  if (r.minimal_covers.size() == 1) {
    Mask cand = r.minimal_covers.front();
    bool least = true;
    for (Mask j : covers)
      if (!subset_of(cand, j)) least = false;
    if (least) r.least = cand;
  }
  return r;
}

}  // namespace cogran
