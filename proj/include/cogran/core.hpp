#pragma once

// Finite universes, subsets as bit masks, binary relations and the
// neighborhood operators every approximation in this library is built from.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cogran {

using Mask = std::uint64_t;

constexpr std::size_t kMaxUniverse = 62;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }
constexpr Mask full_mask(std::size_t n) { return (Mask{1} << n) - 1; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }

// Iterate set bits of a mask.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

// Iterate all submasks of m, including 0 and m itself.
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("universe must have at least one element");
    if (labels_.size() > kMaxUniverse)
      throw std::invalid_argument("universe size exceeds the 62-element cap");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!rank_.emplace(labels_[i], static_cast<int>(i)).second)
        throw std::invalid_argument("duplicate element label: " + labels_[i]);
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  int rank(const std::string& label) const {
    auto it = rank_.find(label);
    if (it == rank_.end()) throw std::invalid_argument("unknown element label: " + label);
    return it->second;
  }

  bool knows(const std::string& label) const { return rank_.count(label) != 0; }

  Mask full() const { return full_mask(size()); }

  Mask mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(rank(l));
    return m;
  }

  std::vector<std::string> labels_of(Mask m) const {
    std::vector<std::string> out;
    for_each_bit(m, [&](int i) { out.push_back(label(i)); });
    return out;
  }

  // Members in declaration order: "{a, b, c}" / "{}".
  std::string format(Mask m) const {
    std::string out = "{";
    bool first = true;
    for_each_bit(m, [&](int i) {
      if (!first) out += ", ";
      out += label(i);
      first = false;
    });
    out += "}";
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> rank_;
};

class BinaryRelation {
 public:
  explicit BinaryRelation(std::size_t n) : n_(n), tgt_(n, 0), src_(n, 0) {
    if (n == 0 || n > kMaxUniverse) throw std::invalid_argument("bad relation carrier size");
  }

  std::size_t size() const { return n_; }

  void add(int a, int b) {
    check(a);
    check(b);
    tgt_[static_cast<std::size_t>(a)] |= bit(b);
    src_[static_cast<std::size_t>(b)] |= bit(a);
  }

  bool has(int a, int b) const {
    check(a);
    check(b);
    return has_bit(tgt_[static_cast<std::size_t>(a)], b);
  }

  // {b : R a b}
  Mask targets(int a) const {
    check(a);
    return tgt_[static_cast<std::size_t>(a)];
  }

  // {a : R a b}
  Mask sources(int b) const {
    check(b);
    return src_[static_cast<std::size_t>(b)];
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (Mask m : tgt_) c += static_cast<std::size_t>(popcount(m));
    return c;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for_each_bit(tgt_[a], [&](int b) { out.emplace_back(static_cast<int>(a), b); });
    return out;
  }

  bool operator==(const BinaryRelation& o) const { return n_ == o.n_ && tgt_ == o.tgt_; }

 private:
  void check(int x) const {
    if (x < 0 || static_cast<std::size_t>(x) >= n_)
      throw std::out_of_range("element rank out of carrier range");
  }

  std::size_t n_;
  std::vector<Mask> tgt_;
  std::vector<Mask> src_;
};

// Convention for the intersection of an empty neighborhood family.
enum class EmptyMeet { Empty, Whole };

// [x]_R = {a : R a x}
inline Mask successor_neighborhood(const BinaryRelation& r, int x) { return r.sources(x); }

// [x]^R = {a : R x a}
inline Mask predecessor_neighborhood(const BinaryRelation& r, int x) { return r.targets(x); }

// <x> = intersection of all predecessor neighborhoods containing x.
inline Mask min_neighborhood(const BinaryRelation& r, int x,
                             EmptyMeet em = EmptyMeet::Empty) {
  const std::size_t n = r.size();
  Mask acc = full_mask(n);
  bool any = false;
  for (std::size_t b = 0; b < n; ++b) {
    Mask nb = r.targets(static_cast<int>(b));
    if (has_bit(nb, x)) {
      acc &= nb;
      any = true;
    }
  }
  if (!any) return em == EmptyMeet::Empty ? Mask{0} : full_mask(n);
  return acc;
}

// tau a b iff a is in <b>.
inline BinaryRelation tau_relation(const BinaryRelation& r, EmptyMeet em = EmptyMeet::Empty) {
  const std::size_t n = r.size();
  BinaryRelation tau(n);
  for (std::size_t b = 0; b < n; ++b) {
    Mask mb = min_neighborhood(r, static_cast<int>(b), em);
    for_each_bit(mb, [&](int a) { tau.add(a, static_cast<int>(b)); });
  }
  return tau;
}

struct RelationProperties {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool quasi_reflexive = false;   // R a b implies R a a
  bool quasi_order = false;       // reflexive and transitive
  bool weakly_antisymmetric = false;  // tau a b and tau b a imply <a> = <b>
};

inline RelationProperties relation_properties(const BinaryRelation& r) {
  const int n = static_cast<int>(r.size());
  RelationProperties p;
  p.reflexive = true;
  p.symmetric = true;
  p.transitive = true;
  p.antisymmetric = true;
  p.quasi_reflexive = true;
  for (int a = 0; a < n; ++a) {
    if (!r.has(a, a)) p.reflexive = false;
    Mask ta = r.targets(a);
    if (ta != 0 && !r.has(a, a)) p.quasi_reflexive = false;
    for_each_bit(ta, [&](int b) {
      if (!r.has(b, a)) p.symmetric = false;
      if (a != b && r.has(b, a)) p.antisymmetric = false;
      if (!subset_of(r.targets(b), ta)) p.transitive = false;
    });
  }
  p.quasi_order = p.reflexive && p.transitive;
  p.weakly_antisymmetric = true;
  BinaryRelation tau = tau_relation(r);
  for (int a = 0; a < n && p.weakly_antisymmetric; ++a)
    for (int b = 0; b < n; ++b)
      if (tau.has(a, b) && tau.has(b, a) &&
          min_neighborhood(r, a) != min_neighborhood(r, b)) {
        p.weakly_antisymmetric = false;
        break;
      }
  return p;
}

}  // namespace cogran
