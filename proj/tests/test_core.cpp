#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cogran/core.hpp"
#include "doctest.h"

using namespace cogran;

namespace {

// The six-element running example used across the test suite.
Universe example_universe() { return Universe({"a", "b", "c", "e", "f", "g"}); }

BinaryRelation example_relation(const Universe& u) {
  BinaryRelation r(u.size());
  auto add = [&](const char* x, const char* y) { r.add(u.rank(x), u.rank(y)); };
  add("a", "c");
  add("a", "e");
  add("b", "c");
  add("b", "e");
  add("c", "c");
  add("c", "b");
  add("e", "a");
  add("f", "f");
  return r;
}

// Independent oracle: recompute <x> from the raw definition by scanning all
// predecessor neighborhoods.
Mask oracle_min_neighborhood(const BinaryRelation& r, int x) {
  Mask acc = full_mask(r.size());
  bool any = false;
  for (std::size_t b = 0; b < r.size(); ++b) {
    Mask nb = 0;
    for (std::size_t t = 0; t < r.size(); ++t)
      if (r.has(static_cast<int>(b), static_cast<int>(t))) nb |= bit(static_cast<int>(t));
    if (has_bit(nb, x)) {
      acc &= nb;
      any = true;
    }
  }
  return any ? acc : 0;
}

}  // namespace

TEST_CASE("mask utilities") {
  CHECK(bit(0) == 1u);
  CHECK(full_mask(3) == 0b111u);
  CHECK(subset_of(0b101, 0b111));
  CHECK(!subset_of(0b101, 0b011));
  CHECK(popcount(0b1011) == 3);
  int sum = 0;
  for_each_bit(0b1010, [&](int i) { sum += i; });
  CHECK(sum == 1 + 3);
  int count = 0;
  for_each_submask(0b101, [&](Mask) { ++count; });
  CHECK(count == 4);
}

TEST_CASE("mask algebra satisfies De Morgan and double complement") {
  std::mt19937_64 eng(42);
  const Mask full = full_mask(6);
  for (int i = 0; i < 200; ++i) {
    Mask a = eng() & full, b = eng() & full;
    CHECK((full & ~(a | b)) == ((full & ~a) & (full & ~b)));
    CHECK((full & ~(a & b)) == ((full & ~a) | (full & ~b)));
    CHECK((full & ~(full & ~a)) == a);
  }
}

TEST_CASE("universe labels, ranks and formatting") {
  Universe u = example_universe();
  CHECK(u.size() == 6);
  CHECK(u.rank("a") == 0);
  CHECK(u.rank("g") == 5);
  CHECK(u.format(u.mask_of({"c", "a"})) == "{a, c}");
  CHECK(u.format(0) == "{}");
  CHECK_THROWS_AS(u.rank("z"), std::invalid_argument);
  CHECK_THROWS_AS(Universe({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Universe({}), std::invalid_argument);
}

TEST_CASE("relation storage keeps targets and sources in sync") {
  Universe u = example_universe();
  BinaryRelation r = example_relation(u);
  CHECK(r.pair_count() == 8);
  CHECK(r.has(u.rank("a"), u.rank("c")));
  CHECK(!r.has(u.rank("c"), u.rank("a")));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(r.has(a, b) == has_bit(r.sources(b), a));
}

TEST_CASE("pair bound tables of the running example") {
  Universe u = example_universe();
  BinaryRelation r = example_relation(u);
  auto U = [&](const char* x, const char* y) {
    return r.targets(u.rank(x)) & r.targets(u.rank(y));
  };
  auto L = [&](const char* x, const char* y) {
    return r.sources(u.rank(x)) & r.sources(u.rank(y));
  };
  CHECK(u.format(U("a", "b")) == "{c, e}");
  CHECK(L("a", "b") == 0);
  CHECK(u.format(U("a", "c")) == "{c}");
  CHECK(L("a", "c") == 0);
  CHECK(U("a", "e") == 0);
  CHECK(L("a", "e") == 0);
  CHECK(u.format(U("b", "c")) == "{c}");
  CHECK(u.format(L("b", "c")) == "{c}");
  CHECK(U("b", "e") == 0);
  CHECK(L("b", "e") == 0);
  CHECK(U("c", "e") == 0);
  CHECK(u.format(L("c", "e")) == "{a, b}");
  for (const char* x : {"a", "b", "c", "e"}) {
    CHECK(U(x, "f") == 0);
    CHECK(L(x, "f") == 0);
    CHECK(U(x, "g") == 0);
    CHECK(L(x, "g") == 0);
  }
}

TEST_CASE("neighborhood table of the running example") {
  Universe u = example_universe();
  BinaryRelation r = example_relation(u);
  auto row = [&](const char* x, const char* up, const char* lo, const char* mn) {
    int i = u.rank(x);
    CHECK(u.format(predecessor_neighborhood(r, i)) == up);
    CHECK(u.format(successor_neighborhood(r, i)) == lo);
    CHECK(u.format(min_neighborhood(r, i)) == mn);
  };
  row("a", "{c, e}", "{e}", "{a}");
  row("b", "{c, e}", "{c}", "{b, c}");
  row("c", "{b, c}", "{a, b, c}", "{c}");
  // the published table prints U(e,e)={c}; the pair list forces {a}
  row("e", "{a}", "{a, b}", "{c, e}");
  row("f", "{f}", "{f}", "{f}");
  row("g", "{}", "{}", "{}");
}

TEST_CASE("empty meet convention is configurable") {
  Universe u = example_universe();
  BinaryRelation r = example_relation(u);
  int g = u.rank("g");
  CHECK(min_neighborhood(r, g, EmptyMeet::Empty) == 0);
  CHECK(min_neighborhood(r, g, EmptyMeet::Whole) == u.full());
}

TEST_CASE("min neighborhood matches the blind oracle on all small relations") {
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    const std::size_t cells = n * n;
    for (Mask code = 0; code < (Mask{1} << cells); ++code) {
      BinaryRelation r(n);
      for (std::size_t c = 0; c < cells; ++c)
        if (has_bit(code, static_cast<int>(c)))
          r.add(static_cast<int>(c / n), static_cast<int>(c % n));
      for (int x = 0; x < static_cast<int>(n); ++x)
        CHECK(min_neighborhood(r, x) == oracle_min_neighborhood(r, x));
    }
  }
}

TEST_CASE("nested min neighborhoods are monotone: y in <x> implies <y> within <x>") {
  const std::size_t n = 3;
  for (Mask code = 0; code < (Mask{1} << (n * n)); ++code) {
    BinaryRelation r(n);
    for (std::size_t c = 0; c < n * n; ++c)
      if (has_bit(code, static_cast<int>(c)))
        r.add(static_cast<int>(c / n), static_cast<int>(c % n));
    for (int x = 0; x < static_cast<int>(n); ++x) {
      Mask mx = min_neighborhood(r, x);
      for_each_bit(mx, [&](int y) { CHECK(subset_of(min_neighborhood(r, y), mx)); });
    }
  }
}

TEST_CASE("tau relation holds exactly on min-neighborhood membership") {
  Universe u = example_universe();
  BinaryRelation r = example_relation(u);
  BinaryRelation tau = tau_relation(r);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(tau.has(a, b) == has_bit(min_neighborhood(r, b), a));
  CHECK(tau.has(u.rank("c"), u.rank("b")));
}

TEST_CASE("tau of a reflexive relation is reflexive, transitive, weakly antisymmetric") {
  const std::size_t n = 3;
  std::vector<std::pair<int, int>> off;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) off.emplace_back(a, b);
  for (Mask code = 0; code < (Mask{1} << off.size()); ++code) {
    BinaryRelation r(n);
    for (int a = 0; a < 3; ++a) r.add(a, a);
    for (std::size_t c = 0; c < off.size(); ++c)
      if (has_bit(code, static_cast<int>(c))) r.add(off[c].first, off[c].second);
    BinaryRelation tau = tau_relation(r);
    RelationProperties tp = relation_properties(tau);
    CHECK(tp.reflexive);
    CHECK(tp.transitive);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (tau.has(a, b) && tau.has(b, a))
          CHECK(min_neighborhood(r, a) == min_neighborhood(r, b));
  }
}

TEST_CASE("relation property report") {
  Universe u = example_universe();
  RelationProperties p = relation_properties(example_relation(u));
  CHECK(!p.reflexive);
  CHECK(!p.symmetric);
  CHECK(!p.transitive);

  BinaryRelation id(3);
  for (int i = 0; i < 3; ++i) id.add(i, i);
  RelationProperties pid = relation_properties(id);
  CHECK(pid.reflexive);
  CHECK(pid.symmetric);
  CHECK(pid.transitive);
  CHECK(pid.quasi_order);

  BinaryRelation qr(2);
  qr.add(0, 1);  // holds a pair without its own loop
  CHECK(!relation_properties(qr).quasi_reflexive);
}

TEST_CASE("singleton reflexive universe has singleton neighborhoods") {
  BinaryRelation r(1);
  r.add(0, 0);
  CHECK(min_neighborhood(r, 0) == bit(0));
  CHECK(successor_neighborhood(r, 0) == bit(0));
  CHECK(predecessor_neighborhood(r, 0) == bit(0));
}
