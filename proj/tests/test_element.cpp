#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace vdh;
using namespace vdh::testing;

TEST_SUITE_BEGIN("element");

TEST_CASE("identity laws") {
  for (auto g : {trivial_group(2), z2_faithful(2), sym3(3)}) {
    SymTreePair id = identity_element(g);
    CHECK(reduce(id) == id);
    CHECK(act(id, CantorPoint(g->arity(), "0", "10")) ==
          CantorPoint(g->arity(), "0", "10"));
    auto pool = generator_pool(g);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      SymTreePair x = sample_element(pool, rng, 6);
      CHECK(compose(id, x) == x);
      CHECK(compose(x, id) == x);
    }
  }
}

TEST_CASE("expand: identity at the root") {
  auto g = trivial_group(2);
  SymTreePair e = expand(identity_element(g), LeafAddress::root());
  CHECK(format_element_inline(e) == "0->0:id; 1->1:id");
}

TEST_CASE("expand twists the children by the q-image") {
  auto g = z2_faithful(2);
  // Single-leaf pair labeled a with q(a) = (0 1).
  SymTreePair e(g, trivial_tree(2), {LeafAddress::root()}, {1});
  SymTreePair x = expand(e, LeafAddress::root());
  CHECK(format_element_inline(x) == "0->1:a; 1->0:a");
  // The refined pair represents the same map: check on sample points.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 16; ++i) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::string p, w;
    for (int k = 0; k < 3; ++k) p += static_cast<char>('0' + bit(rng));
    w += static_cast<char>('0' + bit(rng));
    CantorPoint c(2, p, w);
    CHECK(act(e, c) == act(x, c));
  }
  CHECK(equals(e, x));
}

TEST_CASE("expansions at different leaves commute") {
  auto g = z2_faithful(2);
  for (const auto& e : enumerate_reduced_elements(g, 2)) {
    const auto& leaves = e.domain().leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (std::size_t j = 0; j < leaves.size(); ++j) {
        if (i == j) continue;
        SymTreePair ab = expand(expand(e, leaves[i]), leaves[j]);
        SymTreePair ba = expand(expand(e, leaves[j]), leaves[i]);
        CHECK(ab == ba);
      }
  }
}

TEST_CASE("reduce contracts a kernel-labeled caret") {
  auto g = z2_kernel();
  // 0 -> 0 : a, 1 -> 1 : a with q(a) = id contracts to the root caret.
  SymTreePair e(g, parse_tree("0 1", 2),
                {LeafAddress("0"), LeafAddress("1")}, {1, 1});
  SymTreePair r = reduce(e);
  CHECK(r.leaf_count() == 1);
  CHECK(format_element_inline(r) == "e->e:a");

  // Distinct labels block the contraction.
  SymTreePair f(g, parse_tree("0 1", 2),
                {LeafAddress("0"), LeafAddress("1")}, {1, 0});
  CHECK(is_reduced(f));
}

TEST_CASE("reduce undoes any expansion") {
  for (auto g : {z2_faithful(2), sym3(3)}) {
    for (const auto& e : enumerate_reduced_elements(g, 1)) {
      for (const auto& l : e.domain().leaves())
        CHECK(reduce(expand(e, l)) == e);
    }
  }
}

TEST_CASE("compose: inverse law on random elements") {
  for (auto g : {trivial_group(2), z2_faithful(2), sym3(2), sym3(3)}) {
    auto pool = generator_pool(g);
    std::mt19937_64 rng(11);
    SymTreePair id = identity_element(g);
    for (int i = 0; i < 30; ++i) {
      SymTreePair x = sample_element(pool, rng, 8);
      CHECK(compose(x, inverse(x)) == id);
      CHECK(compose(inverse(x), x) == id);
      CHECK(inverse(inverse(x)) == x);
    }
  }
}

TEST_CASE("compose agrees with pointwise evaluation on classical pairs") {
  auto g = trivial_group(2);
  // Three hand-built unlabeled tree pairs.
  SymTreePair f1(g, parse_tree("0 10 11", 2),
                 {LeafAddress("10"), LeafAddress("11"), LeafAddress("0")},
                 {0, 0, 0});
  SymTreePair f2(g, parse_tree("00 01 1", 2),
                 {LeafAddress("1"), LeafAddress("00"), LeafAddress("01")},
                 {0, 0, 0});
  SymTreePair f3(g, parse_tree("0 1", 2), {LeafAddress("1"), LeafAddress("0")},
                 {0, 0});
  std::vector<SymTreePair> fs{f1, f2, f3};
  std::mt19937_64 rng(5);
  for (const auto& a : fs)
    for (const auto& b : fs) {
      SymTreePair ab = compose(a, b);
      for (int i = 0; i < 32; ++i) {
        std::uniform_int_distribution<int> bit(0, 1);
        std::string p, w;
        for (int k = 0; k < 4; ++k) p += static_cast<char>('0' + bit(rng));
        w += static_cast<char>('0' + bit(rng));
        CantorPoint c(2, p, w);
        Stream direct = apply_stream(a, apply_stream(b, point_stream(c)));
        CHECK(streams_agree(point_stream(act(ab, c)), direct));
      }
    }
}

TEST_CASE("compose multiplies labels through iota") {
  auto g = sym3(3);
  for (auto s : elements(g))
    for (auto t : elements(g)) {
      CHECK(compose(iota(s), iota(t)) == iota(mul(s, t)));
    }
}

TEST_CASE("inverse of the twisted single caret") {
  auto g = z2_faithful(2);
  SymTreePair e(g, parse_tree("0 1", 2),
                {LeafAddress("0"), LeafAddress("1")}, {1, 0});  // iota(a)
  SymTreePair x = inverse(e);
  CHECK(format_element_inline(x) == "0->0:a; 1->1:id");  // a has order 2
  CHECK(compose(x, e) == identity_element(g));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 16; ++i) {
    CantorPoint c = [&] {
      std::uniform_int_distribution<int> bit(0, 1);
      std::string p, w;
      for (int k = 0; k < 3; ++k) p += static_cast<char>('0' + bit(rng));
      w += static_cast<char>('0' + bit(rng));
      return CantorPoint(2, p, w);
    }();
    CHECK(act(x, act(e, c)) == c);
  }
}

TEST_CASE("act evaluates the tail twist") {
  auto g = z2_faithful(2);
  // 0 -> 0 labeled a with q(a) = (0 1); 1 -> 1 unlabeled.
  SymTreePair e(g, parse_tree("0 1", 2),
                {LeafAddress("0"), LeafAddress("1")}, {1, 0});
  CHECK(format_point(act(e, parse_point("0(10)", 2))) == "0(01)");
  CHECK(format_point(act(e, parse_point("1(1)", 2))) == "(1)");

  auto t = trivial_group(2);
  SymTreePair swap(t, parse_tree("0 1", 2),
                   {LeafAddress("1"), LeafAddress("0")}, {0, 0});
  CHECK(format_point(act(swap, parse_point("(0)", 2))) == "1(0)");
}

TEST_CASE("act agrees with the stream oracle") {
  for (auto g : {z2_faithful(2), sym3(3)}) {
    auto pool = generator_pool(g);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
      SymTreePair e = sample_element(pool, rng, 6);
      std::uniform_int_distribution<int> digit(0, g->arity() - 1);
      std::string p, w;
      for (int k = 0; k < 4; ++k) p += static_cast<char>('0' + digit(rng));
      for (int k = 0; k < 2; ++k) w += static_cast<char>('0' + digit(rng));
      CantorPoint c(g->arity(), p, w);
      CHECK(streams_agree(point_stream(act(e, c)),
                          apply_stream(e, point_stream(c))));
    }
  }
}

TEST_CASE("equals") {
  auto g = z2_faithful(2);
  auto pool = generator_pool(g);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    SymTreePair e = sample_element(pool, rng, 6);
    for (const auto& l : e.domain().leaves()) CHECK(equals(e, expand(e, l)));
  }
  // Two identical generator words give equal elements.
  std::mt19937_64 r1(23), r2(23);
  CHECK(equals(sample_element(pool, r1, 20), sample_element(pool, r2, 20)));
  // Distinct label placements are distinct elements.
  SymTreePair x(g, parse_tree("0 1", 2), {LeafAddress("0"), LeafAddress("1")},
                {1, 0});
  SymTreePair y(g, parse_tree("0 1", 2), {LeafAddress("0"), LeafAddress("1")},
                {0, 1});
  CHECK_FALSE(equals(x, y));
  CHECK_THROWS_AS(equals(x, identity_element(trivial_group(2))), Error);
}

TEST_CASE("action separates canonical forms") {
  auto g = z2_faithful(2);
  auto all = enumerate_reduced_elements(g, 2);
  // Exhaustive point set: prefixes up to the combined tree depth, single
  // digit periods.
  std::vector<CantorPoint> points;
  for (std::size_t len = 0; len <= 4; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string p;
      for (std::size_t k = 0; k < len; ++k)
        p += static_cast<char>('0' + ((bits >> k) & 1));
      points.emplace_back(2, p, "0");
      points.emplace_back(2, p, "1");
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool same_action = true;
      for (const auto& c : points)
        if (!(act(all[i], c) == act(all[j], c))) {
          same_action = false;
          break;
        }
      CHECK(same_action == equals(all[i], all[j]));
      CHECK_FALSE(same_action);  // canonical forms in the list are distinct
    }
}

TEST_CASE("pi is injective for a faithful q and kills the kernel otherwise") {
  auto g = z2_faithful(2);
  auto all = enumerate_reduced_elements(g, 2);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK_FALSE(pi(all[i]) == pi(all[j]));

  auto k = z2_kernel();
  CHECK(pi(iota(LocalElement{k, 1})) == identity_element(k->image_group()));
  CHECK(pi(identity_element(k)) == identity_element(k->image_group()));
}

TEST_CASE("pi is a homomorphism") {
  for (auto g : {z2_faithful(2), z2_kernel(), sym3(2)}) {
    auto pool = generator_pool(g);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
      SymTreePair f = sample_element(pool, rng, 6);
      SymTreePair h = sample_element(pool, rng, 6);
      CHECK(pi(compose(h, f)) == compose(pi(h), pi(f)));
    }
  }
}

TEST_CASE("pi_section is a right inverse of pi") {
  for (auto g : {z2_faithful(2), z2_kernel(), sym3(2), sym3(3)}) {
    auto image = g->image_group();
    auto pool = generator_pool(image);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
      SymTreePair v = sample_element(pool, rng, 6);
      CHECK(pi(pi_section(g, v)) == v);
    }
  }
  // The section forgets kernel labels.
  auto k = z2_kernel();
  SymTreePair e = iota(LocalElement{k, 1});
  CHECK_FALSE(pi_section(k, pi(e)) == e);
  CHECK_THROWS_AS(pi_section(k, identity_element(k)), Error);
}

TEST_CASE("iota and retract") {
  for (auto g : {z2_faithful(2), sym3(3), z2_kernel()}) {
    CHECK(iota(identity(g)) == identity_element(g));
    CHECK(retract(identity_element(g)) == identity(g));
    for (auto h : elements(g)) {
      CHECK(retract(iota(h)) == h);
    }
    auto pool = generator_pool(g);
    std::mt19937_64 rng(37);
    for (int i = 0; i < 20; ++i) {
      SymTreePair e = sample_element(pool, rng, 6);
      CHECK(retract(expand(e, e.domain().leaves().front())) == retract(e));
      CHECK(retract(expand(e, e.domain().leaves().back())) == retract(e));
    }
  }
}

TEST_CASE("iota is a homomorphism, verified by actions too") {
  auto g = sym3(3);
  std::mt19937_64 rng(41);
  for (auto s : elements(g))
    for (auto t : elements(g)) {
      SymTreePair lhs = iota(mul(s, t));
      SymTreePair rhs = compose(iota(s), iota(t));
      CHECK(lhs == rhs);
      for (int i = 0; i < 4; ++i) {
        std::uniform_int_distribution<int> digit(0, 2);
        std::string p, w;
        for (int k = 0; k < 3; ++k) p += static_cast<char>('0' + digit(rng));
        w += static_cast<char>('0' + digit(rng));
        CantorPoint c(3, p, w);
        CHECK(act(lhs, c) == act(rhs, c));
      }
    }
}

TEST_CASE("vd_generating_set") {
  auto g = trivial_group(2);
  auto gens = vd_generating_set(g);
  CHECK(gens.size() == 21);  // 1 one-caret swap + 20 reduced two-caret pairs
  SymTreePair swap(g, parse_tree("0 1", 2),
                   {LeafAddress("1"), LeafAddress("0")}, {0, 0});
  bool has_swap = false;
  for (const auto& e : gens) {
    CHECK(is_reduced(e));
    CHECK_FALSE(e == identity_element(g));
    CHECK(retract(e) == identity(g));
    if (e == swap) has_swap = true;
    // Inverse-closed.
    bool has_inverse = false;
    SymTreePair inv_e = inverse(e);
    for (const auto& f : gens)
      if (f == inv_e) has_inverse = true;
    CHECK(has_inverse);
  }
  CHECK(has_swap);
}

TEST_CASE("generating set covers the two-caret sphere within a bounded ball") {
  // BFS over the unlabeled generators, pruned to canonical forms with at
  // most three carets, reaches every unlabeled element with at most two.
  auto g = trivial_group(2);
  auto gens = vd_generating_set(g);
  std::set<std::string> seen;
  std::vector<SymTreePair> frontier{identity_element(g)};
  seen.insert(identity_element(g).key());
  for (int round = 0; round < 6 && !frontier.empty(); ++round) {
    std::vector<SymTreePair> next;
    for (const auto& e : frontier)
      for (const auto& x : gens) {
        SymTreePair p = compose(e, x);
        if (p.domain().carets() > 3) continue;
        if (seen.insert(p.key()).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  for (const auto& e : enumerate_reduced_elements(g, 2))
    CHECK(seen.contains(e.key()));
}

TEST_CASE("bfs_ball basics") {
  auto g = z2_faithful(2);
  auto gens = generator_pool(g);
  std::vector<std::size_t> sizes;
  auto ball0 = bfs_ball(gens, 0, {}, &sizes);
  CHECK(ball0.size() == 1);
  CHECK(sizes == std::vector<std::size_t>{1});
  auto ball1 = bfs_ball(gens, 1);
  CHECK(ball1.size() <= gens.size() + 1);
  std::set<std::string> keys;
  for (const auto& e : ball1) keys.insert(e.key());
  CHECK(keys.size() == ball1.size());
  CHECK(keys.contains(identity_element(g).key()));
  for (const auto& e : gens) CHECK(keys.contains(e.key()));
  // Determinism.
  auto again = bfs_ball(gens, 2);
  auto ball2 = bfs_ball(gens, 2);
  REQUIRE(again.size() == ball2.size());
  for (std::size_t i = 0; i < again.size(); ++i)
    CHECK(again[i] == ball2[i]);
  // Ball limit.
  BallLimits small;
  small.max_elements = 3;
  CHECK_THROWS_AS(bfs_ball(gens, 3, small), Error);
}

TEST_CASE("element maps parse and print") {
  auto g = sym3(3);
  std::vector<std::string> lines = {"map 0 -> 2 : s*c", "map 1 -> 1 : id",
                                    "map 2 -> 0 : c"};
  SymTreePair e = parse_element_maps(lines, g);
  auto printed = format_element_maps(e);
  SymTreePair e2 = parse_element_maps(printed, g);
  CHECK(e == e2);
  CHECK_THROWS_AS(parse_element_maps({"map 0 -> 1 : bogus"}, g), Error);
  CHECK_THROWS_AS(parse_element_maps({"map 0 -> 1"}, g), Error);
  CHECK_THROWS_AS(
      parse_element_maps({"map 0 -> 0 : id", "map 1 -> 1 : id",
                          "map 1 -> 2 : id"},
                         g),
      Error);
}

TEST_SUITE_END();
