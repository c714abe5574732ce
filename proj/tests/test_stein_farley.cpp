#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "vdh/stein_farley.hpp"

using namespace vdh;
using namespace vdh::testing;

namespace {

PosetVertex based(const CompleteTree& t,
                  const std::shared_ptr<const LocalGroup>& g) {
  return PosetVertex(t, identity_element(g));
}

}  // namespace

TEST_SUITE_BEGIN("stein_farley");

TEST_CASE("height") {
  auto g = trivial_group(2);
  CHECK(height(based(trivial_tree(2), g)) == 0);
  CHECK(height(based(parse_tree("0 1", 2), g)) == 1);
}

TEST_CASE("vertex equality basics") {
  auto g = trivial_group(2);
  PosetVertex v = based(parse_tree("0 1", 2), g);
  CHECK(vertex_equals(v, v));

  // The leaf swap maps the one-caret tree to itself.
  SymTreePair swap(g, parse_tree("0 1", 2),
                   {LeafAddress("1"), LeafAddress("0")}, {0, 0});
  CHECK(vertex_equals(PosetVertex(parse_tree("0 1", 2), swap), v));

  CHECK_FALSE(vertex_equals(based(trivial_tree(2), g), v));  // heights differ

  // A deeper swap does not fix the one-caret tree.
  SymTreePair deep(g, parse_tree("00 01 1", 2),
                   {LeafAddress("1"), LeafAddress("01"), LeafAddress("00")},
                   {0, 0, 0});
  CHECK_FALSE(vertex_equals(PosetVertex(parse_tree("0 1", 2), deep), v));
}

TEST_CASE("vertex equality is an equivalence relation") {
  for (auto g : {trivial_group(2), z2_faithful(2)}) {
    // Vertices [T, g] over small trees and small elements.
    std::vector<PosetVertex> verts;
    auto pool = generator_pool(g);
    std::vector<SymTreePair> elems{identity_element(g)};
    for (std::size_t i = 0; i < std::min<std::size_t>(pool.size(), 6); ++i)
      elems.push_back(pool[i * (pool.size() / 6 + 1) % pool.size()]);
    for (std::size_t c = 0; c <= 2; ++c)
      for (const auto& t : enumerate_trees(2, c))
        for (const auto& e : elems) verts.emplace_back(t, e);
    for (const auto& a : verts) CHECK(vertex_equals(a, a));
    for (const auto& a : verts)
      for (const auto& b : verts)
        CHECK(vertex_equals(a, b) == vertex_equals(b, a));
    for (const auto& a : verts)
      for (const auto& b : verts) {
        if (!vertex_equals(a, b)) continue;
        CHECK(height(a) == height(b));
        for (const auto& c : verts)
          if (vertex_equals(b, c)) CHECK(vertex_equals(a, c));
      }
  }
}

TEST_CASE("order and elementary order") {
  auto g = trivial_group(2);
  PosetVertex root = based(trivial_tree(2), g);
  PosetVertex one = based(parse_tree("0 1", 2), g);
  PosetVertex stacked = based(parse_tree("0 10 11", 2), g);
  PosetVertex wide = based(parse_tree("00 01 10 11", 2), g);

  CHECK(leq(root, root));
  CHECK(leq(root, one));
  CHECK(elementary(root, one));
  CHECK_FALSE(leq(one, root));

  // Stacking two deep: comparable but not elementary.
  CHECK(leq(root, stacked));
  CHECK_FALSE(elementary(root, stacked));
  CHECK(leq(one, wide));
  CHECK(elementary(one, wide));
  CHECK(elementary(one, stacked));  // one caret on leaf 1 of {0,1}

  // Interpolation: x <= y <= z and x elementary-below z force both steps
  // elementary.
  std::vector<PosetVertex> verts{root, one, stacked, wide,
                                 based(parse_tree("00 01 1", 2), g)};
  for (const auto& x : verts)
    for (const auto& y : verts)
      for (const auto& z : verts)
        if (elementary(x, z) && leq(x, y) && leq(y, z)) {
          CHECK(elementary(x, y));
          CHECK(elementary(y, z));
        }
}

TEST_CASE("order is invariant under the left action") {
  auto g = z2_faithful(2);
  auto pool = generator_pool(g);
  std::mt19937_64 rng(3);
  PosetVertex one = based(parse_tree("0 1", 2), g);
  PosetVertex wide = based(parse_tree("00 01 10 11", 2), g);
  for (int i = 0; i < 10; ++i) {
    SymTreePair x = sample_element(pool, rng, 5);
    PosetVertex a(one.tree, compose(x, one.element));
    PosetVertex b(wide.tree, compose(x, wide.element));
    CHECK(leq(a, b));
    CHECK(elementary(a, b));
    CHECK_FALSE(leq(b, a));
  }
}

TEST_CASE("intervals are Boolean lattices") {
  for (auto g : {trivial_group(2), z2_faithful(2)}) {
    PosetVertex a = based(parse_tree("0 1", 2), g);
    SUBCASE("gap 0") {
      IntervalResult r = interval(a, a);
      CHECK(r.gap == 0);
      CHECK(r.vertices.size() == 1);
      CHECK(r.boolean_lattice);
    }
    SUBCASE("gap 1") {
      IntervalResult r = interval(a, based(parse_tree("0 10 11", 2), g));
      CHECK(r.gap == 1);
      CHECK(r.vertices.size() == 2);
      CHECK(r.boolean_lattice);
    }
    SUBCASE("gap 3") {
      // Three carets on the three distinct leaves of a two-caret tree.
      PosetVertex bottom = based(parse_tree("0 10 11", 2), g);
      PosetVertex top =
          based(parse_tree("00 01 100 101 110 111", 2), g);
      IntervalResult r = interval(bottom, top);
      CHECK(r.gap == 3);
      CHECK(r.vertices.size() == 8);
      CHECK(r.boolean_lattice);
    }
  }
  auto g = trivial_group(2);
  CHECK_THROWS_AS(interval(based(parse_tree("0 1", 2), g),
                           based(trivial_tree(2), g)),
                  Error);
}

TEST_CASE("interval endpoints may use different representatives") {
  auto g = z2_faithful(2);
  auto pool = generator_pool(g);
  std::mt19937_64 rng(9);
  PosetVertex a = based(parse_tree("0 1", 2), g);
  PosetVertex b = based(parse_tree("00 01 10 11", 2), g);
  for (int i = 0; i < 5; ++i) {
    // Replace b by an equal vertex with a different representative pair.
    SymTreePair h = sample_element(pool, rng, 4);
    SymTreePair he = expand_to_domain(
        h, common_refinement(b.tree, h.domain()));
    CompleteTree w = he.range();
    PosetVertex alt(w, compose(b.element, inverse(h)));
    REQUIRE(vertex_equals(alt, b));
    IntervalResult r = interval(a, alt);
    CHECK(r.gap == 2);
    CHECK(r.vertices.size() == 4);
    CHECK(r.boolean_lattice);
  }
}

TEST_CASE("stabilizer orders") {
  CHECK(vertex_stabilizer_order(trivial_tree(2), trivial_group(2)).predicted ==
        1);
  auto r1 = vertex_stabilizer_order(parse_tree("0 1", 2), trivial_group(2));
  CHECK(r1.predicted == 2);
  CHECK(r1.counted == 2);
  CHECK(r1.all_fix);

  auto r2 = vertex_stabilizer_order(parse_tree("0 1", 2), z2_faithful(2));
  CHECK(r2.predicted == 8);  // 2! * 2^2
  CHECK(r2.counted == 8);
  CHECK(r2.all_fix);

  auto r3 = vertex_stabilizer_order(parse_tree("0 10 11", 2), z2_faithful(2));
  CHECK(r3.predicted == 48);  // 3! * 2^3
  CHECK(r3.counted == 48);
  CHECK(r3.all_fix);

  CHECK_THROWS_AS(vertex_stabilizer_order(parse_tree("0 1", 2), sym3(2), 10),
                  Error);
}

TEST_CASE("descending link: smallest cases") {
  auto g = trivial_group(2);
  // Two leaves: one merge set, d! ordered merges over it.
  DescendingLink link2 = descending_link(parse_tree("0 1", 2), g);
  CHECK(link2.target.simplex_count(0) == 1);
  CHECK(link2.target.dimension() == 0);
  CHECK(link2.link.simplex_count(0) == 2);
  CHECK(link2.link.dimension() == 0);
  for (std::size_t f : link2.fiber_sizes) CHECK(f == 1);

  // A height-0 vertex has an empty link.
  DescendingLink link0 = descending_link(trivial_tree(2), g);
  CHECK(link0.link.total_simplices() == 0);
}

TEST_CASE("descending link: n=4 target is the matching complex") {
  auto g = trivial_group(2);
  DescendingLink link = descending_link(parse_tree("00 01 10 11", 2), g);
  CHECK(link.target.simplex_count(0) == 6);
  CHECK(link.target.simplex_count(1) == 3);
  CHECK(component_count(link.target) == 3);
  CHECK(link.link.simplex_count(0) == 12);
  CHECK(link.link.simplex_count(1) == 12);
  CHECK(component_count(link.link) == 3);
}

TEST_CASE("descending link fibers are homogeneous") {
  for (auto g : {trivial_group(2), z2_faithful(2), z2_kernel()}) {
    for (std::size_t n : {2u, 3u, 4u, 5u, 6u}) {
      CompleteTree t = comb_tree(2, n - 1);
      DescendingLink link = descending_link(t, g);
      // Raw moves: n(n-1)|H| split into fibers of equal size |H| over
      // d! C(n,2) vertices... the counts verify both claims at once.
      REQUIRE(!link.fiber_sizes.empty());
      std::size_t expect = link.fiber_sizes.front();
      for (std::size_t f : link.fiber_sizes) CHECK(f == expect);
      CHECK(expect == g->order());
      CHECK(link.link.simplex_count(0) == n * (n - 1));
    }
  }
}

TEST_CASE("descending link vertices do not depend on the tree shape") {
  auto g = z2_faithful(2);
  for (const auto& t : enumerate_trees(2, 3)) {
    DescendingLink link = descending_link(t, g);
    CHECK(link.link.simplex_count(0) == 4 * 3);
    CHECK(link.target.simplex_count(0) == 6);
  }
}

TEST_CASE("complete join holds for the constructed links") {
  for (auto g : {trivial_group(2), z2_faithful(2)}) {
    for (std::size_t n : {2u, 3u, 4u, 5u}) {
      DescendingLink link = descending_link(comb_tree(2, n - 1), g);
      CompleteJoinReport rep =
          complete_join_check(link.link, link.pi, link.target);
      CHECK(rep.ok);
      CHECK(rep.violation.empty());
    }
  }
}

TEST_CASE("complete join check identity and negative control") {
  auto g = z2_faithful(2);
  DescendingLink link = descending_link(comb_tree(2, 4), g);
  // Identity map: every complex is a complete join over itself.
  std::vector<int> ident(link.link.simplex_count(0));
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
  CHECK(complete_join_check(link.link, ident, link.link).ok);

  // Corrupt the link: remove one edge (and everything containing it) so a
  // fiber product is missing from a join.
  auto dropped = link.link.simplices(1).front();
  SimplicialComplex broken(link.link.simplex_count(0));
  for (int dim = 0; dim <= link.link.dimension(); ++dim)
    for (const auto& s : link.link.simplices(dim)) {
      bool has_edge =
          std::includes(s.begin(), s.end(), dropped.begin(), dropped.end());
      if (!has_edge) broken.add_simplex(s);
    }
  CompleteJoinReport rep = complete_join_check(broken, link.pi, link.target);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.violation.empty());
}

TEST_CASE("orbit census") {
  for (auto g : {trivial_group(2), z2_faithful(2)}) {
    for (std::size_t k : {0u, 1u, 2u, 3u}) {
      OrbitCensus census = orbit_census(k, g);
      CHECK(census.orbit_count == 1);
      CHECK(census.witnesses_verified);
    }
  }
  OrbitCensus c2 = orbit_census(2, trivial_group(2));
  CHECK(c2.tree_count == 2);
}

TEST_SUITE_END();
