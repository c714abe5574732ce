#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdh/element.hpp"
#include "vdh/simplicial.hpp"

namespace vdh {

/// Vertex [T, g] of the Stein-Farley complex over the tree model.
/// (T1, g1) and (T2, g2) are the same vertex iff h = g2^-1 g1 has a
/// representative with domain exactly T1 and range exactly T2.
struct PosetVertex {
  CompleteTree tree;
  SymTreePair element;  // stored in canonical form

  PosetVertex(CompleteTree t, SymTreePair e);
};

std::size_t height(const PosetVertex& v);
bool vertex_equals(const PosetVertex& a, const PosetVertex& b);

/// Partial order: a <= b iff they admit a common element representative
/// whose tree for a is refined by the tree for b.
bool leq(const PosetVertex& a, const PosetVertex& b);

/// a <= b and every caret added on the way sits directly on a leaf of a's
/// tree (no stacking).
bool elementary(const PosetVertex& a, const PosetVertex& b);

struct IntervalResult {
  std::vector<PosetVertex> vertices;  // indexed by subset bitmask
  std::size_t gap = 0;
  bool boolean_lattice = false;
};

/// All vertices between a and b for an elementary pair; verifies the
/// 2^m count and that containment matches the subset lattice.
IntervalResult interval(const PosetVertex& a, const PosetVertex& b,
                        std::size_t max_gap = 4);

struct StabilizerReport {
  unsigned long long predicted = 0;  // n! * |H|^n
  unsigned long long counted = 0;
  bool all_fix = true;
};

/// Exact stabilizer of [T, id] under the left action, by direct
/// enumeration of all (leaf bijection, label tuple) elements.
StabilizerReport vertex_stabilizer_order(
    const CompleteTree& t, const std::shared_ptr<const LocalGroup>& g,
    unsigned long long limit = 2000000);

/// One down-move at [T, id]: the j-th child of the merged caret is sent to
/// the tuple's j-th leaf and every merged leaf carries the common label.
struct DownMove {
  std::vector<std::size_t> leaf_indices;  // ordered, distinct, size d
  std::uint32_t label_index = 0;
};

struct DescendingLink {
  SimplicialComplex link;    // K: deduplicated down-moves
  SimplicialComplex target;  // L: d-subset disjointness complex
  std::vector<DownMove> moves;           // representative per K vertex
  std::vector<std::size_t> fiber_sizes;  // raw moves merged per K vertex
  std::vector<int> pi;                   // K vertex -> L vertex
  std::vector<std::vector<int>> target_subsets;  // L vertex -> d-subset
};

/// Descending link of [T, id], with the complete-join map to the d-subset
/// disjointness complex. Down-moves are deduplicated by vertex equality of
/// the lower vertices they determine.
DescendingLink descending_link(const CompleteTree& t,
                               const std::shared_ptr<const LocalGroup>& g,
                               std::size_t leaf_bound = 9);

/// Lower vertex determined by one down-move (exposed for tests).
PosetVertex down_move_vertex(const CompleteTree& t,
                             const std::shared_ptr<const LocalGroup>& g,
                             const DownMove& move);

struct CompleteJoinReport {
  bool ok = true;
  std::string violation;  // first violated condition, empty when ok
};

/// Checks the three complete-join conditions of a simplicial surjection.
CompleteJoinReport complete_join_check(const SimplicialComplex& k,
                                       const std::vector<int>& pi,
                                       const SimplicialComplex& l);

struct OrbitCensus {
  std::size_t height = 0;
  std::size_t tree_count = 0;
  std::size_t orbit_count = 0;
  bool witnesses_verified = false;
};

/// Orbits of height-k vertices under the left action, with explicit
/// witness elements constructed and verified between base vertices.
OrbitCensus orbit_census(std::size_t k,
                         const std::shared_ptr<const LocalGroup>& g,
                         std::size_t max_trees = 5000);

}  // namespace vdh
