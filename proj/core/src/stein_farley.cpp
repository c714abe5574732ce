#include "vdh/stein_farley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace vdh {

PosetVertex::PosetVertex(CompleteTree t, SymTreePair e)
    : tree(std::move(t)), element(reduce(e)) {
  if (tree.arity() != element.domain().arity())
    fail(ErrorCode::ArityMismatch, "vertex tree arity does not match element");
}

std::size_t height(const PosetVertex& v) { return v.tree.carets(); }

bool vertex_equals(const PosetVertex& a, const PosetVertex& b) {
  if (a.element.group() != b.element.group())
    fail(ErrorCode::GroupMismatch, "vertices over different local groups");
  if (a.tree.carets() != b.tree.carets()) return false;
  SymTreePair h = compose(inverse(b.element), a.element);
  if (!refines(a.tree, h.domain())) return false;
  return expand_to_domain(h, a.tree).range() == b.tree;
}

namespace {

// For translated vertices [T1, w] and [T2, id]: the minimal representative
// tree of w that refines T1, and its range.
SymTreePair based_witness(const CompleteTree& t1, const SymTreePair& w) {
  return expand_to_domain(w, common_refinement(t1, w.domain()));
}

}  // namespace

bool leq(const PosetVertex& a, const PosetVertex& b) {
  if (a.element.group() != b.element.group())
    fail(ErrorCode::GroupMismatch, "vertices over different local groups");
  SymTreePair w = compose(inverse(b.element), a.element);
  SymTreePair we = based_witness(a.tree, w);
  return refines(b.tree, we.range());
}

namespace {

// Domain tree of the common representative realizing a <= b: the pullback
// of b's tree through the minimal witness. Requires leq(a, b).
CompleteTree common_rep_domain(const PosetVertex& a, const PosetVertex& b) {
  SymTreePair w = compose(inverse(b.element), a.element);
  SymTreePair we = based_witness(a.tree, w);
  return expand_to_range(we, b.tree).domain();
}

}  // namespace

bool elementary(const PosetVertex& a, const PosetVertex& b) {
  if (!leq(a, b)) return false;
  CompleteTree e = common_rep_domain(a, b);
  for (const auto& leaf : e.leaves()) {
    if (a.tree.is_leaf(leaf)) continue;
    if (leaf.is_root() || !a.tree.is_leaf(leaf.parent())) return false;
  }
  return true;
}

IntervalResult interval(const PosetVertex& a, const PosetVertex& b,
                        std::size_t max_gap) {
  if (!leq(a, b) || !elementary(a, b))
    fail(ErrorCode::NotComparable,
         "interval endpoints are not an elementary pair");
  CompleteTree e = common_rep_domain(a, b);
  std::vector<LeafAddress> added;  // leaves of a.tree carrying a new caret
  for (const auto& leaf : a.tree.leaves())
    if (!e.is_leaf(leaf)) added.push_back(leaf);
  std::size_t m = added.size();
  if (m != e.carets() - a.tree.carets())
    fail(ErrorCode::Internal, "elementary gap does not match added carets");
  if (m > max_gap)
    fail(ErrorCode::BoundExceeded,
         "interval gap " + std::to_string(m) + " exceeds the bound " +
             std::to_string(max_gap));

  IntervalResult out;
  out.gap = m;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    CompleteTree t = a.tree;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) t = expand_leaf(t, added[i]);
    out.vertices.emplace_back(std::move(t), a.element);
  }

  // The family must realize the Boolean lattice of the added carets.
  bool ok = true;
  for (std::size_t x = 0; x < out.vertices.size() && ok; ++x)
    for (std::size_t y = 0; y < out.vertices.size() && ok; ++y) {
      bool expect = (x & y) == x;
      if (leq(out.vertices[x], out.vertices[y]) != expect) ok = false;
      if (x != y && vertex_equals(out.vertices[x], out.vertices[y])) ok = false;
    }
  ok = ok && leq(a, out.vertices.front()) &&
       vertex_equals(out.vertices.back(), b);
  out.boolean_lattice = ok;
  return out;
}

StabilizerReport vertex_stabilizer_order(
    const CompleteTree& t, const std::shared_ptr<const LocalGroup>& g,
    unsigned long long limit) {
  std::size_t n = t.leaf_count();
  unsigned long long predicted = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    predicted *= i;
    if (predicted > limit)
      fail(ErrorCode::SizeLimit, "stabilizer enumeration exceeds the bound");
  }
  for (std::size_t i = 0; i < n; ++i) {
    predicted *= g->order();
    if (predicted > limit)
      fail(ErrorCode::SizeLimit, "stabilizer enumeration exceeds the bound");
  }

  PosetVertex base(t, identity_element(g));
  StabilizerReport report;
  report.predicted = predicted;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::string> seen;
  do {
    std::vector<std::uint32_t> labels(n, g->identity_index());
    for (;;) {
      std::vector<LeafAddress> targets(n);
      for (std::size_t i = 0; i < n; ++i) targets[i] = t.leaves()[perm[i]];
      SymTreePair e(g, t, std::move(targets), labels);
      SymTreePair r = reduce(e);
      if (seen.insert(r.key()).second) {
        ++report.counted;
        if (!vertex_equals(PosetVertex(t, r), base)) report.all_fix = false;
      }
      // Odometer over the label tuple.
      std::size_t pos = 0;
      while (pos < n) {
        if (++labels[pos] < g->order()) break;
        labels[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

PosetVertex down_move_vertex(const CompleteTree& t,
                             const std::shared_ptr<const LocalGroup>& g,
                             const DownMove& move) {
  int d = t.arity();
  std::size_t c = t.carets();
  if (c == 0) fail(ErrorCode::NotComparable, "no down-moves below height 0");
  if (move.leaf_indices.size() != static_cast<std::size_t>(d))
    fail(ErrorCode::ParseError, "down-move tuple must have d distinct leaves");
  CompleteTree upper = comb_tree(d, c);
  CompleteTree lower = comb_tree(d, c - 1);
  LeafAddress merge;  // deepest all-zeros leaf of the lower comb
  for (std::size_t i = 0; i + 1 < c; ++i) merge = merge.child(0);

  // Children of the merge caret go to the chosen tuple with the common
  // label; the remaining comb leaves carry the remaining leaves of t in
  // order, unlabeled.
  std::map<LeafAddress, std::pair<LeafAddress, std::uint32_t>> assignment;
  std::vector<char> used(t.leaf_count(), 0);
  for (int j = 0; j < d; ++j) {
    std::size_t leaf = move.leaf_indices[static_cast<std::size_t>(j)];
    if (leaf >= t.leaf_count() || used[leaf])
      fail(ErrorCode::ParseError, "down-move tuple is not a distinct leaf set");
    used[leaf] = 1;
    assignment[merge.child(j)] = {t.leaves()[leaf], move.label_index};
  }
  std::vector<LeafAddress> rest;
  for (std::size_t i = 0; i < t.leaf_count(); ++i)
    if (!used[i]) rest.push_back(t.leaves()[i]);
  std::size_t next = 0;
  for (const auto& leaf : upper.leaves())
    if (!assignment.contains(leaf))
      assignment[leaf] = {rest[next++], g->identity_index()};

  std::vector<LeafAddress> targets;
  std::vector<std::uint32_t> labels;
  for (const auto& leaf : upper.leaves()) {
    targets.push_back(assignment[leaf].first);
    labels.push_back(assignment[leaf].second);
  }
  SymTreePair e(g, upper, std::move(targets), std::move(labels));
  return PosetVertex(lower, e);
}

DescendingLink descending_link(const CompleteTree& t,
                               const std::shared_ptr<const LocalGroup>& g,
                               std::size_t leaf_bound) {
  if (t.leaf_count() > leaf_bound)
    fail(ErrorCode::BoundExceeded,
         "descending link bound exceeded: " + std::to_string(t.leaf_count()) +
             " leaves > " + std::to_string(leaf_bound));
  int d = t.arity();
  std::size_t n = t.leaf_count();

  DescendingLink out;

  // Deduplicate raw moves by equality of the lower vertices they determine.
  std::vector<PosetVertex> vertices;
  std::vector<std::vector<int>> leaf_sets;  // sorted, per kept vertex
  std::vector<std::size_t> tuple(static_cast<std::size_t>(d));
  std::vector<char> in_tuple(n, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == static_cast<std::size_t>(d)) {
      for (std::uint32_t h = 0; h < g->order(); ++h) {
        DownMove move{tuple, h};
        PosetVertex v = down_move_vertex(t, g, move);
        std::vector<int> key(tuple.begin(), tuple.end());
        std::sort(key.begin(), key.end());
        bool found = false;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
          if (leaf_sets[i] == key && vertex_equals(vertices[i], v)) {
            ++out.fiber_sizes[i];
            found = true;
            break;
          }
        }
        if (!found) {
          vertices.push_back(std::move(v));
          leaf_sets.push_back(std::move(key));
          out.moves.push_back(move);
          out.fiber_sizes.push_back(1);
        }
      }
      return;
    }
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (in_tuple[leaf]) continue;
      in_tuple[leaf] = 1;
      tuple[pos] = leaf;
      rec(pos + 1);
      in_tuple[leaf] = 0;
    }
  };
  if (n >= static_cast<std::size_t>(d) && t.carets() >= 1) rec(0);

  // Target complex: d-subsets of the leaves, simplices are pairwise
  // disjoint families.
  std::vector<std::vector<int>> subsets;
  std::vector<int> combo;
  std::function<void(std::size_t, std::size_t)> combos = [&](std::size_t start,
                                                             std::size_t left) {
    if (left == 0) {
      subsets.push_back(combo);
      return;
    }
    for (std::size_t i = start; i + left <= n; ++i) {
      combo.push_back(static_cast<int>(i));
      combos(i + 1, left - 1);
      combo.pop_back();
    }
  };
  combos(0, static_cast<std::size_t>(d));
  std::map<std::vector<int>, int> subset_index;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    subset_index[subsets[i]] = static_cast<int>(i);
  out.target_subsets = subsets;

  out.pi.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.pi[i] = subset_index.at(leaf_sets[i]);

  auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return true;
  };

  // Faces of both complexes: families with pairwise disjoint leaf sets.
  SimplicialComplex link(vertices.size());
  std::vector<int> chosen;
  std::function<void(std::size_t)> faces_k = [&](std::size_t start) {
    for (std::size_t i = start; i < vertices.size(); ++i) {
      bool ok = true;
      for (int j : chosen)
        if (!disjoint(leaf_sets[static_cast<std::size_t>(j)], leaf_sets[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      link.add_simplex(chosen);
      faces_k(i + 1);
      chosen.pop_back();
    }
  };
  faces_k(0);

  SimplicialComplex target(subsets.size());
  std::function<void(std::size_t)> faces_l = [&](std::size_t start) {
    for (std::size_t i = start; i < subsets.size(); ++i) {
      bool ok = true;
      for (int j : chosen)
        if (!disjoint(subsets[static_cast<std::size_t>(j)], subsets[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      target.add_simplex(chosen);
      faces_l(i + 1);
      chosen.pop_back();
    }
  };
  faces_l(0);

  out.link = std::move(link);
  out.target = std::move(target);
  return out;
}

CompleteJoinReport complete_join_check(const SimplicialComplex& k,
                                       const std::vector<int>& pi,
                                       const SimplicialComplex& l) {
  CompleteJoinReport report;
  auto violate = [&](std::string msg) {
    report.ok = false;
    report.violation = std::move(msg);
    return report;
  };
  if (pi.size() != k.vertex_count())
    return violate("map is not defined on every vertex");
  for (int image : pi)
    if (image < 0 || static_cast<std::size_t>(image) >= l.vertex_count())
      return violate("map image outside the target vertex set");

  // Vertex fibers.
  std::vector<std::vector<int>> fibers(l.vertex_count());
  for (const auto& v : k.simplices(0))
    fibers[static_cast<std::size_t>(pi[static_cast<std::size_t>(v[0])])]
        .push_back(v[0]);
  for (const auto& v : l.simplices(0))
    if (fibers[static_cast<std::size_t>(v[0])].empty())
      return violate("not surjective: vertex " + std::to_string(v[0]) +
                     " of the target has empty preimage");

  // Simplicial and injective on every simplex; image simplices collected
  // for the surjectivity check.
  std::set<std::vector<int>> images;
  for (int dim = 0; dim <= k.dimension(); ++dim) {
    for (const auto& s : k.simplices(dim)) {
      std::vector<int> image;
      image.reserve(s.size());
      for (int v : s) image.push_back(pi[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end())
        return violate("not injective on a simplex of the source");
      if (!l.contains(image))
        return violate("image of a source simplex is not a target simplex");
      images.insert(std::move(image));
    }
  }
  for (int dim = 0; dim <= l.dimension(); ++dim)
    for (const auto& s : l.simplices(dim))
      if (!images.contains(s))
        return violate("not surjective on simplices of dimension " +
                       std::to_string(dim));

  // Join condition: every choice of one vertex per fiber of a target
  // simplex must span a source simplex. (The reverse containment follows
  // from simplex-wise injectivity, which was already checked.)
  for (int dim = 1; dim <= l.dimension(); ++dim) {
    for (const auto& s : l.simplices(dim)) {
      std::vector<int> pick(s.size(), 0);
      for (;;) {
        std::vector<int> candidate;
        candidate.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
          candidate.push_back(
              fibers[static_cast<std::size_t>(s[i])]
                    [static_cast<std::size_t>(pick[i])]);
        if (!k.contains(candidate))
          return violate(
              "preimage of a target simplex is not the join of its vertex "
              "fibers");
        std::size_t pos = 0;
        while (pos < pick.size()) {
          if (++pick[pos] <
              static_cast<int>(
                  fibers[static_cast<std::size_t>(s[pos])].size()))
            break;
          pick[pos] = 0;
          ++pos;
        }
        if (pos == pick.size()) break;
      }
    }
  }
  return report;
}

OrbitCensus orbit_census(std::size_t k,
                         const std::shared_ptr<const LocalGroup>& g,
                         std::size_t max_trees) {
  auto trees = enumerate_trees(g->arity(), k);
  if (trees.size() > max_trees)
    fail(ErrorCode::BoundExceeded, "too many trees at height " +
                                       std::to_string(k));
  OrbitCensus census;
  census.height = k;
  census.tree_count = trees.size();
  census.witnesses_verified = true;

  // Union-find over based vertices, merged by verified witness elements.
  std::vector<std::size_t> parent(trees.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i + 1 < trees.size(); ++i) {
    const CompleteTree& a = trees[i];
    const CompleteTree& b = trees[i + 1];
    // Witness: the unlabeled element sending a to b in leaf order; acting
    // by it on the left carries [a, id] to [b, id] when vertex equality
    // confirms.
    std::vector<LeafAddress> targets = b.leaves();
    SymTreePair w(g, a, std::move(targets),
                  std::vector<std::uint32_t>(a.leaf_count(),
                                             g->identity_index()));
    PosetVertex moved(a, w);
    if (vertex_equals(moved, PosetVertex(b, identity_element(g)))) {
      std::size_t ra = find(i), rb = find(i + 1);
      if (ra != rb) parent[ra] = rb;
    } else {
      census.witnesses_verified = false;
    }
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (find(i) == i) ++orbits;
  census.orbit_count = orbits;
  return census;
}

}  // namespace vdh
