#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "vdh/element.hpp"

namespace vdh::testing {

inline std::shared_ptr<const LocalGroup> trivial_group(int d) {
  return build_group(d, 1, {});
}

inline std::shared_ptr<const LocalGroup> z2_faithful(int d) {
  return build_group(
      d, 2, {{"a", parse_cycles("(0 1)", 2), parse_cycles("(0 1)", d)}});
}

inline std::shared_ptr<const LocalGroup> z2_kernel(int d = 2) {
  return build_group(d, 2,
                     {{"a", parse_cycles("(0 1)", 2), Perm::identity(d)}});
}

/// Sym(3): q is the natural isomorphism onto Sym(3) for d == 3 and the
/// sign homomorphism onto Sym(2) for d == 2.
inline std::shared_ptr<const LocalGroup> sym3(int d) {
  Perm qs = d == 3 ? parse_cycles("(0 1)", 3) : parse_cycles("(0 1)", 2);
  Perm qc = d == 3 ? parse_cycles("(0 1 2)", 3) : Perm::identity(2);
  return build_group(d, 3,
                     {{"s", parse_cycles("(0 1)", 3), qs},
                      {"c", parse_cycles("(0 1 2)", 3), qc}});
}

inline std::vector<SymTreePair> enumerate_reduced_elements(
    const std::shared_ptr<const LocalGroup>& g, std::size_t max_carets) {
  return enumerate_canonical_elements(g, max_carets);
}

/// Digit stream of an infinite word; independent evaluation path for the
/// action used as an oracle against act().
using Stream = std::function<int(std::size_t)>;

inline Stream point_stream(const CantorPoint& c) {
  return [c](std::size_t i) { return c.digit(i); };
}

/// Direct evaluation of the defining formula: locate the nearest domain
/// leaf by reading digits, emit the target leaf, then permute every tail
/// digit by the q-image of the leaf label.
inline Stream apply_stream(const SymTreePair& e, Stream in) {
  LeafAddress cur;
  while (!e.domain().is_leaf(cur)) cur = cur.child(in(cur.depth()));
  std::size_t idx = *e.domain().leaf_index(cur);
  LeafAddress target = e.target(idx);
  Perm sigma = q_image(e.label(idx));
  std::size_t m = cur.depth();
  return [in, target, sigma, m](std::size_t i) {
    if (i < target.depth()) return target.digit(i);
    return sigma(in(m + (i - target.depth())));
  };
}

inline bool streams_agree(const Stream& a, const Stream& b,
                          std::size_t digits = 64) {
  for (std::size_t i = 0; i < digits; ++i)
    if (a(i) != b(i)) return false;
  return true;
}

}  // namespace vdh::testing
