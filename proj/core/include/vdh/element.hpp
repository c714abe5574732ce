#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "vdh/cantor.hpp"
#include "vdh/local_group.hpp"
#include "vdh/tree.hpp"

namespace vdh {

/// Labeled tree-pair (F-, (b, h), F+): two complete trees of equal leaf
/// count, a bijection b between their leaves and a local-group label per
/// domain leaf. Acting on an infinite word, the domain leaf prefix is
/// replaced by its image and every tail digit is permuted by q(label).
/// Values are immutable; operations return new values.
class SymTreePair {
 public:
  SymTreePair(std::shared_ptr<const LocalGroup> group, CompleteTree domain,
              std::vector<LeafAddress> targets,
              std::vector<std::uint32_t> labels);

  const std::shared_ptr<const LocalGroup>& group() const { return group_; }
  const CompleteTree& domain() const { return domain_; }
  const CompleteTree& range() const { return range_; }
  std::size_t leaf_count() const { return targets_.size(); }
  const LeafAddress& domain_leaf(std::size_t i) const {
    return domain_.leaves()[i];
  }
  const LeafAddress& target(std::size_t i) const { return targets_[i]; }
  std::uint32_t label_index(std::size_t i) const { return labels_[i]; }
  LocalElement label(std::size_t i) const { return {group_, labels_[i]}; }

  bool operator==(const SymTreePair& o) const {
    return group_ == o.group_ && domain_ == o.domain_ &&
           targets_ == o.targets_ && labels_ == o.labels_;
  }

  /// Deterministic key for the stored representative (callers reduce first
  /// when a canonical key is needed).
  std::string key() const;

 private:
  std::shared_ptr<const LocalGroup> group_;
  CompleteTree domain_;
  std::vector<LeafAddress> targets_;  // aligned with domain_.leaves()
  std::vector<std::uint32_t> labels_;
  CompleteTree range_;
};

SymTreePair identity_element(const std::shared_ptr<const LocalGroup>& g);

/// Refine at a domain leaf: the caret's children map onto the children of
/// the target leaf twisted by q(label), all carrying the same label.
SymTreePair expand(const SymTreePair& e, const LeafAddress& leaf,
                   std::size_t depth_limit = kDefaultDepthLimit);

/// Contract carets until no contraction applies; the result is the unique
/// minimal representative (canonical form).
SymTreePair reduce(const SymTreePair& e);
bool is_reduced(const SymTreePair& e);

/// g after f (apply f first). The result is reduced.
SymTreePair compose(const SymTreePair& g, const SymTreePair& f,
                    std::size_t depth_limit = kDefaultDepthLimit);

SymTreePair inverse(const SymTreePair& e);

CantorPoint act(const SymTreePair& e, const CantorPoint& c);

/// Equality of the represented homeomorphisms (canonical forms compared).
bool equals(const SymTreePair& a, const SymTreePair& b);

/// Replace every label by its q-image, viewed in the image group. A
/// surjective homomorphism onto the group over q(H).
SymTreePair pi(const SymTreePair& e);

/// Section of pi: lift every image-group label to the first preimage in
/// enumeration order. pi(pi_section(base, v)) == v.
SymTreePair pi_section(const std::shared_ptr<const LocalGroup>& base,
                       const SymTreePair& v);

/// Single-caret element labeling the leftmost child by h and the others by
/// the identity; a homomorphism H -> V_d(H).
SymTreePair iota(const LocalElement& h);

/// Label on the leftmost (lexicographically least) domain leaf of the
/// canonical form.
LocalElement retract(const SymTreePair& e);

/// All reduced identity-labeled elements whose trees have at most two
/// carets, in a deterministic order; inverse-closed, identity omitted.
std::vector<SymTreePair> vd_generating_set(
    const std::shared_ptr<const LocalGroup>& g);

/// Every canonical form whose trees have at most `max_carets` carets,
/// labels included, in a deterministic order.
std::vector<SymTreePair> enumerate_canonical_elements(
    const std::shared_ptr<const LocalGroup>& g, std::size_t max_carets);

struct BallLimits {
  std::size_t max_elements = 500000;
  std::size_t depth_limit = kDefaultDepthLimit;
};

/// All products of at most `radius` generators, deduplicated by canonical
/// form, in deterministic BFS order. `sizes`, when non-null, receives the
/// cumulative ball size at each radius 0..radius.
std::vector<SymTreePair> bfs_ball(const std::vector<SymTreePair>& gens,
                                  std::size_t radius,
                                  const BallLimits& limits = {},
                                  std::vector<std::size_t>* sizes = nullptr);

/// iota of the generators and their inverses followed by the unlabeled
/// generating set; deduplicated, deterministic.
std::vector<SymTreePair> generator_pool(
    const std::shared_ptr<const LocalGroup>& g);

/// Product of `steps` generators drawn from the pool; deterministic given
/// the RNG state.
SymTreePair sample_element(const std::vector<SymTreePair>& pool,
                           std::mt19937_64& rng, std::size_t steps);

SymTreePair expand_to_domain(const SymTreePair& e, const CompleteTree& target,
                             std::size_t depth_limit = kDefaultDepthLimit);
SymTreePair expand_to_range(const SymTreePair& e, const CompleteTree& target,
                            std::size_t depth_limit = kDefaultDepthLimit);

/// Element text: one "map <domain-leaf> -> <range-leaf> : <label-word>"
/// line per leaf. Label words are "id" or '*'-separated generator names.
SymTreePair parse_element_maps(const std::vector<std::string>& map_lines,
                               const std::shared_ptr<const LocalGroup>& g,
                               const std::string& filename = "<element>");
std::vector<std::string> format_element_maps(const SymTreePair& e);
/// Compact single-line form "l->m:w; ..." used in reports.
std::string format_element_inline(const SymTreePair& e);

}  // namespace vdh
