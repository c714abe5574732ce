#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vdh/cantor.hpp"
#include "vdh/error.hpp"

namespace vdh {

inline constexpr std::size_t kDefaultDepthLimit = 64;

/// Address of a vertex of the rooted d-ary tree: the digit word read from
/// the root. The empty word is the root. Digits are stored as characters
/// '0'+k, so lexicographic string order is the planar (left-to-right) order
/// and prefix tests are plain string prefix tests.
class LeafAddress {
 public:
  LeafAddress() = default;
  explicit LeafAddress(std::string digits) : digits_(std::move(digits)) {}

  static LeafAddress root() { return LeafAddress(); }

  std::size_t depth() const { return digits_.size(); }
  bool is_root() const { return digits_.empty(); }
  int digit(std::size_t i) const { return digits_[i] - '0'; }
  int last_digit() const { return digits_.back() - '0'; }
  const std::string& digits() const { return digits_; }

  LeafAddress child(int j) const {
    return LeafAddress(digits_ + static_cast<char>('0' + j));
  }
  LeafAddress parent() const {
    return LeafAddress(digits_.substr(0, digits_.size() - 1));
  }

  bool is_prefix_of(const LeafAddress& other) const {
    return other.digits_.size() >= digits_.size() &&
           other.digits_.compare(0, digits_.size(), digits_) == 0;
  }
  bool is_strict_prefix_of(const LeafAddress& other) const {
    return other.digits_.size() > digits_.size() && is_prefix_of(other);
  }

  auto operator<=>(const LeafAddress&) const = default;

 private:
  std::string digits_;
};

/// Complete finite rooted d-ary subtree, stored as its sorted set of leaf
/// addresses. The leaf set is a maximal prefix-free code: no leaf is a
/// prefix of another and every internal vertex has all d children present.
class CompleteTree {
 public:
  CompleteTree(int arity, std::vector<LeafAddress> leaves);

  static CompleteTree trivial(int arity);

  int arity() const { return arity_; }
  const std::vector<LeafAddress>& leaves() const { return leaves_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t carets() const {
    return (leaves_.size() - 1) / static_cast<std::size_t>(arity_ - 1);
  }
  std::size_t max_depth() const;

  bool is_leaf(const LeafAddress& a) const;
  /// Index of a in the sorted leaf list, if present.
  std::optional<std::size_t> leaf_index(const LeafAddress& a) const;

  auto operator<=>(const CompleteTree&) const = default;

 private:
  int arity_ = 2;
  std::vector<LeafAddress> leaves_;
};

CompleteTree trivial_tree(int arity);

/// Replace the leaf l by its d children.
CompleteTree expand_leaf(const CompleteTree& t, const LeafAddress& l,
                         std::size_t depth_limit = kDefaultDepthLimit);

/// True iff `fine` is obtained from `coarse` by a sequence of leaf
/// expansions, i.e. every leaf of `fine` has a prefix among the leaves of
/// `coarse`.
bool refines(const CompleteTree& fine, const CompleteTree& coarse);

/// The least common refinement of two trees of the same arity.
CompleteTree common_refinement(const CompleteTree& a, const CompleteTree& b);

/// The unique leaf of t that is a prefix of the given point / address.
LeafAddress nearest_leaf(const CompleteTree& t, const CantorPoint& c);
LeafAddress nearest_leaf(const CompleteTree& t, const LeafAddress& a);

/// All complete trees of the given arity with exactly `carets` carets,
/// in a deterministic order.
std::vector<CompleteTree> enumerate_trees(int arity, std::size_t carets);

/// The left comb: `carets` carets stacked along the all-zeros path.
CompleteTree comb_tree(int arity, std::size_t carets,
                       std::size_t depth_limit = kDefaultDepthLimit);

/// Text form: whitespace-separated leaf words, "e" for the root tree.
CompleteTree parse_tree(const std::string& text, int arity,
                        std::size_t depth_limit = kDefaultDepthLimit);
std::string format_tree(const CompleteTree& t);

std::string format_leaf(const LeafAddress& a);
LeafAddress parse_leaf(const std::string& word, int arity,
                       std::size_t depth_limit = kDefaultDepthLimit);

}  // namespace vdh
