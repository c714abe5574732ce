#include "vdh/tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vdh {

namespace {

// Sorted leaves form a complete tree iff either the single leaf at this
// depth, or all d first-digit groups are present and each is complete.
bool complete_rec(const std::vector<LeafAddress>& leaves, std::size_t lo,
                  std::size_t hi, std::size_t depth, int arity) {
  if (hi - lo == 1 && leaves[lo].depth() == depth) return true;
  int next = 0;
  std::size_t start = lo;
  for (std::size_t i = lo; i < hi; ++i) {
    if (leaves[i].depth() <= depth) return false;
    int digit = leaves[i].digit(depth);
    if (digit == next) continue;
    if (digit != next + 1) return false;
    if (!complete_rec(leaves, start, i, depth + 1, arity)) return false;
    start = i;
    next = digit;
  }
  if (next != arity - 1) return false;
  return complete_rec(leaves, start, hi, depth + 1, arity);
}

}  // namespace

CompleteTree::CompleteTree(int arity, std::vector<LeafAddress> leaves)
    : arity_(arity), leaves_(std::move(leaves)) {
  if (arity_ < 2)
    fail(ErrorCode::InvalidArity, "arity must be at least 2");
  if (arity_ > 10)
    fail(ErrorCode::InvalidArity,
         "arity above 10 is not representable with single-digit addresses");
  if (leaves_.empty())
    fail(ErrorCode::ParseError, "a tree must have at least one leaf");
  std::sort(leaves_.begin(), leaves_.end());
  for (const auto& l : leaves_)
    for (std::size_t i = 0; i < l.depth(); ++i)
      if (l.digit(i) < 0 || l.digit(i) >= arity_)
        fail(ErrorCode::ParseError,
             "leaf " + l.digits() + " has a digit outside 0.." +
                 std::to_string(arity_ - 1));
  if ((leaves_.size() - 1) % static_cast<std::size_t>(arity_ - 1) != 0 ||
      !complete_rec(leaves_, 0, leaves_.size(), 0, arity_))
    fail(ErrorCode::ParseError,
         "leaf set is not a maximal prefix-free code of arity " +
             std::to_string(arity_));
}

CompleteTree CompleteTree::trivial(int arity) {
  return CompleteTree(arity, {LeafAddress::root()});
}

std::size_t CompleteTree::max_depth() const {
  std::size_t m = 0;
  for (const auto& l : leaves_) m = std::max(m, l.depth());
  return m;
}

bool CompleteTree::is_leaf(const LeafAddress& a) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), a);
}

std::optional<std::size_t> CompleteTree::leaf_index(const LeafAddress& a) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), a);
  if (it == leaves_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - leaves_.begin());
}

CompleteTree trivial_tree(int arity) { return CompleteTree::trivial(arity); }

CompleteTree expand_leaf(const CompleteTree& t, const LeafAddress& l,
                         std::size_t depth_limit) {
  if (!t.is_leaf(l))
    fail(ErrorCode::NotALeaf, "address " + format_leaf(l) + " is not a leaf");
  if (l.depth() + 1 > depth_limit)
    fail(ErrorCode::DepthLimit,
         "expansion exceeds depth limit " + std::to_string(depth_limit));
  std::vector<LeafAddress> leaves;
  leaves.reserve(t.leaf_count() + static_cast<std::size_t>(t.arity()) - 1);
  for (const auto& leaf : t.leaves()) {
    if (leaf == l) {
      for (int j = 0; j < t.arity(); ++j) leaves.push_back(l.child(j));
    } else {
      leaves.push_back(leaf);
    }
  }
  return CompleteTree(t.arity(), std::move(leaves));
}

bool refines(const CompleteTree& fine, const CompleteTree& coarse) {
  if (fine.arity() != coarse.arity())
    fail(ErrorCode::ArityMismatch, "tree arity mismatch");
  for (const auto& leaf : fine.leaves()) {
    // The candidate prefix among coarse leaves is the greatest one <= leaf.
    auto it = std::upper_bound(coarse.leaves().begin(), coarse.leaves().end(),
                               leaf);
    if (it == coarse.leaves().begin()) return false;
    if (!std::prev(it)->is_prefix_of(leaf)) return false;
  }
  return true;
}

CompleteTree common_refinement(const CompleteTree& a, const CompleteTree& b) {
  if (a.arity() != b.arity())
    fail(ErrorCode::ArityMismatch, "tree arity mismatch");
  std::vector<LeafAddress> leaves;
  auto has_prefix_in = [](const CompleteTree& t, const LeafAddress& l,
                          bool strict) {
    auto it = std::upper_bound(t.leaves().begin(), t.leaves().end(), l);
    if (it == t.leaves().begin()) return false;
    const LeafAddress& cand = *std::prev(it);
    return strict ? cand.is_strict_prefix_of(l) : cand.is_prefix_of(l);
  };
  for (const auto& l : a.leaves())
    if (has_prefix_in(b, l, /*strict=*/false)) leaves.push_back(l);
  for (const auto& l : b.leaves())
    if (has_prefix_in(a, l, /*strict=*/true)) leaves.push_back(l);
  return CompleteTree(a.arity(), std::move(leaves));
}

LeafAddress nearest_leaf(const CompleteTree& t, const CantorPoint& c) {
  if (c.arity() != t.arity())
    fail(ErrorCode::ArityMismatch, "point arity does not match tree arity");
  LeafAddress cur;
  while (!t.is_leaf(cur)) cur = cur.child(c.digit(cur.depth()));
  return cur;
}

LeafAddress nearest_leaf(const CompleteTree& t, const LeafAddress& a) {
  auto it = std::upper_bound(t.leaves().begin(), t.leaves().end(), a);
  if (it != t.leaves().begin() && std::prev(it)->is_prefix_of(a))
    return *std::prev(it);
  fail(ErrorCode::UnderspecifiedPoint,
       "address " + format_leaf(a) + " stops above a leaf of the tree");
}

std::vector<CompleteTree> enumerate_trees(int arity, std::size_t carets) {
  if (arity < 2) fail(ErrorCode::InvalidArity, "arity must be at least 2");
  if (carets == 0) return {CompleteTree::trivial(arity)};
  // A tree with c >= 1 carets is a root caret whose d subtrees carry c-1
  // carets in total; enumerate the compositions recursively.
  std::vector<CompleteTree> out;
  std::vector<std::vector<CompleteTree>> by_count(carets);
  for (std::size_t c = 0; c < carets; ++c) by_count[c] = enumerate_trees(arity, c);

  std::vector<const CompleteTree*> children(static_cast<std::size_t>(arity));
  std::vector<LeafAddress> leaves;
  auto emit = [&]() {
    leaves.clear();
    for (int j = 0; j < arity; ++j)
      for (const auto& l : children[static_cast<std::size_t>(j)]->leaves())
        leaves.push_back(LeafAddress(std::string(1, static_cast<char>('0' + j)) +
                                     l.digits()));
    out.push_back(CompleteTree(arity, leaves));
  };
  std::function<void(int, std::size_t)> rec = [&](int slot, std::size_t left) {
    if (slot == arity - 1) {
      for (const auto& t : by_count[left]) {
        children[static_cast<std::size_t>(slot)] = &t;
        emit();
      }
      return;
    }
    for (std::size_t c = 0; c <= left; ++c)
      for (const auto& t : by_count[c]) {
        children[static_cast<std::size_t>(slot)] = &t;
        rec(slot + 1, left - c);
      }
  };
  rec(0, carets - 1);
  return out;
}

CompleteTree comb_tree(int arity, std::size_t carets, std::size_t depth_limit) {
  CompleteTree t = CompleteTree::trivial(arity);
  LeafAddress left;
  for (std::size_t i = 0; i < carets; ++i) {
    t = expand_leaf(t, left, depth_limit);
    left = left.child(0);
  }
  return t;
}

CompleteTree parse_tree(const std::string& text, int arity,
                        std::size_t depth_limit) {
  std::istringstream in(text);
  std::vector<LeafAddress> leaves;
  std::string word;
  while (in >> word) leaves.push_back(parse_leaf(word, arity, depth_limit));
  if (leaves.empty()) fail(ErrorCode::ParseError, "empty tree text");
  return CompleteTree(arity, std::move(leaves));
}

std::string format_tree(const CompleteTree& t) {
  std::string out;
  for (const auto& l : t.leaves()) {
    if (!out.empty()) out += ' ';
    out += format_leaf(l);
  }
  return out;
}

std::string format_leaf(const LeafAddress& a) {
  return a.is_root() ? "e" : a.digits();
}

LeafAddress parse_leaf(const std::string& word, int arity,
                       std::size_t depth_limit) {
  if (word == "e") return LeafAddress::root();
  if (word.empty()) fail(ErrorCode::ParseError, "empty leaf word");
  if (word.size() > depth_limit)
    fail(ErrorCode::DepthLimit,
         "leaf word longer than depth limit " + std::to_string(depth_limit));
  for (char c : word)
    if (c < '0' || c >= static_cast<char>('0' + arity))
      fail(ErrorCode::ParseError, "leaf word " + word +
                                      " has a digit outside 0.." +
                                      std::to_string(arity - 1));
  return LeafAddress(word);
}

}  // namespace vdh
