#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vdh/error.hpp"

namespace vdh {

/// Permutation of {0, ..., n-1}. Composition is right-to-left:
/// compose(a, b) applies b first, then a.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree) { return Perm(degree); }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Perm compose(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

/// Cycle notation, e.g. "(0 1)(2 3)"; "()" denotes the identity.
Perm parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Perm& p);

}  // namespace vdh
