#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "vdh/error.hpp"
#include "vdh/perm.hpp"

namespace vdh {

class LocalGroup;

/// Handle into the closure table of a LocalGroup.
struct LocalElement {
  std::shared_ptr<const LocalGroup> group;
  std::uint32_t index = 0;

  bool operator==(const LocalElement& o) const {
    return group == o.group && index == o.index;
  }
};

struct GeneratorSpec {
  std::string name;
  Perm perm;     // degree N
  Perm q_image;  // degree d
};

struct GroupLimits {
  std::size_t max_order = 20160;
};

/// Finite permutation group H of degree N together with a verified
/// homomorphism q : H -> Sym(d). The closure is computed breadth-first
/// from the generators; enumeration order is deterministic (identity
/// first, then discovery order: parents in order, generators in order).
class LocalGroup : public std::enable_shared_from_this<LocalGroup> {
 public:
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }

  const Perm& element_perm(std::uint32_t i) const { return elements_[i]; }
  const Perm& q_perm(std::uint32_t i) const { return q_images_[i]; }
  const std::string& word(std::uint32_t i) const { return words_[i]; }
  std::uint32_t generator_index(std::size_t gen) const {
    return generator_indices_[gen];
  }

  std::uint32_t identity_index() const { return 0; }
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse_index(std::uint32_t a) const { return inverses_[a]; }
  std::uint32_t index_of(const Perm& p) const;

  /// True iff N == d and q is the identity map on the whole closure.
  bool q_is_identity() const;

  /// The image group q(H), realized of degree d with q the identity map.
  /// Returns this group itself when q is already the identity map.
  std::shared_ptr<const LocalGroup> image_group() const;

  /// Index in this group of the section of the image-group element i:
  /// the first element in enumeration order with that q-image.
  std::uint32_t section_index(std::uint32_t image_index) const;

  friend std::shared_ptr<const LocalGroup> build_group(
      int arity, int degree, std::vector<GeneratorSpec> gens,
      const GroupLimits& limits);

 private:
  LocalGroup() = default;

  int arity_ = 2;
  int degree_ = 1;
  std::vector<GeneratorSpec> generators_;
  std::vector<Perm> elements_;
  std::vector<Perm> q_images_;
  std::vector<std::uint32_t> inverses_;
  std::vector<std::string> words_;
  std::vector<std::uint32_t> generator_indices_;
  std::map<Perm, std::uint32_t> index_;

  mutable std::once_flag image_once_;
  mutable std::shared_ptr<const LocalGroup> image_;
  mutable std::vector<std::uint32_t> section_;
};

/// Compute the closure of the generators and verify the group structure
/// and that q extends to a homomorphism on all of it.
std::shared_ptr<const LocalGroup> build_group(int arity, int degree,
                                              std::vector<GeneratorSpec> gens,
                                              const GroupLimits& limits = {});

LocalElement identity(const std::shared_ptr<const LocalGroup>& g);
LocalElement mul(const LocalElement& a, const LocalElement& b);
LocalElement inv(const LocalElement& a);
Perm q_image(const LocalElement& a);
std::vector<LocalElement> elements(const std::shared_ptr<const LocalGroup>& g);

/// Group definition file:
///   d 2 N 2
///   gen a = (0 1) ; q = (0 1)
/// Blank lines and lines starting with '#' are ignored.
std::shared_ptr<const LocalGroup> parse_group_text(
    const std::string& text, const std::string& filename = "<group>",
    const GroupLimits& limits = {});
std::string format_group_text(const LocalGroup& g);

}  // namespace vdh
