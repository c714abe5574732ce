#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "vdh/error.hpp"

namespace vdh {

/// Finite abstract simplicial complex on vertices 0..V-1. All faces are
/// stored explicitly, grouped by dimension, each as a sorted vertex list.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::size_t vertex_count);

  /// Insert a simplex together with all of its faces.
  void add_simplex(std::vector<int> vertices);

  std::size_t vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t simplex_count(int dim) const;
  std::size_t total_simplices() const;
  const std::vector<std::vector<int>>& simplices(int dim) const;
  bool contains(const std::vector<int>& simplex) const;

  /// Sorted lists per dimension, faces included.
  static SimplicialComplex from_maximal(
      std::size_t vertex_count,
      const std::vector<std::vector<int>>& maximal);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::set<std::vector<int>>> by_dim_;
  mutable std::vector<std::vector<std::vector<int>>> cache_;
  mutable bool cache_valid_ = false;
  void rebuild_cache() const;
};

/// Line-oriented input: one maximal simplex per line as space-separated
/// vertex ids.
SimplicialComplex parse_complex(const std::string& text,
                                const std::string& filename = "<complex>");

/// Number of connected components of the 1-skeleton (union-find); isolated
/// vertices count. Used as an independent oracle for reduced H0.
std::size_t component_count(const SimplicialComplex& k);

}  // namespace vdh
