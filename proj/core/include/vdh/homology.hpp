#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "vdh/simplicial.hpp"

namespace vdh {

using BigInt = boost::multiprecision::cpp_int;

/// Signed boundary map from p-simplices (columns) to (p-1)-simplices
/// (rows); signs come from the sorted vertex order.
struct ChainBoundary {
  int dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  struct Entry {
    int row;
    int col;
    int value;  // +1 or -1
  };
  std::vector<Entry> entries;
};

/// Boundary matrices for dimensions 1..dim(K).
std::vector<ChainBoundary> boundary_matrices(const SimplicialComplex& k);

struct SnfResult {
  std::vector<BigInt> invariants;  // d1 | d2 | ... , all positive
  std::size_t rank = 0;
};

/// Smith normal form over the integers, exact arithmetic throughout.
SnfResult smith_normal_form(std::size_t rows, std::size_t cols,
                            const std::vector<ChainBoundary::Entry>& entries);

/// Rank over the rationals by an independent elimination path.
std::size_t rank_over_rationals(
    std::size_t rows, std::size_t cols,
    const std::vector<ChainBoundary::Entry>& entries);

struct HomologyProfile {
  /// Reduced Betti numbers, degree 0..dim(K).
  std::vector<long long> betti;
  /// Torsion coefficients per degree, each list in divisibility order.
  std::vector<std::vector<BigInt>> torsion;
  long long euler = 0;  // alternating simplex count
};

/// Reduced integral simplicial homology via Smith normal form. The Euler
/// characteristic cross-check is always enforced; with `crosscheck_rank`
/// every boundary rank is additionally recomputed over the rationals and
/// compared.
HomologyProfile reduced_homology(const SimplicialComplex& k,
                                 bool crosscheck_rank = true);

}  // namespace vdh
