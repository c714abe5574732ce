#include "vdh/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vdh {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count)
    : vertex_count_(vertex_count) {}

void SimplicialComplex::add_simplex(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  if (vertices.empty()) return;
  for (int v : vertices)
    if (v < 0 || static_cast<std::size_t>(v) >= vertex_count_)
      fail(ErrorCode::ParseError, "simplex vertex out of range");
  std::size_t dim = vertices.size() - 1;
  if (by_dim_.size() <= dim) by_dim_.resize(dim + 1);
  if (!by_dim_[dim].insert(vertices).second) return;
  cache_valid_ = false;
  // Close downward.
  if (dim == 0) return;
  for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
    std::vector<int> face;
    face.reserve(vertices.size() - 1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (i != skip) face.push_back(vertices[i]);
    add_simplex(std::move(face));
  }
}

std::size_t SimplicialComplex::simplex_count(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return 0;
  return by_dim_[static_cast<std::size_t>(dim)].size();
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t n = 0;
  for (const auto& s : by_dim_) n += s.size();
  return n;
}

void SimplicialComplex::rebuild_cache() const {
  cache_.assign(by_dim_.size(), {});
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    cache_[d].assign(by_dim_[d].begin(), by_dim_[d].end());
  cache_valid_ = true;
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(
    int dim) const {
  static const std::vector<std::vector<int>> empty;
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return empty;
  if (!cache_valid_) rebuild_cache();
  return cache_[static_cast<std::size_t>(dim)];
}

bool SimplicialComplex::contains(const std::vector<int>& simplex) const {
  std::vector<int> s = simplex;
  std::sort(s.begin(), s.end());
  if (s.empty() || s.size() > by_dim_.size()) return false;
  return by_dim_[s.size() - 1].contains(s);
}

SimplicialComplex SimplicialComplex::from_maximal(
    std::size_t vertex_count, const std::vector<std::vector<int>>& maximal) {
  SimplicialComplex k(vertex_count);
  for (const auto& s : maximal) k.add_simplex(s);
  return k;
}

SimplicialComplex parse_complex(const std::string& text,
                                const std::string& filename) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> maximal;
  int max_vertex = -1;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> simplex;
    std::string tok;
    while (ls >> tok) {
      try {
        simplex.push_back(std::stoi(tok));
      } catch (...) {
        fail(ErrorCode::ParseError, filename + ":" + std::to_string(lineno) +
                                        ": bad vertex id '" + tok + "'");
      }
      if (simplex.back() < 0)
        fail(ErrorCode::ParseError, filename + ":" + std::to_string(lineno) +
                                        ": vertex ids must be non-negative");
      max_vertex = std::max(max_vertex, simplex.back());
    }
    if (!simplex.empty()) maximal.push_back(std::move(simplex));
  }
  return SimplicialComplex::from_maximal(
      static_cast<std::size_t>(max_vertex + 1), maximal);
}

std::size_t component_count(const SimplicialComplex& k) {
  std::size_t n = k.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : k.simplices(1)) {
    auto a = find(static_cast<std::size_t>(e[0]));
    auto b = find(static_cast<std::size_t>(e[1]));
    if (a != b) parent[a] = b;
  }
  std::size_t count = 0;
  // Only vertices that are actually present count.
  for (const auto& v : k.simplices(0))
    if (find(static_cast<std::size_t>(v[0])) ==
        static_cast<std::size_t>(v[0]))
      ++count;
  return count;
}

}  // namespace vdh
