#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hhs/bits.hpp"
#include "hhs/graph.hpp"

namespace hhs {

// Finite wallspace: a ground set together with bipartitions into two
// nonempty halfspaces.  Each wall stores the side containing ground
// point 0, so duplicate partitions are detectable by equality.
class Wallspace {
 public:
  Wallspace(std::vector<std::string> ground_names,
            const std::vector<std::vector<int>>& wall_sides);

  int ground_size() const { return int(ground_names_.size()); }
  const std::string& ground_name(int i) const { return ground_names_[i]; }
  const std::vector<std::string>& ground_names() const {
    return ground_names_;
  }
  int ground_index(const std::string& name) const;

  int wall_count() const { return int(walls_.size()); }
  // side 0 of wall w (contains ground point 0); side 1 is the complement
  const Bits& side(int w, int s) const { return s ? co_walls_[w] : walls_[w]; }

  bool walls_cross(int a, int b) const;  // all four quadrants nonempty

 private:
  std::vector<std::string> ground_names_;
  std::unordered_map<std::string, int> ground_index_;
  std::vector<Bits> walls_;
  std::vector<Bits> co_walls_;
};

// Orientations of ≤ 64 walls as bitmasks: bit w = 1 means side 1 of wall w.
using Orientation = std::uint64_t;

// 1-skeleton of the Sageev dual: one 0-cube per coherent orientation.
// Built by BFS from the principal orientation (everything toward ground
// point 0), flipping walls in index order; a sweep then certifies that
// every pairwise-coherent orientation was reached.
struct DualComplex {
  Wallspace walls;
  std::vector<Orientation> vertices;  // BFS discovery order
  std::vector<std::vector<int>> adj;  // adj[v][w] = neighbor across wall w
                                      // or -1 (flip not coherent)
  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint64_t> crossing;  // crossing[w] = mask of walls
                                        // crossing wall w
  int dimension = 0;  // max pairwise-crossing wall family
  bool sweep_exhaustive = false;

  std::unordered_map<Orientation, int> index_map;

  int vertex_of(Orientation m) const {
    auto it = index_map.find(m);
    return it == index_map.end() ? -1 : it->second;
  }
  int vertex_count() const { return int(vertices.size()); }
  int distance(int u, int v) const {  // = number of separating walls
    return std::popcount(vertices[u] ^ vertices[v]);
  }
};

DualComplex dual_complex(const Wallspace& w);

// Majority orientation of u, v, w; always a vertex of the dual.
int median(const DualComplex& c, int u, int v, int w);

// All x with median(u,v,x) = x.
std::vector<int> interval(const DualComplex& c, int u, int v);

// Intersection of all halfspaces containing S.
std::vector<int> convex_hull(const DualComplex& c, std::span<const int> s);

// Gate of x in the convex set K (InputError if K is not convex).
int gate(const DualComplex& c, int x, std::span<const int> k);

}  // namespace hhs
