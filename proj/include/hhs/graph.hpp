#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hhs/errors.hpp"

namespace hhs {

// Vertex subsets of a simplicial graph, as bitmasks.  Simplicial graphs are
// capped at 64 vertices, which keeps every subset operation a word op.
using VertexMask = std::uint64_t;

inline int mask_size(VertexMask m) { return __builtin_popcountll(m); }
inline bool mask_subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }

// Finite simplicial graph: no loops, no multi-edges, named vertices.
class SimplicialGraph {
 public:
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<int, int>>& edges);

  int size() const { return int(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // InputError if unknown

  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1u; }
  VertexMask adjacency_mask(int v) const { return adj_[v]; }
  VertexMask all_mask() const {
    return size() == 64 ? ~0ull : ((1ull << size()) - 1);
  }
  std::vector<std::pair<int, int>> edge_list() const;

  VertexMask parse_set(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexMask> adj_;
  std::unordered_map<std::string, int> index_;
};

// link(S) = vertices outside S adjacent to every member; link(∅) = V.
VertexMask link(const SimplicialGraph& g, VertexMask s);
// star(S) = S ∪ link(S); star(∅) = V.
VertexMask star(const SimplicialGraph& g, VertexMask s);

struct CliqueReport {
  std::vector<VertexMask> maximal;  // sorted by mask value
  int clique_number = 0;
};
CliqueReport maximal_cliques(const SimplicialGraph& g);

// Max clique over an abstract compatibility relation given as neighbor
// masks; shared by clique_number and the wall-crossing dimension.
int max_clique_size(std::span<const std::uint64_t> nbr);

// Splits S as S1 ⊔ S2 with everything in S1 adjacent to everything in S2,
// if possible.  S1 is the piece containing the smallest vertex.
std::optional<std::pair<VertexMask, VertexMask>> join_decomposition(
    const SimplicialGraph& g, VertexMask s);

// Connected graph with unit edge lengths.  Distances are exact BFS values;
// rows are computed on demand and cached.
class MetricGraph {
 public:
  MetricGraph(std::vector<std::string> names,
              const std::vector<std::pair<int, int>>& edges);
  MetricGraph(const MetricGraph& o);
  MetricGraph& operator=(const MetricGraph& o);

  int size() const { return int(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
  std::vector<std::pair<int, int>> edge_list() const;

  int distance(int u, int v) const;
  const std::vector<int>& distances_from(int u) const;
  int diameter() const;
  bool is_tree() const { return edge_count_ == size() - 1; }

  // Lexicographically least geodesic from u to v (vertex sequence).
  std::vector<int> shortest_path(int u, int v) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> nbr_;
  std::unordered_map<std::string, int> index_;
  int edge_count_ = 0;
  mutable std::vector<std::unique_ptr<const std::vector<int>>> rows_;
  mutable std::mutex rows_mutex_;
};

// Vertices lying on at least one geodesic between a pair of points of P:
// v is on a geodesic from a to b iff d(a,v) + d(v,b) = d(a,b).
std::vector<int> geodesic_hull(const MetricGraph& m, std::span<const int> pts);

// Max four-point-condition defect over vertex quadruples: half the gap
// between the two largest of the three pairwise distance sums.  Exhaustive
// up to `exhaustive_cap` vertices, otherwise a seeded sample.
struct FourPointDelta {
  double delta = 0.0;
  bool exhaustive = true;
};
FourPointDelta four_point_delta(const MetricGraph& m, int exhaustive_cap = 130,
                                int samples = 200000,
                                std::uint64_t seed = 7);

}  // namespace hhs
