#include "hhs/wallspace.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "hhs/errors.hpp"

namespace hhs {

Wallspace::Wallspace(std::vector<std::string> ground_names,
                     const std::vector<std::vector<int>>& wall_sides)
    : ground_names_(std::move(ground_names)) {
  int n = int(ground_names_.size());
  if (n == 0) throw InputError("wallspace ground set must be nonempty");
  for (int i = 0; i < n; ++i)
    if (!ground_index_.emplace(ground_names_[i], i).second)
      throw InputError("duplicate ground point '" + ground_names_[i] + "'");
  for (const auto& side : wall_sides) {
    Bits b(n);
    for (int i : side) {
      if (i < 0 || i >= n) throw InputError("wall member out of range");
      b.set(i);
    }
    int c = b.count();
    if (c == 0 || c == n)
      throw InputError("each wall needs two nonempty halfspaces");
    if (!b.test(0)) b = ~b;  // canonical side: the one containing point 0
    walls_.push_back(b);
    co_walls_.push_back(~b);
  }
  for (size_t a = 0; a < walls_.size(); ++a)
    for (size_t b = a + 1; b < walls_.size(); ++b)
      if (walls_[a] == walls_[b])
        throw InputError("duplicate wall at indices " + std::to_string(a) +
                         " and " + std::to_string(b));
  if (walls_.size() > 64)
    throw ResourceError("wallspaces are limited to 64 walls, got " +
                        std::to_string(walls_.size()));
}

int Wallspace::ground_index(const std::string& name) const {
  auto it = ground_index_.find(name);
  if (it == ground_index_.end())
    throw InputError("unknown ground point '" + name + "'");
  return it->second;
}

bool Wallspace::walls_cross(int a, int b) const {
  return side(a, 0).intersects(side(b, 0)) &&
         side(a, 0).intersects(side(b, 1)) &&
         side(a, 1).intersects(side(b, 0)) &&
         side(a, 1).intersects(side(b, 1));
}

DualComplex dual_complex(const Wallspace& w) {
  int nw = w.wall_count();
  // incompat[s][i] = mask of walls j whose side-0 (s==0) / side-1 (s==1)
  // misses side-s of wall i entirely
  std::vector<std::array<std::uint64_t, 2>> incompat0(nw), incompat1(nw);
  for (int i = 0; i < nw; ++i)
    for (int s = 0; s < 2; ++s) {
      std::uint64_t m0 = 0, m1 = 0;
      for (int j = 0; j < nw; ++j) {
        if (j == i) continue;
        if (!w.side(i, s).intersects(w.side(j, 0))) m0 |= 1ull << j;
        if (!w.side(i, s).intersects(w.side(j, 1))) m1 |= 1ull << j;
      }
      (s ? incompat1 : incompat0)[i] = {m0, m1};
    }
  auto coherent_after_flip = [&](Orientation m, int i) {
    int s = (m >> i) & 1;
    const auto& row = s ? incompat1[i] : incompat0[i];
    return ((row[0] & ~m) | (row[1] & m)) == 0;
  };
  auto fully_coherent = [&](Orientation m) {
    for (int i = 0; i < nw; ++i)
      if (!coherent_after_flip(m, i)) return false;
    return true;
  };

  DualComplex c{w, {}, {}, {}, {}, 0, false, {}};
  Orientation principal = 0;  // side 0 contains ground point 0 for every wall
  c.vertices.push_back(principal);
  c.index_map.emplace(principal, 0);
  std::queue<int> q;
  q.push(0);
  std::uint64_t guard = 1ull << 20;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    Orientation m = c.vertices[v];
    for (int i = 0; i < nw; ++i) {
      Orientation m2 = m ^ (1ull << i);
      if (!coherent_after_flip(m2, i)) continue;
      if (c.index_map.find(m2) == c.index_map.end()) {
        if (c.vertices.size() >= guard)
          throw ResourceError("dual complex exceeds 2^20 vertices");
        c.index_map.emplace(m2, int(c.vertices.size()));
        c.vertices.push_back(m2);
        q.push(int(c.vertices.size()) - 1);
      }
    }
  }
  c.adj.assign(c.vertices.size(), std::vector<int>(nw, -1));
  for (int v = 0; v < c.vertex_count(); ++v)
    for (int i = 0; i < nw; ++i) {
      Orientation m2 = c.vertices[v] ^ (1ull << i);
      int u = c.vertex_of(m2);
      if (u >= 0 && coherent_after_flip(m2, i)) {
        c.adj[v][i] = u;
        if (u > v) c.edges.emplace_back(v, u);
      }
    }

  // certification sweep: for ≤ 22 walls enumerate every orientation and
  // check that the coherent ones are exactly the BFS output
  if (nw <= 22) {
    c.sweep_exhaustive = true;
    std::uint64_t count = 0;
    for (Orientation m = 0; m < (1ull << nw); ++m)
      if (fully_coherent(m)) {
        ++count;
        if (c.vertex_of(m) < 0)
          throw InternalError("BFS missed a coherent orientation");
      }
    if (count != c.vertices.size())
      throw InternalError("coherent-orientation count mismatch");
  } else {
    // closure check: every coherent single-wall flip lands in the set
    for (int v = 0; v < c.vertex_count(); ++v)
      for (int i = 0; i < nw; ++i) {
        Orientation m2 = c.vertices[v] ^ (1ull << i);
        if (coherent_after_flip(m2, i) && c.vertex_of(m2) < 0)
          throw InternalError("dual complex is not flip-closed");
      }
  }

  c.crossing.assign(nw, 0);
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b)
      if (a != b && w.walls_cross(a, b)) c.crossing[a] |= 1ull << b;
  c.dimension = nw == 0 ? 0 : max_clique_size(c.crossing);
  return c;
}

int median(const DualComplex& c, int u, int v, int w) {
  Orientation a = c.vertices[u], b = c.vertices[v], d = c.vertices[w];
  Orientation m = (a & b) | (a & d) | (b & d);
  int idx = c.vertex_of(m);
  if (idx < 0)
    throw InternalError("majority orientation is not a vertex of the dual");
  return idx;
}

std::vector<int> interval(const DualComplex& c, int u, int v) {
  Orientation a = c.vertices[u], b = c.vertices[v];
  Orientation agree = ~(a ^ b);
  std::vector<int> out;
  for (int x = 0; x < c.vertex_count(); ++x)
    if (((c.vertices[x] ^ a) & agree) == 0) out.push_back(x);
  return out;
}

std::vector<int> convex_hull(const DualComplex& c, std::span<const int> s) {
  if (s.empty()) throw InputError("convex_hull requires a nonempty set");
  // walls on which all of S agrees, and the common side there
  Orientation agree = ~0ull, value = c.vertices[s[0]];
  for (int x : s) agree &= ~(c.vertices[x] ^ value);
  std::vector<int> out;
  for (int x = 0; x < c.vertex_count(); ++x)
    if (((c.vertices[x] ^ value) & agree) == 0) out.push_back(x);
  return out;
}

int gate(const DualComplex& c, int x, std::span<const int> k) {
  if (k.empty()) throw InputError("gate requires a nonempty target set");
  auto hull = convex_hull(c, k);
  std::vector<int> ks(k.begin(), k.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (hull != ks) throw InputError("gate target set is not convex");
  // orient each wall toward K when K is not split by it, else toward x
  Orientation agree = ~0ull, value = c.vertices[ks[0]];
  for (int v : ks) agree &= ~(c.vertices[v] ^ value);
  Orientation g = (value & agree) | (c.vertices[x] & ~agree);
  int idx = c.vertex_of(g);
  if (idx < 0) throw InternalError("gate orientation is not a vertex");
  return idx;
}

}  // namespace hhs
